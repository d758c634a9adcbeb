#pragma once

// Functions on S_n, stored densely in enumerate(n) order, together with the
// inversion-indicator families and the two commuting actions on them.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lop/exactlin.hpp"
#include "lop/symgroup.hpp"

namespace lop {

/// Ordered pair i < j. Pairs are listed lexicographically: (1,2), (1,3), ..., (n-1,n).
struct PairIndex {
  int i = 1;
  int j = 2;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

std::vector<PairIndex> pairs(int n);
std::size_t pair_count(int n);
/// Position of (i, j) in pairs(n). Throws Error(InvalidArgument).
std::size_t pair_position(int n, PairIndex p);

class GroupFunction {
 public:
  GroupFunction() = default;
  /// The zero function on S_n.
  explicit GroupFunction(int n);
  /// Throws Error(SizeMismatch) unless values.size() == n!.
  GroupFunction(int n, Vector values);

  static GroupFunction constant(int n, const Rational& value);
  /// e_p: 1 at p, 0 elsewhere.
  static GroupFunction indicator(const Permutation& p);

  int degree() const noexcept { return n_; }
  const Vector& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t index) const { return values_[index]; }
  const Rational& at(const Permutation& p) const { return values_[lex_index(p)]; }
  bool is_zero() const { return lop::is_zero(values_); }

  GroupFunction& operator+=(const GroupFunction& other);
  GroupFunction& operator-=(const GroupFunction& other);
  GroupFunction& operator*=(const Rational& s);

  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
  friend GroupFunction operator-(GroupFunction a, const GroupFunction& b) { return a -= b; }
  friend GroupFunction operator-(GroupFunction a) { return a *= -1; }
  friend GroupFunction operator*(const Rational& s, GroupFunction a) { return a *= s; }
  friend bool operator==(const GroupFunction&, const GroupFunction&) = default;

 private:
  void check_same_degree(const GroupFunction& other) const;

  int n_ = 0;
  Vector values_;
};

/// The constant function with value 1.
GroupFunction one(int n);
/// 1 where p(i) > p(j), else 0.
GroupFunction k_func(int n, PairIndex ij);
/// +1 where p(i) > p(j), -1 where p(i) < p(j). tk_ii = 0 and tk_ji = -tk_ij.
GroupFunction tk_func(int n, int i, int j);
/// sum_j tk_ij; pointwise 2 p(i) - (n + 1).
GroupFunction v_func(int n, int i);
/// tk_ij - tk_in + tk_jn for i < j <= n - 1.
GroupFunction w_func(int n, int i, int j);

Rational inner(const GroupFunction& f, const GroupFunction& g);

/// (p f)(t) = f(t o p).
GroupFunction act_relabel(const Permutation& p, const GroupFunction& f);
/// (w_n f)(t) = f(w_n o t).
GroupFunction act_duality(const GroupFunction& f);

/// Two CSV rows: permutations in text form, then values as "p/q".
std::string to_csv(const GroupFunction& f);

}  // namespace lop
