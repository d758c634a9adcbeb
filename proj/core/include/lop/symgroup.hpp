#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lop {

/// Largest degree for which S_n is ever enumerated.
inline constexpr int kMaxDegree = 8;

/// Element of S_n as its image sequence: images()[i - 1] == p(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(InvalidArgument) unless images is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Parses the text form "3 1 2".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(i) = p(q(i)). Throws Error(SizeMismatch).
Permutation compose(const Permutation& p, const Permutation& q);
/// p^k for k >= 0.
Permutation power(const Permutation& p, int k);

std::size_t factorial(int n);

/// All n! permutations in lexicographic order of their image sequences.
/// This order indexes the coordinates of every function on S_n.
/// Throws Error(NTooLarge) for n > kMaxDegree, Error(InvalidArgument) for n < 1.
std::vector<Permutation> enumerate(int n);
/// Cached enumerate(n); the reference stays valid for the program lifetime.
const std::vector<Permutation>& elements(int n);
/// Position of p in enumerate(p.size()).
std::size_t lex_index(const Permutation& p);

/// w_n: i -> n + 1 - i.
Permutation reversal(int n);
/// The cycle (1 2 ... n): i -> i + 1, n -> 1.
Permutation cyc(int n);
Permutation transposition(int n, int i, int j);
/// (1 2), (2 3), ..., (n-1 n).
std::vector<Permutation> adjacent_transpositions(int n);

/// Right cosets C_n p = { cyc^k o p } of the cyclic subgroup.
struct CosetPartition {
  std::vector<std::vector<Permutation>> classes;
  /// representatives[k] lies in classes[k] and fixes n.
  std::vector<Permutation> representatives;
  /// class_of[lex_index(p)] is the coset holding p.
  std::vector<std::size_t> class_of;
};
CosetPartition cyclic_cosets(int n);

/// The unique cyc^k o p with value n at n.
Permutation coset_representative(const Permutation& p);
/// Drops the last point of a permutation fixing n.
Permutation restrict_last(const Permutation& p);

struct ConjugacyClass {
  std::vector<int> cycle_type;  // non-increasing
  std::size_t size = 0;
  Permutation representative;   // lexicographically first member
};

std::vector<int> cycle_type(const Permutation& p);
/// Ordered by cycle type, lexicographically ascending.
std::vector<ConjugacyClass> conjugacy_classes(int n);

}  // namespace lop
