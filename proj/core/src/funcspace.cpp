#include "lop/funcspace.hpp"

#include "lop/error.hpp"

namespace lop {

std::vector<PairIndex> pairs(int n) {
  std::vector<PairIndex> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n * (n - 1) / 2); }

std::size_t pair_position(int n, PairIndex p) {
  if (p.i < 1 || p.i >= p.j || p.j > n)
    throw Error(ErrorCode::InvalidArgument, "invalid pair (" + std::to_string(p.i) + "," +
                                                std::to_string(p.j) + ") for n=" + std::to_string(n));
  // Pairs starting below i come first: sum_{a<i} (n - a).
  std::size_t before = 0;
  for (int a = 1; a < p.i; ++a) before += static_cast<std::size_t>(n - a);
  return before + static_cast<std::size_t>(p.j - p.i - 1);
}

GroupFunction::GroupFunction(int n) : n_(n), values_(factorial(n)) { (void)elements(n); }

GroupFunction::GroupFunction(int n, Vector values) : n_(n), values_(std::move(values)) {
  if (values_.size() != elements(n).size())
    throw Error(ErrorCode::SizeMismatch, "function on S_" + std::to_string(n) + " needs " +
                                             std::to_string(factorial(n)) + " values");
}

GroupFunction GroupFunction::constant(int n, const Rational& value) {
  return GroupFunction(n, Vector(factorial(n), value));
}

GroupFunction GroupFunction::indicator(const Permutation& p) {
  GroupFunction f(p.size());
  f.values_[lex_index(p)] = 1;
  return f;
}

void GroupFunction::check_same_degree(const GroupFunction& other) const {
  if (n_ != other.n_)
    throw Error(ErrorCode::SizeMismatch, "functions on S_" + std::to_string(n_) + " and S_" +
                                             std::to_string(other.n_));
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& other) {
  check_same_degree(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

GroupFunction& GroupFunction::operator-=(const GroupFunction& other) {
  check_same_degree(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

GroupFunction& GroupFunction::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

GroupFunction one(int n) { return GroupFunction::constant(n, 1); }

GroupFunction k_func(int n, PairIndex ij) {
  pair_position(n, ij);  // validates
  const auto& group = elements(n);
  Vector values(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) values[k] = group[k](ij.i) > group[k](ij.j) ? 1 : 0;
  return GroupFunction(n, std::move(values));
}

GroupFunction tk_func(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(ErrorCode::InvalidArgument, "tk index out of range");
  const auto& group = elements(n);
  Vector values(group.size());
  if (i != j)
    for (std::size_t k = 0; k < group.size(); ++k) values[k] = group[k](i) > group[k](j) ? 1 : -1;
  return GroupFunction(n, std::move(values));
}

GroupFunction v_func(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::InvalidArgument, "v index out of range");
  GroupFunction v(n);
  for (int j = 1; j <= n; ++j) v += tk_func(n, i, j);
  return v;
}

GroupFunction w_func(int n, int i, int j) {
  if (i < 1 || i >= j || j > n - 1)
    throw Error(ErrorCode::InvalidArgument, "w needs 1 <= i < j <= n-1");
  return tk_func(n, i, j) - tk_func(n, i, n) + tk_func(n, j, n);
}

Rational inner(const GroupFunction& f, const GroupFunction& g) {
  if (f.degree() != g.degree()) throw Error(ErrorCode::SizeMismatch, "inner: different degrees");
  return dot(f.values(), g.values());
}

GroupFunction act_relabel(const Permutation& p, const GroupFunction& f) {
  if (p.size() != f.degree()) throw Error(ErrorCode::SizeMismatch, "act_relabel: degree mismatch");
  const int n = f.degree();
  const auto& group = elements(n);
  Vector values(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) values[k] = f[lex_index(compose(group[k], p))];
  return GroupFunction(n, std::move(values));
}

GroupFunction act_duality(const GroupFunction& f) {
  const int n = f.degree();
  const Permutation w = reversal(n);
  const auto& group = elements(n);
  Vector values(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) values[k] = f[lex_index(compose(w, group[k]))];
  return GroupFunction(n, std::move(values));
}

std::string to_csv(const GroupFunction& f) {
  const auto& group = elements(f.degree());
  std::string header;
  std::string row;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (k) {
      header += ',';
      row += ',';
    }
    header += group[k].to_string();
    row += to_string(f[k]);
  }
  return header + "\n" + row + "\n";
}

}  // namespace lop
