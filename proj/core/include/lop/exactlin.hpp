#pragma once

// Exact rational linear algebra. Everything here is dense and uses GMP
// rationals; there is no tolerance anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lop {

/// Arbitrary-precision rational, always kept in canonical form (q > 0, gcd 1).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p"; the result is canonicalized. Throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_rows(std::span<const Vector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Rational trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
/// y += alpha * x
void axpy(const Rational& alpha, const Vector& x, Vector& y);

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}. Empty iff rank(m) == cols.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Gram matrix of the given vectors under the standard dot product.
Matrix gram_matrix(std::span<const Vector> vectors);

/// Orthogonal projection of x onto span(basis), where gram holds the
/// pairwise inner products of the basis. Throws Error(SingularGram) when
/// gram is not invertible.
Vector project_gram(std::span<const Vector> basis, const Matrix& gram, const Vector& x);

/// Projection onto a fixed span with the Gram inverse computed once.
class GramProjector {
 public:
  GramProjector() = default;
  /// Throws Error(SingularGram) when the basis is linearly dependent.
  GramProjector(std::vector<Vector> basis, Matrix gram);

  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const Matrix& gram() const noexcept { return gram_; }
  const Matrix& gram_inverse() const noexcept { return gram_inverse_; }

  /// Coefficients c of the projection P(x) = sum_i c_i basis[i].
  Vector coefficients(const Vector& x) const;
  Vector combine(const Vector& coefficients) const;
  Vector project(const Vector& x) const { return combine(coefficients(x)); }

 private:
  std::vector<Vector> basis_;
  Matrix gram_;
  Matrix gram_inverse_;
  bool integral_ = true;
};

}  // namespace lop
