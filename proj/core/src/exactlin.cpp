#include "lop/exactlin.hpp"

#include <utility>

#include "lop/error.hpp"

namespace lop {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator: '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::SizeMismatch, "matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::SizeMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::SizeMismatch, "matrix product shape");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::SizeMismatch, "matrix-vector shape");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(x[k]) != 0) y[i] += a(i, k) * x[k];
  return y;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "dot product length");
  // Accumulate numerator over a running common denominator; canonicalize once.
  mpz_class num = 0;
  mpz_class den = 1;
  mpz_class term;
  mpz_class term_den;
  mpz_class scale;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    mpz_mul(term.get_mpz_t(), a[i].get_num_mpz_t(), b[i].get_num_mpz_t());
    const bool a_int = mpz_cmp_ui(a[i].get_den_mpz_t(), 1) == 0;
    const bool b_int = mpz_cmp_ui(b[i].get_den_mpz_t(), 1) == 0;
    if (a_int && b_int) {
      term_den = 1;
    } else if (a_int) {
      term_den = b[i].get_den();
    } else if (b_int) {
      term_den = a[i].get_den();
    } else {
      mpz_mul(term_den.get_mpz_t(), a[i].get_den_mpz_t(), b[i].get_den_mpz_t());
    }
    if (term_den == den) {
      num += term;
    } else if (mpz_divisible_p(den.get_mpz_t(), term_den.get_mpz_t())) {
      mpz_divexact(scale.get_mpz_t(), den.get_mpz_t(), term_den.get_mpz_t());
      mpz_addmul(num.get_mpz_t(), term.get_mpz_t(), scale.get_mpz_t());
    } else {
      mpz_class common = lcm(den, term_den);
      mpz_divexact(scale.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
      num *= scale;
      mpz_divexact(scale.get_mpz_t(), common.get_mpz_t(), term_den.get_mpz_t());
      mpz_addmul(num.get_mpz_t(), term.get_mpz_t(), scale.get_mpz_t());
      den = std::move(common);
    }
  }
  Rational s(num, den);
  s.canonicalize();
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

void axpy(const Rational& alpha, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::SizeMismatch, "axpy length");
  if (sgn(alpha) == 0) return;
  Rational t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    mpq_mul(t.get_mpq_t(), alpha.get_mpq_t(), x[i].get_mpq_t());
    mpq_add(y[i].get_mpq_t(), y[i].get_mpq_t(), t.get_mpq_t());
  }
}

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(r, k));
    Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= factor * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::SizeMismatch, "right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

Matrix gram_matrix(std::span<const Vector> vectors) {
  Matrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g(i, j) = dot(vectors[i], vectors[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

Vector project_gram(std::span<const Vector> basis, const Matrix& gram, const Vector& x) {
  if (gram.rows() != basis.size() || gram.cols() != basis.size())
    throw Error(ErrorCode::SizeMismatch, "gram shape does not match basis");
  Vector rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], x);
  if (rank(gram) != basis.size())
    throw Error(ErrorCode::SingularGram, "basis is linearly dependent");
  auto c = solve(gram, rhs);
  Vector out(x.size());
  for (std::size_t i = 0; i < basis.size(); ++i) axpy((*c)[i], basis[i], out);
  return out;
}

GramProjector::GramProjector(std::vector<Vector> basis, Matrix gram)
    : basis_(std::move(basis)), gram_(std::move(gram)) {
  if (gram_.rows() != basis_.size() || gram_.cols() != basis_.size())
    throw Error(ErrorCode::SizeMismatch, "gram shape does not match basis");
  auto inv = inverse(gram_);
  if (!inv) throw Error(ErrorCode::SingularGram, "basis is linearly dependent");
  gram_inverse_ = std::move(*inv);
  for (const auto& b : basis_)
    for (const auto& x : b)
      if (mpz_cmp_ui(x.get_den_mpz_t(), 1) != 0) integral_ = false;
}

Vector GramProjector::coefficients(const Vector& x) const {
  Vector rhs(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) rhs[i] = dot(basis_[i], x);
  return gram_inverse_ * rhs;
}

Vector GramProjector::combine(const Vector& coefficients) const {
  if (coefficients.size() != basis_.size())
    throw Error(ErrorCode::SizeMismatch, "coefficient count does not match basis");
  const std::size_t ambient = basis_.empty() ? 0 : basis_.front().size();
  if (!integral_) {
    Vector out(ambient);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(coefficients[i], basis_[i], out);
    return out;
  }
  // Integer basis: scale coefficients to a common denominator, accumulate
  // integers, divide once per entry.
  mpz_class common = 1;
  for (const auto& c : coefficients) common = lcm(common, c.get_den());
  std::vector<mpz_class> scaled;
  scaled.reserve(coefficients.size());
  for (const auto& c : coefficients) scaled.push_back(c.get_num() * (common / c.get_den()));
  std::vector<mpz_class> acc(ambient);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (sgn(scaled[k]) == 0) continue;
    const Vector& b = basis_[k];
    for (std::size_t i = 0; i < ambient; ++i)
      if (sgn(b[i]) != 0) mpz_addmul(acc[i].get_mpz_t(), scaled[k].get_mpz_t(), b[i].get_num_mpz_t());
  }
  Vector out(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    if (sgn(acc[i]) == 0) continue;
    out[i] = Rational(acc[i], common);
    out[i].canonicalize();
  }
  return out;
}

}  // namespace lop
