#include "lop/facets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lop/error.hpp"

namespace lop {

namespace {

using IntVector = std::vector<mpz_class>;

// Zero set of a ray over at most kMaxPoints input points, stored inline so
// the pair loop never allocates.
constexpr std::size_t kMaxPoints = 720;

class Bitset {
 public:
  static constexpr std::size_t kWords = (kMaxPoints + 63) / 64;

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < kWords; ++k)
      for (std::uint64_t w = words_[k]; w; w &= w - 1)
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r = a;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] &= b.words_[k];
    return r;
  }
  friend std::size_t count_common(const Bitset& a, const Bitset& b) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < kWords; ++k)
      c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
    return c;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct Ray {
  IntVector coords;
  Bitset zeros;
};

mpz_class int_dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (sgn(a[k]) != 0 && sgn(b[k]) != 0) s += a[k] * b[k];
  return s;
}

void make_primitive(IntVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

/// Smallest positive multiple of v with integer entries.
IntVector to_integer(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  make_primitive(out);
  return out;
}

// Incremental row echelon form over int64, for the algebraic adjacency test.
// Entries stay small for 0/1 inputs; any overflow is reported so the caller
// can fall back to exact rationals.
class SmallEchelon {
 public:
  explicit SmallEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  bool overflowed() const noexcept { return overflow_; }

  void add(const std::vector<std::int64_t>& row) {
    std::vector<std::int64_t> v = row;
    for (std::size_t b = 0; b < rows_.size() && !overflow_; ++b) {
      const std::size_t c = pivots_[b];
      if (v[c] == 0) continue;
      const std::int64_t a = rows_[b][c], f = v[c];
      std::int64_t g = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t x, y;
        if (__builtin_mul_overflow(v[k], a, &x) || __builtin_mul_overflow(rows_[b][k], f, &y) ||
            __builtin_sub_overflow(x, y, &v[k])) {
          overflow_ = true;
          return;
        }
        g = std::gcd(g, v[k]);
      }
      if (g > 1)
        for (auto& x : v) x /= g;
    }
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) {
        rows_.push_back(std::move(v));
        pivots_.push_back(k);
        return;
      }
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
  bool overflow_ = false;
};

std::size_t degree_for_pairs(std::size_t count) {
  for (int n = 2; n <= kMaxDegree; ++n)
    if (pair_count(n) == count) return static_cast<std::size_t>(n);
  return 0;
}

Rational evaluate(const Inequality& ineq, const Vector& x) { return dot(ineq.coefficients, x); }

bool is_facet_of(const std::vector<std::size_t>& tight, const VertexSet& vs) {
  if (tight.empty()) return false;
  std::vector<Vector> rows;
  for (auto k : tight) {
    Vector r{Rational(1)};
    r.insert(r.end(), vs.points[k].begin(), vs.points[k].end());
    rows.push_back(std::move(r));
  }
  return rank(Matrix::from_rows(rows)) == vs.dim;
}

std::vector<std::size_t> tight_set(const Inequality& ineq, const VertexSet& vs) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (is_tight(ineq, vs.points[k])) out.push_back(k);
  return out;
}

}  // namespace

Inequality canonical(Inequality ineq) {
  Vector all = ineq.coefficients;
  all.push_back(ineq.rhs);
  mpz_class l = 1;
  for (const auto& x : all) l = lcm(l, x.get_den());
  mpz_class g = 0;
  for (const auto& x : all) g = gcd(g, x.get_num() * (l / x.get_den()));
  if (g == 0) return ineq;
  const Rational factor(l, g);
  for (auto& c : ineq.coefficients) c *= factor;
  ineq.rhs *= factor;
  return ineq;
}

bool is_tight(const Inequality& ineq, const Vector& x) { return evaluate(ineq, x) == ineq.rhs; }
bool is_satisfied(const Inequality& ineq, const Vector& x) { return evaluate(ineq, x) <= ineq.rhs; }

std::string_view to_string(FacetClass cls) {
  switch (cls) {
    case FacetClass::TrivialLower: return "TRIVIAL_LOWER";
    case FacetClass::TrivialUpper: return "TRIVIAL_UPPER";
    case FacetClass::ThreeCycle: return "THREE_CYCLE";
    case FacetClass::Other: return "OTHER";
  }
  return "OTHER";
}

bool same_family(FacetClass a, FacetClass b) {
  auto family = [](FacetClass c) {
    return c == FacetClass::TrivialUpper ? FacetClass::TrivialLower : c;
  };
  return family(a) == family(b);
}

bool is_maximal_family(FacetClass cls) { return cls != FacetClass::Other; }

HRepresentation enumerate_facets(const VertexSet& vs, FacetOptions options) {
  if (vs.dim > 15 || vs.size() > kMaxPoints)
    throw Error(ErrorCode::DimTooLarge, "dimension " + std::to_string(vs.dim) + " with " +
                                            std::to_string(vs.size()) + " points is beyond 15 / 720");
  if (vs.dim > 10 && !options.allow_long_running)
    throw Error(ErrorCode::DimTooLarge,
                "dimension " + std::to_string(vs.dim) + " requires the long-running option");
  const std::size_t d = vs.dim + 1;
  const std::size_t m = vs.size();

  std::vector<IntVector> rows;
  for (const auto& p : vs.points) {
    Vector r{Rational(1)};
    r.insert(r.end(), p.begin(), p.end());
    rows.push_back(to_integer(r));
  }

  // Points are inserted in lexicographic order of their coordinates, which
  // keeps the intermediate cones small (about 12k rays at n = 6, against
  // 50k+ in permutation order). The output is sorted, so the order never
  // shows.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vs.points[a] < vs.points[b]; });

  // Initial simplex: first affinely independent points in that order.
  std::vector<std::size_t> basis_rows;
  std::vector<Vector> chosen;
  for (std::size_t k : order) {
    if (basis_rows.size() == d) break;
    Vector r{Rational(1)};
    r.insert(r.end(), vs.points[k].begin(), vs.points[k].end());
    chosen.push_back(r);
    if (rank(Matrix::from_rows(chosen)) == chosen.size())
      basis_rows.push_back(k);
    else
      chosen.pop_back();
  }
  if (basis_rows.size() < d)
    throw Error(ErrorCode::InvalidArgument, "vertex set is not full-dimensional");

  const Matrix initial_inverse = *inverse(Matrix::from_rows(chosen));
  std::vector<Ray> rays;
  for (std::size_t c = 0; c < d; ++c) {
    Ray ray{to_integer(initial_inverse.column(c)), Bitset{}};
    for (std::size_t r = 0; r < d; ++r)
      if (r != c) ray.zeros.set(basis_rows[r]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> used(m, false);
  for (auto k : basis_rows) used[k] = true;

  // Two rays are adjacent iff the rows tight on both have rank d - 2.
  std::vector<std::vector<std::int64_t>> small_rows;
  bool small = true;
  for (const auto& r : rows) {
    std::vector<std::int64_t> v;
    for (const auto& x : r) {
      small = small && x.fits_slong_p() && abs(x) < (mpz_class(1) << 20);
      v.push_back(small ? x.get_si() : 0);
    }
    small_rows.push_back(std::move(v));
  }
  auto adjacent = [&](const Bitset& common) {
    if (small) {
      SmallEchelon ech(d);
      bool reached = false;
      common.for_each([&](std::size_t i) {
        if (reached || ech.overflowed()) return;
        ech.add(small_rows[i]);
        reached = ech.rank() + 2 >= d;
      });
      if (!ech.overflowed()) return reached;
    }
    std::vector<Vector> tight;
    common.for_each([&](std::size_t i) { tight.push_back(Vector(rows[i].begin(), rows[i].end())); });
    return lop::rank(Matrix::from_rows(tight, d)) + 2 == d;
  };

  for (std::size_t t : order) {
    if (used[t]) continue;
    std::vector<mpz_class> value(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = int_dot(rows[t], rays[r].coords);
      const int s = sgn(value[r]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size());
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zeros.set(t);
    }
    for (auto p : pos)
      for (auto q : neg) {
        if (count_common(rays[p].zeros, rays[q].zeros) + 2 < d) continue;
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (!adjacent(common)) continue;
        IntVector coords(d);
        const mpz_class wp = value[p];
        const mpz_class wq = -value[q];
        for (std::size_t c = 0; c < d; ++c) coords[c] = wp * rays[q].coords[c] + wq * rays[p].coords[c];
        make_primitive(coords);
        common.set(t);
        next.push_back(Ray{std::move(coords), std::move(common)});
      }
    rays = std::move(next);
    used[t] = true;
  }

  // Ray (y0, a) encodes y0 + a.x >= 0, i.e. (-a).x <= y0.
  std::vector<Inequality> found;
  for (const auto& ray : rays) {
    Inequality ineq;
    ineq.rhs = Rational(ray.coords[0]);
    for (std::size_t c = 1; c < d; ++c) ineq.coefficients.emplace_back(-ray.coords[c]);
    found.push_back(canonical(std::move(ineq)));
  }
  std::sort(found.begin(), found.end(), [](const Inequality& a, const Inequality& b) {
    if (a.coefficients != b.coefficients) return a.coefficients < b.coefficients;
    return a.rhs < b.rhs;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());

  HRepresentation h;
  const auto degree = static_cast<int>(degree_for_pairs(vs.dim));
  h.n = degree > 0 && vs.size() == factorial(degree) ? degree : 0;
  for (auto& ineq : found) {
    for (const auto& p : vs.points)
      if (!is_satisfied(ineq, p)) throw Error(ErrorCode::NotValid, "enumerated inequality cuts a vertex");
    auto tight = tight_set(ineq, vs);
    if (!is_facet_of(tight, vs))
      throw Error(ErrorCode::NotValid, "enumerated inequality fails its facet certificate");
    h.inequalities.push_back(std::move(ineq));
    h.tight_vertices.push_back(std::move(tight));
  }
  return h;
}

FacetClass classify(const Inequality& ineq) {
  const std::size_t n = degree_for_pairs(ineq.coefficients.size());
  if (n == 0) return FacetClass::Other;
  const auto ps = pairs(static_cast<int>(n));
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < ineq.coefficients.size(); ++c)
    if (sgn(ineq.coefficients[c]) != 0) support.push_back(c);

  if (support.size() == 1) {
    const Rational& a = ineq.coefficients[support[0]];
    if (a == -1 && ineq.rhs == 0) return FacetClass::TrivialLower;
    if (a == 1 && ineq.rhs == 1) return FacetClass::TrivialUpper;
    return FacetClass::Other;
  }
  if (support.size() != 3) return FacetClass::Other;

  std::set<int> points;
  for (auto c : support) {
    points.insert(ps[c].i);
    points.insert(ps[c].j);
  }
  if (points.size() != 3) return FacetClass::Other;
  auto it = points.begin();
  const int i = *it++;
  const int j = *it++;
  const int k = *it;
  const int nn = static_cast<int>(n);
  const Rational& xij = ineq.coefficients[pair_position(nn, {i, j})];
  const Rational& xjk = ineq.coefficients[pair_position(nn, {j, k})];
  const Rational& xik = ineq.coefficients[pair_position(nn, {i, k})];
  if (xij == 1 && xjk == 1 && xik == -1 && ineq.rhs == 1) return FacetClass::ThreeCycle;
  if (xij == -1 && xjk == -1 && xik == 1 && ineq.rhs == 0) return FacetClass::ThreeCycle;
  return FacetClass::Other;
}

std::vector<CensusEntry> vertex_census(const HRepresentation& h, const VertexSet& vs) {
  const std::size_t half = vs.size() / 2;
  std::vector<CensusEntry> out;
  for (std::size_t f = 0; f < h.inequalities.size(); ++f) {
    CensusEntry e{f, classify(h.inequalities[f]), tight_set(h.inequalities[f], vs).size()};
    const bool maximal = is_maximal_family(e.cls);
    if ((maximal && e.tight != half) || (!maximal && e.tight >= half))
      throw Error(ErrorCode::ClaimViolation,
                  std::string(to_string(e.cls)) + " facet " + std::to_string(f) + " is tight on " +
                      std::to_string(e.tight) + " vertices, half is " + std::to_string(half));
    out.push_back(e);
  }
  return out;
}

bool closed_under_symmetry(const HRepresentation& h, const VertexSet& vs) {
  if (vs.labels.empty()) return true;
  const int n = vs.labels.front().size();
  std::map<std::vector<std::size_t>, FacetClass> facet_of_tight;
  for (std::size_t f = 0; f < h.inequalities.size(); ++f)
    facet_of_tight.emplace(h.tight_vertices[f], classify(h.inequalities[f]));

  std::map<Permutation, std::size_t> index_of;
  for (std::size_t k = 0; k < vs.size(); ++k) index_of.emplace(vs.labels[k], k);

  // Relabeling by g sends e_p to e_{p g^-1}; the duality sends e_p to e_{w p}.
  std::vector<std::function<Permutation(const Permutation&)>> moves;
  for (const auto& t : adjacent_transpositions(n))
    moves.emplace_back([t](const Permutation& p) { return compose(p, t.inverse()); });
  const Permutation w = reversal(n);
  moves.emplace_back([w](const Permutation& p) { return compose(w, p); });

  for (std::size_t f = 0; f < h.inequalities.size(); ++f) {
    const FacetClass cls = classify(h.inequalities[f]);
    for (const auto& move : moves) {
      std::vector<std::size_t> image;
      for (auto k : h.tight_vertices[f]) {
        auto it = index_of.find(move(vs.labels[k]));
        if (it == index_of.end()) return false;
        image.push_back(it->second);
      }
      std::sort(image.begin(), image.end());
      auto it = facet_of_tight.find(image);
      if (it == facet_of_tight.end() || !same_family(it->second, cls)) return false;
    }
  }
  return true;
}

FactorMap factor_map(int n) {
  if (n < 3 || n > 6) throw Error(ErrorCode::NOutOfRange, "factor map needs 3 <= n <= 6");
  const std::size_t cols = pair_count(n);
  const std::size_t target = pair_count(n - 1);
  // w_ij = sum_c T(ij, c) tk_c; with tk = 2k - 1 this gives k' = T k + (1 - T 1) / 2.
  FactorMap fm{Matrix(target, cols), Vector(target)};
  std::size_t r = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++r) {
      auto coords = tk_coordinates(w_func(n, i, j));
      if (!coords) throw Error(ErrorCode::ValueMismatch, "w function outside span{tk_ij}");
      Rational row_sum = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        fm.linear(r, c) = (*coords)[c];
        row_sum += (*coords)[c];
      }
      fm.offset[r] = (1 - row_sum) / 2;
    }

  const VertexSet here = lop_vertices(n, Basis::K);
  const VertexSet below = lop_vertices(n - 1, Basis::K);
  for (std::size_t k = 0; k < here.size(); ++k) {
    Vector image = fm.linear * here.points[k];
    for (std::size_t c = 0; c < target; ++c) image[c] += fm.offset[c];
    if (image != below.points[lex_index(reduce_to(here.labels[k], n - 1))])
      throw Error(ErrorCode::ValueMismatch,
                  "factor map disagrees at (" + here.labels[k].to_string() + ")");
  }
  return fm;
}

PullbackResult pullback_facet(int n, const Inequality& ineq) {
  const FactorMap fm = factor_map(n);
  if (ineq.coefficients.size() != fm.linear.rows())
    throw Error(ErrorCode::SizeMismatch, "inequality is not over the pairs of P_{n-1}");

  PullbackResult out;
  out.inequality.coefficients = fm.linear.transpose() * ineq.coefficients;
  out.inequality.rhs = ineq.rhs - dot(ineq.coefficients, fm.offset);
  out.inequality = canonical(std::move(out.inequality));

  const VertexSet vs = lop_vertices(n, Basis::K);
  for (const auto& p : vs.points)
    if (!is_satisfied(out.inequality, p))
      throw Error(ErrorCode::NotValid, "pulled-back inequality cuts a vertex of P_n");
  const auto tight = tight_set(out.inequality, vs);
  out.tight = tight.size();
  out.is_facet = is_facet_of(tight, vs);
  out.cls = classify(out.inequality);

  const FacetClass input = classify(canonical(ineq));
  if (is_maximal_family(input) && !(out.is_facet && is_maximal_family(out.cls)))
    throw Error(ErrorCode::ClaimViolation, std::string(to_string(input)) +
                                               " facet pulls back to a non-" +
                                               "trivial/three-cycle inequality");
  return out;
}

std::string to_text(const HRepresentation& h) {
  std::string out = "# lop n=" + std::to_string(h.n) + " basis=K\n";
  for (const auto& ineq : h.inequalities) {
    const Inequality c = canonical(ineq);
    for (const auto& a : c.coefficients) out += to_string(a) + ' ';
    out += "<= " + to_string(c.rhs) + '\n';
  }
  return out;
}

HRepresentation parse_hrep(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  HRepresentation h;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto at = line.find("n=");
      if (at == std::string::npos) throw Error(ErrorCode::InvalidArgument, "header lacks n=");
      h.n = std::stoi(line.substr(at + 2));
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::InvalidArgument, "missing '# lop' header");
    std::istringstream fields(line);
    std::string tok;
    Inequality ineq;
    bool seen_le = false;
    while (fields >> tok) {
      if (tok == "<=") {
        if (!(fields >> tok)) throw Error(ErrorCode::InvalidArgument, "missing right-hand side");
        ineq.rhs = parse_rational(tok);
        seen_le = true;
        break;
      }
      ineq.coefficients.push_back(parse_rational(tok));
    }
    if (!seen_le || ineq.coefficients.size() != pair_count(h.n))
      throw Error(ErrorCode::InvalidArgument, "malformed inequality line: " + line);
    h.inequalities.push_back(std::move(ineq));
  }
  return h;
}

}  // namespace lop
