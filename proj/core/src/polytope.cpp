#include "lop/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lop/error.hpp"

namespace lop {

namespace {

void require_range(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw Error(ErrorCode::NOutOfRange,
                "n=" + std::to_string(n) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

void require_generation_range(int n) {
  if (n > kMaxDegree)
    throw Error(ErrorCode::NTooLarge, "n=" + std::to_string(n) + " exceeds the cap of " +
                                          std::to_string(kMaxDegree));
}

std::vector<GroupFunction> v_generators(int n) {
  std::vector<GroupFunction> out;
  for (int i = 1; i <= n; ++i) out.push_back(v_func(n, i));
  return out;
}

Vector read_with(const std::vector<GroupFunction>& functionals, const GroupFunction& f) {
  Vector out;
  out.reserve(functionals.size());
  for (const auto& g : functionals) out.push_back(inner(g, f));
  return out;
}

Permutation extend_fixing_last(const Permutation& p) {
  auto images = p.images();
  images.push_back(p.size() + 1);
  return Permutation(std::move(images));
}

}  // namespace

VertexSet lop_vertices(int n, Basis basis) {
  require_generation_range(n);
  if (n < 2) throw Error(ErrorCode::NOutOfRange, "linear ordering polytope needs n >= 2");
  const auto ps = pairs(n);
  VertexSet vs;
  vs.dim = ps.size();
  for (const auto& p : elements(n)) {
    Vector x(ps.size());
    for (std::size_t c = 0; c < ps.size(); ++c) {
      const bool inverted = p(ps[c].i) > p(ps[c].j);
      x[c] = basis == Basis::K ? (inverted ? 1 : 0) : (inverted ? 1 : -1);
    }
    vs.points.push_back(std::move(x));
    vs.labels.push_back(p);
  }
  return vs;
}

VertexSet permutahedron_vertices(int n) {
  require_generation_range(n);
  VertexSet vs;
  vs.dim = static_cast<std::size_t>(n);
  for (const auto& p : elements(n)) {
    Vector x;
    for (int v : p.images()) x.emplace_back(v);
    vs.points.push_back(std::move(x));
    vs.labels.push_back(p);
  }
  return vs;
}

std::size_t affine_dimension(const VertexSet& vs) {
  if (vs.points.empty()) return 0;
  std::vector<Vector> rows;
  for (const auto& p : vs.points) {
    Vector r{Rational(1)};
    r.insert(r.end(), p.begin(), p.end());
    rows.push_back(std::move(r));
  }
  return rank(Matrix::from_rows(rows)) - 1;
}

FiberMap group_fibers(const VertexSet& vs) {
  FiberMap fm;
  std::map<Vector, std::size_t> index;
  for (std::size_t k = 0; k < vs.points.size(); ++k) {
    auto [it, inserted] = index.try_emplace(vs.points[k], fm.fibers.size());
    if (inserted) fm.fibers.push_back(Fiber{vs.labels[k], vs.points[k], {}});
    fm.fibers[it->second].sources.push_back(vs.labels[k]);
  }
  for (auto& f : fm.fibers) std::sort(f.sources.begin(), f.sources.end());
  return fm;
}

GroupFunction vertex_function(const Subspace& space, const Permutation& p) {
  return space.project(GroupFunction::indicator(p));
}

VertexSet simplex_image(const Subspace& sub) {
  VertexSet vs;
  vs.dim = sub.dim();
  for (const auto& p : elements(sub.degree())) {
    vs.points.push_back(sub.coefficients(GroupFunction::indicator(p)));
    vs.labels.push_back(p);
  }
  return vs;
}

LemmaReport lemma_basis_check(const Subspace& sub) {
  require_range(sub.degree(), 1, 5);
  LemmaReport report;
  std::set<Vector> images;
  std::set<Vector> columns;
  for (const auto& p : elements(sub.degree())) {
    const GroupFunction projected = sub.project(GroupFunction::indicator(p));
    const Vector mapped = read_with(sub.basis(), projected);
    Vector column;
    for (const auto& b : sub.basis()) column.push_back(b.at(p));
    if (mapped != column && report.pass) {
      report.pass = false;
      report.first_failure = p;
      report.detail = "B * P(e_p) differs from column p for p = (" + p.to_string() + ")";
    }
    images.insert(sub.coefficients(GroupFunction::indicator(p)));
    columns.insert(std::move(column));
  }
  report.distinct_points = images.size();
  report.distinct_columns = columns.size();
  if (report.pass && rank(sub.gram()) != sub.dim()) {
    report.pass = false;
    report.detail = "B is not injective on the subspace";
  }
  if (report.pass && report.distinct_points != report.distinct_columns) {
    report.pass = false;
    report.detail = "projected vertices and columns differ in number";
  }
  return report;
}

Vector AffineMap::apply(const Vector& x) const {
  Vector y;
  y.reserve(x.size());
  for (const auto& v : x) y.push_back(scale * v + shift);
  return y;
}

PermutahedronProjection project_to_permutahedron(int n) {
  require_range(n, 3, 6);
  const Subspace tilde = u_tilde_space(n);
  const Subspace v1 = v1_space(n);
  const auto functionals = v_generators(n);
  const AffineMap map{Rational(2), Rational(-(n + 1))};
  const VertexSet perm = permutahedron_vertices(n);

  PermutahedronProjection out{VertexSet{static_cast<std::size_t>(n), {}, {}}, map};
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const Permutation& p = perm.labels[k];
    const GroupFunction image = v1.project(vertex_function(tilde, p));
    Vector coords = read_with(functionals, image);
    for (int i = 1; i <= n; ++i)
      if (coords[static_cast<std::size_t>(i - 1)] != Rational(2 * p(i) - (n + 1)))
        throw Error(ErrorCode::AffineMismatch,
                    "v_" + std::to_string(i) + " reading differs at (" + p.to_string() + ")");
    if (map.apply(perm.points[k]) != coords)
      throw Error(ErrorCode::AffineMismatch, "affine map misses vertex (" + p.to_string() + ")");
    out.image.points.push_back(std::move(coords));
    out.image.labels.push_back(p);
  }
  if (group_fibers(out.image).fibers.size() != factorial(n))
    throw Error(ErrorCode::AffineMismatch, "projected vertices are not distinct");
  return out;
}

PreviousProjection project_to_previous(int n) {
  require_range(n, 3, 6);
  const Subspace tilde = u_tilde_space(n);
  const Subspace v2 = v2_space(n);
  const CosetPartition cosets = cyclic_cosets(n);

  // Group by the projected point itself (its coefficients in the w basis).
  std::map<Vector, std::vector<Permutation>> by_image;
  for (const auto& p : elements(n)) by_image[v2.coefficients(vertex_function(tilde, p))].push_back(p);

  if (by_image.size() != factorial(n - 1))
    throw Error(ErrorCode::FiberMismatch, std::to_string(by_image.size()) + " distinct images, expected " +
                                              std::to_string(factorial(n - 1)));

  const VertexSet previous = lop_vertices(n - 1, Basis::TK);
  std::vector<Fiber> fibers(previous.size());
  for (auto& [coeffs, members] : by_image) {
    std::sort(members.begin(), members.end());
    const std::size_t coset = cosets.class_of[lex_index(members.front())];
    if (members != cosets.classes[coset])
      throw Error(ErrorCode::FiberMismatch,
                  "fiber of (" + members.front().to_string() + ") is not its C_n coset");
    const Permutation& rep = cosets.representatives[coset];
    const Permutation label = restrict_last(rep);
    const Vector coords = read_with(v2.basis(), v2.combine(coeffs));
    const std::size_t slot = lex_index(label);
    if (coords != previous.points[slot])
      throw Error(ErrorCode::ValueMismatch,
                  "coset of (" + rep.to_string() + ") does not read as the TK vertex of (" +
                      label.to_string() + ")");
    fibers[slot] = Fiber{label, coords, members};
  }

  PreviousProjection out;
  out.image.dim = pair_count(n - 1);
  for (const auto& f : fibers) {
    out.image.points.push_back(f.point);
    out.image.labels.push_back(f.target);
  }
  out.fibers.fibers = std::move(fibers);
  return out;
}

EquivarianceReport check_equivariance(int n, const std::vector<GroupAction>& generators) {
  const Subspace uinv = u_inv_space(n);
  const Subspace v1 = v1_space(n);
  const Subspace v2 = v2_space(n);
  EquivarianceReport report;
  for (const auto& p : elements(n)) {
    const GroupFunction f = vertex_function(uinv, p);
    for (const auto& g : generators) {
      const GroupFunction gf = act(g, f);
      int k = 1;
      for (const Subspace* space : {&v1, &v2}) {
        ++report.checks;
        if (space->project(gf) != act(g, space->project(f)))
          report.failures.push_back(EquivarianceFailure{describe(g), p, k});
        ++k;
      }
    }
  }
  return report;
}

EquivarianceReport verify_equivariance(int n) {
  require_range(n, 3, 5);
  std::vector<GroupAction> generators;
  for (auto& t : adjacent_transpositions(n)) generators.emplace_back(t);
  generators.emplace_back(Duality{});
  return check_equivariance(n, generators);
}

InducedAction induced_action(int n, const GroupAction& g) {
  require_range(n, 3, 5);
  const Subspace tilde = u_tilde_space(n);
  const Subspace v2 = v2_space(n);
  const PreviousProjection prev = project_to_previous(n);

  std::map<Vector, std::size_t> slot_of;
  for (std::size_t a = 0; a < prev.image.size(); ++a) slot_of[prev.image.points[a]] = a;

  InducedAction out;
  out.translation = Vector(prev.image.dim);
  const Matrix rep = rep_matrix(v2, g);
  out.linear = v2.gram() * rep * *inverse(v2.gram());

  for (std::size_t a = 0; a < prev.image.size(); ++a) {
    const Permutation lifted = extend_fixing_last(prev.image.labels[a]);
    const GroupFunction moved = act(g, v2.project(vertex_function(tilde, lifted)));
    const Vector coords = read_with(v2.basis(), moved);
    auto it = slot_of.find(coords);
    if (it == slot_of.end())
      throw Error(ErrorCode::ValueMismatch, describe(g) + " sends vertex (" +
                                                prev.image.labels[a].to_string() + ") off P_{n-1}");
    if (out.linear * prev.image.points[a] != coords)
      throw Error(ErrorCode::ValueMismatch, "linear map disagrees with the vertex action of " + describe(g));
    out.vertex_permutation.push_back(it->second);
  }
  return out;
}

bool recomposes_vertices(const DecompositionBundle& bundle) {
  const Subspace uinv = u_inv_space(bundle.n);
  for (const auto& p : elements(bundle.n)) {
    const GroupFunction f = vertex_function(uinv, p);
    if (bundle.v0.project(f) + bundle.v1.project(f) + bundle.v2.project(f) != f) return false;
  }
  return true;
}

CorollaryReport verify_corollary(int n) {
  CorollaryReport report;
  auto fail = [&](std::string what) {
    report.pass = false;
    report.failure = std::move(what);
    return report;
  };
  const auto chain = iterate_decomposition(n);
  for (const auto& level : chain) {
    report.dims.push_back(level.space.dim());
    if (level.space.dim() != static_cast<std::size_t>(level.level - 1))
      return fail("dim W_" + std::to_string(level.level) + " != " + std::to_string(level.level - 1));
  }
  report.passed.push_back("dim W_i = i - 1");

  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = a + 1; b < chain.size(); ++b)
      for (const auto& x : chain[a].space.basis())
        for (const auto& y : chain[b].space.basis())
          if (sgn(inner(x, y)) != 0)
            return fail("W_" + std::to_string(chain[a].level) + " not orthogonal to W_" +
                        std::to_string(chain[b].level));
  report.passed.push_back("pairwise orthogonal");

  const Subspace tilde = u_tilde_space(n);
  std::vector<const Subspace*> all;
  for (const auto& level : chain) all.push_back(&level.space);
  if (joint_rank(all) != pair_count(n)) return fail("W_i do not span a space of dimension C(n,2)");
  all.push_back(&tilde);
  if (joint_rank(all) != pair_count(n)) return fail("W_i leave span{tk_ij}");
  report.passed.push_back("direct sum equals span{tk_ij}");

  if (!same_span(chain.front().space, v1_space(n))) return fail("W_n != V_1");
  const Subspace v2 = v2_space(n);
  std::vector<const Subspace*> rest{&v2};
  for (std::size_t a = 1; a < chain.size(); ++a) rest.push_back(&chain[a].space);
  if (joint_rank(rest) != v2.dim()) return fail("W_{n-1} + ... + W_2 != V_2");
  report.passed.push_back("W_n = V_1 and the remaining levels split V_2");

  std::vector<GroupFunction> vertices;
  for (const auto& p : elements(n)) vertices.push_back(vertex_function(tilde, p));
  for (const auto& level : chain) {
    const int i = level.level;
    const AffineMap map{Rational(2), Rational(-(i + 1))};
    std::set<Vector> distinct;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      const Permutation& p = elements(n)[k];
      const Vector coords = read_with(level.generators, level.space.project(vertices[k]));
      const Permutation sigma = reduce_to(p, i);
      Vector expected;
      for (int v : sigma.images()) expected.emplace_back(v);
      if (map.apply(expected) != coords)
        return fail("projection onto W_" + std::to_string(i) + " misses the permutahedron at (" +
                    p.to_string() + ")");
      distinct.insert(coords);
    }
    if (distinct.size() != factorial(i))
      return fail("W_" + std::to_string(i) + " image has " + std::to_string(distinct.size()) +
                  " vertices");
  }
  report.passed.push_back("each projection is the permutahedron under x -> 2x - (i+1)");
  return report;
}

std::string to_csv(const VertexSet& vs) {
  std::string out;
  for (std::size_t k = 0; k < vs.points.size(); ++k) {
    out += vs.labels[k].to_string();
    for (const auto& x : vs.points[k]) {
      out += ',';
      out += to_string(x);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lop
