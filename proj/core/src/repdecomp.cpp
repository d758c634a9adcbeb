#include "lop/repdecomp.hpp"

#include "lop/error.hpp"

namespace lop {

namespace {

std::vector<Vector> values_of(const std::vector<GroupFunction>& basis) {
  std::vector<Vector> out;
  out.reserve(basis.size());
  for (const auto& f : basis) out.push_back(f.values());
  return out;
}

void require_bundle_range(int n) {
  if (n < 3 || n > 6)
    throw Error(ErrorCode::NOutOfRange, "n=" + std::to_string(n) + " outside 3..6");
}

Vector unit(int n, int i) {
  Vector e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

}  // namespace

std::string_view to_string(SubspaceTag tag) {
  switch (tag) {
    case SubspaceTag::V0: return "V0";
    case SubspaceTag::V1: return "V1";
    case SubspaceTag::V2: return "V2";
    case SubspaceTag::UInv: return "U_INV";
    case SubspaceTag::UTilde: return "U_TILDE";
    case SubspaceTag::Custom: return "CUSTOM";
  }
  return "CUSTOM";
}

Subspace::Subspace(int n, std::vector<GroupFunction> basis, SubspaceTag tag)
    : n_(n), tag_(tag), basis_(std::move(basis)) {
  for (const auto& f : basis_)
    if (f.degree() != n) throw Error(ErrorCode::SizeMismatch, "basis function on wrong group");
  auto vectors = values_of(basis_);
  Matrix gram = gram_matrix(vectors);
  projector_ = GramProjector(std::move(vectors), std::move(gram));
}

Vector Subspace::coefficients(const GroupFunction& f) const {
  if (f.degree() != n_) throw Error(ErrorCode::SizeMismatch, "function on wrong group");
  return projector_.coefficients(f.values());
}

GroupFunction Subspace::combine(const Vector& coefficients) const {
  if (basis_.empty()) return GroupFunction(n_);
  return GroupFunction(n_, projector_.combine(coefficients));
}

GroupFunction Subspace::project(const GroupFunction& f) const { return combine(coefficients(f)); }

std::optional<Vector> Subspace::membership(const GroupFunction& f) const {
  Vector c = coefficients(f);
  if (combine(c) != f) return std::nullopt;
  return c;
}

GroupFunction project(const Subspace& sub, const GroupFunction& f) {
  const auto vectors = values_of(sub.basis());
  return GroupFunction(sub.degree(), project_gram(vectors, sub.gram(), f.values()));
}

bool same_span(const Subspace& a, const Subspace& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim()) return false;
  for (const auto& f : b.basis())
    if (!a.contains(f)) return false;
  return true;
}

std::size_t joint_rank(const std::vector<const Subspace*>& spaces) {
  std::vector<Vector> rows;
  for (const auto* s : spaces)
    for (const auto& f : s->basis()) rows.push_back(f.values());
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(rows));
}

Subspace v0_space(int n) { return Subspace(n, {one(n)}, SubspaceTag::V0); }

Subspace v1_space(int n) {
  std::vector<GroupFunction> basis;
  for (int i = 1; i < n; ++i) basis.push_back(v_func(n, i));
  return Subspace(n, std::move(basis), SubspaceTag::V1);
}

Subspace v2_space(int n) {
  std::vector<GroupFunction> basis;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.push_back(w_func(n, i, j));
  return Subspace(n, std::move(basis), SubspaceTag::V2);
}

Subspace u_inv_space(int n) {
  std::vector<GroupFunction> basis{one(n)};
  for (auto p : pairs(n)) basis.push_back(k_func(n, p));
  return Subspace(n, std::move(basis), SubspaceTag::UInv);
}

Subspace u_tilde_space(int n) {
  std::vector<GroupFunction> basis;
  for (auto p : pairs(n)) basis.push_back(tk_func(n, p.i, p.j));
  return Subspace(n, std::move(basis), SubspaceTag::UTilde);
}

Subspace k_span(int n) {
  std::vector<GroupFunction> basis;
  for (auto p : pairs(n)) basis.push_back(k_func(n, p));
  return Subspace(n, std::move(basis), SubspaceTag::Custom);
}

Matrix coordinate_gram(int n) {
  const auto ps = pairs(n);
  std::vector<GroupFunction> tk;
  for (auto p : ps) tk.push_back(tk_func(n, p.i, p.j));
  Matrix g(ps.size(), ps.size());
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a; b < ps.size(); ++b) {
      g(a, b) = inner(tk[a], tk[b]);
      g(b, a) = g(a, b);
    }
  return g;
}

DecompositionBundle build_bundle(int n) {
  require_bundle_range(n);
  return DecompositionBundle{n, v0_space(n), v1_space(n), v2_space(n), coordinate_gram(n)};
}

GroupFunction act(const GroupAction& g, const GroupFunction& f) {
  if (const auto* p = std::get_if<Permutation>(&g)) return act_relabel(*p, f);
  return act_duality(f);
}

std::string describe(const GroupAction& g) {
  if (const auto* p = std::get_if<Permutation>(&g)) return "(" + p->to_string() + ")";
  return "duality";
}

Matrix rep_matrix(const Subspace& sub, const GroupAction& g) {
  const std::size_t d = sub.dim();
  Matrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    auto coords = sub.membership(act(g, sub.basis()[k]));
    if (!coords)
      throw Error(ErrorCode::NotInvariant, describe(g) + " moves basis vector " + std::to_string(k) +
                                               " of " + std::string(to_string(sub.tag())) +
                                               " out of the span");
    for (std::size_t r = 0; r < d; ++r) m(r, k) = (*coords)[r];
  }
  return m;
}

Character character(const Subspace& sub) {
  Character chi{sub.degree(), {}};
  for (const auto& cls : conjugacy_classes(sub.degree()))
    chi.values.push_back(rep_matrix(sub, cls.representative).trace());
  return chi;
}

Rational char_inner(const Character& a, const Character& b) {
  if (a.n != b.n || a.values.size() != b.values.size())
    throw Error(ErrorCode::SizeMismatch, "characters of different groups");
  const auto classes = conjugacy_classes(a.n);
  Rational sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    sum += Rational(static_cast<unsigned long>(classes[c].size)) * a.values[c] * b.values[c];
  return sum / Rational(static_cast<unsigned long>(factorial(a.n)));
}

GroupFunction psi_wedge(int n, const Vector& a, const Vector& b) {
  if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::SizeMismatch, "wedge factors must have length n");
  GroupFunction out(n);
  for (auto p : pairs(n)) {
    const auto i = static_cast<std::size_t>(p.i - 1);
    const auto j = static_cast<std::size_t>(p.j - 1);
    Rational coeff = a[i] * b[j] - a[j] * b[i];
    if (sgn(coeff) != 0) out += coeff * tk_func(n, p.i, p.j);
  }
  return out;
}

WedgeReport wedge_iso_check(int n) {
  require_bundle_range(n);
  WedgeReport report;
  auto fail = [&](std::string what) {
    report.pass = false;
    report.failure = std::move(what);
    return report;
  };

  // Injectivity: the images of the e_i ^ e_j basis are independent.
  std::vector<Vector> rows;
  for (auto p : pairs(n)) rows.push_back(tk_func(n, p.i, p.j).values());
  if (rank(Matrix::from_rows(rows)) != pair_count(n))
    return fail("tk_ij are linearly dependent");
  report.passed.push_back("isomorphism: rank{tk_ij} = C(n,2)");

  // Equivariance on generators: psi(e_p(i) ^ e_p(j)) = p * tk_ij.
  std::vector<Permutation> generators = adjacent_transpositions(n);
  generators.push_back(cyc(n));
  for (const auto& g : generators)
    for (auto p : pairs(n)) {
      const GroupFunction lhs = psi_wedge(n, unit(n, g(p.i)), unit(n, g(p.j)));
      const GroupFunction rhs = act_relabel(g, tk_func(n, p.i, p.j));
      if (lhs != rhs)
        return fail("equivariance fails for generator (" + g.to_string() + ") on e_" +
                    std::to_string(p.i) + "^e_" + std::to_string(p.j));
    }
  report.passed.push_back("equivariance on adjacent transpositions and the n-cycle");

  Vector all_ones(static_cast<std::size_t>(n), 1);
  std::vector<GroupFunction> f1f0;
  for (int i = 1; i < n; ++i) {
    Vector a = unit(n, i);
    a[static_cast<std::size_t>(n - 1)] = -1;
    f1f0.push_back(psi_wedge(n, a, all_ones));
  }
  if (!same_span(Subspace(n, f1f0), v1_space(n))) return fail("psi(F_1 ^ F_0) != V_1");
  report.passed.push_back("psi(F_1 ^ F_0) = V_1");

  std::vector<GroupFunction> f1f1;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector a = unit(n, i);
      Vector b = unit(n, j);
      a[static_cast<std::size_t>(n - 1)] = -1;
      b[static_cast<std::size_t>(n - 1)] = -1;
      GroupFunction image = psi_wedge(n, a, b);
      if (image != w_func(n, i, j))
        return fail("psi((e_" + std::to_string(i) + "-e_n)^(e_" + std::to_string(j) +
                    "-e_n)) != w_" + std::to_string(i) + std::to_string(j));
      f1f1.push_back(std::move(image));
    }
  if (!same_span(Subspace(n, f1f1), v2_space(n))) return fail("psi(F_1 ^ F_1) != V_2");
  report.passed.push_back("psi(F_1 ^ F_1) = V_2 with basis w_ij");
  return report;
}

Matrix circulation_constraints(int n) {
  const auto ps = pairs(n);
  Matrix m(static_cast<std::size_t>(n), ps.size());
  for (std::size_t c = 0; c < ps.size(); ++c) {
    m(static_cast<std::size_t>(ps[c].j - 1), c) = 1;   // u(i, j) enters j
    m(static_cast<std::size_t>(ps[c].i - 1), c) = -1;  // u(j, i) = -u(i, j) at node i
  }
  return m;
}

std::optional<Vector> potential_of(int n, const Vector& u) {
  const auto ps = pairs(n);
  if (u.size() != ps.size()) throw Error(ErrorCode::SizeMismatch, "edge vector length");
  // Unknowns g(1..n-1); g(n) = 0 pins the additive constant.
  Matrix diff(ps.size(), static_cast<std::size_t>(n - 1));
  for (std::size_t r = 0; r < ps.size(); ++r) {
    if (ps[r].i < n) diff(r, static_cast<std::size_t>(ps[r].i - 1)) = 1;
    if (ps[r].j < n) diff(r, static_cast<std::size_t>(ps[r].j - 1)) = -1;
  }
  auto g = solve(diff, u);
  if (!g) return std::nullopt;
  g->push_back(0);
  return g;
}

bool is_potential(int n, const Vector& u) { return potential_of(n, u).has_value(); }

bool is_circulation(int n, const Vector& u) {
  if (u.size() != pair_count(n)) throw Error(ErrorCode::SizeMismatch, "edge vector length");
  return is_zero(circulation_constraints(n) * u);
}

std::optional<Vector> tk_coordinates(const GroupFunction& f) {
  return u_tilde_space(f.degree()).membership(f);
}

CharacterizationReport potential_circulation_check(int n) {
  require_bundle_range(n);
  CharacterizationReport report;
  const Matrix constraints = circulation_constraints(n);
  report.circulation_dim = kernel_basis(constraints).size();
  // Potentials are the image of g -> (g(i) - g(j)), which is -constraints^T.
  report.potential_dim = rank(constraints.transpose());
  auto fail = [&](std::string what) {
    report.pass = false;
    report.failure = std::move(what);
    return report;
  };
  const Subspace v1 = v1_space(n);
  const Subspace v2 = v2_space(n);
  std::vector<Vector> v1_coords;
  std::vector<Vector> v2_coords;
  for (const auto& f : v1.basis()) {
    auto u = tk_coordinates(f);
    if (!u || !is_potential(n, *u)) return fail("a V_1 basis vector is not a potential");
    v1_coords.push_back(std::move(*u));
  }
  for (const auto& f : v2.basis()) {
    auto u = tk_coordinates(f);
    if (!u || !is_circulation(n, *u)) return fail("a V_2 basis vector is not a circulation");
    v2_coords.push_back(std::move(*u));
  }
  if (rank(Matrix::from_rows(v1_coords)) != report.potential_dim)
    return fail("V_1 coordinates do not fill the potential space");
  if (rank(Matrix::from_rows(v2_coords)) != report.circulation_dim)
    return fail("V_2 coordinates do not fill the circulation space");
  return report;
}

InvarianceReport invariance_check(const DecompositionBundle& bundle) {
  const int n = bundle.n;
  InvarianceReport report;
  std::vector<GroupAction> generators;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) generators.emplace_back(transposition(n, i, j));
  generators.emplace_back(cyc(n));
  generators.emplace_back(Duality{});
  try {
    for (const Subspace* s : {&bundle.v0, &bundle.v1, &bundle.v2})
      for (const auto& g : generators) (void)rep_matrix(*s, g);
  } catch (const Error& e) {
    report.pass = false;
    report.failure = e.what();
    return report;
  }
  const Matrix one_v0 = Matrix::identity(1);
  if (rep_matrix(bundle.v0, Duality{}) != one_v0) {
    report.pass = false;
    report.failure = "duality is not +1 on V_0";
  }
  for (const Subspace* s : {&bundle.v1, &bundle.v2}) {
    Matrix minus = Matrix::identity(s->dim());
    for (std::size_t k = 0; k < s->dim(); ++k) minus(k, k) = -1;
    if (report.pass && rep_matrix(*s, Duality{}) != minus) {
      report.pass = false;
      report.failure = "duality is not -1 on " + std::string(to_string(s->tag()));
    }
  }
  return report;
}

Permutation reduce_to(const Permutation& p, int level) {
  Permutation q = p;
  while (q.size() > level) q = restrict_last(coset_representative(q));
  return q;
}

GroupFunction embed_previous(const GroupFunction& h) {
  const int m = h.degree() + 1;
  const auto& group = elements(m);
  Vector values(group.size());
  for (std::size_t k = 0; k < group.size(); ++k)
    values[k] = h[lex_index(restrict_last(coset_representative(group[k])))];
  return GroupFunction(m, std::move(values));
}

GroupFunction embed_into(const GroupFunction& h, int n) {
  if (h.degree() > n) throw Error(ErrorCode::InvalidArgument, "cannot embed into a smaller group");
  GroupFunction f = h;
  while (f.degree() < n) f = embed_previous(f);
  return f;
}

std::vector<CorollaryLevel> iterate_decomposition(int n) {
  require_bundle_range(n);
  std::vector<CorollaryLevel> chain;
  for (int level = n; level >= 2; --level) {
    std::vector<GroupFunction> generators;
    for (int k = 1; k <= level; ++k) generators.push_back(embed_into(v_func(level, k), n));
    std::vector<GroupFunction> basis(generators.begin(), generators.end() - 1);
    chain.push_back(CorollaryLevel{
        level, Subspace(n, std::move(basis), level == n ? SubspaceTag::V1 : SubspaceTag::Custom),
        std::move(generators)});
  }
  return chain;
}

}  // namespace lop
