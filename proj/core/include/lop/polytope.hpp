#pragma once

// Vertex-level geometry of the linear ordering polytope: vertex sets,
// projected images of the simplex on S_n, and the constructive checks of
// the two projections (to the permutahedron and to the previous linear
// ordering polytope) with their symmetry.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lop/exactlin.hpp"
#include "lop/repdecomp.hpp"
#include "lop/symgroup.hpp"

namespace lop {

enum class Basis { K, TK };

struct VertexSet {
  std::size_t dim = 0;
  std::vector<Vector> points;
  std::vector<Permutation> labels;

  std::size_t size() const noexcept { return points.size(); }
};

/// Points (k_ij(p))_{i<j}, or (tk_ij(p)) for Basis::TK, over enumerate(n).
/// Throws Error(NTooLarge) above 8 and Error(NOutOfRange) below 2.
VertexSet lop_vertices(int n, Basis basis);
/// Points (p(1), ..., p(n)).
VertexSet permutahedron_vertices(int n);

/// Dimension of the affine hull of the points.
std::size_t affine_dimension(const VertexSet& vs);

struct Fiber {
  Permutation target;
  Vector point;
  std::vector<Permutation> sources;  // sorted
};

struct FiberMap {
  std::vector<Fiber> fibers;
};

/// Groups exactly-equal points; fibers appear in order of first occurrence
/// and take the label of that occurrence as target.
FiberMap group_fibers(const VertexSet& vs);

/// Projection of every simplex vertex e_p onto sub, in coordinates with
/// respect to sub's basis. One point per permutation; duplicates kept.
VertexSet simplex_image(const Subspace& sub);

/// Projection of e_p onto the given space: the vertex of P_n for p when the
/// space is span{1, k_ij} or span{tk_ij}.
GroupFunction vertex_function(const Subspace& space, const Permutation& p);

struct LemmaReport {
  bool pass = true;
  std::size_t distinct_points = 0;
  std::size_t distinct_columns = 0;
  std::optional<Permutation> first_failure;
  std::string detail;
};

/// Checks that the matrix B with sub's basis as rows maps the projected
/// simplex bijectively onto the columns of B. Requires n <= 5.
LemmaReport lemma_basis_check(const Subspace& sub);

/// x -> scale * x + shift, componentwise.
struct AffineMap {
  Rational scale;
  Rational shift;

  Vector apply(const Vector& x) const;
};

struct PermutahedronProjection {
  VertexSet image;  // (inner(v_i, P(x_p)))_{i=1..n} per permutation
  AffineMap map;    // sends the permutahedron vertex of p to its image
};

/// Projects every TK vertex onto V_1 and checks it against the permutahedron.
/// Throws Error(AffineMismatch) naming the first failing vertex.
PermutahedronProjection project_to_permutahedron(int n);

struct PreviousProjection {
  /// One point per coset, read in w-coordinates; labels are the coset
  /// representatives restricted to {1..n-1}, in lexicographic order.
  VertexSet image;
  FiberMap fibers;
};

/// Projects every TK vertex onto V_2. Throws Error(FiberMismatch) when the
/// fibers are not the right cosets of C_n and Error(ValueMismatch) when an
/// image differs from the TK vertex of P_{n-1}.
PreviousProjection project_to_previous(int n);

struct EquivarianceFailure {
  std::string generator;
  Permutation vertex;
  int subspace = 0;  // 1 or 2
};

struct EquivarianceReport {
  std::size_t checks = 0;
  std::vector<EquivarianceFailure> failures;

  bool pass() const noexcept { return failures.empty(); }
};

/// project(V_k, g f) == g project(V_k, f) for the given generators and every vertex f.
EquivarianceReport check_equivariance(int n, const std::vector<GroupAction>& generators);
/// Adjacent transpositions and the duality, 3 <= n <= 5.
EquivarianceReport verify_equivariance(int n);

struct InducedAction {
  /// vertex_permutation[a] = b when g sends image vertex a to image vertex b
  /// (indices into project_to_previous(n).image).
  std::vector<std::size_t> vertex_permutation;
  /// Linear part on w-coordinates; translation is zero.
  Matrix linear;
  Vector translation;
};

/// Action of g on the vertices of P_{n-1} through the projection onto V_2.
InducedAction induced_action(int n, const GroupAction& g);

/// P_{V0} + P_{V1} + P_{V2} returns every vertex of P_n exactly.
bool recomposes_vertices(const DecompositionBundle& bundle);

struct CorollaryReport {
  bool pass = true;
  std::vector<std::size_t> dims;  // W_n, ..., W_2
  std::vector<std::string> passed;
  std::string failure;
};

/// Orthogonality, completeness, and the permutahedron image of every level
/// of iterate_decomposition(n).
CorollaryReport verify_corollary(int n);

/// One line per vertex: label, then coordinates as rationals.
std::string to_csv(const VertexSet& vs);

}  // namespace lop
