#pragma once

// Exact facet enumeration of vertex-described polytopes (double description
// over the integers), classification of linear ordering polytope facets,
// the half-vertex census, and pullback of facets along P_n -> P_{n-1}.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lop/exactlin.hpp"
#include "lop/polytope.hpp"

namespace lop {

/// coefficients . x <= rhs
struct Inequality {
  Vector coefficients;
  Rational rhs;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Positive rescaling to coprime integers. Two inequalities define the same
/// halfspace iff their canonical forms are equal.
Inequality canonical(Inequality ineq);

/// True when ineq holds with equality at x.
bool is_tight(const Inequality& ineq, const Vector& x);
bool is_satisfied(const Inequality& ineq, const Vector& x);

enum class FacetClass { TrivialLower, TrivialUpper, ThreeCycle, Other };

std::string_view to_string(FacetClass cls);
/// TrivialLower and TrivialUpper share the "trivial" family.
bool same_family(FacetClass a, FacetClass b);
bool is_maximal_family(FacetClass cls);

struct HRepresentation {
  int n = 0;  // degree when the vertex set is a linear ordering polytope, else 0
  std::vector<Inequality> inequalities;
  /// tight_vertices[f] lists indices into the input vertex set.
  std::vector<std::vector<std::size_t>> tight_vertices;
};

struct FacetOptions {
  /// Dimension above 10 (n = 6) is refused unless set.
  bool allow_long_running = false;
};

/// All facets of conv(vs). The vertex set must be full-dimensional.
/// Throws Error(DimTooLarge) beyond dimension 15 or 720 points, or above
/// dimension 10 without allow_long_running. Every returned inequality is
/// verified valid and tight on an affinely (dim-1)-dimensional vertex subset.
HRepresentation enumerate_facets(const VertexSet& vs, FacetOptions options = {});

/// Expects canonical form over the pair coordinates of some P_n.
FacetClass classify(const Inequality& ineq);

struct CensusEntry {
  std::size_t facet = 0;
  FacetClass cls = FacetClass::Other;
  std::size_t tight = 0;
};

/// Tight-vertex counts per facet. Throws Error(ClaimViolation) unless every
/// trivial and three-cycle facet has exactly |vs|/2 tight vertices and no
/// other facet reaches |vs|/2.
std::vector<CensusEntry> vertex_census(const HRepresentation& h, const VertexSet& vs);

/// Acting with the adjacent transpositions and the duality on any facet's
/// tight set yields the tight set of a facet of the same family.
bool closed_under_symmetry(const HRepresentation& h, const VertexSet& vs);

/// The factor map P_n -> P_{n-1} in K-coordinates: x' = linear * x + offset.
struct FactorMap {
  Matrix linear;
  Vector offset;
};
/// Built from the w-functions' tk coordinates and checked on every vertex.
FactorMap factor_map(int n);

struct PullbackResult {
  Inequality inequality;
  bool is_facet = false;
  FacetClass cls = FacetClass::Other;
  std::size_t tight = 0;
};

/// Composes a facet of P_{n-1} with the factor map. Throws Error(NotValid)
/// if some vertex of P_n violates the result and Error(ClaimViolation) when a
/// trivial or three-cycle input does not pull back to a facet of those families.
PullbackResult pullback_facet(int n, const Inequality& ineq);

/// "# lop n=<n> basis=K" then "a_(1,2) ... a_(n-1,n) <= b" per inequality.
std::string to_text(const HRepresentation& h);
HRepresentation parse_hrep(std::string_view text);

}  // namespace lop
