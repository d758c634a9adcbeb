#pragma once

// JSON renderings of module results. Rationals are always strings "p/q",
// keys keep a fixed order, so equal inputs give byte-identical output.

#include <string>

#include "lop/facets.hpp"
#include "lop/polytope.hpp"
#include "lop/repdecomp.hpp"

namespace lop {

/// {"n", "dims", "orthogonality", "characters", "gram"} for build_bundle(n).
std::string decomposition_report_json(int n);

std::string vertices_json(const VertexSet& vs);

std::string projection_report_json(int n, const PermutahedronProjection& proj);
std::string projection_report_json(int n, const PreviousProjection& proj);

/// Inequalities with class and tight-vertex count when census is non-empty.
std::string hrep_json(const HRepresentation& h, const std::vector<CensusEntry>& census);

}  // namespace lop
