#include "lop/report.hpp"

#include <json.hpp>

namespace lop {

namespace {

using Json = nlohmann::ordered_json;

Json rationals(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(rationals(m.row(r)));
  return rows;
}

Json vertex_list(const VertexSet& vs) {
  Json a = Json::array();
  for (std::size_t k = 0; k < vs.size(); ++k)
    a.push_back(Json{{"label", vs.labels[k].to_string()}, {"point", rationals(vs.points[k])}});
  return a;
}

bool orthogonal(const Subspace& a, const Subspace& b) {
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (sgn(inner(x, y)) != 0) return false;
  return true;
}

}  // namespace

std::string decomposition_report_json(int n) {
  const DecompositionBundle bundle = build_bundle(n);
  const Character chi1 = character(bundle.v1);
  const Character chi2 = character(bundle.v2);

  Json classes = Json::array();
  for (const auto& cls : conjugacy_classes(n))
    classes.push_back(Json{{"cycle_type", cls.cycle_type}, {"size", cls.size}});

  Json report;
  report["n"] = n;
  report["dims"] = {bundle.v0.dim(), bundle.v1.dim(), bundle.v2.dim()};
  report["orthogonality"] = orthogonal(bundle.v0, bundle.v1) && orthogonal(bundle.v0, bundle.v2) &&
                            orthogonal(bundle.v1, bundle.v2);
  report["characters"] = Json{
      {"classes", classes},
      {"V1", rationals(chi1.values)},
      {"V2", rationals(chi2.values)},
      {"inner", Json{{"V1_V1", to_string(char_inner(chi1, chi1))},
                     {"V2_V2", to_string(char_inner(chi2, chi2))},
                     {"V1_V2", to_string(char_inner(chi1, chi2))}}},
  };
  report["gram"] = matrix_json(bundle.coordinate_gram);
  return report.dump(2) + "\n";
}

std::string vertices_json(const VertexSet& vs) {
  Json report;
  report["dim"] = vs.dim;
  report["count"] = vs.size();
  report["vertices"] = vertex_list(vs);
  return report.dump(2) + "\n";
}

std::string projection_report_json(int n, const PermutahedronProjection& proj) {
  Json report;
  report["n"] = n;
  report["target"] = "permutahedron";
  report["affine_map"] = Json{{"scale", to_string(proj.map.scale)}, {"shift", to_string(proj.map.shift)}};
  report["distinct_points"] = proj.image.size();
  report["vertices"] = vertex_list(proj.image);
  report["pass"] = true;
  return report.dump(2) + "\n";
}

std::string projection_report_json(int n, const PreviousProjection& proj) {
  Json fibers = Json::array();
  for (const auto& f : proj.fibers.fibers) {
    Json sources = Json::array();
    for (const auto& s : f.sources) sources.push_back(s.to_string());
    fibers.push_back(Json{{"target", f.target.to_string()}, {"sources", sources}});
  }
  Json report;
  report["n"] = n;
  report["target"] = "previous";
  report["affine_map"] = Json{{"scale", "1"}, {"shift", "0"}};
  report["distinct_points"] = proj.image.size();
  report["fibers"] = fibers;
  report["vertices"] = vertex_list(proj.image);
  report["pass"] = true;
  return report.dump(2) + "\n";
}

std::string hrep_json(const HRepresentation& h, const std::vector<CensusEntry>& census) {
  Json list = Json::array();
  for (std::size_t f = 0; f < h.inequalities.size(); ++f) {
    Json item{{"coefficients", rationals(h.inequalities[f].coefficients)},
              {"rhs", to_string(h.inequalities[f].rhs)},
              {"class", std::string(to_string(classify(h.inequalities[f])))}};
    if (f < census.size()) item["tight_vertices"] = census[f].tight;
    list.push_back(std::move(item));
  }
  Json report;
  report["n"] = h.n;
  report["basis"] = "K";
  report["facets"] = h.inequalities.size();
  report["inequalities"] = list;
  return report.dump(2) + "\n";
}

}  // namespace lop
