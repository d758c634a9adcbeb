#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lop/error.hpp"
#include "lop/facets.hpp"
#include "lop/polytope.hpp"
#include "lop/repdecomp.hpp"
#include "lop/report.hpp"

namespace lop::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 0;
  std::string basis = "K";
  std::string polytope = "lop";
  std::string target = "permutahedron";
  std::string format;
  std::string out_path;
  bool classify = false;
  bool allow_long_running = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_n(int n, int lo, int hi) {
  if (n > hi && hi >= kMaxDegree)
    throw UsageError("N_TOO_LARGE: n=" + std::to_string(n) + " exceeds " + std::to_string(hi));
  if (n < lo || n > hi)
    throw UsageError("N_OUT_OF_RANGE: n=" + std::to_string(n) + " outside " + std::to_string(lo) +
                     ".." + std::to_string(hi));
}

CheckResult guarded(std::string name, const std::function<CheckResult()>& body) {
  try {
    CheckResult r = body();
    r.name = std::move(name);
    return r;
  } catch (const Error& e) {
    return CheckResult{std::move(name), false, false, e.what()};
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

bool bases_orthogonal(const Subspace& a, const Subspace& b) {
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (sgn(inner(x, y)) != 0) return false;
  return true;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
  file << text;
}

int cmd_vertices(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 2, kMaxDegree);
  require(cfg.basis == "K" || cfg.basis == "TK", "--basis must be K or TK");
  require(cfg.polytope == "lop" || cfg.polytope == "permutahedron", "--polytope must be lop or permutahedron");
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  require(format == "csv" || format == "json" || format == "text", "--format must be csv, json or text");
  const VertexSet vs = cfg.polytope == "permutahedron"
                           ? permutahedron_vertices(cfg.n)
                           : lop_vertices(cfg.n, cfg.basis == "TK" ? Basis::TK : Basis::K);
  emit(cfg, format == "json" ? vertices_json(vs) : to_csv(vs), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 3, 6);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require(format == "json" || format == "text", "--format must be json or text");
  const auto checks = run_verification(cfg.n);
  bool all = true;
  for (const auto& c : checks) all = all && (c.pass || c.skipped);

  if (format == "json") {
    nlohmann::ordered_json report;
    report["n"] = cfg.n;
    report["pass"] = all;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      list.push_back({{"name", c.name},
                      {"status", c.skipped ? "skipped" : (c.pass ? "pass" : "fail")},
                      {"detail", c.detail}});
    report["checks"] = list;
    emit(cfg, report.dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    for (const auto& c : checks)
      text << (c.skipped ? "[SKIP] " : c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    text << (all ? "all checks passed" : "verification FAILED") << "\n";
    emit(cfg, text.str(), out);
  }
  if (!all) {
    for (const auto& c : checks)
      if (!c.pass && !c.skipped) throw Error(ErrorCode::ClaimViolation, "check failed: " + c.name);
  }
  return kExitOk;
}

int cmd_facets(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 3, 6);
  require(cfg.n < 6 || cfg.allow_long_running, "n=6 facet enumeration requires --allow-long-running");
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require(format == "json" || format == "text", "--format must be json or text");
  const VertexSet vs = lop_vertices(cfg.n, Basis::K);
  const HRepresentation h = enumerate_facets(vs, FacetOptions{cfg.allow_long_running});
  std::vector<CensusEntry> census;
  if (cfg.classify) census = vertex_census(h, vs);

  if (format == "json") {
    emit(cfg, hrep_json(h, census), out);
    return kExitOk;
  }
  std::string text = to_text(h);
  if (cfg.classify) {
    std::size_t lower = 0, upper = 0, cycle = 0, other = 0;
    for (const auto& e : census) {
      switch (e.cls) {
        case FacetClass::TrivialLower: ++lower; break;
        case FacetClass::TrivialUpper: ++upper; break;
        case FacetClass::ThreeCycle: ++cycle; break;
        case FacetClass::Other: ++other; break;
      }
    }
    text += "# facets=" + std::to_string(h.inequalities.size()) + " trivial_lower=" + std::to_string(lower) +
            " trivial_upper=" + std::to_string(upper) + " three_cycle=" + std::to_string(cycle) +
            " other=" + std::to_string(other) + "\n";
  }
  emit(cfg, text, out);
  return kExitOk;
}

int cmd_project(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 3, 6);
  require(cfg.target == "permutahedron" || cfg.target == "previous",
          "--target must be permutahedron or previous");
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require(format == "json" || format == "csv", "--format must be json or csv");
  if (cfg.target == "permutahedron") {
    const auto proj = project_to_permutahedron(cfg.n);
    emit(cfg, format == "json" ? projection_report_json(cfg.n, proj) : to_csv(proj.image), out);
  } else {
    const auto proj = project_to_previous(cfg.n);
    emit(cfg, format == "json" ? projection_report_json(cfg.n, proj) : to_csv(proj.image), out);
  }
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 3, 6);
  require(cfg.format.empty() || cfg.format == "json", "--format must be json");
  emit(cfg, decomposition_report_json(cfg.n), out);
  return kExitOk;
}

}  // namespace

std::vector<CheckResult> run_verification(int n) {
  std::vector<CheckResult> checks;
  const DecompositionBundle bundle = build_bundle(n);

  checks.push_back(guarded("decomposition", [&] {
    const std::size_t d2 = pair_count(n - 1);
    bool ok = bundle.v0.dim() == 1 && bundle.v1.dim() == static_cast<std::size_t>(n - 1) &&
              bundle.v2.dim() == d2;
    ok = ok && bases_orthogonal(bundle.v0, bundle.v1) && bases_orthogonal(bundle.v0, bundle.v2) &&
         bases_orthogonal(bundle.v1, bundle.v2);
    const Subspace uinv = u_inv_space(n);
    ok = ok && joint_rank({&bundle.v0, &bundle.v1, &bundle.v2}) == 1 + pair_count(n) &&
         joint_rank({&bundle.v0, &bundle.v1, &bundle.v2, &uinv}) == 1 + pair_count(n);
    return CheckResult{"", ok, false,
                       "dims " + join({bundle.v0.dim(), bundle.v1.dim(), bundle.v2.dim()}) +
                           ", pairwise orthogonal, direct sum = U_Inv"};
  }));

  checks.push_back(guarded("invariance", [&] {
    auto r = invariance_check(bundle);
    return CheckResult{"", r.pass, false, r.pass ? "transpositions, n-cycle, duality" : r.failure};
  }));

  checks.push_back(guarded("characters", [&] {
    const Character c1 = character(bundle.v1);
    const Character c2 = character(bundle.v2);
    const Rational a = char_inner(c1, c1), b = char_inner(c2, c2), c = char_inner(c1, c2);
    return CheckResult{"", a == 1 && b == 1 && c == 0, false,
                       "<V1,V1>=" + to_string(a) + " <V2,V2>=" + to_string(b) + " <V1,V2>=" + to_string(c)};
  }));

  checks.push_back(guarded("permutahedron_projection", [&] {
    const auto proj = project_to_permutahedron(n);
    return CheckResult{"", true, false,
                       std::to_string(proj.image.size()) + " vertices, x -> 2x - " + std::to_string(n + 1)};
  }));

  checks.push_back(guarded("previous_projection", [&] {
    const auto proj = project_to_previous(n);
    return CheckResult{"", true, false,
                       std::to_string(proj.fibers.fibers.size()) + " fibers of size " + std::to_string(n) +
                           " = right cosets of C_n, images = TK vertices of P_" + std::to_string(n - 1)};
  }));

  checks.push_back(guarded("recomposition", [&] {
    const bool ok = recomposes_vertices(bundle);
    return CheckResult{"", ok, false, "P_V0 + P_V1 + P_V2 = id on every vertex"};
  }));

  checks.push_back(guarded("equivariance", [&] {
    if (n > 5) return CheckResult{"", true, true, "run for n <= 5"};
    const auto r = verify_equivariance(n);
    return CheckResult{"", r.pass(), false,
                       std::to_string(r.checks) + " checks, " + std::to_string(r.failures.size()) + " failures"};
  }));

  checks.push_back(guarded("induced_action", [&] {
    if (n > 5) return CheckResult{"", true, true, "run for n <= 5"};
    std::vector<GroupAction> gens;
    for (auto& t : adjacent_transpositions(n)) gens.emplace_back(t);
    gens.emplace_back(cyc(n));
    gens.emplace_back(Duality{});
    std::vector<InducedAction> induced;
    for (const auto& g : gens) induced.push_back(induced_action(n, g));
    const auto ident = induced_action(n, Permutation::identity(n));
    bool ok = true;
    for (std::size_t a = 0; a < ident.vertex_permutation.size(); ++a) ok = ok && ident.vertex_permutation[a] == a;
    // Composition law on all pairs of permutation generators.
    for (std::size_t x = 0; x + 1 < gens.size(); ++x)
      for (std::size_t y = 0; y + 1 < gens.size(); ++y) {
        const auto& g = std::get<Permutation>(gens[x]);
        const auto& h = std::get<Permutation>(gens[y]);
        const auto gh = induced_action(n, compose(g, h));
        for (std::size_t a = 0; a < gh.vertex_permutation.size(); ++a)
          ok = ok && gh.vertex_permutation[a] == induced[x].vertex_permutation[induced[y].vertex_permutation[a]];
        ok = ok && gh.linear == induced[x].linear * induced[y].linear;
      }
    const auto& dual = induced.back();
    for (std::size_t a = 0; a < dual.vertex_permutation.size(); ++a)
      ok = ok && dual.vertex_permutation[dual.vertex_permutation[a]] == a;
    return CheckResult{"", ok, false, "identity, composition, and duality involution laws"};
  }));

  checks.push_back(guarded("lemma_basis", [&] {
    if (n > 5) return CheckResult{"", true, true, "run for n <= 5"};
    bool ok = true;
    std::string detail;
    for (const Subspace& s : {u_inv_space(n), u_tilde_space(n), bundle.v1, bundle.v2}) {
      const auto r = lemma_basis_check(s);
      ok = ok && r.pass;
      detail += std::string(to_string(s.tag())) + ":" + std::to_string(r.distinct_points) + " ";
      if (!r.pass) detail += "(" + r.detail + ") ";
    }
    detail.pop_back();
    return CheckResult{"", ok, false, detail};
  }));

  checks.push_back(guarded("wedge_isomorphism", [&] {
    const auto r = wedge_iso_check(n);
    return CheckResult{"", r.pass, false, r.pass ? std::to_string(r.passed.size()) + " identities" : r.failure};
  }));

  checks.push_back(guarded("potentials_circulations", [&] {
    const auto r = potential_circulation_check(n);
    return CheckResult{"", r.pass, false,
                       r.pass ? "potentials dim " + std::to_string(r.potential_dim) + ", circulations dim " +
                                    std::to_string(r.circulation_dim)
                              : r.failure};
  }));

  checks.push_back(guarded("corollary_chain", [&] {
    const auto r = verify_corollary(n);
    return CheckResult{"", r.pass, false, r.pass ? "dims " + join(r.dims) : r.failure};
  }));

  return checks;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for the linear ordering polytope", "lopctl"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool with_format = true) {
    sub->add_option("--n", cfg.n, "Degree n")->required();
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
    if (with_format) sub->add_option("--format", cfg.format, "json|csv|text");
  };

  auto* vertices = app.add_subcommand("vertices", "Vertices of P_n or the permutahedron");
  add_common(vertices);
  vertices->add_option("--basis", cfg.basis, "K|TK");
  vertices->add_option("--polytope", cfg.polytope, "lop|permutahedron");

  auto* verify = app.add_subcommand("verify", "Run every structural check at n");
  add_common(verify);

  auto* facets = app.add_subcommand("facets", "Enumerate the facets of P_n");
  add_common(facets);
  facets->add_flag("--classify", cfg.classify, "Classify facets and count tight vertices");
  facets->add_flag("--allow-long-running", cfg.allow_long_running, "Permit n = 6");

  auto* project = app.add_subcommand("project", "Project P_n onto V_1 or V_2");
  add_common(project);
  project->add_option("--target", cfg.target, "permutahedron|previous");

  auto* decompose = app.add_subcommand("decompose", "Invariant decomposition report");
  add_common(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*vertices) return cmd_vertices(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*facets) return cmd_facets(cfg, out);
    if (*project) return cmd_project(cfg, out);
    if (*decompose) return cmd_decompose(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace lop::cli
