// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Pass --allow-long-running to add the n = 6
// facet census to criterion 10.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lop/error.hpp"
#include "lop/facets.hpp"
#include "lop/polytope.hpp"
#include "lop/repdecomp.hpp"

namespace {

// Wall-clock budgets in seconds.
constexpr double kDecompositionBudgetN6 = 5.0;
constexpr double kPermutahedronBudgetN6 = 10.0;
constexpr double kEquivarianceBudgetN5 = 30.0;
constexpr double kFacetBudget[] = {10.0, 60.0, 600.0};  // n = 3, 4, 5

// Expected facet counts (total, trivial, three-cycle) for n = 3, 4, 5.
constexpr std::size_t kFacetCounts[][3] = {{8, 6, 2}, {20, 12, 8}, {40, 20, 20}};

struct Failed {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
double timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return seconds_since(start);
}

std::size_t binom2(int m) { return static_cast<std::size_t>(m * (m - 1) / 2); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

// ---------------------------------------------------------------------------

std::string ac1() {
  std::string note;
  for (int n = 3; n <= 6; ++n) {
    std::optional<lop::DecompositionBundle> built;
    double t = timed([&] { built.emplace(lop::build_bundle(n)); });
    const auto& b = *built;
    require(b.v0.dim() == 1 && b.v1.dim() == static_cast<std::size_t>(n - 1) &&
                b.v2.dim() == binom2(n - 1),
            "dims at n=" + std::to_string(n));
    require(b.v0.dim() + b.v1.dim() + b.v2.dim() == 1 + binom2(n), "dim sum");
    const lop::Subspace* parts[] = {&b.v0, &b.v1, &b.v2};
    for (int s = 0; s < 3; ++s)
      for (int r = s + 1; r < 3; ++r)
        for (const auto& x : parts[s]->basis())
          for (const auto& y : parts[r]->basis())
            require(lop::inner(x, y) == 0, "nonzero cross inner product at n=" + std::to_string(n));
    if (n == 6) {
      require(t < kDecompositionBudgetN6, "n=6 took " + fmt_seconds(t));
      note = "n=6 in " + fmt_seconds(t);
    }
  }
  return "dims (1, n-1, C(n-1,2)) and exact orthogonality for n=3..6; " + note;
}

std::string ac2() {
  std::string note;
  for (int n = 3; n <= 6; ++n) {
    lop::PermutahedronProjection proj;
    double t = timed([&] { proj = lop::project_to_permutahedron(n); });
    require(proj.map.scale == 2 && proj.map.shift == -(n + 1), "affine map at n=" + std::to_string(n));
    const auto perm = lop::permutahedron_vertices(n);
    for (std::size_t v = 0; v < perm.size(); ++v) {
      const auto& p = perm.labels[v];
      require(proj.image.labels[v] == p, "label order");
      for (int i = 1; i <= n; ++i)
        require(proj.image.points[v][static_cast<std::size_t>(i - 1)] == 2 * p(i) - (n + 1),
                "v-coordinate of " + p.to_string());
      require(proj.map.apply(perm.points[v]) == proj.image.points[v], "map at " + p.to_string());
    }
    if (n == 6) {
      require(t < kPermutahedronBudgetN6, "n=6 took " + fmt_seconds(t));
      note = "n=6 in " + fmt_seconds(t);
    }
  }
  return "v-coordinates equal 2p(i)-(n+1) on every vertex, n=3..6; " + note;
}

std::string ac3() {
  for (int n = 3; n <= 6; ++n) {
    const auto proj = lop::project_to_previous(n);
    const auto prev = lop::lop_vertices(n - 1, lop::Basis::TK);
    std::set<lop::Vector> distinct(proj.image.points.begin(), proj.image.points.end());
    require(distinct.size() == lop::factorial(n - 1), "distinct count at n=" + std::to_string(n));
    require(proj.image.points == prev.points && proj.image.labels == prev.labels,
            "image differs from TK vertices of P_" + std::to_string(n - 1));
    const auto cosets = lop::cyclic_cosets(n);
    require(proj.fibers.fibers.size() == cosets.classes.size(), "fiber count");
    for (const auto& fiber : proj.fibers.fibers) {
      require(fiber.sources.size() == static_cast<std::size_t>(n), "fiber size");
      const auto& cls = cosets.classes[cosets.class_of[lop::lex_index(fiber.sources.front())]];
      require(std::set<lop::Permutation>(cls.begin(), cls.end()) ==
                  std::set<lop::Permutation>(fiber.sources.begin(), fiber.sources.end()),
              "fiber is not a right coset");
    }
  }
  return "(n-1)! images, fibers = right cosets of C_n, images = TK vertices of P_{n-1}, n=3..6";
}

std::string ac4() {
  std::string note;
  for (int n = 3; n <= 5; ++n) {
    double t = timed([&] {
      const auto report = lop::verify_equivariance(n);
      require(report.pass(), "equivariance failure at n=" + std::to_string(n));

      std::vector<lop::GroupAction> gens;
      for (const auto& s : lop::adjacent_transpositions(n)) gens.emplace_back(s);
      gens.emplace_back(lop::Duality{});
      std::vector<lop::InducedAction> acts;
      for (const auto& g : gens) acts.push_back(lop::induced_action(n, g));

      const auto id = lop::induced_action(n, lop::Permutation::identity(n));
      for (std::size_t a = 0; a < id.vertex_permutation.size(); ++a)
        require(id.vertex_permutation[a] == a, "identity law");

      // Composition law on every pair of transposition generators, and the
      // duality as an involution commuting with them.
      const std::size_t m = gens.size() - 1;
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          const auto gh = lop::induced_action(
              n, lop::compose(std::get<lop::Permutation>(gens[x]), std::get<lop::Permutation>(gens[y])));
          for (std::size_t a = 0; a < gh.vertex_permutation.size(); ++a)
            require(gh.vertex_permutation[a] ==
                        acts[x].vertex_permutation[acts[y].vertex_permutation[a]],
                    "composition law");
          require(gh.linear == acts[x].linear * acts[y].linear, "linear composition law");
        }
      const auto& dual = acts[m];
      for (std::size_t a = 0; a < dual.vertex_permutation.size(); ++a) {
        require(dual.vertex_permutation[dual.vertex_permutation[a]] == a, "duality involution");
        for (std::size_t x = 0; x < m; ++x)
          require(dual.vertex_permutation[acts[x].vertex_permutation[a]] ==
                      acts[x].vertex_permutation[dual.vertex_permutation[a]],
                  "duality commutes");
      }
    });
    if (n == 5) {
      require(t < kEquivarianceBudgetN5, "n=5 took " + fmt_seconds(t));
      note = "n=5 in " + fmt_seconds(t);
    }
  }
  return "projections commute with generators and duality, induced action group laws, n=3..5; " + note;
}

std::string ac5() {
  for (int n = 4; n <= 6; ++n) {
    const auto report = lop::verify_corollary(n);
    require(report.pass, "n=" + std::to_string(n) + ": " + report.failure);
    for (std::size_t k = 0; k < report.dims.size(); ++k)
      require(report.dims[k] == static_cast<std::size_t>(n - 1) - k, "dims at n=" + std::to_string(n));
  }
  return "orthogonal chain of dims (n-1, ..., 1) with permutahedron images, n=4..6";
}

std::string ac6() {
  for (int n = 3; n <= 6; ++n) {
    const auto b = lop::build_bundle(n);
    const auto x1 = lop::character(b.v1);
    const auto x2 = lop::character(b.v2);
    require(lop::char_inner(x1, x1) == 1 && lop::char_inner(x2, x2) == 1 &&
                lop::char_inner(x1, x2) == 0,
            "character inner products at n=" + std::to_string(n));
    for (const auto* sub : {&b.v1, &b.v2}) {
      const auto m = lop::rep_matrix(*sub, lop::Duality{});
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          require(m(r, c) == (r == c ? -1 : 0), "duality is not -identity at n=" + std::to_string(n));
    }
  }
  return "<V1,V1> = <V2,V2> = 1, <V1,V2> = 0, duality = -id, n=3..6";
}

std::string ac7() {
  for (int n = 3; n <= 5; ++n)
    for (const auto& sub : {lop::u_inv_space(n), lop::u_tilde_space(n), lop::v1_space(n),
                            lop::v2_space(n)}) {
      const auto report = lop::lemma_basis_check(sub);
      require(report.pass, "n=" + std::to_string(n) + " " + std::string(lop::to_string(sub.tag())) +
                               ": " + report.detail);
    }
  return "U_Inv, span{tk}, V1, V2 at n=3..5";
}

std::string ac8() {
  for (int n = 3; n <= 6; ++n) {
    const auto report = lop::wedge_iso_check(n);
    require(report.pass, "n=" + std::to_string(n) + ": " + report.failure);
  }
  return "equivariant isomorphism, F1^F0 -> V1, F1^F1 -> V2, n=3..6";
}

std::string ac9() {
  for (int n = 3; n <= 6; ++n) {
    const auto report = lop::potential_circulation_check(n);
    require(report.pass, "n=" + std::to_string(n) + ": " + report.failure);
    require(report.potential_dim == static_cast<std::size_t>(n - 1) &&
                report.circulation_dim == binom2(n - 1),
            "dimension count at n=" + std::to_string(n));
  }
  return "V1 = potentials, V2 = circulations by membership and dimension, n=3..6";
}

std::string ac10(bool long_running) {
  std::ostringstream note;
  std::map<int, lop::HRepresentation> hreps;
  for (int n = 3; n <= 5; ++n) {
    const auto vs = lop::lop_vertices(n, lop::Basis::K);
    lop::HRepresentation h;
    double t = timed([&] { h = lop::enumerate_facets(vs); });
    const std::size_t slot = static_cast<std::size_t>(n - 3);
    require(t < kFacetBudget[slot], "n=" + std::to_string(n) + " took " + fmt_seconds(t));
    std::size_t trivial = 0, cycle = 0;
    for (const auto& ineq : h.inequalities) {
      const auto cls = lop::classify(ineq);
      require(cls != lop::FacetClass::Other, "OTHER facet at n=" + std::to_string(n));
      (cls == lop::FacetClass::ThreeCycle ? cycle : trivial)++;
    }
    require(h.inequalities.size() == kFacetCounts[slot][0] && trivial == kFacetCounts[slot][1] &&
                cycle == kFacetCounts[slot][2],
            "facet counts at n=" + std::to_string(n));
    for (const auto& entry : lop::vertex_census(h, vs))
      require(entry.tight == lop::factorial(n) / 2, "tight count at n=" + std::to_string(n));
    note << "n=" << n << ": " << h.inequalities.size() << " in " << fmt_seconds(t) << "; ";
    hreps[n] = std::move(h);
  }
  for (int n = 4; n <= 5; ++n)
    for (const auto& f : hreps[n - 1].inequalities) {
      const auto pb = lop::pullback_facet(n, f);
      require(pb.is_facet && lop::is_maximal_family(pb.cls) && pb.tight == lop::factorial(n) / 2,
              "pullback at n=" + std::to_string(n));
    }
  if (long_running) {
    const auto vs = lop::lop_vertices(6, lop::Basis::K);
    lop::HRepresentation h;
    double t = timed([&] { h = lop::enumerate_facets(vs, {true}); });
    // vertex_census throws unless every trivial and three-cycle facet has
    // exactly 360 tight vertices and no other facet reaches 360.
    const auto census = lop::vertex_census(h, vs);
    std::size_t other = 0;
    for (const auto& e : census) other += e.cls == lop::FacetClass::Other;
    note << "n=6: " << h.inequalities.size() << " facets (" << other << " other) in "
         << fmt_seconds(t) << "; ";
  } else {
    note << "n=6 census skipped (pass --allow-long-running); ";
  }
  note << "pullbacks from P_3, P_4 are maximal facets";
  return note.str();
}

std::string ac11(const std::string& lopctl) {
  auto capture = [&] {
    const std::string cmd = "\"" + lopctl + "\" verify --n 4 --format json";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot start " + lopctl);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    require(status == 0, "verify exited with status " + std::to_string(status));
    return out;
  };
  const auto first = capture();
  const auto second = capture();
  require(!first.empty() && first == second, "outputs differ");
  return "two processes, " + std::to_string(first.size()) + " identical bytes";
}

}  // namespace

int main(int argc, char** argv) {
  bool long_running = false;
  std::string lopctl = LOPCTL_PATH;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--allow-long-running") long_running = true;
    else if (arg == "--lopctl" && i + 1 < argc) lopctl = argv[++i];
  }

  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"AC1", ac1},
      {"AC2", ac2},
      {"AC3", ac3},
      {"AC4", ac4},
      {"AC5", ac5},
      {"AC6", ac6},
      {"AC7", ac7},
      {"AC8", ac8},
      {"AC9", ac9},
      {"AC10", [&] { return ac10(long_running); }},
      {"AC11", [&] { return ac11(lopctl); }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = check();
      ok = true;
    } catch (const Failed& f) {
      detail = f.why;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    failures += !ok;
    std::cout << name << (name.size() < 4 ? "  " : " ") << (ok ? "PASS" : "FAIL") << "  " << detail
              << " [" << fmt_seconds(seconds_since(start)) << "]" << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failures ? 1 : 0;
}
