#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lop/error.hpp"
#include "lop/repdecomp.hpp"
#include "oracle.hpp"

using lop::GroupFunction;
using lop::Matrix;
using lop::Permutation;
using lop::Rational;
using lop::Vector;

namespace {

std::size_t binom2(int m) { return static_cast<std::size_t>(m * (m - 1) / 2); }

Vector ints(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("bundle dimensions") {
  auto b3 = lop::build_bundle(3);
  CHECK(b3.v0.dim() == 1);
  CHECK(b3.v1.dim() == 2);
  CHECK(b3.v2.dim() == 1);
  auto b5 = lop::build_bundle(5);
  CHECK(b5.v0.dim() == 1);
  CHECK(b5.v1.dim() == 4);
  CHECK(b5.v2.dim() == 6);
  CHECK(lop::inner(lop::v_func(3, 1), lop::w_func(3, 1, 2)) == 0);
  CHECK_THROWS_AS(lop::build_bundle(2), lop::Error);
  CHECK_THROWS_AS(lop::build_bundle(7), lop::Error);
}

TEST_CASE("orthogonality and completeness of the decomposition") {
  for (int n = 3; n <= 5; ++n) {
    auto b = lop::build_bundle(n);
    const std::vector<const lop::Subspace*> parts{&b.v0, &b.v1, &b.v2};
    for (std::size_t s = 0; s < parts.size(); ++s)
      for (std::size_t t = s + 1; t < parts.size(); ++t)
        for (const auto& x : parts[s]->basis())
          for (const auto& y : parts[t]->basis()) CHECK(lop::inner(x, y) == 0);
    CHECK(b.v0.dim() + b.v1.dim() + b.v2.dim() == 1 + binom2(n));
    CHECK(lop::joint_rank(parts) == 1 + binom2(n));
    auto u = lop::u_inv_space(n);
    CHECK(u.dim() == 1 + binom2(n));
    CHECK(lop::joint_rank({&b.v0, &b.v1, &b.v2, &u}) == u.dim());
  }
}

TEST_CASE("coordinate Gram matrix") {
  auto g3 = lop::coordinate_gram(3);
  Matrix expected(3, 3, {6, 2, -2, 2, 6, 2, -2, 2, 6});
  CHECK(g3 == expected);

  for (int n = 3; n <= 5; ++n) {
    auto g = lop::coordinate_gram(n);
    auto ps = oracle::pair_list(n);
    for (std::size_t r = 0; r < ps.size(); ++r) {
      CHECK(g(r, r) == lop::factorial(n));
      for (std::size_t c = 0; c < ps.size(); ++c)
        CHECK(g(r, c) == oracle::inner_tk(n, ps[r].first, ps[r].second, ps[c].first, ps[c].second));
    }
  }
  CHECK(lop::coordinate_gram(4)(0, 5) == 0);
}

TEST_CASE("projection onto the summands") {
  auto b = lop::build_bundle(3);
  auto v1 = lop::v_func(3, 1);
  CHECK(lop::project(b.v1, v1) == v1);
  CHECK(b.v1.project(v1) == v1);
  CHECK(lop::project(b.v2, v1).is_zero());

  auto x = lop::tk_func(3, 1, 2);
  auto r = lop::project(b.v1, x);
  CHECK(b.v1.contains(r));
  for (const auto& v : b.v1.basis()) CHECK(lop::inner(x - r, v) == 0);
}

TEST_CASE("representation matrices") {
  auto b3 = lop::build_bundle(3);
  CHECK(lop::rep_matrix(b3.v1, Permutation::identity(3)) == Matrix::identity(2));
  CHECK(lop::rep_matrix(b3.v2, lop::transposition(3, 1, 2)) == Matrix(1, 1, {-1}));

  try {
    lop::rep_matrix(lop::k_span(3), lop::transposition(3, 1, 2));
    FAIL("expected NOT_INVARIANT");
  } catch (const lop::Error& e) {
    CHECK(e.code() == lop::ErrorCode::NotInvariant);
  }
}

TEST_CASE("rep_matrix is a homomorphism") {
  std::mt19937 rng(3);
  for (int n = 3; n <= 5; ++n) {
    auto b = lop::build_bundle(n);
    std::uniform_int_distribution<std::size_t> pick(0, lop::factorial(n) - 1);
    for (int s = 0; s < 8; ++s) {
      const auto& p = lop::elements(n)[pick(rng)];
      const auto& q = lop::elements(n)[pick(rng)];
      for (const auto* sub : {&b.v1, &b.v2})
        CHECK(lop::rep_matrix(*sub, p) * lop::rep_matrix(*sub, q) ==
              lop::rep_matrix(*sub, lop::compose(p, q)));
    }
  }
}

TEST_CASE("invariance under generators and duality") {
  for (int n = 3; n <= 6; ++n) {
    auto b = lop::build_bundle(n);
    auto report = lop::invariance_check(b);
    INFO(report.failure);
    CHECK(report.pass);
    const lop::GroupAction dual = lop::Duality{};
    CHECK(lop::rep_matrix(b.v0, dual) == Matrix::identity(1));
    Matrix neg1(b.v1.dim(), b.v1.dim());
    for (std::size_t i = 0; i < b.v1.dim(); ++i) neg1(i, i) = -1;
    CHECK(lop::rep_matrix(b.v1, dual) == neg1);
  }
}

TEST_CASE("characters at n = 3") {
  auto b = lop::build_bundle(3);
  auto x1 = lop::character(b.v1);
  auto x2 = lop::character(b.v2);
  CHECK(x1.values == ints({2, 0, -1}));
  CHECK(x2.values == ints({1, -1, 1}));
  CHECK(lop::char_inner(x1, x1) == 1);
  CHECK(lop::char_inner(x2, x2) == 1);
  CHECK(lop::char_inner(x1, x2) == 0);
}

TEST_CASE("irreducibility certificates for n = 3..6") {
  for (int n = 3; n <= 6; ++n) {
    auto b = lop::build_bundle(n);
    auto x1 = lop::character(b.v1);
    auto x2 = lop::character(b.v2);
    CHECK(lop::char_inner(x1, x1) == 1);
    CHECK(lop::char_inner(x2, x2) == 1);
    CHECK(lop::char_inner(x1, x2) == 0);
    CHECK(x1.values[0] == n - 1);
    CHECK(x2.values[0] == static_cast<long>(binom2(n - 1)));
  }
}

TEST_CASE("wedge square isomorphism") {
  // psi((e1 - e3) ^ (e2 - e3)) = tk_12 - tk_13 + tk_23 = w_12 at n = 3.
  CHECK(lop::psi_wedge(3, ints({1, 0, -1}), ints({0, 1, -1})) == lop::w_func(3, 1, 2));
  CHECK(lop::psi_wedge(4, ints({0, 1, 0, 0}), ints({0, 1, 0, 0})).is_zero());
  for (int n = 3; n <= 6; ++n) {
    auto report = lop::wedge_iso_check(n);
    INFO(report.failure);
    CHECK(report.pass);
  }
}

TEST_CASE("potentials and circulations") {
  // tk coordinates of v_1 at n = 4: 1 on (1,2), (1,3), (1,4).
  auto u = lop::tk_coordinates(lop::v_func(4, 1));
  REQUIRE(u.has_value());
  CHECK(*u == ints({1, 1, 1, 0, 0, 0}));
  auto g = lop::potential_of(4, *u);
  REQUIRE(g.has_value());
  CHECK(*g == ints({1, 0, 0, 0}));

  auto w = lop::tk_coordinates(lop::w_func(4, 1, 2));
  REQUIRE(w.has_value());
  CHECK(*w == ints({1, 0, -1, 0, 1, 0}));
  CHECK(lop::is_circulation(4, *w));
  CHECK_FALSE(lop::is_potential(4, *w));
  CHECK_FALSE(lop::is_circulation(4, *u));

  Vector zero(6);
  CHECK(lop::is_potential(4, zero));
  CHECK(lop::is_circulation(4, zero));

  CHECK_FALSE(lop::tk_coordinates(lop::one(4)).has_value());

  for (int n = 3; n <= 6; ++n) {
    auto report = lop::potential_circulation_check(n);
    INFO(report.failure);
    CHECK(report.pass);
    CHECK(report.potential_dim == static_cast<std::size_t>(n - 1));
    CHECK(report.circulation_dim == binom2(n - 1));
  }
}

TEST_CASE("iterated decomposition") {
  auto dims = [](int n) {
    std::vector<std::size_t> out;
    for (const auto& level : lop::iterate_decomposition(n)) out.push_back(level.space.dim());
    return out;
  };
  CHECK(dims(3) == std::vector<std::size_t>{2, 1});
  CHECK(dims(4) == std::vector<std::size_t>{3, 2, 1});
  CHECK(dims(6) == std::vector<std::size_t>{5, 4, 3, 2, 1});

  auto levels = lop::iterate_decomposition(3);
  CHECK(lop::same_span(levels[1].space, lop::build_bundle(3).v2));

  // The embedding sends tk on S_{n-1} to w on S_n.
  CHECK(lop::embed_previous(lop::tk_func(3, 1, 2)) == lop::w_func(4, 1, 2));
}
