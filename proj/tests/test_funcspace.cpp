#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lop/error.hpp"
#include "lop/funcspace.hpp"
#include "oracle.hpp"

using lop::GroupFunction;
using lop::Permutation;
using lop::Rational;

namespace {

Permutation P(std::vector<int> images) { return Permutation(std::move(images)); }

GroupFunction random_function(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-4, 4);
  lop::Vector v(lop::factorial(n));
  for (auto& x : v) x = num(rng);
  return GroupFunction(n, v);
}

}  // namespace

TEST_CASE("pair indexing") {
  auto ps = lop::pairs(4);
  REQUIRE(ps.size() == 6);
  CHECK(ps[0] == lop::PairIndex{1, 2});
  CHECK(ps[5] == lop::PairIndex{3, 4});
  CHECK(lop::pair_position(4, {2, 4}) == 4);
  CHECK_THROWS_AS(lop::pair_position(4, {3, 2}), lop::Error);
}

TEST_CASE("k_func examples") {
  CHECK(lop::k_func(3, {1, 2}).at(P({1, 2, 3})) == 0);
  CHECK(lop::k_func(3, {1, 2}).at(P({3, 2, 1})) == 1);
  CHECK(lop::k_func(3, {1, 3}).at(P({2, 3, 1})) == 1);
}

TEST_CASE("tk_func examples") {
  CHECK(lop::tk_func(3, 1, 2).at(P({1, 2, 3})) == -1);
  CHECK(lop::tk_func(4, 2, 2).is_zero());
  CHECK(lop::tk_func(4, 3, 1) == -lop::tk_func(4, 1, 3));
}

TEST_CASE("v_func examples") {
  CHECK(lop::v_func(3, 1).at(P({1, 2, 3})) == -2);
  CHECK(lop::v_func(3, 3).at(P({1, 2, 3})) == 2);
  for (int n = 2; n <= 5; ++n) {
    GroupFunction sum(n);
    for (int i = 1; i <= n; ++i) sum += lop::v_func(n, i);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("w_func examples") {
  CHECK(lop::w_func(3, 1, 2).at(P({1, 2, 3})) == -1);
  CHECK(lop::w_func(3, 1, 2).at(P({2, 3, 1})) == -1);
  CHECK_THROWS_AS(lop::w_func(3, 1, 3), lop::Error);
}

TEST_CASE("inner products match brute-force sums") {
  CHECK(lop::inner(lop::tk_func(3, 1, 2), lop::tk_func(3, 1, 2)) == 6);
  CHECK(lop::inner(lop::tk_func(3, 1, 2), lop::tk_func(3, 1, 3)) == 2);
  CHECK(lop::inner(lop::tk_func(4, 1, 2), lop::tk_func(4, 3, 4)) == 0);
  CHECK(oracle::inner_tk(3, 1, 2, 1, 3) == 2);
  CHECK(oracle::inner_tk(4, 1, 2, 3, 4) == 0);

  for (int n = 3; n <= 5; ++n)
    for (auto [i, j] : oracle::pair_list(n))
      for (auto [a, b] : oracle::pair_list(n))
        CHECK(lop::inner(lop::tk_func(n, i, j), lop::tk_func(n, a, b)) ==
              oracle::inner_tk(n, i, j, a, b));
}

TEST_CASE("pointwise identities for n up to 6") {
  for (int n = 2; n <= 6; ++n) {
    const auto brute = oracle::perms(n);
    for (auto [i, j] : oracle::pair_list(n)) {
      auto k = lop::k_func(n, {i, j});
      CHECK(lop::tk_func(n, i, j) == Rational(2) * k - lop::one(n));
      for (std::size_t t = 0; t < brute.size(); ++t) CHECK(k[t] == oracle::k(brute[t], i, j));
    }
    for (int i = 1; i <= n; ++i) {
      auto v = lop::v_func(n, i);
      for (std::size_t t = 0; t < brute.size(); ++t)
        CHECK(v[t] == 2 * brute[t][static_cast<std::size_t>(i - 1)] - (n + 1));
    }
  }
}

TEST_CASE("w functions are constant on cyclic cosets") {
  for (int n = 3; n <= 6; ++n) {
    const auto c = lop::cyc(n);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto w = lop::w_func(n, i, j);
        for (const auto& p : lop::elements(n)) CHECK(w.at(lop::compose(c, p)) == w.at(p));
      }
  }
}

TEST_CASE("relabeling acts on the inversion indicators") {
  CHECK(lop::act_relabel(Permutation::identity(4), lop::k_func(4, {1, 3})) ==
        lop::k_func(4, {1, 3}));
  // p . tk_ij = tk_{p(i) p(j)}
  for (int n = 3; n <= 4; ++n)
    for (const auto& p : lop::elements(n))
      for (auto [i, j] : oracle::pair_list(n))
        CHECK(lop::act_relabel(p, lop::tk_func(n, i, j)) == lop::tk_func(n, p(i), p(j)));
}

TEST_CASE("relabeling is a left action under (p o q)(i) = p(q(i))") {
  std::mt19937 rng(42);
  for (int n = 3; n <= 4; ++n) {
    auto f = random_function(rng, n);
    for (const auto& p : lop::elements(n))
      for (const auto& q : lop::elements(n))
        CHECK(lop::act_relabel(p, lop::act_relabel(q, f)) ==
              lop::act_relabel(lop::compose(p, q), f));
  }
}

TEST_CASE("duality") {
  std::mt19937 rng(5);
  auto f = random_function(rng, 4);
  CHECK(lop::act_duality(lop::act_duality(f)) == f);
  for (auto [i, j] : oracle::pair_list(4))
    CHECK(lop::act_duality(lop::tk_func(4, i, j)) == -lop::tk_func(4, i, j));
}

TEST_CASE("duality commutes with relabeling and both preserve the scalar product") {
  std::mt19937 rng(11);
  for (int n = 3; n <= 5; ++n) {
    auto f = random_function(rng, n);
    auto g = random_function(rng, n);
    const auto base = lop::inner(f, g);
    CHECK(lop::inner(lop::act_duality(f), lop::act_duality(g)) == base);
    std::uniform_int_distribution<std::size_t> pick(0, lop::factorial(n) - 1);
    for (int s = 0; s < 20; ++s) {
      const auto& p = lop::elements(n)[pick(rng)];
      CHECK(lop::act_duality(lop::act_relabel(p, f)) == lop::act_relabel(p, lop::act_duality(f)));
      CHECK(lop::inner(lop::act_relabel(p, f), lop::act_relabel(p, g)) == base);
    }
  }
}

TEST_CASE("group function arithmetic checks degrees") {
  CHECK_THROWS_AS(GroupFunction(3, lop::Vector(5)), lop::Error);
  auto a = lop::one(3);
  CHECK_THROWS_AS(a += lop::one(4), lop::Error);
  CHECK(GroupFunction::indicator(P({2, 1, 3}))[2] == 1);
}

TEST_CASE("function CSV export") {
  auto csv = lop::to_csv(lop::tk_func(2, 1, 2));
  CHECK(csv == "1 2,2 1\n-1,1\n");
  auto half = Rational(1, 2) * lop::one(2);
  CHECK(lop::to_csv(half) == "1 2,2 1\n1/2,1/2\n");
}
