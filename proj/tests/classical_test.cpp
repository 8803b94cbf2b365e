#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "qgame/classical.hpp"
#include "qgame/games.hpp"

using namespace qgame;

namespace {

BimatrixGame make(Payoff2x2 a, Payoff2x2 b) {
  BimatrixGame g;
  g.name = "t";
  g.a = a;
  g.b = b;
  return g;
}

bool has(const std::vector<PureProfile>& v, int r, int c) {
  return std::find(v.begin(), v.end(), PureProfile{r, c}) != v.end();
}

BimatrixGame random_game(std::mt19937_64& rng) {
  BimatrixGame g;
  for (auto* m : {&g.a, &g.b})
    for (auto& row : *m)
      for (double& v : row) v = testing::uniform(rng, -10, 10);
  return g;
}

}  // namespace

TEST_CASE("expected payoffs select cells and mix bilinearly") {
  const BimatrixGame g = chicken();
  auto e = expected_payoffs(g, {1, 1});
  CHECK(e.a == -25);
  CHECK(e.b == -25);
  e = expected_payoffs(g, {1, 0});
  CHECK(e.a == g.a[0][1]);
  CHECK(e.b == g.b[0][1]);
  e = expected_payoffs(g, {7.0 / 12, 7.0 / 12});
  CHECK(e.a == doctest::Approx(6.25).epsilon(1e-14));
  CHECK(e.b == doctest::Approx(6.25).epsilon(1e-14));
  CHECK_THROWS_AS(expected_payoffs(g, {1.5, 0}), std::invalid_argument);
}

TEST_CASE("expected payoffs: bilinear expansion and range, random") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const BimatrixGame g = random_game(rng);
    const double p = testing::uniform(rng, 0, 1), q = testing::uniform(rng, 0, 1);
    const auto e = expected_payoffs(g, {p, q});
    const double ea = p * q * g.a[0][0] + p * (1 - q) * g.a[0][1] + (1 - p) * q * g.a[1][0] +
                      (1 - p) * (1 - q) * g.a[1][1];
    CHECK(e.a == doctest::Approx(ea).epsilon(1e-13));
    double lo = 1e9, hi = -1e9;
    for (auto& r : g.a)
      for (double v : r) lo = std::min(lo, v), hi = std::max(hi, v);
    CHECK(e.a >= lo - 1e-12);
    CHECK(e.a <= hi + 1e-12);
  }
}

TEST_CASE("pure nash") {
  auto ne = pure_nash(chicken());
  REQUIRE(ne.size() == 2);
  CHECK(has(ne, 0, 1));
  CHECK(has(ne, 1, 0));

  CHECK(pure_nash(make({{{1, 1}, {1, 1}}}, {{{1, 1}, {1, 1}}})).size() == 4);

  // (0,0) is strict; (1,1) survives only as a weak equilibrium (both deviations tie)
  ne = pure_nash(make({{{2, 0}, {1, 0}}}, {{{2, 1}, {0, 0}}}));
  REQUIRE(ne.size() == 2);
  CHECK(ne[0] == PureProfile{0, 0});
  CHECK(ne[1] == PureProfile{1, 1});

  ne = pure_nash(make({{{2, 0}, {1, -1}}}, {{{2, 1}, {0, -1}}}));
  REQUIRE(ne.size() == 1);
  CHECK(ne[0] == PureProfile{0, 0});
}

TEST_CASE("pure nash profiles satisfy the deviation inequalities, random") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const BimatrixGame g = random_game(rng);
    const auto ne = pure_nash(g);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const bool is_ne = g.a[r][c] >= g.a[1 - r][c] && g.b[r][c] >= g.b[r][1 - c];
        CHECK(is_ne == has(ne, r, c));
      }
  }
}

TEST_CASE("mixed nash by indifference") {
  auto m = mixed_nash_indifference(chicken());
  REQUIRE(m.status == IndifferenceStatus::kInterior);
  CHECK(m.profile->p == doctest::Approx(7.0 / 12).epsilon(1e-14));
  CHECK(m.profile->q == doctest::Approx(7.0 / 12).epsilon(1e-14));

  m = mixed_nash_indifference(make({{{1, 0}, {0, 1}}}, {{{1, 0}, {0, 1}}}));
  REQUIRE(m.profile);
  CHECK(m.profile->p == doctest::Approx(0.5));
  CHECK(m.profile->q == doctest::Approx(0.5));

  m = mixed_nash_indifference(make({{{2, 2}, {0, 0}}}, {{{2, 2}, {0, 0}}}));
  CHECK_FALSE(m.profile);
  CHECK(m.status != IndifferenceStatus::kInterior);

  // unique solution outside [0,1]
  m = mixed_nash_indifference(make({{{3, 0}, {5, 1}}}, {{{3, 5}, {0, 1}}}));
  CHECK_FALSE(m.profile);
  CHECK(m.status == IndifferenceStatus::kOutOfRange);
}

TEST_CASE("mixed nash makes the opponent indifferent, random") {
  std::mt19937_64 rng(13);
  int found = 0;
  for (int t = 0; t < 2000; ++t) {
    const BimatrixGame g = random_game(rng);
    const auto m = mixed_nash_indifference(g);
    if (!m.profile) continue;
    ++found;
    const auto [p, q] = *m.profile;
    CHECK(std::abs(expected_payoffs(g, {0, q}).a - expected_payoffs(g, {1, q}).a) <= 1e-12 * 20);
    CHECK(std::abs(expected_payoffs(g, {p, 0}).b - expected_payoffs(g, {p, 1}).b) <= 1e-12 * 20);
  }
  CHECK(found > 100);
}

TEST_CASE("dominant strategies") {
  auto d = dominant_strategies(make({{{2, 2}, {0, 0}}}, {{{0, 0}, {0, 0}}}));
  REQUIRE(d.player_a.size() == 1);
  CHECK(d.player_a[0].index == 0);
  CHECK(d.player_a[0].strict);

  d = dominant_strategies(chicken());
  CHECK(d.player_a.empty());
  CHECK(d.player_b.empty());

  d = dominant_strategies(make({{{1, 1}, {1, 1}}}, {{{1, 1}, {1, 1}}}));
  CHECK(d.player_a.size() == 2);
  CHECK(d.player_b.size() == 2);
  for (const auto& s : d.player_a) CHECK_FALSE(s.strict);

  d = dominant_strategies(prisoners_dilemma());
  REQUIRE(d.player_a.size() == 1);
  CHECK(d.player_a[0].index == 1);
  REQUIRE(d.player_b.size() == 1);
  CHECK(d.player_b[0].index == 1);
}

TEST_CASE("pareto optimal profiles") {
  auto p = pareto_optimal_profiles(chicken());
  REQUIRE(p.size() == 3);
  CHECK(has(p, 0, 1));
  CHECK(has(p, 1, 0));
  CHECK(has(p, 1, 1));

  CHECK(pareto_optimal_profiles(make({{{1, 1}, {1, 1}}}, {{{1, 1}, {1, 1}}})).size() == 4);

  p = pareto_optimal_profiles(make({{{3, 0}, {0, 0}}}, {{{3, 0}, {0, 0}}}));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == PureProfile{0, 0});
}

TEST_CASE("game validation and swap") {
  BimatrixGame g = chicken();
  g.a[0][0] = std::nan("");
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  const BimatrixGame s = prisoners_dilemma().swapped();
  CHECK(s.a[0][1] == prisoners_dilemma().b[1][0]);
  CHECK(s.b[1][0] == prisoners_dilemma().a[0][1]);
}
