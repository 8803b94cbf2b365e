#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "helpers.hpp"
#include "qgame/ewl.hpp"
#include "qgame/games.hpp"

using namespace qgame;
using testing::kPi;

namespace {

const std::complex<double> I{0, 1};

double max_abs(const Payoff2x2& x) {
  double m = 0;
  for (auto& r : x)
    for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("entangler") {
  CHECK((entangler(EntanglerSetting(0)) - Mat4c::Identity()).cwiseAbs().maxCoeff() == 0.0);
  const Mat4c j = entangler(EntanglerSetting(kPi / 2));
  const double r = 1 / std::sqrt(2.0);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(j(k, k) - r) < 1e-15);
    CHECK(std::abs(j(k, 3 - k) - I * r) < 1e-15);
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Mat4c m = entangler(EntanglerSetting(testing::random_gamma(rng)));
    CHECK((m * m.adjoint() - Mat4c::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(EntanglerSetting(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(EntanglerSetting(kPi / 2 + 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(EntanglerSetting(NAN), std::invalid_argument);
}

TEST_CASE("final state examples") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const EntanglerSetting s(testing::random_gamma(rng));
    const auto id = final_state(s, identity_strategy(), identity_strategy());
    CHECK(std::abs(id.amplitudes[0] - 1.0) < 1e-12);
    const auto ff = final_state(s, flip_strategy(), flip_strategy());
    CHECK(std::abs(ff.amplitudes[3] + 1.0) < 1e-12);
    CHECK(outcome_probs(ff)[3] == doctest::Approx(1.0).epsilon(1e-12));
  }
  const Vec4c psi1 = entangler(EntanglerSetting(kPi / 2)) * Vec4c(1, 0, 0, 0);
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(psi1[0] - r) < 1e-15);
  CHECK(std::abs(psi1[3] - I * r) < 1e-15);
}

TEST_CASE("outcome probabilities") {
  TwoQubitState s{Vec4c(1, 0, 0, 0)};
  CHECK(outcome_probs(s) == std::array<double, 4>{1, 0, 0, 0});
  const double r = 1 / std::sqrt(2.0);
  s.amplitudes = Vec4c(r, 0, 0, I * r);
  const auto p = outcome_probs(s);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[3] == doctest::Approx(0.5));
  CHECK(p[1] == 0.0);
}

TEST_CASE("pure payoffs examples") {
  const BimatrixGame g = chicken();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto p = pure_payoffs(g, EntanglerSetting(testing::random_gamma(rng)), identity_strategy(), identity_strategy());
    CHECK(p.a == doctest::Approx(-25));
    CHECK(p.b == doctest::Approx(-25));
  }
  const auto p = pure_payoffs(g, EntanglerSetting(0), flip_strategy(), identity_strategy());
  CHECK(p.a == doctest::Approx(0).epsilon(1e-12));
  CHECK(p.b == doctest::Approx(50));
}

TEST_CASE("gamma zero factorizes into single-qubit statistics, random") {
  std::mt19937_64 rng(4);
  const EntanglerSetting s(0);
  for (int t = 0; t < 500; ++t) {
    const Su2Element ua = haar_sample(rng), ub = haar_sample(rng);
    const auto p = outcome_probs(final_state(s, ua, ub));
    const Mat2c ma = ua.matrix(), mb = ub.matrix();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(std::abs(p[2 * i + j] - std::norm(ma(i, 0)) * std::norm(mb(j, 0))) <= 1e-10);
  }
}

TEST_CASE("normalization, payoff bound and swap symmetry, random") {
  std::mt19937_64 rng(5);
  const auto games = bundled_games();
  for (int t = 0; t < 1000; ++t) {
    const EntanglerSetting s(testing::random_gamma(rng));
    const Su2Element ua = haar_sample(rng), ub = haar_sample(rng);
    const auto st = final_state(s, ua, ub);
    CHECK(std::abs(st.norm() - 1) <= 1e-12);
    const auto pr = outcome_probs(st);
    CHECK(std::abs(pr[0] + pr[1] + pr[2] + pr[3] - 1) <= 1e-12);

    const BimatrixGame& g = games[static_cast<std::size_t>(t) % games.size()];
    const auto p = pure_payoffs(g, s, ua, ub);
    CHECK(std::abs(p.a) <= max_abs(g.a) + 1e-12);
    CHECK(std::abs(p.b) <= max_abs(g.b) + 1e-12);

    const auto q = pure_payoffs(g.swapped(), s, ub, ua);
    CHECK(q.a == doctest::Approx(p.b).epsilon(1e-12));
    CHECK(q.b == doctest::Approx(p.a).epsilon(1e-12));
  }
}

TEST_CASE("classical embedding on a grid") {
  const BimatrixGame g = chicken();
  for (double gamma : {0.0, kPi / 4, kPi / 2})
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        const double ta = kPi * i / 8, tb = kPi * j / 8;
        const auto q = pure_payoffs(g, EntanglerSetting(gamma), Su2Element::from_angles(ta, 0, 0),
                                    Su2Element::from_angles(tb, 0, 0));
        const auto c = expected_payoffs(g, {std::pow(std::cos(ta / 2), 2), std::pow(std::cos(tb / 2), 2)});
        CHECK(std::abs(q.a - c.a) <= 1e-10);
        CHECK(std::abs(q.b - c.b) <= 1e-10);
      }
}

TEST_CASE("discrete mixed strategies") {
  CHECK_THROWS_AS(DiscreteMixedStrategy({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMixedStrategy({identity_strategy()}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMixedStrategy({identity_strategy(), flip_strategy()}, {1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMixedStrategy({identity_strategy(), flip_strategy()}, {0.5, 0.4}), std::invalid_argument);

  const BimatrixGame g = chicken();
  const DiscreteMixedStrategy half({identity_strategy(), flip_strategy()}, {0.5, 0.5});
  const auto m = mixed_payoffs(g, EntanglerSetting(0), half, half);
  CHECK(m.a == doctest::Approx(10));
  CHECK(m.b == doctest::Approx(10));

  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Su2Element ua = haar_sample(rng), ub = haar_sample(rng);
    const EntanglerSetting s(testing::random_gamma(rng));
    const auto a = mixed_payoffs(g, s, DiscreteMixedStrategy::pure(ua), DiscreteMixedStrategy::pure(ub));
    const auto b = pure_payoffs(g, s, ua, ub);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);

    const double p = testing::uniform(rng, 0, 1), q = testing::uniform(rng, 0, 1);
    const auto e = mixed_payoffs(g, EntanglerSetting(0), DiscreteMixedStrategy({identity_strategy(), flip_strategy()}, {p, 1 - p}),
                                 DiscreteMixedStrategy({identity_strategy(), flip_strategy()}, {q, 1 - q}));
    const auto c = expected_payoffs(g, {p, q});
    CHECK(std::abs(e.a - c.a) <= 1e-10);
    CHECK(std::abs(e.b - c.b) <= 1e-10);
  }
}
