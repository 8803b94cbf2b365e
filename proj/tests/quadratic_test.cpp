#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <complex>
#include <random>

#include "helpers.hpp"
#include "qgame/games.hpp"
#include "qgame/quadratic.hpp"

using namespace qgame;
using testing::kPi;

namespace {

const std::complex<double> I{0, 1};

double min_entry(const Payoff2x2& x) { return std::min({x[0][0], x[0][1], x[1][0], x[1][1]}); }
double max_entry(const Payoff2x2& x) { return std::max({x[0][0], x[0][1], x[1][0], x[1][1]}); }

// Brute-force oracle: the form's matrix recovered from simulator payoffs by
// polarization over basis vectors.
Mat4 oracle_matrix_a(const BimatrixGame& g, const EntanglerSetting& s, const Su2Element& ub) {
  Mat4 p;
  auto val = [&](const Vec4& u) { return pure_payoffs(g, s, Su2Element::from_vector(u), ub).a; };
  for (int i = 0; i < 4; ++i) p(i, i) = val(Vec4::Unit(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Vec4 plus = (Vec4::Unit(i) + Vec4::Unit(j)) / std::sqrt(2.0);
      p(i, j) = p(j, i) = val(plus) - 0.5 * (p(i, i) + p(j, j));
    }
  return p;
}

}  // namespace

TEST_CASE("M vectors: worked values at gamma zero") {
  const MVectors m = m_vectors(0, Vec4(1, 0, 0, 0));
  CHECK((m.m[0] - Vec4c(1, 0, 0, I)).norm() < 1e-15);
  CHECK((m.m[2] - Vec4c(0, I, -1, 0)).norm() < 1e-15);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Vec4 u = testing::random_unit(rng);
    CHECK(std::norm(m.amplitude(0, u)) == doctest::Approx(u[0] * u[0] + u[3] * u[3]).epsilon(1e-12));
    CHECK(std::norm(m.amplitude(2, u)) == doctest::Approx(u[1] * u[1] + u[2] * u[2]).epsilon(1e-12));
  }
  for (double gamma : {0.0, 0.4, kPi / 2}) {
    const MVectors mm = m_vectors(gamma, Vec4(1, 0, 0, 0));
    CHECK(std::norm(mm.amplitude(0, Vec4(1, 0, 0, 0))) == doctest::Approx(1.0));
    for (int jk = 1; jk < 4; ++jk) CHECK(std::norm(mm.amplitude(jk, Vec4(1, 0, 0, 0))) < 1e-24);
  }
}

TEST_CASE("M vectors reproduce simulator amplitudes, random") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    const double gamma = testing::random_gamma(rng);
    const Su2Element ua = haar_sample(rng), ub = haar_sample(rng);
    const MVectors m = m_vectors(gamma, ub.vector());
    const auto st = final_state(EntanglerSetting(gamma), ua, ub);
    double total = 0;
    for (int jk = 0; jk < 4; ++jk) {
      const auto amp = m.amplitude(jk, ua.vector());
      CHECK(std::abs(std::norm(amp) - std::norm(st.amplitudes[jk])) <= 1e-10);
      CHECK(std::abs(amp - st.amplitudes[jk]) <= 1e-10);  // no global phase in this convention
      total += std::norm(amp);
    }
    CHECK(std::abs(total - 1) <= 1e-10);
  }
}

TEST_CASE("exchange relations") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const double gamma = testing::random_gamma(rng);
    const Vec4 ua = testing::random_unit(rng);
    const MVectors m = m_vectors(gamma, ua), n = n_vectors(gamma, ua);
    CHECK((n.m[0] - m.m[0]).norm() <= 1e-12);
    CHECK((n.m[1] - m.m[2]).norm() <= 1e-12);
    CHECK((n.m[2] - m.m[1]).norm() <= 1e-12);
    CHECK((n.m[3] - m.m[3]).norm() <= 1e-12);

    // P_B built from N equals P_A of the swapped game with roles exchanged
    const BimatrixGame g = battle_of_the_sexes();
    const Mat4 pb = payoff_matrix_b(g, EntanglerSetting(gamma), ua).matrix;
    const Mat4 swapped = payoff_matrix_a(g.swapped(), EntanglerSetting(gamma), ua).matrix;
    CHECK((pb - swapped).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("payoff matrix examples") {
  const BimatrixGame g = chicken();
  const EntanglerSetting s0(0);
  const Mat4 pa = payoff_matrix_a(g, s0, Vec4(1, 0, 0, 0)).matrix;
  Mat4 expect = Vec4(-25, 0, 0, -25).asDiagonal();
  CHECK((pa - expect).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((pa - oracle_matrix_a(g, s0, identity_strategy())).cwiseAbs().maxCoeff() <= 1e-10);

  // player B against u_A = I at gamma 0: -25 (w^2 + z^2) + 0 (x^2 + y^2)
  const Mat4 pb = payoff_matrix_b(g, s0, Vec4(1, 0, 0, 0)).matrix;
  CHECK((pb - expect).cwiseAbs().maxCoeff() <= 1e-12);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const EntanglerSetting s(testing::random_gamma(rng));
    const Su2Element ub = haar_sample(rng);
    CHECK((payoff_matrix_a(g, s, ub.vector()).matrix - oracle_matrix_a(g, s, ub)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("quadratic forms equal simulator payoffs, 1000 random profiles") {
  std::mt19937_64 rng(5);
  const auto games = bundled_games();
  for (int t = 0; t < 1000; ++t) {
    const BimatrixGame& g = games[static_cast<std::size_t>(t) % games.size()];
    const EntanglerSetting s(testing::random_gamma(rng));
    const Su2Element ua = haar_sample(rng), ub = haar_sample(rng);
    const auto sim = pure_payoffs(g, s, ua, ub);
    CHECK(std::abs(payoff_matrix_a(g, s, ub.vector()).value(ua.vector()) - sim.a) <= 1e-10);
    CHECK(std::abs(payoff_matrix_b(g, s, ua.vector()).value(ub.vector()) - sim.b) <= 1e-10);
  }
}

TEST_CASE("form invariants: symmetric, eigenvalues within payoff range") {
  std::mt19937_64 rng(6);
  for (const BimatrixGame& g : bundled_games())
    for (int t = 0; t < 100; ++t) {
      const EntanglerSetting s(testing::random_gamma(rng));
      for (Player who : {Player::kA, Player::kB}) {
        const auto f = payoff_matrix(who, g, s, testing::random_unit(rng));
        CHECK(f.owner == who);
        CHECK((f.matrix - f.matrix.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
        const auto ev = Eigen::SelfAdjointEigenSolver<Mat4>(f.matrix).eigenvalues();
        const Payoff2x2& x = who == Player::kA ? g.a : g.b;
        CHECK(ev.minCoeff() >= min_entry(x) - 1e-9);
        CHECK(ev.maxCoeff() <= max_entry(x) + 1e-9);
      }
    }
}

TEST_CASE("averaged matrix") {
  const BimatrixGame g = chicken();
  const EntanglerSetting s0(0);
  const Vec4 ub = Vec4(0.5, 0.5, 0.5, 0.5);
  const auto single = averaged_matrix(g, s0, Player::kA, DiscreteMixedStrategy::pure(Su2Element::from_vector(ub)));
  CHECK((single.matrix - payoff_matrix_a(g, s0, ub).matrix).cwiseAbs().maxCoeff() <= 1e-15);

  const DiscreteMixedStrategy half({identity_strategy(), flip_strategy()}, {0.5, 0.5});
  const Mat4 expect = 0.5 * (payoff_matrix_a(g, s0, Vec4(1, 0, 0, 0)).matrix + payoff_matrix_a(g, s0, Vec4(0, 1, 0, 0)).matrix);
  CHECK((averaged_matrix(g, s0, Player::kA, half).matrix - expect).cwiseAbs().maxCoeff() <= 1e-12);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const EntanglerSetting s(testing::random_gamma(rng));
    const DiscreteMixedStrategy mu({haar_sample(rng), haar_sample(rng), haar_sample(rng)}, {0.2, 0.3, 0.5});
    const auto fa = averaged_matrix(g, s, Player::kA, mu);
    const auto fb = averaged_matrix(g, s, Player::kB, mu);
    for (int k = 0; k < 100; ++k) {
      const Su2Element u = haar_sample(rng);
      CHECK(std::abs(fa.value(u.vector()) - mixed_payoffs(g, s, DiscreteMixedStrategy::pure(u), mu).a) <= 1e-10);
      CHECK(std::abs(fb.value(u.vector()) - mixed_payoffs(g, s, mu, DiscreteMixedStrategy::pure(u)).b) <= 1e-10);
    }
  }
}

TEST_CASE("best response: diagonal form with a tied eigenspace") {
  PayoffQuadraticForm f;
  f.matrix = Vec4(-25, 0, 0, -25).asDiagonal();
  const BestResponse br = best_response_pure(f);
  CHECK(br.value == doctest::Approx(0).epsilon(1e-14));
  REQUIRE(br.basis.size() == 2);
  CHECK((br.basis[0] - Vec4(0, 1, 0, 0)).norm() < 1e-14);
  CHECK((br.basis[1] - Vec4(0, 0, 1, 0)).norm() < 1e-14);
}

TEST_CASE("best response against identity in classical chicken is Dove, value 0") {
  const auto f = payoff_matrix_a(chicken(), EntanglerSetting(0), Vec4(1, 0, 0, 0));
  const BestResponse br = best_response_pure(f);
  CHECK(br.value == doctest::Approx(0).epsilon(1e-12));
  CHECK((br.canonical() - Vec4(0, 1, 0, 0)).norm() < 1e-12);
  // same answer from a fine grid
  double best = -1e9;
  for (const auto& u : grid(33, 16, 16)) best = std::max(best, f.value(u.vector()));
  CHECK(best == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("best response: variational property, canonical sign, orthonormal basis") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    PayoffQuadraticForm f;
    Mat4 r = Mat4::NullaryExpr([&] { return testing::uniform(rng, -5, 5); });
    f.matrix = r + r.transpose();
    const BestResponse br = best_response_pure(f);
    CHECK(f.value(br.canonical()) == doctest::Approx(br.value).epsilon(1e-12));
    for (int k = 0; k < 200; ++k) CHECK(br.value >= f.value(testing::random_unit(rng)) - 1e-12);
    Eigen::Index idx;
    br.canonical().cwiseAbs().maxCoeff(&idx);
    CHECK(br.canonical()[idx] > 0);
    for (std::size_t i = 0; i < br.basis.size(); ++i)
      for (std::size_t j = 0; j < br.basis.size(); ++j)
        CHECK(std::abs(br.basis[i].dot(br.basis[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
  }
  // 10^4 random unit vectors against one random form
  PayoffQuadraticForm f;
  Mat4 r = Mat4::NullaryExpr([&] { return testing::uniform(rng, -5, 5); });
  f.matrix = r + r.transpose();
  const double top = best_response_pure(f).value;
  for (int k = 0; k < 10000; ++k) REQUIRE(top >= f.value(testing::random_unit(rng)) - 1e-12);
}

TEST_CASE("best-response value dominates every mixed payoff") {
  std::mt19937_64 rng(9);
  for (const BimatrixGame& g : bundled_games())
    for (int t = 0; t < 50; ++t) {
      const EntanglerSetting s(testing::random_gamma(rng));
      const DiscreteMixedStrategy mu_b({haar_sample(rng), haar_sample(rng)}, {0.4, 0.6});
      const DiscreteMixedStrategy mu_a({haar_sample(rng), haar_sample(rng), haar_sample(rng)}, {0.1, 0.1, 0.8});
      const double top = best_response_pure(averaged_matrix(g, s, Player::kA, mu_b)).value;
      CHECK(top >= mixed_payoffs(g, s, mu_a, mu_b).a - 1e-12);
    }
}
