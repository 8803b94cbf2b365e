#include "qgame/casestudies.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgame/ewl.hpp"
#include "qgame/games.hpp"

namespace qgame {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

double sq(double v) { return v * v; }

double closed_form(const Payoff2x2& x, double gamma, double phi, const Vec4& u) {
  const double w = u[0], ux = u[1], y = u[2], z = u[3];
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  const double cg2 = sq(std::cos(gamma)), sg = std::sin(gamma);
  return x[0][0] * (z * z * c * c * cg2 + sq(w * c - y * s * sg)) +
         x[0][1] * (y * y * c * c * cg2 + sq(z * s * sg + ux * c)) +
         x[1][0] * (z * z * s * s * cg2 + sq(y * c * sg + w * s)) +
         x[1][1] * (y * y * s * s * cg2 + sq(z * c * sg - ux * s));
}

}  // namespace

Vec4 AsymmetricScenario::u_a() const { return {std::cos(phi / 2.0), std::sin(phi / 2.0), 0.0, 0.0}; }

void AsymmetricScenario::validate() const {
  game.validate();
  static_cast<void>(EntanglerSetting(gamma));
  if (!(phi >= 0.0 && phi <= kPi)) throw std::invalid_argument("phi must lie in [0, pi]");
  if (!u_b.allFinite() || std::abs(u_b.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("u_B must be a unit 4-vector");
}

PayoffPair asym_payoffs(const AsymmetricScenario& s) {
  s.validate();
  return {closed_form(s.game.a, s.gamma, s.phi, s.u_b), closed_form(s.game.b, s.gamma, s.phi, s.u_b)};
}

double chicken_payoff_difference(const AsymmetricScenario& s) {
  if (!is_chicken(s.game)) throw std::invalid_argument("payoff difference closed form is defined for Chicken only");
  s.validate();
  const double w = s.u_b[0], x = s.u_b[1], y = s.u_b[2], z = s.u_b[3];
  const double c = std::cos(s.phi / 2.0), sn = std::sin(s.phi / 2.0);
  const double cg2 = sq(std::cos(s.gamma)), sg = std::sin(s.gamma);
  return 50.0 * (cg2 * (y * y * c * c - z * z * sn * sn) + sq(x * c + z * sn * sg) - sq(w * sn + y * c * sg));
}

std::string_view case_name(CounterCase c) {
  switch (c) {
    case CounterCase::kCase1: return "case1";
    case CounterCase::kCase2: return "case2";
    case CounterCase::kCase3Strict: return "case3_strict";
    case CounterCase::kCase3Equality: return "case3_equality";
  }
  return "unknown";
}

CounterStrategy chicken_counter_strategy(double gamma, double phi) {
  static_cast<void>(EntanglerSetting(gamma));
  if (!(phi >= 0.0 && phi <= kPi)) throw std::invalid_argument("phi must lie in [0, pi]");

  if (std::abs(gamma - kPi / 2.0) <= kAngleTol) {
    const double h = 1.0 / std::sqrt(2.0);
    return {Vec4(h, 0.0, h, 0.0), CounterCase::kCase2};
  }
  if (phi <= kAngleTol) {
    if (gamma > kPi / 4.0 + kAngleTol) return {Vec4(0.0, 0.0, 1.0, 0.0), CounterCase::kCase3Strict};
    return {Vec4(1.0, 0.0, 0.0, 0.0), CounterCase::kCase3Equality};
  }
  const double s = std::sin(phi / 2.0);
  return {Vec4(s * std::cos(gamma), s * std::sin(gamma), 0.0, -std::cos(phi / 2.0)), CounterCase::kCase1};
}

std::vector<ChickenSweepRow> chicken_sweep(const std::vector<double>& gammas, const std::vector<double>& phis) {
  if (gammas.empty() || phis.empty()) throw std::invalid_argument("sweep grids must be nonempty");
  const BimatrixGame game = chicken();
  std::vector<ChickenSweepRow> rows;
  rows.reserve(gammas.size() * phis.size());
  for (double g : gammas)
    for (double phi : phis) {
      const CounterStrategy cs = chicken_counter_strategy(g, phi);
      const AsymmetricScenario sc{game, g, phi, cs.u_b};
      const PayoffPair p = asym_payoffs(sc);
      rows.push_back({g, phi, cs.u_b, cs.which, p.a, p.b, chicken_payoff_difference(sc)});
    }
  return rows;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("linspace needs at least one point");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) out.back() = hi;
  return out;
}

}  // namespace qgame
