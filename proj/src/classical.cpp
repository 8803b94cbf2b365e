#include "qgame/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace qgame {

namespace {

bool all_finite(const Payoff2x2& m) {
  for (const auto& row : m)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  return true;
}

double bilinear(const Payoff2x2& m, double p, double q) {
  return p * q * m[0][0] + p * (1.0 - q) * m[0][1] + (1.0 - p) * q * m[1][0] +
         (1.0 - p) * (1.0 - q) * m[1][1];
}

}  // namespace

void BimatrixGame::validate() const {
  if (!all_finite(a)) throw std::invalid_argument("payoffs_A contains a non-finite entry");
  if (!all_finite(b)) throw std::invalid_argument("payoffs_B contains a non-finite entry");
}

BimatrixGame BimatrixGame::swapped() const {
  BimatrixGame out;
  out.name = name;
  out.row_labels = col_labels;
  out.col_labels = row_labels;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.a[i][j] = b[j][i];
      out.b[i][j] = a[j][i];
    }
  return out;
}

void ClassicalMixedProfile::validate() const {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw std::invalid_argument("mixed profile probabilities must lie in [0,1]");
}

PayoffPair expected_payoffs(const BimatrixGame& game, ClassicalMixedProfile profile) {
  profile.validate();
  return {bilinear(game.a, profile.p, profile.q), bilinear(game.b, profile.p, profile.q)};
}

std::vector<PureProfile> pure_nash(const BimatrixGame& game) {
  std::vector<PureProfile> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const bool a_ok = game.a[i][j] >= game.a[1 - i][j];
      const bool b_ok = game.b[i][j] >= game.b[i][1 - j];
      if (a_ok && b_ok) out.push_back({i, j});
    }
  return out;
}

MixedNashResult mixed_nash_indifference(const BimatrixGame& game) {
  const auto& a = game.a;
  const auto& b = game.b;
  // A indifferent: a00 q + a01 (1-q) = a10 q + a11 (1-q)
  const double den_q = a[0][0] - a[0][1] - a[1][0] + a[1][1];
  // B indifferent: b00 p + b10 (1-p) = b01 p + b11 (1-p)
  const double den_p = b[0][0] - b[1][0] - b[0][1] + b[1][1];
  if (den_q == 0.0 || den_p == 0.0) return {IndifferenceStatus::kDegenerate, std::nullopt};

  const double q = (a[1][1] - a[0][1]) / den_q;
  const double p = (b[1][1] - b[1][0]) / den_p;
  if (!(q >= 0.0 && q <= 1.0 && p >= 0.0 && p <= 1.0))
    return {IndifferenceStatus::kOutOfRange, std::nullopt};
  return {IndifferenceStatus::kInterior, ClassicalMixedProfile{p, q}};
}

DominanceReport dominant_strategies(const BimatrixGame& game) {
  DominanceReport report;
  for (int s = 0; s < 2; ++s) {
    bool weak = true, strict = false;
    for (int t = 0; t < 2; ++t) {
      const double mine = game.a[s][t], other = game.a[1 - s][t];
      weak = weak && mine >= other;
      strict = strict || mine > other;
    }
    if (weak) report.player_a.push_back({s, strict});
  }
  for (int t = 0; t < 2; ++t) {
    bool weak = true, strict = false;
    for (int s = 0; s < 2; ++s) {
      const double mine = game.b[s][t], other = game.b[s][1 - t];
      weak = weak && mine >= other;
      strict = strict || mine > other;
    }
    if (weak) report.player_b.push_back({t, strict});
  }
  return report;
}

std::vector<PureProfile> pareto_optimal_profiles(const BimatrixGame& game) {
  std::vector<PureProfile> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      bool dominated = false;
      for (int k = 0; k < 2 && !dominated; ++k)
        for (int l = 0; l < 2 && !dominated; ++l) {
          if (k == i && l == j) continue;
          const double da = game.a[k][l] - game.a[i][j];
          const double db = game.b[k][l] - game.b[i][j];
          dominated = da >= 0.0 && db >= 0.0 && (da > 0.0 || db > 0.0);
        }
      if (!dominated) out.push_back({i, j});
    }
  return out;
}

}  // namespace qgame
