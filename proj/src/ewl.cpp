#include "qgame/ewl.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qgame {

EntanglerSetting::EntanglerSetting(double gamma) : gamma_(gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > std::numbers::pi / 2.0)
    throw std::invalid_argument("gamma must lie in [0, pi/2]");
}

Mat4c entangler(const EntanglerSetting& setting) {
  using C = std::complex<double>;
  const C c(std::cos(setting.gamma() / 2.0), 0.0);
  const C s(0.0, std::sin(setting.gamma() / 2.0));
  Mat4c j;
  j << c, 0, 0, s,
       0, c, s, 0,
       0, s, c, 0,
       s, 0, 0, c;
  return j;
}

Mat4c kron(const Mat2c& left, const Mat2c& right) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = left(i, j) * right(k, l);
  return out;
}

TwoQubitState final_state(const EntanglerSetting& setting, const Su2Element& ua,
                          const Su2Element& ub) {
  const Mat4c j = entangler(setting);
  Vec4c psi0 = Vec4c::Zero();
  psi0[0] = 1.0;
  const Vec4c psi1 = j * psi0;
  const Vec4c psi2 = kron(ua.matrix(), ub.matrix()) * psi1;
  return {j.adjoint() * psi2};
}

std::array<double, 4> outcome_probs(const TwoQubitState& state) {
  std::array<double, 4> p{};
  for (int k = 0; k < 4; ++k) p[k] = std::norm(state.amplitudes[k]);
  return p;
}

PayoffPair pure_payoffs(const BimatrixGame& game, const EntanglerSetting& setting,
                        const Su2Element& ua, const Su2Element& ub) {
  const auto p = outcome_probs(final_state(setting, ua, ub));
  PayoffPair out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.a += game.a[i][j] * p[2 * i + j];
      out.b += game.b[i][j] * p[2 * i + j];
    }
  return out;
}

DiscreteMixedStrategy::DiscreteMixedStrategy(std::vector<Su2Element> support,
                                             std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty()) throw std::invalid_argument("mixed strategy needs a nonempty support");
  if (support_.size() != probs_.size())
    throw std::invalid_argument("mixed strategy support and probabilities differ in length");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0)
      throw std::invalid_argument("mixed strategy probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixed strategy probabilities must sum to 1");
  for (double& p : probs_) p /= total;
}

PayoffPair mixed_payoffs(const BimatrixGame& game, const EntanglerSetting& setting,
                         const DiscreteMixedStrategy& mu_a, const DiscreteMixedStrategy& mu_b) {
  PayoffPair out;
  for (std::size_t i = 0; i < mu_a.size(); ++i)
    for (std::size_t j = 0; j < mu_b.size(); ++j) {
      const double w = mu_a.probs()[i] * mu_b.probs()[j];
      const PayoffPair pp = pure_payoffs(game, setting, mu_a.support()[i], mu_b.support()[j]);
      out.a += w * pp.a;
      out.b += w * pp.b;
    }
  return out;
}

}  // namespace qgame
