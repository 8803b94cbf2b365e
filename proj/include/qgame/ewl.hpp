#pragma once

// Direct two-qubit simulation of the EWL protocol:
//   |psi_f> = J^dagger (U_A x U_B) J |00>,
//   J(gamma) = cos(gamma/2) I x I + i sin(gamma/2) sx x sx.
// Basis order is (00, 01, 10, 11); qubit A is the left tensor factor.
//
// This module is the reference for every other payoff route.

#include <array>
#include <vector>

#include <Eigen/Core>

#include "qgame/classical.hpp"
#include "qgame/su2.hpp"

namespace qgame {

using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

class EntanglerSetting {
 public:
  /// gamma must lie in [0, pi/2]; values outside are rejected, not wrapped.
  explicit EntanglerSetting(double gamma);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

struct TwoQubitState {
  Vec4c amplitudes;  // indexed 00, 01, 10, 11

  double norm() const { return amplitudes.norm(); }
};

Mat4c entangler(const EntanglerSetting& setting);

/// U_A x U_B with A as the left factor.
Mat4c kron(const Mat2c& left, const Mat2c& right);

TwoQubitState final_state(const EntanglerSetting& setting, const Su2Element& ua,
                          const Su2Element& ub);

/// p_ij = |<ij|psi>|^2, indexed 2 i + j.
std::array<double, 4> outcome_probs(const TwoQubitState& state);

PayoffPair pure_payoffs(const BimatrixGame& game, const EntanglerSetting& setting,
                        const Su2Element& ua, const Su2Element& ub);

/// Finite-support measure sum_k p_k delta_{U_k}.
class DiscreteMixedStrategy {
 public:
  /// probs must be nonnegative, same length as support (>= 1) and sum to 1
  /// within 1e-12; they are renormalized to sum exactly.
  DiscreteMixedStrategy(std::vector<Su2Element> support, std::vector<double> probs);

  static DiscreteMixedStrategy pure(const Su2Element& u) { return {{u}, {1.0}}; }

  const std::vector<Su2Element>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<Su2Element> support_;
  std::vector<double> probs_;
};

/// Weighted sum over pure runs; never forms a density matrix.
PayoffPair mixed_payoffs(const BimatrixGame& game, const EntanglerSetting& setting,
                         const DiscreteMixedStrategy& mu_a, const DiscreteMixedStrategy& mu_b);

}  // namespace qgame
