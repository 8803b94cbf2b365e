#pragma once

// Payoffs as quadratic forms in the deviating player's unit 4-vector.
//
// Each amplitude <jk|psi_f> is linear in u_A: <jk|psi_f> = u_A^T M_jk(u_B).
// Then <$_A> = u_A^T P_A(u_B) u_A with P_A = Re sum_jk a_jk M_jk M_jk^dagger.
// For player B the vectors are N_00 = M_00(u_A), N_01 = M_10(u_A),
// N_10 = M_01(u_A), N_11 = M_11(u_A).

#include <array>
#include <vector>

#include <Eigen/Core>

#include "qgame/classical.hpp"
#include "qgame/ewl.hpp"
#include "qgame/su2.hpp"

namespace qgame {

using Mat4 = Eigen::Matrix4d;

enum class Player { kA, kB };

inline const char* player_name(Player p) { return p == Player::kA ? "A" : "B"; }

/// M_jk stored at index 2 j + k.
struct MVectors {
  std::array<Vec4c, 4> m;

  /// u^T M_jk (bilinear, no conjugation).
  std::complex<double> amplitude(int jk, const Vec4& u) const;
};

MVectors m_vectors(double gamma, const Vec4& u_b);

/// N_jk(u_A), the same functions with the off-diagonal outcomes exchanged.
MVectors n_vectors(double gamma, const Vec4& u_a);

/// Re sum_jk x_jk v_jk v_jk^dagger, symmetrized.
Mat4 form_from_vectors(const Payoff2x2& x, const MVectors& v);

struct PayoffQuadraticForm {
  Mat4 matrix = Mat4::Zero();
  double gamma = 0.0;
  Player owner = Player::kA;

  double value(const Vec4& u) const { return u.dot(matrix * u); }
};

PayoffQuadraticForm payoff_matrix_a(const BimatrixGame& game, const EntanglerSetting& setting,
                                    const Vec4& u_b);
PayoffQuadraticForm payoff_matrix_b(const BimatrixGame& game, const EntanglerSetting& setting,
                                    const Vec4& u_a);
PayoffQuadraticForm payoff_matrix(Player owner, const BimatrixGame& game,
                                  const EntanglerSetting& setting, const Vec4& opponent);

/// sum_j q_j P_owner(u_j) over the opponent's support.
PayoffQuadraticForm averaged_matrix(const BimatrixGame& game, const EntanglerSetting& setting,
                                    Player owner, const DiscreteMixedStrategy& opponent);

/// Eigenvalues within this distance of the largest count as tied.
inline constexpr double kEigenTieTolerance = 1e-11;

struct BestResponse {
  double value = 0.0;
  /// Orthonormal basis of the top eigenspace. basis.front() is the canonical
  /// representative: largest-magnitude component at the lowest index,
  /// sign-normalized so that component is positive.
  std::vector<Vec4> basis;

  const Vec4& canonical() const { return basis.front(); }
};

BestResponse best_response_pure(const PayoffQuadraticForm& form);

}  // namespace qgame
