#include "qgame/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

namespace qgame {

namespace {

using C = std::complex<double>;
constexpr C kI(0.0, 1.0);

int largest_component(const Vec4& v) {
  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
  return best;
}

Vec4 sign_normalized(const Vec4& v) { return v[largest_component(v)] < 0.0 ? Vec4(-v) : v; }

// Deterministic orthonormal basis of span(columns of v): greedily project the
// standard basis vectors, always taking the one with the largest residual.
std::vector<Vec4> canonical_basis(const Eigen::Matrix<double, 4, Eigen::Dynamic>& v) {
  const Mat4 proj = v * v.transpose();
  std::vector<Vec4> basis;
  while (basis.size() < static_cast<std::size_t>(v.cols())) {
    Vec4 best = Vec4::Zero();
    double best_norm = -1.0;
    for (int i = 0; i < 4; ++i) {
      Vec4 r = proj.col(i);
      for (const auto& b : basis) r -= b.dot(r) * b;
      const double n = r.norm();
      if (n > best_norm + 1e-9) {
        best = r;
        best_norm = n;
      }
    }
    basis.push_back(sign_normalized(best / best_norm));
  }
  std::stable_sort(basis.begin(), basis.end(), [](const Vec4& a, const Vec4& b) {
    return largest_component(a) < largest_component(b);
  });
  return basis;
}

}  // namespace

C MVectors::amplitude(int jk, const Vec4& u) const {
  return u[0] * m[jk][0] + u[1] * m[jk][1] + u[2] * m[jk][2] + u[3] * m[jk][3];
}

MVectors m_vectors(double gamma, const Vec4& ub) {
  const double c = std::cos(gamma), s = std::sin(gamma);
  const double u1 = ub[0], u2 = ub[1], u3 = ub[2], u4 = ub[3];
  MVectors out;
  out.m[0] << u1 + kI * u4 * c, -u3 * s, -u2 * s, -u4 + kI * u1 * c;
  out.m[1] << kI * u2 - u3 * c, kI * u4 * s, kI * u1 * s, -u2 * c - kI * u3;
  out.m[2] << kI * u3 * s, kI * u1 - u4 * c, -kI * u4 - u1 * c, kI * u2 * s;
  out.m[3] << u4 * s, -u2 - kI * u3 * c, u3 - kI * u2 * c, u1 * s;
  return out;
}

MVectors n_vectors(double gamma, const Vec4& ua) {
  const MVectors m = m_vectors(gamma, ua);
  MVectors n;
  n.m[0] = m.m[0];
  n.m[1] = m.m[2];
  n.m[2] = m.m[1];
  n.m[3] = m.m[3];
  return n;
}

Mat4 form_from_vectors(const Payoff2x2& x, const MVectors& v) {
  Mat4 p = Mat4::Zero();
  for (int jk = 0; jk < 4; ++jk) {
    const double weight = x[jk / 2][jk % 2];
    const Vec4c& m = v.m[jk];
    p += weight * (m * m.adjoint()).real();
  }
  return 0.5 * (p + p.transpose());
}

PayoffQuadraticForm payoff_matrix_a(const BimatrixGame& game, const EntanglerSetting& setting,
                                    const Vec4& u_b) {
  return {form_from_vectors(game.a, m_vectors(setting.gamma(), u_b)), setting.gamma(), Player::kA};
}

PayoffQuadraticForm payoff_matrix_b(const BimatrixGame& game, const EntanglerSetting& setting,
                                    const Vec4& u_a) {
  return {form_from_vectors(game.b, n_vectors(setting.gamma(), u_a)), setting.gamma(), Player::kB};
}

PayoffQuadraticForm payoff_matrix(Player owner, const BimatrixGame& game,
                                  const EntanglerSetting& setting, const Vec4& opponent) {
  return owner == Player::kA ? payoff_matrix_a(game, setting, opponent)
                             : payoff_matrix_b(game, setting, opponent);
}

PayoffQuadraticForm averaged_matrix(const BimatrixGame& game, const EntanglerSetting& setting,
                                    Player owner, const DiscreteMixedStrategy& opponent) {
  PayoffQuadraticForm out{Mat4::Zero(), setting.gamma(), owner};
  for (std::size_t k = 0; k < opponent.size(); ++k)
    out.matrix += opponent.probs()[k] *
                  payoff_matrix(owner, game, setting, opponent.support()[k].vector()).matrix;
  return out;
}

BestResponse best_response_pure(const PayoffQuadraticForm& form) {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(form.matrix);
  const Vec4& values = solver.eigenvalues();  // ascending
  const double top = values[3];
  int count = 0;
  for (int i = 3; i >= 0 && top - values[i] <= kEigenTieTolerance; --i) ++count;
  const Eigen::Matrix<double, 4, Eigen::Dynamic> top_vectors = solver.eigenvectors().rightCols(count);
  return {top, canonical_basis(top_vectors)};
}

}  // namespace qgame
