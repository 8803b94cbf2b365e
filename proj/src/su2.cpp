#include "qgame/su2.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qgame {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kThetaSlack = 1e-9;
// Below this radius the dependent angle is numerically meaningless.
constexpr double kUndefinedRadius = 1e-14;

}  // namespace

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod of -tiny can round up to 2pi
  return r;
}

Vec4 vector_from_angles(double theta, double alpha, double beta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return Vec4(std::cos(alpha) * c, std::cos(beta) * s, -std::sin(beta) * s, std::sin(alpha) * c);
}

Angles angles_from_vector(const Vec4& u) {
  const double rc = std::hypot(u[0], u[3]);  // |cos(theta/2)|
  const double rs = std::hypot(u[1], u[2]);  // |sin(theta/2)|
  Angles a;
  a.theta = 2.0 * std::atan2(rs, rc);
  a.alpha = rc < kUndefinedRadius ? 0.0 : wrap_two_pi(std::atan2(u[3], u[0]));
  a.beta = rs < kUndefinedRadius ? 0.0 : wrap_two_pi(std::atan2(-u[2], u[1]));
  return a;
}

Su2Element::Su2Element() : u_(1.0, 0.0, 0.0, 0.0), angles_{} {}

Su2Element Su2Element::from_angles(double theta, double alpha, double beta) {
  if (!std::isfinite(theta) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("strategy angles must be finite");
  if (theta < -kThetaSlack || theta > kPi + kThetaSlack)
    throw std::invalid_argument("theta must lie in [0, pi]");
  Angles a{std::clamp(theta, 0.0, kPi), wrap_two_pi(alpha), wrap_two_pi(beta)};
  return Su2Element(vector_from_angles(a.theta, a.alpha, a.beta), a);
}

Su2Element Su2Element::from_vector(const Vec4& u) {
  if (!u.allFinite()) throw std::invalid_argument("strategy vector must be finite");
  const double n = u.norm();
  if (n == 0.0) throw std::invalid_argument("strategy vector must be nonzero");
  const Vec4 unit = u / n;
  return Su2Element(unit, angles_from_vector(unit));
}

Mat2c Su2Element::matrix() const {
  using C = std::complex<double>;
  const double w = u_[0], x = u_[1], y = u_[2], z = u_[3];
  Mat2c m;
  m << C(w, z), C(y, x),
       C(-y, x), C(w, -z);
  return m;
}

Su2Element Su2Element::dagger() const {
  const Vec4 v(u_[0], -u_[1], -u_[2], -u_[3]);
  return Su2Element(v, angles_from_vector(v));
}

Su2Element classical_strategy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
  return Su2Element::from_angles(2.0 * std::acos(std::sqrt(p)), 0.0, 0.0);
}

Su2Element haar_sample(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = normal(rng);
    if (v.norm() > 1e-12) return Su2Element::from_vector(v);
  }
}

std::vector<Su2Element> grid(std::size_t n_theta, std::size_t n_alpha, std::size_t n_beta) {
  if (n_theta == 0 || n_alpha == 0 || n_beta == 0)
    throw std::invalid_argument("grid counts must be at least 1");
  std::vector<Su2Element> out;
  out.reserve(n_theta * n_alpha * n_beta);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = n_theta == 1 ? 0.0 : kPi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
    for (std::size_t j = 0; j < n_alpha; ++j) {
      const double alpha = kTwoPi * static_cast<double>(j) / static_cast<double>(n_alpha);
      for (std::size_t k = 0; k < n_beta; ++k) {
        const double beta = kTwoPi * static_cast<double>(k) / static_cast<double>(n_beta);
        out.push_back(Su2Element::from_angles(theta, alpha, beta));
      }
    }
  }
  return out;
}

std::vector<Su2Element> dedup_projective(const std::vector<Su2Element>& strategies, double tol) {
  std::vector<Su2Element> out;
  for (const auto& s : strategies) {
    bool seen = false;
    for (const auto& kept : out) {
      const Vec4& a = s.vector();
      const Vec4& b = kept.vector();
      if ((a - b).lpNorm<Eigen::Infinity>() <= tol || (a + b).lpNorm<Eigen::Infinity>() <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(s);
  }
  return out;
}

}  // namespace qgame
