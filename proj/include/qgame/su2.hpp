#pragma once

// SU(2) pure strategies. An element is stored as its unit 4-vector
// u = (w, x, y, z) with U = w I + i x sx + i y sy + i z sz, together with
// canonical angles (theta, alpha, beta):
//
//   U(theta, alpha, beta) = [  e^{ia} cos(t/2)    i e^{ib} sin(t/2) ]
//                           [ i e^{-ib} sin(t/2)   e^{-ia} cos(t/2) ]
//
//   w = cos(a) cos(t/2), x = cos(b) sin(t/2), y = -sin(b) sin(t/2),
//   z = sin(a) cos(t/2).

#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace qgame {

using Vec4 = Eigen::Vector4d;
using Mat2c = Eigen::Matrix2cd;

struct Angles {
  double theta = 0.0;  // [0, pi]
  double alpha = 0.0;  // [0, 2pi)
  double beta = 0.0;   // [0, 2pi)
};

/// Wraps an angle into [0, 2pi).
double wrap_two_pi(double angle);

class Su2Element {
 public:
  /// Identity.
  Su2Element();

  /// alpha, beta are wrapped modulo 2pi; theta is clamped into [0, pi] when
  /// it lies within 1e-9 of the range, otherwise std::invalid_argument.
  static Su2Element from_angles(double theta, double alpha, double beta);
  static Su2Element from_angles(const Angles& a) { return from_angles(a.theta, a.alpha, a.beta); }

  /// Renormalizes u; rejects the zero vector and non-finite entries.
  static Su2Element from_vector(const Vec4& u);

  const Vec4& vector() const { return u_; }
  const Angles& angles() const { return angles_; }
  Mat2c matrix() const;

  /// Conjugate transpose; u -> (w, -x, -y, -z), angles -> (t, 2pi - a, pi + b).
  Su2Element dagger() const;

 private:
  Su2Element(const Vec4& u, const Angles& angles) : u_(u), angles_(angles) {}

  Vec4 u_;
  Angles angles_;
};

Vec4 vector_from_angles(double theta, double alpha, double beta);

/// Angles recovered from a unit vector; an angle that the matrix does not
/// depend on (alpha when cos(t/2) = 0, beta when sin(t/2) = 0) is set to 0.
Angles angles_from_vector(const Vec4& u);

/// U(theta, 0, 0) with cos^2(theta/2) = p, reproducing the classical mixed
/// strategy (p, 1-p).
Su2Element classical_strategy(double p);

inline Su2Element identity_strategy() { return Su2Element(); }
inline Su2Element flip_strategy() { return Su2Element::from_angles(std::numbers::pi, 0.0, 0.0); }

/// Uniform on the 3-sphere: four standard normals, normalized.
Su2Element haar_sample(std::mt19937_64& rng);

/// Cartesian grid, theta outermost. theta spans [0, pi] with both endpoints
/// (n_theta == 1 gives theta = 0 only); alpha and beta span [0, 2pi) without
/// the right endpoint.
std::vector<Su2Element> grid(std::size_t n_theta, std::size_t n_alpha, std::size_t n_beta);

/// Keeps the first element of each {u, -u} class. u and -u give identical
/// outcome probabilities, hence identical payoffs.
std::vector<Su2Element> dedup_projective(const std::vector<Su2Element>& strategies,
                                         double tol = 1e-12);

}  // namespace qgame
