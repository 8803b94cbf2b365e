#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qgame/su2.hpp"

namespace qgame::testing {

inline constexpr double kPi = std::numbers::pi;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double random_gamma(std::mt19937_64& rng) { return uniform(rng, 0.0, kPi / 2.0); }

inline Vec4 random_unit(std::mt19937_64& rng) { return haar_sample(rng).vector(); }

inline Su2Element random_angles_element(std::mt19937_64& rng) {
  return Su2Element::from_angles(uniform(rng, 0.0, kPi), uniform(rng, 0.0, 2 * kPi), uniform(rng, 0.0, 2 * kPi));
}

}  // namespace qgame::testing
