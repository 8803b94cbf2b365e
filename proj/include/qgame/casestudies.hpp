#pragma once

// Asymmetric Chicken: A is restricted to classical strategies U(phi, 0, 0),
// B plays any SU(2) element. Closed-form payoffs, the payoff difference, and
// the explicit counter-strategies for B that make <$_A> - <$_B> <= 0.

#include <string_view>
#include <vector>

#include "qgame/classical.hpp"
#include "qgame/su2.hpp"

namespace qgame {

struct AsymmetricScenario {
  BimatrixGame game;
  double gamma = 0.0;
  double phi = 0.0;  // A's classical angle in [0, pi]
  Vec4 u_b = Vec4::UnitX();

  Vec4 u_a() const;
  void validate() const;
};

/// Four-bracket closed form, evaluated for both players.
PayoffPair asym_payoffs(const AsymmetricScenario& scenario);

/// <$_A> - <$_B> via the Chicken-specific closed form. Throws
/// std::invalid_argument when the scenario's game is not the bundled Chicken.
double chicken_payoff_difference(const AsymmetricScenario& scenario);

enum class CounterCase {
  kCase1,          // gamma != pi/2, phi != 0: difference -50 cos^2(g) sin^2(phi/2)
  kCase2,          // gamma == pi/2: difference -25 (1 + sin phi)
  kCase3Strict,    // phi == 0, gamma > pi/4: u_B = (0,0,1,0)
  kCase3Equality,  // phi == 0, gamma <= pi/4: x = y = 0, difference 0
};

std::string_view case_name(CounterCase c);

struct CounterStrategy {
  Vec4 u_b;
  CounterCase which;
};

CounterStrategy chicken_counter_strategy(double gamma, double phi);

struct ChickenSweepRow {
  double gamma;
  double phi;
  Vec4 u_b;
  CounterCase which;
  double payoff_a;
  double payoff_b;
  double difference;
};

/// Row order: gamma outer, phi inner.
std::vector<ChickenSweepRow> chicken_sweep(const std::vector<double>& gammas, const std::vector<double>& phis);

/// n evenly spaced points on [lo, hi], both endpoints included (n == 1 gives lo).
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace qgame
