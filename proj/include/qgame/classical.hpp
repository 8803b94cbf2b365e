#pragma once

// Classical 2x2 bimatrix games: expected payoffs, dominance, Pareto
// optimality, pure and mixed Nash equilibria.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qgame {

/// Row-major 2x2 payoff table, entry [i][j] for row i and column j.
using Payoff2x2 = std::array<std::array<double, 2>, 2>;

struct PayoffPair {
  double a = 0.0;
  double b = 0.0;
};

struct BimatrixGame {
  std::string name;
  std::array<std::string, 2> row_labels{"0", "1"};
  std::array<std::string, 2> col_labels{"0", "1"};
  Payoff2x2 a{};  // player A (rows)
  Payoff2x2 b{};  // player B (columns)

  /// Throws std::invalid_argument when an entry is not finite.
  void validate() const;

  /// Game with players exchanged: A' = B^T, B' = A^T.
  BimatrixGame swapped() const;
};

/// p = probability A plays row 0, q = probability B plays column 0.
struct ClassicalMixedProfile {
  double p = 0.0;
  double q = 0.0;

  void validate() const;
};

PayoffPair expected_payoffs(const BimatrixGame& game, ClassicalMixedProfile profile);

struct PureProfile {
  int row = 0;
  int col = 0;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
};

/// All weak pure equilibria (ties kept), in row-major cell order.
std::vector<PureProfile> pure_nash(const BimatrixGame& game);

enum class IndifferenceStatus {
  kInterior,    // both equations solved, solution in [0,1]^2
  kDegenerate,  // a denominator vanishes
  kOutOfRange,  // unique solution exists but leaves [0,1]
};

struct MixedNashResult {
  IndifferenceStatus status = IndifferenceStatus::kDegenerate;
  std::optional<ClassicalMixedProfile> profile;
};

/// Solves the two indifference equations: q makes A indifferent between
/// rows, p makes B indifferent between columns.
MixedNashResult mixed_nash_indifference(const BimatrixGame& game);

struct DominantStrategy {
  int index = 0;
  bool strict = false;  // strict for at least one opponent strategy
};

struct DominanceReport {
  std::vector<DominantStrategy> player_a;
  std::vector<DominantStrategy> player_b;
};

DominanceReport dominant_strategies(const BimatrixGame& game);

std::vector<PureProfile> pareto_optimal_profiles(const BimatrixGame& game);

}  // namespace qgame
