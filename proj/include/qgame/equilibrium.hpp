#pragma once

// Quantum Nash equilibria for finite-support profiles.
//
// The payoff of a deviating player is linear in its own measure and, against
// a fixed opponent measure, equals u^T Pbar u on pure strategies, where Pbar
// is the opponent-averaged quadratic form. The best deviation over all
// measures is therefore lambda_max(Pbar), which makes the gap computed by
// certify() exact rather than grid-limited.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "qgame/classical.hpp"
#include "qgame/ewl.hpp"
#include "qgame/kernels.hpp"
#include "qgame/quadratic.hpp"
#include "qgame/su2.hpp"

namespace qgame {

/// Two routes to the same payoff disagree by more than 1e-8.
class NumericalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kConsistencyTolerance = 1e-8;

struct EquilibriumCertificate {
  DiscreteMixedStrategy profile_a;
  DiscreteMixedStrategy profile_b;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  double gap_a = 0.0;  // lambda_max(Pbar_A) - payoff_a, clamped at 0
  double gap_b = 0.0;
  double epsilon = 0.0;
  bool certified = false;  // max(gap_a, gap_b) <= epsilon
  Vec4 best_deviation_a = Vec4::UnitX();  // canonical top eigenvectors
  Vec4 best_deviation_b = Vec4::UnitX();
};

/// Throws std::invalid_argument for epsilon < 0 and NumericalConsistencyError
/// when simulator and quadratic-form payoffs disagree.
EquilibriumCertificate certify(const BimatrixGame& game, const EntanglerSetting& setting,
                               const DiscreteMixedStrategy& mu_a, const DiscreteMixedStrategy& mu_b,
                               double epsilon);

/// Best deviation gain over a finite set of pure strategies, per player.
/// Independent of the eigen route; used to verify certify().
PayoffPair grid_deviation_gaps(const BimatrixGame& game, const EntanglerSetting& setting,
                               const DiscreteMixedStrategy& mu_a, const DiscreteMixedStrategy& mu_b,
                               const kernels::VectorBatch& candidates);

struct BrDynamicsOptions {
  double tol = 1e-12;
  std::size_t max_iter = 200;
  std::size_t cycle_window = 50;
  double epsilon = 1e-9;  // used to certify a converged profile
};

struct BrStep {
  Vec4 u_a;
  Vec4 u_b;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

struct BrCycle {
  std::size_t start = 0;   // index into trace of the first profile on the cycle
  std::size_t length = 0;  // number of distinct profiles on the cycle
};

struct BrDynamicsResult {
  std::vector<BrStep> trace;  // trace[0] is the initial profile
  bool converged = false;
  std::optional<BrCycle> cycle;
  std::optional<EquilibriumCertificate> certificate;  // set when converged

  std::size_t iterations() const { return trace.empty() ? 0 : trace.size() - 1; }
  const BrStep& final_step() const { return trace.back(); }
};

/// Each iteration replaces A's strategy by the canonical best response to B,
/// then B's by the canonical best response to the new A.
BrDynamicsResult best_response_dynamics(const BimatrixGame& game, const EntanglerSetting& setting,
                                        const Su2Element& initial_a, const Su2Element& initial_b,
                                        const BrDynamicsOptions& options = {});

struct FiniteRestrictedGame {
  BimatrixGame game;
  double gamma = 0.0;
  std::vector<Su2Element> strategies_a;
  std::vector<Su2Element> strategies_b;
  Eigen::MatrixXd payoff_a;  // |A| x |B|
  Eigen::MatrixXd payoff_b;
};

/// Tabulates pure payoffs for every strategy pair (batched kernel, parallel
/// over columns).
FiniteRestrictedGame build_restricted_game(const BimatrixGame& game, const EntanglerSetting& setting,
                                           const std::vector<Su2Element>& grid_a,
                                           const std::vector<Su2Element>& grid_b);

/// Mixed profile of a finite table game, probabilities over all rows/columns.
struct TableProfile {
  std::vector<double> p;
  std::vector<double> q;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

/// Largest unilateral gain in the table game for each player.
PayoffPair table_gaps(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const TableProfile& profile);

/// Support enumeration over equal-size supports 1..max_support. Returns every
/// nondegenerate equilibrium found, deduplicated, in enumeration order.
std::vector<TableProfile> support_enumeration(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                              std::size_t max_support);

/// Pure best-response iteration on a table from a starting cell. Returns the
/// pure equilibrium it reaches, if any, within max_iter rounds.
std::optional<TableProfile> table_best_response(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                                std::size_t row, std::size_t col,
                                                std::size_t max_iter);

struct FiniteNeOptions {
  std::size_t max_support = 4;
  std::size_t max_enumerable = 16;  // per side
  std::uint64_t seed = 0;
  std::size_t fallback_starts = 8;
  std::size_t max_iter = 200;
  double restricted_epsilon = 1e-9;
  double continuous_epsilon = 1e-3;
};

enum class FiniteNeMethod { kSupportEnumeration, kTableBestResponse };

struct FiniteNeProfile {
  TableProfile table;
  double restricted_gap_a = 0.0;
  double restricted_gap_b = 0.0;
  EquilibriumCertificate continuous;
};

struct FiniteNeResult {
  FiniteNeMethod method = FiniteNeMethod::kSupportEnumeration;
  std::vector<FiniteNeProfile> profiles;
};

/// Support enumeration when both sides have at most max_enumerable
/// strategies, otherwise pure best-response iteration on the table from
/// seeded starting cells. Every returned profile is an equilibrium of the
/// restricted game within restricted_epsilon and carries its continuous-game
/// certificate.
FiniteNeResult finite_mixed_ne(const FiniteRestrictedGame& restricted, const FiniteNeOptions& options = {});

/// Builds a finite-support strategy from table probabilities, dropping
/// entries below 1e-13.
DiscreteMixedStrategy strategy_from_table(const std::vector<Su2Element>& strategies,
                                          const std::vector<double>& probs);

}  // namespace qgame
