#pragma once

// Equilibrium search pipeline over the continuous game. Candidates come from
// several generators; each is certified exactly against the continuous game
// and kept when its gaps are within epsilon.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qgame/equilibrium.hpp"

namespace qgame {

struct SearchConfig {
  std::array<std::size_t, 3> grid{9, 12, 12};      // table best-response grid
  std::array<std::size_t, 3> enum_grid{3, 4, 4};   // support-enumeration grid
  double epsilon = 1e-3;
  std::uint64_t seed = 0;
  std::size_t max_iter = 200;
  std::size_t max_support = 4;
  std::size_t br_starts = 8;           // seeded random starts for BR dynamics
  std::size_t generation_rounds = 30;
  std::size_t max_generated = 16;      // strategy-generation cap per side
};

enum class SearchMethod {
  kClassicalEmbedding,
  kBrDynamics,
  kSupportEnumeration,
  kTableBestResponse,
  kStrategyGeneration,
};

std::string_view method_name(SearchMethod m);

struct SearchHit {
  SearchMethod method;
  EquilibriumCertificate certificate;
  std::optional<PayoffPair> restricted_gaps;
  std::size_t iterations = 0;  // BR iterations or generation rounds
};

struct SearchReport {
  std::vector<SearchHit> hits;
  std::size_t candidates_examined = 0;
  std::size_t br_converged = 0;
  std::size_t br_cycles = 0;
  std::size_t enum_strategies = 0;       // per side, after merging u ~ -u
  std::size_t generated_strategies_a = 0;
  std::size_t generated_strategies_b = 0;

  bool search_failed() const { return hits.empty(); }
};

SearchReport search_equilibria(const BimatrixGame& game, const EntanglerSetting& setting,
                               const SearchConfig& config = {});

/// Classical equilibria mapped onto mixtures of I and F = U(pi, 0, 0).
std::vector<std::pair<DiscreteMixedStrategy, DiscreteMixedStrategy>> classical_embeddings(
    const BimatrixGame& game);

struct GenerationResult {
  std::optional<EquilibriumCertificate> certificate;
  std::vector<Su2Element> strategies_a;
  std::vector<Su2Element> strategies_b;
  std::size_t rounds = 0;
};

/// Double-oracle loop: solve the restricted game by support enumeration,
/// add each player's exact best response from the continuous game, repeat
/// until a restricted equilibrium certifies at epsilon.
GenerationResult strategy_generation(const BimatrixGame& game, const EntanglerSetting& setting,
                                     double epsilon, std::size_t max_rounds, std::size_t max_strategies,
                                     std::size_t max_support);

}  // namespace qgame
