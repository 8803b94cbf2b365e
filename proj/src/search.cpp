#include "qgame/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qgame/parallel.hpp"

namespace qgame {

namespace {

bool same_strategy(const DiscreteMixedStrategy& x, const DiscreteMixedStrategy& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Vec4& u = x.support()[i].vector();
    const Vec4& v = y.support()[i].vector();
    const bool same_vec = (u - v).lpNorm<Eigen::Infinity>() < 1e-9 || (u + v).lpNorm<Eigen::Infinity>() < 1e-9;
    if (!same_vec || std::abs(x.probs()[i] - y.probs()[i]) > 1e-9) return false;
  }
  return true;
}

bool contains_projective(const std::vector<Su2Element>& set, const Vec4& u) {
  return std::any_of(set.begin(), set.end(), [&](const Su2Element& s) {
    return (s.vector() - u).lpNorm<Eigen::Infinity>() < 1e-9 || (s.vector() + u).lpNorm<Eigen::Infinity>() < 1e-9;
  });
}

void add_hit(SearchReport& report, SearchHit hit) {
  const auto& c = hit.certificate;
  for (const auto& h : report.hits)
    if (same_strategy(h.certificate.profile_a, c.profile_a) && same_strategy(h.certificate.profile_b, c.profile_b))
      return;
  report.hits.push_back(std::move(hit));
}

DiscreteMixedStrategy classical_mixture(double p) {
  if (p >= 1.0) return DiscreteMixedStrategy::pure(identity_strategy());
  if (p <= 0.0) return DiscreteMixedStrategy::pure(flip_strategy());
  return {{identity_strategy(), flip_strategy()}, {p, 1.0 - p}};
}

}  // namespace

std::string_view method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::kClassicalEmbedding: return "classical_embedding";
    case SearchMethod::kBrDynamics: return "br_dynamics";
    case SearchMethod::kSupportEnumeration: return "support_enumeration";
    case SearchMethod::kTableBestResponse: return "table_best_response";
    case SearchMethod::kStrategyGeneration: return "strategy_generation";
  }
  return "unknown";
}

std::vector<std::pair<DiscreteMixedStrategy, DiscreteMixedStrategy>> classical_embeddings(
    const BimatrixGame& game) {
  std::vector<std::pair<DiscreteMixedStrategy, DiscreteMixedStrategy>> out;
  for (const PureProfile& cell : pure_nash(game))
    out.emplace_back(classical_mixture(cell.row == 0 ? 1.0 : 0.0), classical_mixture(cell.col == 0 ? 1.0 : 0.0));
  const MixedNashResult mixed = mixed_nash_indifference(game);
  if (mixed.profile && mixed.profile->p > 0.0 && mixed.profile->p < 1.0 && mixed.profile->q > 0.0 &&
      mixed.profile->q < 1.0)
    out.emplace_back(classical_mixture(mixed.profile->p), classical_mixture(mixed.profile->q));
  return out;
}

GenerationResult strategy_generation(const BimatrixGame& game, const EntanglerSetting& setting,
                                     double epsilon, std::size_t max_rounds, std::size_t max_strategies,
                                     std::size_t max_support) {
  GenerationResult result;
  result.strategies_a = {identity_strategy(), flip_strategy()};
  result.strategies_b = result.strategies_a;

  for (std::size_t round = 1; round <= max_rounds; ++round) {
    result.rounds = round;
    const FiniteRestrictedGame restricted =
        build_restricted_game(game, setting, result.strategies_a, result.strategies_b);
    const auto profiles = support_enumeration(restricted.payoff_a, restricted.payoff_b, max_support);
    if (profiles.empty()) break;

    std::optional<EquilibriumCertificate> best;
    for (const auto& t : profiles) {
      EquilibriumCertificate cert = certify(game, setting, strategy_from_table(result.strategies_a, t.p),
                                            strategy_from_table(result.strategies_b, t.q), epsilon);
      if (cert.certified) {
        result.certificate = std::move(cert);
        return result;
      }
      if (!best || std::max(cert.gap_a, cert.gap_b) < std::max(best->gap_a, best->gap_b)) best = std::move(cert);
    }

    bool grew = false;
    if (best->gap_a > epsilon && !contains_projective(result.strategies_a, best->best_deviation_a)) {
      result.strategies_a.push_back(Su2Element::from_vector(best->best_deviation_a));
      grew = true;
    }
    if (best->gap_b > epsilon && !contains_projective(result.strategies_b, best->best_deviation_b)) {
      result.strategies_b.push_back(Su2Element::from_vector(best->best_deviation_b));
      grew = true;
    }
    if (!grew || result.strategies_a.size() > max_strategies || result.strategies_b.size() > max_strategies) break;
  }
  return result;
}

SearchReport search_equilibria(const BimatrixGame& game, const EntanglerSetting& setting,
                               const SearchConfig& config) {
  game.validate();
  SearchReport report;

  for (const auto& [mu_a, mu_b] : classical_embeddings(game)) {
    ++report.candidates_examined;
    EquilibriumCertificate cert = certify(game, setting, mu_a, mu_b, config.epsilon);
    if (cert.certified) add_hit(report, {SearchMethod::kClassicalEmbedding, std::move(cert), std::nullopt, 0});
  }

  // BR dynamics: (I,I) plus seeded random starts, run in parallel.
  {
    std::mt19937_64 rng(config.seed);
    std::vector<std::pair<Su2Element, Su2Element>> starts{{identity_strategy(), identity_strategy()}};
    for (std::size_t s = 0; s < config.br_starts; ++s) {
      Su2Element a = haar_sample(rng);
      Su2Element b = haar_sample(rng);
      starts.emplace_back(a, b);
    }
    BrDynamicsOptions opts;
    opts.max_iter = config.max_iter;
    opts.epsilon = config.epsilon;
    std::vector<std::optional<BrDynamicsResult>> runs(starts.size());
    parallel_for(starts.size(), [&](std::size_t i) {
      runs[i] = best_response_dynamics(game, setting, starts[i].first, starts[i].second, opts);
    });
    for (auto& run : runs) {
      ++report.candidates_examined;
      if (run->cycle) ++report.br_cycles;
      if (!run->converged) continue;
      ++report.br_converged;
      if (run->certificate->certified)
        add_hit(report, {SearchMethod::kBrDynamics, *run->certificate, std::nullopt, run->iterations()});
    }
  }

  // Support enumeration on a coarse grid, merged up to sign.
  {
    const auto& g = config.enum_grid;
    const auto strategies = dedup_projective(grid(g[0], g[1], g[2]));
    report.enum_strategies = strategies.size();
    FiniteNeOptions opts;
    opts.max_support = config.max_support;
    opts.seed = config.seed;
    opts.max_iter = config.max_iter;
    opts.continuous_epsilon = config.epsilon;
    const FiniteNeResult res = finite_mixed_ne(build_restricted_game(game, setting, strategies, strategies), opts);
    for (const auto& prof : res.profiles) {
      ++report.candidates_examined;
      if (prof.continuous.certified) {
        const SearchMethod method = res.method == FiniteNeMethod::kSupportEnumeration
                                        ? SearchMethod::kSupportEnumeration
                                        : SearchMethod::kTableBestResponse;
        add_hit(report, {method, prof.continuous, PayoffPair{prof.restricted_gap_a, prof.restricted_gap_b}, 0});
      }
    }
  }

  // Pure best responses on the fine grid table.
  {
    const auto& g = config.grid;
    const auto strategies = grid(g[0], g[1], g[2]);
    const FiniteRestrictedGame restricted = build_restricted_game(game, setting, strategies, strategies);
    FiniteNeOptions opts;
    opts.max_enumerable = 0;
    opts.seed = config.seed;
    opts.max_iter = config.max_iter;
    opts.fallback_starts = config.br_starts;
    opts.continuous_epsilon = config.epsilon;
    const FiniteNeResult res = finite_mixed_ne(restricted, opts);
    for (const auto& prof : res.profiles) {
      ++report.candidates_examined;
      if (prof.continuous.certified)
        add_hit(report, {SearchMethod::kTableBestResponse, prof.continuous,
                         PayoffPair{prof.restricted_gap_a, prof.restricted_gap_b}, 0});
    }
  }

  {
    GenerationResult gen = strategy_generation(game, setting, config.epsilon, config.generation_rounds,
                                               config.max_generated, config.max_support);
    report.generated_strategies_a = gen.strategies_a.size();
    report.generated_strategies_b = gen.strategies_b.size();
    ++report.candidates_examined;
    if (gen.certificate)
      add_hit(report, {SearchMethod::kStrategyGeneration, std::move(*gen.certificate), std::nullopt, gen.rounds});
  }
  return report;
}

}  // namespace qgame
