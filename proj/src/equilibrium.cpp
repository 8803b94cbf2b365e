#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "qgame/parallel.hpp"

namespace qgame {

namespace {

// Expected own payoff of a finite-support strategy under a quadratic form.
double form_payoff(const PayoffQuadraticForm& form, const DiscreteMixedStrategy& mu) {
  double v = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) v += mu.probs()[i] * form.value(mu.support()[i].vector());
  return v;
}

double checked_gap(double top, double payoff, const char* who) {
  const double raw = top - payoff;
  if (raw < -kConsistencyTolerance) {
    std::ostringstream msg;
    msg << "player " << who << " payoff exceeds its best-response value by " << -raw;
    throw NumericalConsistencyError(msg.str());
  }
  return std::max(0.0, raw);
}

using CycleKey = std::array<long long, 8>;

CycleKey cycle_key(const Vec4& a, const Vec4& b) {
  CycleKey k{};
  for (int i = 0; i < 4; ++i) {
    k[i] = std::llround(a[i] * 1e9);
    k[4 + i] = std::llround(b[i] * 1e9);
  }
  return k;
}

}  // namespace

EquilibriumCertificate certify(const BimatrixGame& game, const EntanglerSetting& setting,
                               const DiscreteMixedStrategy& mu_a, const DiscreteMixedStrategy& mu_b,
                               double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
  const PayoffPair sim = mixed_payoffs(game, setting, mu_a, mu_b);

  const PayoffQuadraticForm form_a = averaged_matrix(game, setting, Player::kA, mu_b);
  const PayoffQuadraticForm form_b = averaged_matrix(game, setting, Player::kB, mu_a);
  const double quad_a = form_payoff(form_a, mu_a);
  const double quad_b = form_payoff(form_b, mu_b);
  if (std::abs(quad_a - sim.a) > kConsistencyTolerance || std::abs(quad_b - sim.b) > kConsistencyTolerance) {
    std::ostringstream msg;
    msg << "simulator and quadratic-form payoffs disagree: A " << sim.a << " vs " << quad_a << ", B "
        << sim.b << " vs " << quad_b;
    throw NumericalConsistencyError(msg.str());
  }

  const BestResponse br_a = best_response_pure(form_a);
  const BestResponse br_b = best_response_pure(form_b);

  EquilibriumCertificate cert{mu_a, mu_b};
  cert.payoff_a = sim.a;
  cert.payoff_b = sim.b;
  cert.gap_a = checked_gap(br_a.value, sim.a, "A");
  cert.gap_b = checked_gap(br_b.value, sim.b, "B");
  cert.epsilon = epsilon;
  cert.certified = std::max(cert.gap_a, cert.gap_b) <= epsilon;
  cert.best_deviation_a = br_a.canonical();
  cert.best_deviation_b = br_b.canonical();
  return cert;
}

PayoffPair grid_deviation_gaps(const BimatrixGame& game, const EntanglerSetting& setting,
                               const DiscreteMixedStrategy& mu_a, const DiscreteMixedStrategy& mu_b,
                               const kernels::VectorBatch& candidates) {
  const PayoffPair current = mixed_payoffs(game, setting, mu_a, mu_b);
  const auto best_a = kernels::max_quadratic_value(averaged_matrix(game, setting, Player::kA, mu_b).matrix, candidates);
  const auto best_b = kernels::max_quadratic_value(averaged_matrix(game, setting, Player::kB, mu_a).matrix, candidates);
  return {best_a.value - current.a, best_b.value - current.b};
}

BrDynamicsResult best_response_dynamics(const BimatrixGame& game, const EntanglerSetting& setting,
                                        const Su2Element& initial_a, const Su2Element& initial_b,
                                        const BrDynamicsOptions& options) {
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  BrDynamicsResult result;
  Su2Element a = initial_a, b = initial_b;
  const PayoffPair p0 = pure_payoffs(game, setting, a, b);
  result.trace.push_back({a.vector(), b.vector(), p0.a, p0.b});

  std::map<CycleKey, std::size_t> seen;
  seen[cycle_key(a.vector(), b.vector())] = 0;

  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    a = Su2Element::from_vector(best_response_pure(payoff_matrix_a(game, setting, b.vector())).canonical());
    b = Su2Element::from_vector(best_response_pure(payoff_matrix_b(game, setting, a.vector())).canonical());
    const PayoffPair p = pure_payoffs(game, setting, a, b);
    const double prev_a = result.trace.back().payoff_a, prev_b = result.trace.back().payoff_b;
    result.trace.push_back({a.vector(), b.vector(), p.a, p.b});

    if (std::abs(p.a - prev_a) < options.tol && std::abs(p.b - prev_b) < options.tol) {
      result.converged = true;
      break;
    }
    const CycleKey key = cycle_key(a.vector(), b.vector());
    if (auto hit = seen.find(key); hit != seen.end()) {
      result.cycle = BrCycle{hit->second, it - hit->second};
      break;
    }
    seen[key] = it;
    if (it >= options.cycle_window) {
      const BrStep& old = result.trace[it - options.cycle_window];
      seen.erase(cycle_key(old.u_a, old.u_b));
    }
  }

  if (result.converged) {
    const BrStep& last = result.final_step();
    result.certificate = certify(game, setting, DiscreteMixedStrategy::pure(Su2Element::from_vector(last.u_a)),
                                 DiscreteMixedStrategy::pure(Su2Element::from_vector(last.u_b)),
                                 options.epsilon);
  }
  return result;
}

FiniteRestrictedGame build_restricted_game(const BimatrixGame& game, const EntanglerSetting& setting,
                                           const std::vector<Su2Element>& grid_a,
                                           const std::vector<Su2Element>& grid_b) {
  if (grid_a.empty() || grid_b.empty()) throw std::invalid_argument("restricted game grids must be nonempty");
  FiniteRestrictedGame out{game, setting.gamma(), grid_a, grid_b,
                           Eigen::MatrixXd(grid_a.size(), grid_b.size()),
                           Eigen::MatrixXd(grid_a.size(), grid_b.size())};
  const kernels::VectorBatch rows{std::span<const Su2Element>(grid_a)};
  parallel_for(grid_b.size(), [&](std::size_t j) {
    // For fixed u_B both payoffs are quadratic forms in u_A over the same M_jk.
    const MVectors m = m_vectors(setting.gamma(), grid_b[j].vector());
    kernels::quadratic_values(form_from_vectors(game.a, m), rows,
                              std::span<double>(out.payoff_a.col(j).data(), grid_a.size()));
    kernels::quadratic_values(form_from_vectors(game.b, m), rows,
                              std::span<double>(out.payoff_b.col(j).data(), grid_a.size()));
  });
  return out;
}

PayoffPair table_gaps(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const TableProfile& profile) {
  const Eigen::Map<const Eigen::VectorXd> p(profile.p.data(), static_cast<Eigen::Index>(profile.p.size()));
  const Eigen::Map<const Eigen::VectorXd> q(profile.q.data(), static_cast<Eigen::Index>(profile.q.size()));
  const Eigen::VectorXd row_values = a * q;
  const Eigen::RowVectorXd col_values = p.transpose() * b;
  return {row_values.maxCoeff() - p.dot(row_values), col_values.maxCoeff() - col_values.dot(q)};
}

std::optional<TableProfile> table_best_response(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                                std::size_t row, std::size_t col, std::size_t max_iter) {
  Eigen::Index r = static_cast<Eigen::Index>(row), c = static_cast<Eigen::Index>(col);
  for (std::size_t it = 0; it < max_iter; ++it) {
    Eigen::Index nr = 0, nc = 0;
    a.col(c).maxCoeff(&nr);
    if (a(r, c) >= a(nr, c)) nr = r;  // keep current row on ties
    b.row(nr).maxCoeff(&nc);
    if (b(nr, c) >= b(nr, nc)) nc = c;
    if (nr == r && nc == c) {
      TableProfile out;
      out.p.assign(static_cast<std::size_t>(a.rows()), 0.0);
      out.q.assign(static_cast<std::size_t>(a.cols()), 0.0);
      out.p[static_cast<std::size_t>(r)] = 1.0;
      out.q[static_cast<std::size_t>(c)] = 1.0;
      out.payoff_a = a(r, c);
      out.payoff_b = b(r, c);
      return out;
    }
    r = nr;
    c = nc;
  }
  return std::nullopt;
}

DiscreteMixedStrategy strategy_from_table(const std::vector<Su2Element>& strategies,
                                          const std::vector<double>& probs) {
  std::vector<Su2Element> support;
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (probs[i] >= 1e-13) {
      support.push_back(strategies[i]);
      weights.push_back(probs[i]);
      total += probs[i];
    }
  if (support.empty()) throw std::invalid_argument("table profile has no support");
  for (double& w : weights) w /= total;
  return {std::move(support), std::move(weights)};
}

FiniteNeResult finite_mixed_ne(const FiniteRestrictedGame& restricted, const FiniteNeOptions& options) {
  const std::size_t m = restricted.strategies_a.size(), n = restricted.strategies_b.size();
  FiniteNeResult result;
  std::vector<TableProfile> candidates;

  if (m <= options.max_enumerable && n <= options.max_enumerable) {
    result.method = FiniteNeMethod::kSupportEnumeration;
    candidates = support_enumeration(restricted.payoff_a, restricted.payoff_b, options.max_support);
  } else {
    result.method = FiniteNeMethod::kTableBestResponse;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick_row(0, m - 1), pick_col(0, n - 1);
    for (std::size_t s = 0; s < options.fallback_starts; ++s) {
      const std::size_t r = s == 0 ? 0 : pick_row(rng);
      const std::size_t c = s == 0 ? 0 : pick_col(rng);
      auto found = table_best_response(restricted.payoff_a, restricted.payoff_b, r, c, options.max_iter);
      if (!found) continue;
      const bool duplicate = std::any_of(candidates.begin(), candidates.end(), [&](const TableProfile& t) {
        return t.p == found->p && t.q == found->q;
      });
      if (!duplicate) candidates.push_back(std::move(*found));
    }
  }

  const EntanglerSetting setting(restricted.gamma);
  for (auto& t : candidates) {
    const PayoffPair gaps = table_gaps(restricted.payoff_a, restricted.payoff_b, t);
    if (gaps.a > options.restricted_epsilon || gaps.b > options.restricted_epsilon) continue;
    FiniteNeProfile prof{t, std::max(0.0, gaps.a), std::max(0.0, gaps.b),
                         certify(restricted.game, setting, strategy_from_table(restricted.strategies_a, t.p),
                                 strategy_from_table(restricted.strategies_b, t.q), options.continuous_epsilon)};
    result.profiles.push_back(std::move(prof));
  }
  return result;
}

}  // namespace qgame
