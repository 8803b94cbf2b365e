#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgame/casestudies.hpp"
#include "qgame/classical.hpp"
#include "qgame/cli.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/ewl.hpp"
#include "qgame/quadratic.hpp"
#include "qgame/search.hpp"

namespace qgame::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "json";
  std::string out_path;
};

Json matrix_json(const Payoff2x2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

Json matrix_json(const Mat4& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2), m(i, 3)});
  return rows;
}

Json game_json(const BimatrixGame& g) {
  return {{"name", g.name},
          {"rows", {g.row_labels[0], g.row_labels[1]}},
          {"cols", {g.col_labels[0], g.col_labels[1]}},
          {"payoffs_A", matrix_json(g.a)},
          {"payoffs_B", matrix_json(g.b)}};
}

Json mixed_json(const DiscreteMixedStrategy& mu) {
  Json support = Json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Json e = {{"prob", mu.probs()[i]}};
    const Json s = strategy_json(mu.support()[i]);
    for (const auto& [k, v] : s.items()) e[k] = v;
    support.push_back(std::move(e));
  }
  return support;
}

Json certificate_json(const EquilibriumCertificate& c) {
  return {{"profile_a", mixed_json(c.profile_a)},
          {"profile_b", mixed_json(c.profile_b)},
          {"payoff_a", c.payoff_a},
          {"payoff_b", c.payoff_b},
          {"gap_a", c.gap_a},
          {"gap_b", c.gap_b},
          {"epsilon", c.epsilon},
          {"verdict", c.certified ? "certified" : "refuted"}};
}

double resolve_gamma(const GameFile& file, const std::optional<double>& flag) {
  const double g = flag ? *flag : file.gamma.value_or(0.0);
  if (!std::isfinite(g) || g < 0.0 || g > std::numbers::pi / 2.0)
    throw InputError("gamma must lie in [0, pi/2], got " + std::to_string(g));
  return g;
}

void emit(const CommonOptions& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(common.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write output file '" + common.out_path + "'");
  f << text;
}

void require_json(const CommonOptions& common, const char* command) {
  if (common.format != "json") throw InputError(std::string(command) + " supports --format json only");
}

std::string label(const BimatrixGame& g, int row, int col) { return g.row_labels[row] + "," + g.col_labels[col]; }

std::string cmd_classical(const std::string& path, const CommonOptions& common) {
  require_json(common, "classical");
  const GameFile file = load_game_file(path);
  const BimatrixGame& g = file.game;

  Json pure = Json::array();
  for (const PureProfile& p : pure_nash(g))
    pure.push_back({{"row", g.row_labels[p.row]}, {"col", g.col_labels[p.col]},
                    {"payoff_a", g.a[p.row][p.col]}, {"payoff_b", g.b[p.row][p.col]}});

  const MixedNashResult mixed = mixed_nash_indifference(g);
  Json mixed_j;
  switch (mixed.status) {
    case IndifferenceStatus::kInterior: {
      const PayoffPair v = expected_payoffs(g, *mixed.profile);
      mixed_j = {{"status", "found"}, {"p", mixed.profile->p}, {"q", mixed.profile->q},
                 {"payoff_a", v.a}, {"payoff_b", v.b}};
      break;
    }
    case IndifferenceStatus::kDegenerate: mixed_j = {{"status", "degenerate"}}; break;
    case IndifferenceStatus::kOutOfRange: mixed_j = {{"status", "out_of_range"}}; break;
  }

  const DominanceReport dom = dominant_strategies(g);
  Json dom_a = Json::array(), dom_b = Json::array();
  for (const auto& d : dom.player_a) dom_a.push_back({{"strategy", g.row_labels[d.index]}, {"strict", d.strict}});
  for (const auto& d : dom.player_b) dom_b.push_back({{"strategy", g.col_labels[d.index]}, {"strict", d.strict}});

  Json pareto = Json::array();
  for (const PureProfile& p : pareto_optimal_profiles(g)) pareto.push_back(label(g, p.row, p.col));

  Json report = {{"command", "classical"},
                 {"game", game_json(g)},
                 {"pure_nash", pure},
                 {"mixed_nash", mixed_j},
                 {"dominant", {{"A", dom_a}, {"B", dom_b}}},
                 {"pareto_optimal", pareto}};
  return format_json(report);
}

struct PayoffOutcome {
  std::string text;
  bool consistent = true;
};

PayoffOutcome cmd_payoff(const std::string& path, const std::optional<double>& gamma_flag,
                         const std::string& ua_text, const std::string& ub_text, const CommonOptions& common) {
  require_json(common, "payoff");
  const GameFile file = load_game_file(path);
  const EntanglerSetting setting(resolve_gamma(file, gamma_flag));
  const Su2Element ua = parse_strategy(ua_text);
  const Su2Element ub = parse_strategy(ub_text);

  const auto probs = outcome_probs(final_state(setting, ua, ub));
  const PayoffPair sim = pure_payoffs(file.game, setting, ua, ub);
  const PayoffQuadraticForm pa = payoff_matrix_a(file.game, setting, ub.vector());
  const PayoffQuadraticForm pb = payoff_matrix_b(file.game, setting, ua.vector());
  const double qa = pa.value(ua.vector()), qb = pb.value(ub.vector());
  const double discrepancy = std::max(std::abs(qa - sim.a), std::abs(qb - sim.b));

  Json report = {{"command", "payoff"},
                 {"game", file.game.name},
                 {"gamma", setting.gamma()},
                 {"strategy_a", strategy_json(ua)},
                 {"strategy_b", strategy_json(ub)},
                 {"probabilities", {{"00", probs[0]}, {"01", probs[1]}, {"10", probs[2]}, {"11", probs[3]}}},
                 {"simulator", {{"payoff_a", sim.a}, {"payoff_b", sim.b}}},
                 {"quadratic_form",
                  {{"payoff_a", qa}, {"payoff_b", qb}, {"matrix_a", matrix_json(pa.matrix)},
                   {"matrix_b", matrix_json(pb.matrix)}}},
                 {"discrepancy", discrepancy},
                 {"difference", sim.a - sim.b}};
  return {format_json(report), discrepancy <= kConsistencyTolerance};
}

std::string cmd_find_ne(const std::string& path, const std::optional<double>& gamma_flag,
                        const std::optional<std::uint64_t>& seed_flag, const std::optional<double>& epsilon_flag,
                        const CommonOptions& common) {
  require_json(common, "find-ne");
  const GameFile file = load_game_file(path);
  const EntanglerSetting setting(resolve_gamma(file, gamma_flag));

  SearchConfig config;
  if (file.search.grid) config.grid = *file.search.grid;
  if (file.search.epsilon) config.epsilon = *file.search.epsilon;
  if (file.search.seed) config.seed = *file.search.seed;
  if (file.search.max_iter) config.max_iter = *file.search.max_iter;
  if (seed_flag) config.seed = *seed_flag;
  if (epsilon_flag) {
    if (!(*epsilon_flag >= 0.0)) throw InputError("--epsilon must be nonnegative");
    config.epsilon = *epsilon_flag;
  }

  const SearchReport res = search_equilibria(file.game, setting, config);

  Json eqs = Json::array();
  for (const SearchHit& h : res.hits) {
    Json e = {{"method", std::string(method_name(h.method))}};
    const Json cert = certificate_json(h.certificate);
    for (const auto& [k, v] : cert.items()) e[k] = v;
    if (h.restricted_gaps) e["restricted_gaps"] = {h.restricted_gaps->a, h.restricted_gaps->b};
    e["iterations"] = h.iterations;
    eqs.push_back(std::move(e));
  }

  Json report = {
      {"command", "find-ne"},
      {"game", game_json(file.game)},
      {"gamma", setting.gamma()},
      {"config",
       {{"grid", {config.grid[0], config.grid[1], config.grid[2]}},
        {"enum_grid", {config.enum_grid[0], config.enum_grid[1], config.enum_grid[2]}},
        {"epsilon", config.epsilon},
        {"seed", config.seed},
        {"max_iter", config.max_iter},
        {"max_support", config.max_support},
        {"br_starts", config.br_starts}}},
      {"search_failed", res.search_failed()},
      {"metadata",
       {{"candidates_examined", res.candidates_examined},
        {"br_converged", res.br_converged},
        {"br_cycles", res.br_cycles},
        {"enum_strategies", res.enum_strategies},
        {"generated_strategies", {res.generated_strategies_a, res.generated_strategies_b}}}},
      {"equilibria", eqs}};
  return format_json(report);
}

std::string cmd_chicken(std::size_t n_gamma, std::size_t n_phi, const std::optional<double>& gamma,
                        const std::optional<double>& phi, const CommonOptions& common) {
  if (common.format != "json" && common.format != "csv") throw InputError("--format must be json or csv");
  if (n_gamma == 0 || n_phi == 0) throw InputError("--n-gamma and --n-phi must be at least 1");
  const std::vector<double> gammas = gamma ? std::vector<double>{*gamma} : linspace(0.0, std::numbers::pi / 2.0, n_gamma);
  const std::vector<double> phis = phi ? std::vector<double>{*phi} : linspace(0.0, std::numbers::pi, n_phi);

  std::vector<ChickenSweepRow> rows;
  try {
    rows = chicken_sweep(gammas, phis);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  double max_diff = -INFINITY;
  for (const auto& r : rows) max_diff = std::max(max_diff, r.difference);

  if (common.format == "csv") {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "gamma,phi,case,w,x,y,z,payoff_a,payoff_b,difference\n";
    for (const auto& r : rows)
      os << r.gamma << ',' << r.phi << ',' << case_name(r.which) << ',' << r.u_b[0] << ',' << r.u_b[1] << ','
         << r.u_b[2] << ',' << r.u_b[3] << ',' << r.payoff_a << ',' << r.payoff_b << ',' << r.difference << '\n';
    return os.str();
  }

  Json jrows = Json::array();
  for (const auto& r : rows)
    jrows.push_back({{"gamma", r.gamma},
                     {"phi", r.phi},
                     {"case", std::string(case_name(r.which))},
                     {"u_b", {r.u_b[0], r.u_b[1], r.u_b[2], r.u_b[3]}},
                     {"payoff_a", r.payoff_a},
                     {"payoff_b", r.payoff_b},
                     {"difference", r.difference}});
  Json report = {{"command", "chicken-case-study"},
                 {"count", rows.size()},
                 {"max_difference", max_diff},
                 {"rows", jrows}};
  return format_json(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum 2x2 games under the EWL protocol", "qgame"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_option("--format", common.format, "Report format: json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", common.out_path, "Write the report to this path instead of stdout");

  std::string game_path;
  std::optional<double> gamma_flag;
  std::optional<std::uint64_t> seed_flag;
  std::optional<double> epsilon_flag;
  std::string ua_text, ub_text;

  auto* classical = app.add_subcommand("classical", "Classical analysis of a 2x2 game file");
  classical->add_option("game", game_path, "Game file")->required();

  auto* payoff = app.add_subcommand("payoff", "Payoffs of a pure quantum profile, simulator vs quadratic form");
  payoff->add_option("game", game_path, "Game file")->required();
  payoff->add_option("--gamma", gamma_flag, "Entanglement in [0, pi/2] (overrides the file)");
  payoff->add_option("--ua", ua_text, "Strategy of A: angles:t,a,b | vector:w,x,y,z")->required();
  payoff->add_option("--ub", ub_text, "Strategy of B: angles:t,a,b | vector:w,x,y,z")->required();
  payoff->add_option("--seed", seed_flag, "Accepted for uniformity; payoff is deterministic");

  auto* find_ne = app.add_subcommand("find-ne", "Search and certify quantum Nash equilibria");
  find_ne->add_option("game", game_path, "Game file")->required();
  find_ne->add_option("--gamma", gamma_flag, "Entanglement in [0, pi/2] (overrides the file)");
  find_ne->add_option("--seed", seed_flag, "Search seed (overrides the file)");
  find_ne->add_option("--epsilon", epsilon_flag, "Certification tolerance (overrides the file)");

  std::size_t n_gamma = 50, n_phi = 50;
  std::optional<double> phi_flag;
  auto* chicken = app.add_subcommand("chicken-case-study", "Classical A vs quantum B sweep on Chicken");
  chicken->add_option("--n-gamma", n_gamma, "Gamma grid points on [0, pi/2]");
  chicken->add_option("--n-phi", n_phi, "Phi grid points on [0, pi]");
  chicken->add_option("--gamma", gamma_flag, "Single gamma instead of a grid");
  chicken->add_option("--phi", phi_flag, "Single phi instead of a grid");
  chicken->add_option("--seed", seed_flag, "Accepted for uniformity; the sweep is deterministic");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*classical) {
      emit(common, cmd_classical(game_path, common), out);
    } else if (*payoff) {
      const PayoffOutcome res = cmd_payoff(game_path, gamma_flag, ua_text, ub_text, common);
      emit(common, res.text, out);
      if (!res.consistent) {
        err << "qgame: simulator and quadratic-form payoffs disagree beyond " << kConsistencyTolerance << "\n";
        return kExitConsistencyError;
      }
    } else if (*find_ne) {
      emit(common, cmd_find_ne(game_path, gamma_flag, seed_flag, epsilon_flag, common), out);
    } else if (*chicken) {
      emit(common, cmd_chicken(n_gamma, n_phi, gamma_flag, phi_flag, common), out);
    }
  } catch (const InputError& e) {
    err << "qgame: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "qgame: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalConsistencyError& e) {
    err << "qgame: numerical consistency failure: " << e.what() << "\n";
    return kExitConsistencyError;
  }
  return kExitOk;
}

}  // namespace qgame::cli
