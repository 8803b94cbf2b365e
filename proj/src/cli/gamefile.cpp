#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <toml.hpp>

#include "qgame/cli.hpp"

namespace qgame::cli {

namespace {

class FieldReader {
 public:
  FieldReader(std::string_view source, const toml::table& root) : source_(source), root_(root) {}

  [[noreturn]] void fail(const toml::node* node, const std::string& field, const std::string& what) const {
    std::ostringstream msg;
    msg << source_;
    if (node) msg << ':' << node->source().begin.line;
    msg << ": field '" << field << "' " << what;
    throw InputError(msg.str());
  }

  const toml::table* section(const char* name, bool required) const {
    const toml::node* n = root_.get(name);
    if (!n) {
      if (required) fail(nullptr, name, "is missing (expected a [" + std::string(name) + "] section)");
      return nullptr;
    }
    if (!n->is_table()) fail(n, name, "must be a table");
    return n->as_table();
  }

  double number(const toml::node& n, const std::string& field) const {
    if (auto v = n.value<double>(); v && (n.is_integer() || n.is_floating_point())) {
      if (!std::isfinite(*v)) fail(&n, field, "must be finite");
      return *v;
    }
    fail(&n, field, "must be a number");
  }

  Payoff2x2 matrix(const toml::table& sec, const std::string& sec_name, const char* key) const {
    const std::string field = sec_name + "." + key;
    const toml::node* n = sec.get(key);
    if (!n) fail(&sec, field, "is missing");
    const toml::array* rows = n->as_array();
    if (!rows) fail(n, field, "must be a 2x2 array");
    if (rows->size() != 2) fail(n, field, "must be a 2x2 array (got " + std::to_string(rows->size()) + " rows)");
    Payoff2x2 out{};
    for (std::size_t i = 0; i < 2; ++i) {
      const toml::array* row = (*rows)[i].as_array();
      if (!row) fail(n, field, "must be a 2x2 array (row " + std::to_string(i) + " is not an array)");
      if (row->size() != 2)
        fail(n, field, "must be a 2x2 array (row " + std::to_string(i) + " has " + std::to_string(row->size()) +
                           " entries)");
      for (std::size_t j = 0; j < 2; ++j)
        out[i][j] = number((*row)[j], field + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return out;
  }

  std::array<std::string, 2> labels(const toml::table& sec, const char* key) const {
    const std::string field = std::string("game.") + key;
    const toml::node* n = sec.get(key);
    if (!n) return {"0", "1"};
    const toml::array* arr = n->as_array();
    if (!arr || arr->size() != 2) fail(n, field, "must be an array of two strings");
    std::array<std::string, 2> out;
    for (std::size_t i = 0; i < 2; ++i) {
      auto s = (*arr)[i].value<std::string>();
      if (!s) fail(n, field, "must be an array of two strings");
      out[i] = *s;
    }
    return out;
  }

  std::uint64_t non_negative_integer(const toml::node& n, const std::string& field, std::int64_t min) const {
    auto v = n.value<std::int64_t>();
    if (!n.is_integer() || !v) fail(&n, field, "must be an integer");
    if (*v < min) fail(&n, field, "must be at least " + std::to_string(min));
    return static_cast<std::uint64_t>(*v);
  }

 private:
  std::string_view source_;
  const toml::table& root_;
};

}  // namespace

GameFile parse_game_file(std::string_view text, std::string_view source_name) {
  toml::table root;
  try {
    root = toml::parse(text, source_name);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source_name << ':' << e.source().begin.line << ": parse error: " << e.description();
    throw InputError(msg.str());
  }
  const FieldReader r(source_name, root);
  GameFile out;

  const toml::table* game = r.section("game", true);
  if (const toml::node* n = game->get("name")) {
    auto s = n->value<std::string>();
    if (!s) r.fail(n, "game.name", "must be a string");
    out.game.name = *s;
  } else {
    out.game.name = std::filesystem::path(std::string(source_name)).stem().string();
  }
  out.game.row_labels = r.labels(*game, "rows");
  out.game.col_labels = r.labels(*game, "cols");
  out.game.a = r.matrix(*game, "game", "payoffs_A");
  out.game.b = r.matrix(*game, "game", "payoffs_B");

  if (const toml::table* q = r.section("quantum", false)) {
    if (const toml::node* n = q->get("gamma")) {
      const double g = r.number(*n, "quantum.gamma");
      if (g < 0.0 || g > std::numbers::pi / 2.0) r.fail(n, "quantum.gamma", "must lie in [0, pi/2]");
      out.gamma = g;
    }
  }

  if (const toml::table* s = r.section("search", false)) {
    if (const toml::node* n = s->get("grid")) {
      const toml::array* arr = n->as_array();
      if (!arr || arr->size() != 3) r.fail(n, "search.grid", "must be an array [n_theta, n_alpha, n_beta]");
      std::array<std::size_t, 3> g{};
      for (std::size_t i = 0; i < 3; ++i) g[i] = r.non_negative_integer((*arr)[i], "search.grid", 1);
      out.search.grid = g;
    }
    if (const toml::node* n = s->get("epsilon")) {
      const double e = r.number(*n, "search.epsilon");
      if (e < 0.0) r.fail(n, "search.epsilon", "must be nonnegative");
      out.search.epsilon = e;
    }
    if (const toml::node* n = s->get("seed")) out.search.seed = r.non_negative_integer(*n, "search.seed", 0);
    if (const toml::node* n = s->get("max_iter"))
      out.search.max_iter = r.non_negative_integer(*n, "search.max_iter", 1);
  }
  return out;
}

GameFile load_game_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open game file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game_file(buf.str(), path.string());
}

Su2Element parse_strategy(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InputError("strategy '" + std::string(text) + "' must be 'angles:t,a,b' or 'vector:w,x,y,z'");
  const std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  std::vector<double> values;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string item(rest.substr(0, comma));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw InputError("strategy '" + std::string(text) + "': '" + item + "' is not a number");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  try {
    if (kind == "angles") {
      if (values.size() != 3)
        throw InputError("angles strategy expects 3 components (theta, alpha, beta), got " +
                         std::to_string(values.size()));
      return Su2Element::from_angles(values[0], values[1], values[2]);
    }
    if (kind == "vector") {
      if (values.size() != 4)
        throw InputError("vector strategy expects length 4 (w, x, y, z), got " + std::to_string(values.size()));
      return Su2Element::from_vector(Vec4(values[0], values[1], values[2], values[3]));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError("strategy '" + std::string(text) + "': " + e.what());
  }
  throw InputError("strategy kind '" + std::string(kind) + "' must be 'angles' or 'vector'");
}

}  // namespace qgame::cli
