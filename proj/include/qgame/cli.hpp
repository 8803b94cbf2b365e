#pragma once

// Command-line surface: game files, reports and the subcommands of the
// `qgame` tool. Everything here is callable in-process.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qgame/classical.hpp"
#include "qgame/su2.hpp"

namespace qgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConsistencyError = 3;

/// Bad user input: malformed file, field, flag or strategy. Exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchSection {
  std::optional<std::array<std::size_t, 3>> grid;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_iter;
};

struct GameFile {
  BimatrixGame game;
  std::optional<double> gamma;
  SearchSection search;
};

/// `[game]` name, rows, cols, payoffs_A, payoffs_B; `[quantum]` gamma;
/// `[search]` grid, epsilon, seed, max_iter. Diagnostics are prefixed with
/// "<source>:<line>:".
GameFile parse_game_file(std::string_view text, std::string_view source_name);
GameFile load_game_file(const std::filesystem::path& path);

/// "angles:t,a,b" or "vector:w,x,y,z".
Su2Element parse_strategy(std::string_view text);

/// JSON text with 2-space indentation and every float printed with 17
/// significant digits.
std::string format_json(const nlohmann::ordered_json& value);

nlohmann::ordered_json strategy_json(const Su2Element& s);

/// Runs the tool; args excludes the program name. Reports go to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgame::cli
