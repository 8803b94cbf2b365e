#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qgame/classical.hpp"

namespace qgame {

/// Hawk-Dove with H = index 0, D = index 1:
/// (H,H) = (-25,-25), (H,D) = (50,0), (D,H) = (0,50), (D,D) = (15,15).
BimatrixGame chicken();
/// C = 0, D = 1: (3,3) (0,5) / (5,0) (1,1).
BimatrixGame prisoners_dilemma();
/// (3,2) (0,0) / (0,0) (2,3).
BimatrixGame battle_of_the_sexes();
/// Zero-sum: A wins on a match.
BimatrixGame matching_pennies();

std::vector<BimatrixGame> bundled_games();
std::optional<BimatrixGame> bundled_game(std::string_view name);

bool is_chicken(const BimatrixGame& game);

}  // namespace qgame
