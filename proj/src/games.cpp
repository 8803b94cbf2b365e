#include "qgame/games.hpp"

namespace qgame {

BimatrixGame chicken() {
  return {"chicken", {"H", "D"}, {"H", "D"}, {{{-25, 50}, {0, 15}}}, {{{-25, 0}, {50, 15}}}};
}

BimatrixGame prisoners_dilemma() {
  return {"prisoners_dilemma", {"C", "D"}, {"C", "D"}, {{{3, 0}, {5, 1}}}, {{{3, 5}, {0, 1}}}};
}

BimatrixGame battle_of_the_sexes() {
  return {"battle_of_the_sexes", {"O", "F"}, {"O", "F"}, {{{3, 0}, {0, 2}}}, {{{2, 0}, {0, 3}}}};
}

BimatrixGame matching_pennies() {
  return {"matching_pennies", {"H", "T"}, {"H", "T"}, {{{1, -1}, {-1, 1}}}, {{{-1, 1}, {1, -1}}}};
}

std::vector<BimatrixGame> bundled_games() {
  return {chicken(), prisoners_dilemma(), battle_of_the_sexes(), matching_pennies()};
}

std::optional<BimatrixGame> bundled_game(std::string_view name) {
  for (auto& g : bundled_games())
    if (g.name == name) return g;
  return std::nullopt;
}

bool is_chicken(const BimatrixGame& game) {
  const BimatrixGame ref = chicken();
  return game.a == ref.a && game.b == ref.b;
}

}  // namespace qgame
