#include <doctest.h>

#include "helpers.hpp"
#include "qgame/games.hpp"
#include "qgame/search.hpp"

using namespace qgame;
using testing::kPi;

TEST_CASE("classical embeddings of chicken") {
  const auto emb = classical_embeddings(chicken());
  REQUIRE(emb.size() == 3);
  for (const auto& [a, b] : emb) {
    const auto c = certify(chicken(), EntanglerSetting(0), a, b, 1e-9);
    CHECK(c.certified);
  }
}

TEST_CASE("search finds certified witnesses for every bundled game") {
  for (const BimatrixGame& g : bundled_games())
    for (double gamma : {0.0, kPi / 4, kPi / 2}) {
      CAPTURE(g.name);
      CAPTURE(gamma);
      const auto rep = search_equilibria(g, EntanglerSetting(gamma));
      CHECK_FALSE(rep.search_failed());
      for (const auto& h : rep.hits) {
        CHECK(h.certificate.certified);
        CHECK(std::max(h.certificate.gap_a, h.certificate.gap_b) <= 1e-3);
      }
    }
}

TEST_CASE("search at gamma zero contains both embedded pure equilibria of chicken") {
  const auto rep = search_equilibria(chicken(), EntanglerSetting(0));
  bool dh = false, hd = false;
  for (const auto& h : rep.hits) {
    const auto& c = h.certificate;
    if (c.profile_a.size() != 1 || c.profile_b.size() != 1) continue;
    if (c.gap_a > 1e-9 || c.gap_b > 1e-9) continue;
    if (std::abs(c.payoff_a - 0) < 1e-9 && std::abs(c.payoff_b - 50) < 1e-9) dh = true;
    if (std::abs(c.payoff_a - 50) < 1e-9 && std::abs(c.payoff_b - 0) < 1e-9) hd = true;
  }
  CHECK(dh);
  CHECK(hd);
}

TEST_CASE("strategy generation certifies chicken at maximal entanglement") {
  const auto r = strategy_generation(chicken(), EntanglerSetting(kPi / 2), 1e-3, 30, 16, 4);
  REQUIRE(r.certificate);
  CHECK(r.certificate->certified);
  CHECK(r.rounds >= 1);
  CHECK(r.strategies_a.size() <= 16);
}

TEST_CASE("search is deterministic under a seed") {
  SearchConfig cfg;
  cfg.seed = 17;
  const auto a = search_equilibria(battle_of_the_sexes(), EntanglerSetting(0.6), cfg);
  const auto b = search_equilibria(battle_of_the_sexes(), EntanglerSetting(0.6), cfg);
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i].method == b.hits[i].method);
    CHECK(a.hits[i].certificate.payoff_a == b.hits[i].certificate.payoff_a);
    CHECK(a.hits[i].certificate.gap_b == b.hits[i].certificate.gap_b);
  }
  CHECK(a.candidates_examined == b.candidates_examined);
}

TEST_CASE("method names") {
  CHECK(method_name(SearchMethod::kBrDynamics) == "br_dynamics");
  CHECK(method_name(SearchMethod::kSupportEnumeration) == "support_enumeration");
}
