#include "../support/brute_force.hpp"
#include "cackit/bounds.hpp"
#include "cackit/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cackit;

namespace {

SearchResult search(std::uint64_t L, std::size_t w, std::optional<bool> symmetry = std::nullopt) {
  SearchConfig cfg;
  cfg.length = L;
  cfg.weight = w;
  cfg.symmetry = symmetry;
  return max_cac(cfg);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("known maxima") {
  for (auto [L, w, m] : std::vector<std::array<std::size_t, 3>>{{15, 3, 4}, {7, 3, 1}, {9, 3, 2}, {26, 4, 4}}) {
    const SearchResult r = search(L, w);
    CAPTURE(L);
    CHECK(r.best == m);
    CHECK(r.status == ProofStatus::exhaustive);
    CHECK(r.witness.size() == m);
    CHECK(r.witness.length() == L);
    CHECK(verify_cac(r.witness).ok());
  }
}

TEST_CASE("matches plain backtracking on small lengths") {
  for (std::size_t w = 2; w <= 5; ++w) {
    for (std::uint64_t L = w; L <= (w == 2 ? 20u : 15u); ++L) {
      CAPTURE(L);
      CAPTURE(w);
      CHECK(search(L, w).best == brute::max_cac(L, w));
    }
  }
}

TEST_CASE("codewords containing 0 lose nothing against arbitrary translates") {
  for (std::size_t w = 2; w <= 3; ++w) {
    for (std::uint64_t L = w; L <= 12; ++L) {
      CAPTURE(L);
      CHECK(search(L, w).best == brute::max_cac(L, w, false));
    }
  }
}

TEST_CASE("unit-multiplication symmetry does not change the maximum") {
  for (std::size_t w = 3; w <= 5; ++w) {
    for (std::uint64_t L = w; L <= 36; ++L) {
      CAPTURE(L);
      CAPTURE(w);
      const SearchResult on = search(L, w, true);
      const SearchResult off = search(L, w, false);
      CHECK(on.best == off.best);
      CHECK(verify_cac(on.witness).ok());
    }
  }
}

TEST_CASE("maxima never exceed the bound") {
  for (std::size_t w = 2; w <= 5; ++w) {
    for (std::uint64_t L = w; L <= 40; ++L) {
      const SearchResult r = search(L, w);
      CHECK(r.best <= theorem4_bound(L, w));
    }
  }
}

TEST_CASE("determinism") {
  const SearchResult a = search(30, 4);
  const SearchResult b = search(30, 4);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("envelope and parameter checks") {
  CHECK_THROWS_AS((void)search(60, 6), EnvelopeError);
  CHECK_THROWS_AS((void)search(129, 2), EnvelopeError);
  CHECK_THROWS_AS((void)search(3, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)search(5, 1), std::invalid_argument);
  CHECK_NOTHROW(check_envelope(50, 4));
  CHECK_NOTHROW(check_envelope(45, 5));
}

TEST_CASE("node budget reports a lower bound") {
  SearchConfig cfg;
  cfg.length = 30;
  cfg.weight = 5;
  cfg.node_budget = 3;
  const SearchResult r = max_cac(cfg);
  CHECK(r.status == ProofStatus::budget_exhausted);
  CHECK(r.witness.size() == r.best);
  CHECK(verify_cac(r.witness).ok());
}

TEST_CASE("searching for a code of a given size") {
  SearchConfig cfg;
  cfg.length = 16;
  cfg.weight = 3;
  cfg.target = SearchTarget::prove_no_code_of_size;
  cfg.target_size = 4;
  const SearchResult none = max_cac(cfg);
  CHECK(none.status == ProofStatus::exhaustive);
  CHECK(none.best < 4);
  cfg.target_size = 3;
  const SearchResult found = max_cac(cfg);
  CHECK(found.best == 3);
  CHECK(verify_cac(found.witness).ok());
  cfg.target_size = 0;
  CHECK_THROWS_AS((void)max_cac(cfg), std::invalid_argument);
}

TEST_CASE("incumbent code") {
  SearchConfig cfg;
  cfg.length = 15;
  cfg.weight = 3;
  cfg.incumbent = fixtures::code_15_3();
  const SearchResult r = max_cac(cfg);
  CHECK(r.best == 4);
  CHECK(r.witness == fixtures::code_15_3());
  cfg.incumbent = fixtures::make(15, 3, {{0, 1, 2}, {0, 2, 4}});
  CHECK_THROWS_AS((void)max_cac(cfg), std::invalid_argument);
}

TEST_CASE("optimality verdicts") {
  const OptimalityResult e1 = prove_optimal(fixtures::code_15_3());
  CHECK(e1.verdict == Optimality::optimal);
  CHECK(e1.by_bound);
  const OptimalityResult e2 = prove_optimal(fixtures::code_26_4());
  CHECK(e2.verdict == Optimality::optimal);
  CHECK(e2.by_bound);

  const OptimalityResult three = prove_optimal(fixtures::make(15, 3, {{0, 1, 2}, {0, 5, 10}, {0, 6, 12}}));
  CHECK(three.verdict == Optimality::not_optimal);
  REQUIRE(three.larger.has_value());
  CHECK(three.larger->size() == 4);
  CHECK(verify_cac(*three.larger).ok());

  // M(16, 3) = 3 < bound 4: needs the search
  const OptimalityResult l16 = prove_optimal(fixtures::make(16, 3, {{0, 1, 2}, {0, 3, 6}, {0, 4, 8}}));
  CHECK(l16.verdict == Optimality::optimal);
  CHECK_FALSE(l16.by_bound);

  const OptimalityResult budget = prove_optimal(fixtures::make(30, 5, {{0, 1, 2, 3, 4}}), 2);
  CHECK(budget.verdict == Optimality::undetermined);

  CHECK_THROWS_AS((void)prove_optimal(fixtures::make(9, 3, {{0, 1, 2}, {0, 2, 4}})), std::invalid_argument);
}

}  // TEST_SUITE
