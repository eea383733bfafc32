#include <random>
#include <stdexcept>

#include "cackit/residue.hpp"
#include "doctest.h"

using namespace cackit;

TEST_SUITE("residue") {

TEST_CASE("construction sorts, deduplicates and range-checks") {
  ResidueSet s(10, {7, 3, 3, 0});
  CHECK(s.size() == 3);
  CHECK(std::vector<Residue>(s.begin(), s.end()) == std::vector<Residue>{0, 3, 7});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK_THROWS_AS(ResidueSet(10, {10}), std::out_of_range);
  CHECK_THROWS_AS(ResidueSet(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet(kMaxModulus + 1, {}), std::invalid_argument);
  const std::int64_t raw[] = {-1, 11, 5};
  CHECK(ResidueSet::reduced(10, raw) == ResidueSet(10, {1, 5, 9}));
  CHECK(ResidueSet(15, {0, 5, 10}).to_string() == "{0,5,10} in Z_15");
}

TEST_CASE("difference sets") {
  CHECK(diff_set(ResidueSet(15, {0, 5, 10})) == ResidueSet(15, {0, 5, 10}));
  CHECK(diff_set(ResidueSet(26, {0, 6, 13, 19})) == ResidueSet(26, {0, 6, 7, 13, 19, 20}));
  CHECK(diff_set(ResidueSet(9, {0})) == ResidueSet(9, {0}));
  CHECK(nonzero_diff_set(ResidueSet(15, {0, 7, 11})) == ResidueSet(15, {4, 7, 8, 11}));
  CHECK(nonzero_diff_set(ResidueSet(26, {0, 4, 8, 12})) == ResidueSet(26, {4, 8, 12, 14, 18, 22}));
  CHECK(nonzero_diff_set(ResidueSet(2, {0, 1})) == ResidueSet(2, {1}));
  CHECK_THROWS_AS((void)diff_set(ResidueSet(5, {})), std::invalid_argument);
}

TEST_CASE("sumsets") {
  const ResidueSet h = expand_subgroup(Subgroup::generated_by(15, 5));
  CHECK(sumset(ResidueSet(15, {0, 5, 10}), h) == ResidueSet(15, {0, 5, 10}));
  const ResidueSet b(11, {2, 7, 9});
  CHECK(sumset(ResidueSet(11, {0}), b) == b);
  CHECK(sumset(ResidueSet(4, {0, 1}), ResidueSet(4, {0, 1})) == ResidueSet(4, {0, 1, 2}));
  CHECK_THROWS_AS((void)sumset(ResidueSet(4, {0}), ResidueSet(5, {0})), std::invalid_argument);
  CHECK_THROWS_AS((void)sumset(ResidueSet(4, {}), ResidueSet(4, {0})), std::invalid_argument);
}

TEST_CASE("stabilizers and subgroups") {
  CHECK(stabilizer(ResidueSet(6, {0, 1, 3, 4})) == Subgroup::generated_by(6, 3));
  CHECK(stabilizer(ResidueSet(6, {0, 1, 3, 4})).order() == 2);
  CHECK(stabilizer(ResidueSet(26, {0, 6, 7, 13, 19, 20})) == Subgroup::generated_by(26, 13));
  const Subgroup t = stabilizer(ResidueSet(5, {0, 1}));
  CHECK(t.trivial());
  CHECK(t.order() == 1);
  CHECK(stabilizer(ResidueSet(4, {0, 1, 2, 3})).order() == 4);
  CHECK(expand_subgroup(Subgroup::generated_by(15, 5)) == ResidueSet(15, {0, 5, 10}));
  CHECK(expand_subgroup(Subgroup::generated_by(111, 37)) == ResidueSet(111, {0, 37, 74}));
  CHECK(expand_subgroup(Subgroup::generated_by(4, 1)) == ResidueSet(4, {0, 1, 2, 3}));
  CHECK_THROWS_AS((void)Subgroup::generated_by(15, 4), std::invalid_argument);
}

TEST_CASE("negation and translation") {
  const ResidueSet s(12, {0, 1, 5});
  CHECK(s.negated() == ResidueSet(12, {0, 7, 11}));
  CHECK(s.translated(8) == ResidueSet(12, {1, 8, 9}));
  CHECK(ResidueSet(12, {1, 5}).is_subset_of(s));
  CHECK_FALSE(ResidueSet(12, {2}).is_subset_of(s));
}

TEST_CASE("property: difference-set identities on random subsets") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t L = 2 + rng() % 60;
    const std::size_t n = 1 + rng() % std::min<std::uint64_t>(L, 8);
    std::vector<Residue> elems;
    while (elems.size() < n) {
      const Residue x = rng() % L;
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
    }
    const ResidueSet I(L, elems);
    const ResidueSet d = diff_set(I);
    CAPTURE(I.to_string());

    // the difference set contains its own stabilizer
    const Subgroup h = stabilizer(d);
    CHECK(expand_subgroup(h).is_subset_of(d));
    // d(I) = I + (-I)
    CHECK(d == sumset(I, I.negated()));
    // translation invariance
    const Residue c = rng() % L;
    CHECK(diff_set(I.translated(c)) == d);
    // size bound
    CHECK(nonzero_diff_set(I).size() <= std::min<std::uint64_t>(n * (n - 1), L - 1));

    // the stabilizer is closed under addition and is the largest period
    const ResidueSet hs = expand_subgroup(h);
    for (Residue a : hs) {
      for (Residue b : hs) CHECK(hs.contains((a + b) % L));
    }
    for (Residue a = 1; a < L; ++a) {
      if (d.translated(a) == d) CHECK(h.contains(a));
    }
    CHECK(stabilizer(hs) == h);
  }
}

}  // TEST_SUITE
