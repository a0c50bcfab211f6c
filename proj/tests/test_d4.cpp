#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "prism/changemaker.hpp"
#include "prism/classify.hpp"
#include "prism/d4.hpp"
#include "prism/vec.hpp"

using namespace prism;

namespace {

MarkedEmbedding emb(std::vector<long long> sigma, std::array<int, 4> marks) {
  return MarkedEmbedding{std::move(sigma), marks};
}

}  // namespace

TEST_CASE("validate_embedding rejects malformed markings") {
  CHECK_NOTHROW(validate_embedding(emb({1, 1, 1, 2}, {3, 2, 1, 0})));
  CHECK_THROWS_AS(validate_embedding(emb({1, 1, 1, 2}, {0, 1, 2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_embedding(emb({1, 1, 1, 2}, {4, 2, 1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_embedding(emb({1, 1, 1, 2}, {3, 2, 1, -1})),
                  std::invalid_argument);
  // Index 3 is marked but its equal partner above, index 4, is not.
  CHECK_THROWS_AS(validate_embedding(emb({1, 1, 1, 2, 2}, {3, 2, 1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_embedding(emb({1, 3, 4, 9}, {3, 2, 1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_embedding(emb({1, 1, 2}, {2, 1, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_embedding(emb({0, 1, 1, 2}, {3, 2, 1, 0})),
                  std::invalid_argument);
}

TEST_CASE("all_markings enumerates admissible tuples") {
  using Marks = std::vector<std::array<int, 4>>;
  CHECK(all_markings({1, 1, 1, 2}) == Marks{{3, 2, 1, 0}});
  CHECK(all_markings({1, 1, 1, 2, 2}) == Marks{{4, 2, 1, 0}, {4, 3, 2, 1}});
  CHECK(all_markings({1, 1, 2, 4, 8}) ==
        Marks{{3, 2, 1, 0}, {4, 2, 1, 0}, {4, 3, 1, 0}, {4, 3, 2, 1}});
  CHECK(all_markings({1, 1, 2}).empty());
  CHECK(all_markings({0, 1, 1, 2}).empty());
  CHECK(all_markings({1, 3, 4, 9}).empty());
  CHECK_THROWS_AS(all_markings({1, 2, 1, 1}), std::invalid_argument);
  for (const std::array<int, 4>& marks : all_markings({1, 1, 1, 2, 2, 5}))
    CHECK_NOTHROW(validate_embedding(emb({1, 1, 1, 2, 2, 5}, marks)));
}

TEST_CASE("short_covectors has the documented count and coordinate shapes") {
  const MarkedEmbedding e = emb({1, 1, 1, 2}, {3, 2, 1, 0});
  const std::vector<CharCovector> shorts = short_covectors(e);
  CHECK(shorts.size() == 25);  // 2^4 even plus 9 * 2^0 odd
  std::size_t even_count = 0, odd_count = 0;
  for (const CharCovector& chi : shorts) {
    if (chi.parity == CovectorParity::even) {
      ++even_count;
      for (const long long x : chi.coords) CHECK((x == 1 || x == -1));
    } else {
      ++odd_count;
      long long support = 0;
      for (const long long x : chi.coords) {
        CHECK((x == 0 || x == 2 || x == -2));
        if (x != 0) ++support;
      }
      CHECK(support <= 1);
    }
  }
  CHECK(even_count == 16);
  CHECK(odd_count == 9);

  const MarkedEmbedding wide = emb({1, 1, 1, 2, 2}, {4, 2, 1, 0});
  CHECK(short_covectors(wide).size() == 32 + 9 * 2);
}

TEST_CASE("test_vector_intervals on the base example") {
  const TestVectorIntervals iv = test_vector_intervals(emb({1, 1, 1, 2}, {3, 2, 1, 0}));
  CHECK(iv.m0 == 5);
  CHECK(iv.m1 == 4);
  CHECK(iv.set0 == std::vector<long long>{0, 1, 2, 3, 4, 5});
  CHECK(iv.set1 == std::vector<long long>{0, 1, 2, 3, 4});
  CHECK(interval_condition(emb({1, 1, 1, 2}, {3, 2, 1, 0})));
}

TEST_CASE("interval_condition fails on the power changemaker") {
  for (const std::array<int, 4>& marks : all_markings({1, 1, 2, 4, 8}))
    CHECK_FALSE(interval_condition(emb({1, 1, 2, 4, 8}, marks)));
}

TEST_CASE("interval_condition pinpoints the gaps") {
  const TestVectorIntervals iv =
      test_vector_intervals(emb({1, 1, 1, 2, 5}, {4, 3, 2, 1}));
  CHECK(iv.m1 == 11);
  CHECK(iv.set1 == std::vector<long long>{0, 1, 3, 4, 5, 6, 7, 8, 10, 11});
  CHECK_FALSE(interval_condition(emb({1, 1, 1, 2, 5}, {4, 3, 2, 1})));
  // The other marking fills both intervals.
  CHECK(interval_condition(emb({1, 1, 1, 2, 5}, {3, 2, 1, 0})));
}

TEST_CASE("genus_from_shorts reads the symmetrized pairing range") {
  CHECK(genus_from_shorts(emb({1, 1, 1, 2}, {3, 2, 1, 0})) == 9);
  CHECK(genus_from_shorts(emb({1, 1, 1, 2, 5}, {3, 2, 1, 0})) == 54);
  // Even pairings of (1,1,2,4,8) only reach even values and the odd family
  // misses 11 and 13, so no full interval exists.
  CHECK_FALSE(genus_from_shorts(emb({1, 1, 2, 4, 8}, {4, 3, 2, 1})).has_value());
}

TEST_CASE("contains_x0 measures parity against the marked block") {
  const MarkedEmbedding e = emb({1, 1, 1, 2}, {3, 2, 1, 0});
  CHECK(contains_x0({0, 0, 0, 1}, e));
  CHECK(contains_x0({0, 1, 1, -1}, e));
  CHECK_FALSE(contains_x0({1, 1, 0, 0}, e));
  CHECK_FALSE(contains_x0({1, -1, 0, 0}, e));
  CHECK_FALSE(contains_x0({}, e));
}

TEST_CASE("recognize_linear_marked matches the closed-form family") {
  for (long long s = 0; s <= 2; ++s) {
    for (long long t = 0; t <= 2 - s; ++t) {
      const FamilyMember member = family_pq(s, t);
      const std::optional<RecognizedLinear> rec =
          recognize_linear_marked(family_embedding(member));
      REQUIRE(rec.has_value());
      CHECK(rec->p == member.p);
      CHECK(rec->q == member.q);
    }
  }
}

TEST_CASE("the marking orients the path where the bare recognizer cannot") {
  // Complement of (1,1,1,2,2,5): the two endpoint readings give different
  // surgery pairs, related by inverting the denominator mod q.
  const std::optional<RecognizedLinear> bare = recognize_linear({1, 1, 1, 2, 2, 5});
  REQUIRE(bare.has_value());
  CHECK(bare->p == 61);
  CHECK(bare->q == 36);
  const std::optional<RecognizedLinear> marked =
      recognize_linear_marked(emb({1, 1, 1, 2, 2, 5}, {4, 2, 1, 0}));
  REQUIRE(marked.has_value());
  CHECK(marked->p == 49);
  CHECK(marked->q == 36);
  CHECK(((2 * 36 - 61) * (2 * 36 - 49)) % 36 == 1);
}

TEST_CASE("recognize_linear_marked rejections and edge acceptances") {
  // Non-linear complement: no marking can help.
  CHECK_FALSE(recognize_linear_marked(emb({1, 1, 2, 4, 8}, {4, 3, 2, 1})).has_value());
  // Linear complement, but no realization has the required parity pattern.
  CHECK_FALSE(recognize_linear_marked(emb({1, 1, 1, 2, 3}, {4, 3, 2, 1})).has_value());
  CHECK_FALSE(recognize_linear_marked(emb({1, 1, 1, 2, 5}, {3, 2, 1, 0})).has_value());
  // Parity pattern works even though the interval condition fails; the two
  // filters are independent.
  const std::optional<RecognizedLinear> off =
      recognize_linear_marked(emb({1, 1, 1, 2, 5}, {4, 3, 2, 1}));
  REQUIRE(off.has_value());
  CHECK(off->p == 41);
  CHECK(off->q == 32);
}
