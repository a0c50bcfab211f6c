#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "prism/classify.hpp"
#include "prism/floer.hpp"
#include "prism/rational.hpp"
#include "prism/torsion.hpp"
#include "prism/vec.hpp"

using namespace prism;

TEST_CASE("family_pq closed form at small parameters") {
  const FamilyMember base = family_pq(0, 0);
  CHECK(base.p == 11);
  CHECK(base.q == 7);
  CHECK(base.r == -3);
  CHECK(base.sigma == std::vector<long long>{1, 1, 1, 2});

  const FamilyMember s1 = family_pq(1, 0);
  CHECK(s1.p == 15);
  CHECK(s1.q == 11);
  CHECK(s1.r == -5);
  CHECK(s1.sigma == std::vector<long long>{1, 1, 1, 2, 2});

  const FamilyMember t1 = family_pq(0, 1);
  CHECK(t1.p == 25);
  CHECK(t1.q == 16);
  CHECK(t1.r == -3);
  CHECK(t1.sigma == std::vector<long long>{1, 1, 1, 2, 3});

  CHECK(family_embedding(s1).marks == std::array<int, 4>{4, 2, 1, 0});
  CHECK_THROWS_AS(family_pq(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_pq(0, -2), std::invalid_argument);
  CHECK_THROWS_AS(family_pq(60000, 60000), resource_limit_error);
}

TEST_CASE("family members satisfy every window and parity invariant") {
  for (long long s = 0; s <= 6; ++s) {
    for (long long t = 0; t <= 6; ++t) {
      const FamilyMember m = family_pq(s, t);
      CHECK(m.q < m.p);
      CHECK(m.p < 2 * m.q);
      CHECK(m.p % 2 == 1);
      if (m.q % 2 == 1) CHECK(mod4_obstruction(m.p, m.q));
      CHECK(boost::multiprecision::gcd(m.p, m.q) == 1);
      CHECK(Int(norm2(m.sigma)) == m.q);
      CHECK(is_changemaker(m.sigma));
      CHECK_NOTHROW(validate_embedding(family_embedding(m)));

      const PrismVerdict v = decide(m.p, m.q);
      CHECK(v.status == VerdictStatus::realizable);
      CHECK(v.reason == "family");
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->r == m.r);
      CHECK(v.witness->s == s);
      CHECK(v.witness->t == t);
    }
  }
}

TEST_CASE("decide resolves the reference table") {
  CHECK(decide(11, 7).status == VerdictStatus::realizable);
  CHECK(decide(11, 7).witness->r == -3);
  CHECK(decide(15, 11).witness->r == -5);
  CHECK(decide(25, 16).witness->r == -3);
  CHECK(decide(13, 9).status == VerdictStatus::not_realizable);
  CHECK(decide(13, 9).reason == "no-odd-root");
  CHECK(decide(16, 9).status == VerdictStatus::not_realizable);
  CHECK(decide(16, 9).reason == "parity");
  CHECK(decide(15, 7).status == VerdictStatus::realizable);
  CHECK(decide(15, 7).reason == "torus-knot");
  CHECK(decide(17, 7).status == VerdictStatus::not_realizable);
  CHECK(decide(17, 7).reason == "p-too-large");
  CHECK(decide(9, 5).reason == "no-odd-root");
  CHECK(decide(7, 11).status == VerdictStatus::out_of_scope);
  CHECK(decide(7, 11).reason == "out-of-scope");
}

TEST_CASE("decide validates its input") {
  CHECK_THROWS_AS(decide(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(decide(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(decide(5, 0), std::invalid_argument);
}

TEST_CASE("decide agrees with family membership across the window") {
  std::set<std::pair<Int, Int>> family;
  for (long long s = 0;; ++s) {
    if (family_pq(s, 0).p > 2000) break;
    for (long long t = 0;; ++t) {
      const FamilyMember m = family_pq(s, t);
      if (m.p > 2000) break;
      family.emplace(m.p, m.q);
    }
  }
  std::size_t realizable_seen = 0;
  for (Int p = 3; p <= 2000; p += 2) {
    for (Int q = p / 2 + 1; q < p; ++q) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      const PrismVerdict v = decide(p, q);
      const bool in_family = family.count({p, q}) > 0;
      CHECK((v.status == VerdictStatus::realizable) == in_family);
      if (in_family) {
        ++realizable_seen;
        const FamilyMember m = family_pq(v.witness->s, v.witness->t);
        CHECK(m.p == p);
        CHECK(m.q == q);
      }
    }
  }
  CHECK(realizable_seen == family.size());
}

TEST_CASE("torus knot boundary cases are realizable") {
  for (Int q : {Int(2), Int(3), Int(7), Int(50)}) {
    const PrismVerdict v = decide(2 * q + 1, q);
    CHECK(v.status == VerdictStatus::realizable);
    CHECK(v.reason == "torus-knot");
    CHECK_FALSE(v.witness.has_value());
  }
}

TEST_CASE("enumerate_search frozen results at small bounds") {
  const std::vector<SearchHit> four = enumerate_search(4, 15);
  REQUIRE(four.size() == 1);
  CHECK(four[0].emb.sigma == std::vector<long long>{1, 1, 1, 2});
  CHECK(four[0].emb.marks == std::array<int, 4>{3, 2, 1, 0});
  CHECK(four[0].p == 11);
  CHECK(four[0].q == 7);

  const std::vector<SearchHit> five = enumerate_search(5, 15);
  REQUIRE(five.size() == 3);
  CHECK(five[1].emb.sigma == std::vector<long long>{1, 1, 1, 2, 2});
  CHECK(five[1].emb.marks == std::array<int, 4>{4, 2, 1, 0});
  CHECK(five[1].p == 15);
  CHECK(five[1].q == 11);
  CHECK(five[2].emb.sigma == std::vector<long long>{1, 1, 1, 2, 3});
  CHECK(five[2].emb.marks == std::array<int, 4>{3, 2, 1, 0});
  CHECK(five[2].p == 25);
  CHECK(five[2].q == 16);

  const std::vector<SearchHit> six = enumerate_search(6, 15);
  REQUIRE(six.size() == 6);
  std::vector<std::pair<Int, Int>> pairs;
  for (const SearchHit& hit : six) pairs.emplace_back(hit.p, hit.q);
  const std::vector<std::pair<Int, Int>> expected = {
      {11, 7}, {15, 11}, {19, 15}, {49, 36}, {25, 16}, {39, 25}};
  CHECK(pairs == expected);
}

TEST_CASE("every search hit is a family member with the expected marking") {
  for (const SearchHit& hit : enumerate_search(6, 15)) {
    const long long s = hit.emb.marks[0] - 3;
    const long long t =
        static_cast<long long>(hit.emb.sigma.size()) - 4 - s;
    const FamilyMember m = family_pq(s, t);
    CHECK(m.p == hit.p);
    CHECK(m.q == hit.q);
    CHECK(m.sigma == hit.emb.sigma);
    CHECK(family_embedding(m).marks == hit.emb.marks);
    CHECK(hit.p % 2 == 1);
    CHECK(decide(hit.p, hit.q).status == VerdictStatus::realizable);
  }
}

TEST_CASE("enumerate_search output does not depend on the worker count") {
  const std::vector<SearchHit> serial = enumerate_search(6, 15, 1);
  const std::vector<SearchHit> sharded = enumerate_search(6, 15, 3);
  REQUIRE(serial.size() == sharded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].emb.sigma == sharded[i].emb.sigma);
    CHECK(serial[i].emb.marks == sharded[i].emb.marks);
    CHECK(serial[i].p == sharded[i].p);
    CHECK(serial[i].q == sharded[i].q);
  }
}

TEST_CASE("enumerate_search validates its bounds") {
  CHECK_THROWS_AS(enumerate_search(3, 15), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_search(9, 15), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_search(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_search(4, 16), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_search(4, 15, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_search(4, 15, 65), std::invalid_argument);
}

TEST_CASE("cross_check passes on the first three family members") {
  const CrossCheckReport base = cross_check(family_pq(0, 0));
  CHECK(base.all_pass());
  CHECK(base.casson_walker_prism_value == Rational(1, 8));
  CHECK(base.casson_walker_surgery_value == Rational(1, 8));
  CHECK(base.delta_minus_one == -11);
  CHECK(base.genus_shorts == 9);
  CHECK(base.genus_profile == 9);

  const CrossCheckReport s1 = cross_check(family_pq(1, 0));
  CHECK(s1.all_pass());
  CHECK(s1.casson_walker_prism_value == Rational(3, 88));
  CHECK(s1.delta_minus_one == -15);
  CHECK(s1.genus_profile == 15);

  const CrossCheckReport t1 = cross_check(family_pq(0, 1));
  CHECK(t1.all_pass());
  CHECK(t1.casson_walker_prism_value == Rational(13, 128));
  CHECK(t1.delta_minus_one == 25);
  CHECK(t1.genus_profile == 24);
}

TEST_CASE("cross_check flags a corrupted torsion profile") {
  const TorsionProfile bad = make_torsion_profile(
      7, {4, 3, 3, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
  const CrossCheckReport rep = cross_check_with_profile(family_pq(0, 0), bad);
  CHECK_FALSE(rep.d_invariants_match);
  CHECK_FALSE(rep.casson_walker_match);
  CHECK_FALSE(rep.alexander_det_match);
  CHECK(rep.torsion_symmetry_match);
  CHECK(rep.genus_match);
  CHECK_FALSE(rep.all_pass());
}
