// Acceptance gate for the classification pipeline.  Each criterion prints
// exactly one [PASS]/[FAIL] line with a short timing detail; the process
// exits nonzero when any criterion fails.  Everything checked here is exact
// rational or integer arithmetic; timings only guard the resource envelope.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "prism/prism.hpp"

using namespace prism;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string format_ms(double ms) {
  std::ostringstream out;
  out.precision(3);
  if (ms >= 1000.0)
    out << ms / 1000.0 << " s";
  else
    out << ms << " ms";
  return out.str();
}

/// Fastest of three runs, so a scheduler hiccup cannot fail a timing gate.
double best_of_three(const std::function<void()>& fn) {
  double best = 1e18;
  for (int i = 0; i < 3; ++i) {
    const Clock::time_point start = Clock::now();
    fn();
    best = std::min(best, ms_since(start));
  }
  return best;
}

bool subset_sums_cover(const std::vector<long long>& sigma) {
  long long total = 0;
  for (const long long s : sigma) total += s;
  std::vector<char> hit(static_cast<std::size_t>(total) + 1, 0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << sigma.size()); ++mask) {
    long long sum = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (mask & (std::size_t{1} << i)) sum += sigma[i];
    hit[static_cast<std::size_t>(sum)] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

struct MemberData {
  FamilyMember member;
  TorsionProfile profile;
  CrossCheckReport report;
  double ms = 0;
};

}  // namespace

int main() {
  // Criterion 1: the reference decision table, each decision exact and fast.
  {
    struct Row {
      long long p, q;
      VerdictStatus status;
      std::string reason;
      long long witness_r;  // 0 when no witness is expected
    };
    const std::vector<Row> table = {
        {11, 7, VerdictStatus::realizable, "family", -3},
        {15, 11, VerdictStatus::realizable, "family", -5},
        {25, 16, VerdictStatus::realizable, "family", -3},
        {13, 9, VerdictStatus::not_realizable, "no-odd-root", 0},
        {16, 9, VerdictStatus::not_realizable, "parity", 0},
        {15, 7, VerdictStatus::realizable, "torus-knot", 0},
        {17, 7, VerdictStatus::not_realizable, "p-too-large", 0},
    };
    bool ok = true;
    double slowest = 0;
    for (const Row& row : table) {
      PrismVerdict v;
      const double ms = best_of_three([&] { v = decide(row.p, row.q); });
      slowest = std::max(slowest, ms);
      ok = ok && v.status == row.status && v.reason == row.reason;
      if (row.witness_r != 0)
        ok = ok && v.witness && v.witness->r == row.witness_r;
      ok = ok && ms < 1.0;
    }
    report("criterion-1-decision-table", ok,
           "7 decisions, slowest " + format_ms(slowest));
  }

  // Criterion 2: the brute-force search over all marked changemakers of
  // length <= 7 and entries <= 15 reproduces exactly the family s + t <= 3.
  {
    const Clock::time_point start = Clock::now();
    const std::vector<SearchHit> hits = enumerate_search(7, 15);
    const double ms = ms_since(start);
    std::vector<SearchHit> expected;
    for (long long s = 0; s <= 3; ++s)
      for (long long t = 0; t + s <= 3; ++t) {
        const FamilyMember m = family_pq(s, t);
        expected.push_back(SearchHit{family_embedding(m), m.p, m.q});
      }
    std::sort(expected.begin(), expected.end(),
              [](const SearchHit& x, const SearchHit& y) {
                if (x.emb.sigma != y.emb.sigma) return x.emb.sigma < y.emb.sigma;
                return x.emb.marks < y.emb.marks;
              });
    bool ok = hits.size() == expected.size();
    for (std::size_t i = 0; ok && i < hits.size(); ++i)
      ok = hits[i].emb.sigma == expected[i].emb.sigma &&
           hits[i].emb.marks == expected[i].emb.marks &&
           hits[i].p == expected[i].p && hits[i].q == expected[i].q;
    ok = ok && ms <= 300000.0;
    std::ostringstream detail;
    detail << hits.size() << " hits in " << format_ms(ms);
    report("criterion-2-search-reproduces-family", ok, detail.str());
  }

  // Criterion 3: d-invariants of D4 are stable under unimodular summands and
  // match the degenerate prism formula.
  {
    const DInvariant expected = {Rational(0), Rational(0), Rational(-1),
                                 Rational(0)};
    bool ok = prism_a1_d(2) == expected;
    for (std::size_t j = 0; j <= 3; ++j)
      ok = ok && lattice_d_invariant(direct_sum(dk_gram(4), identity_gram(j))) ==
                     expected;
    report("criterion-3-d4-stability", ok, "4 ranks plus closed form");
  }

  // Criteria 4 and 5 share one sweep over every family member with q <= 60.
  std::vector<MemberData> members;
  for (long long s = 0; family_pq(s, 0).q <= 60; ++s) {
    for (long long t = 0; family_pq(s, t).q <= 60; ++t) {
      MemberData data;
      const Clock::time_point start = Clock::now();
      data.member = family_pq(s, t);
      data.profile = torsion_from_lattice(family_embedding(data.member));
      data.report = cross_check_with_profile(data.member, data.profile);
      data.ms = ms_since(start);
      members.push_back(std::move(data));
    }
  }

  {
    bool ok = members.size() == 20;
    double slowest = 0;
    for (const MemberData& data : members) {
      ok = ok && data.report.d_invariants_match && data.ms <= 120000.0;
      slowest = std::max(slowest, data.ms);
    }
    std::ostringstream detail;
    detail << members.size() << " members, slowest " << format_ms(slowest);
    report("criterion-4-d-invariant-assembly", ok, detail.str());
  }

  {
    bool ok = members.size() == 20;
    for (const MemberData& data : members) {
      ok = ok && data.report.casson_walker_match &&
           data.report.alexander_det_match &&
           abs(data.report.delta_minus_one) == data.member.p;
    }
    report("criterion-5-casson-walker-and-determinant", ok,
           "both equalities on all members");
  }

  // Criterion 6: the property suites.
  {
    const Clock::time_point start = Clock::now();
    bool ok = true;

    // Dedekind reciprocity on every coprime pair up to 200.
    for (Int b = 1; b <= 200 && ok; ++b)
      for (Int c = 1; c <= 200 && ok; ++c) {
        if (boost::multiprecision::gcd(b, c) != 1) continue;
        const Rational lhs = dedekind_sum(b, c) + dedekind_sum(c, b);
        const Rational rhs =
            Rational(-1, 4) +
            (Rational(b, c) + Rational(c, b) + Rational(1, b * c)) / 12;
        ok = lhs == rhs;
      }

    // Continued fraction round-trip for every coprime p > q, p up to 500.
    for (Int p = 2; p <= 500 && ok; ++p)
      for (Int q = 1; q < p && ok; ++q) {
        if (boost::multiprecision::gcd(p, q) != 1) continue;
        const std::vector<Int> cf = hj_expand(p, q);
        for (const Int& a : cf) ok = ok && a >= 2;
        const auto [num, den] = hj_evaluate(cf);
        ok = ok && num == p && den == q;
      }

    // Changemaker recognition against brute-force subset sums.
    {
      std::vector<long long> cur;
      std::function<void(long long)> rec = [&](long long lo) {
        if (!ok) return;
        if (cur.size() >= 1)
          ok = ok && is_changemaker(cur) == subset_sums_cover(cur);
        if (cur.size() == 6) return;
        for (long long e = lo; e <= 6; ++e) {
          cur.push_back(e);
          rec(e);
          cur.pop_back();
        }
      };
      rec(0);
    }

    // Torsion symmetry at even index and genus agreement on the sweep.
    for (const MemberData& data : members) {
      const std::vector<long long>& t = data.profile.t;
      const long long q = data.profile.q;
      for (long long i = 0; i <= q; i += 2)
        ok = ok && t[static_cast<std::size_t>(q - i)] -
                           t[static_cast<std::size_t>(q + i)] ==
                       i / 2;
      ok = ok && data.report.genus_match &&
           data.report.genus_shorts == data.profile.genus;
    }

    const double ms = ms_since(start);
    report("criterion-6-property-suites", ok && ms <= 600000.0,
           "4 suites in " + format_ms(ms));
  }

  return failures == 0 ? 0 : 1;
}
