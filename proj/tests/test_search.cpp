#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <sstream>

#include "philucas/jsonl.hpp"
#include "philucas/search.hpp"
#include "philucas/sieve.hpp"

using namespace philucas;

namespace {

SearchBox make_box(long long x_max, unsigned m_max, long long z_max,
                   MnRange mn = MnRange::MGreaterThanN) {
  SearchBox box;
  box.x_max = x_max;
  box.m_max = m_max;
  box.z_max = z_max;
  box.mn = mn;
  return box;
}

// phi by counting coprime residues: the independent oracle.
long long counting_phi(long long n) {
  long long count = 0;
  for (long long r = 1; r <= n; ++r)
    if (std::gcd(r, n) == 1) ++count;
  return count;
}

std::string render(const CertificationReport& report) {
  std::ostringstream os;
  write_report(os, report);
  return os.str();
}

}  // namespace

TEST_CASE("z_solve propagates factoring exhaustion") {
  EffortCap tiny;
  tiny.rho_iterations = 10;
  CHECK_THROWS_AS((void)z_solve(EquationId::E14, 2, 1, 57, 1, 1, tiny),
                  EffortExhausted);
}

TEST_CASE("z_solve anchors") {
  CHECK(z_solve(EquationId::E14, 2, 1, 3, 1, 20) ==
        std::vector<long long>{2, 4, 6, 8, 12, 16, 18});
  // A = B = 1: phi(z) = z holds only at z = 1.
  CHECK(z_solve(EquationId::E14, 2, 1, 1, 1, 10) ==
        std::vector<long long>{1});
  CHECK(z_solve(EquationId::E16, 2, 1, 5, 4, 12) ==
        std::vector<long long>{2, 4, 8});
  CHECK_THROWS_AS((void)z_solve(EquationId::E11, 2, 1, 3, 1, 5),
                  std::invalid_argument);
}

TEST_CASE("sweep E11: theorem 1.1 members inside a small signed box") {
  auto report = sweep(EquationId::E11, make_box(5, 2, 0));
  CHECK(report.verdict == Verdict::Match);
  CHECK(report.unresolved.empty());
  std::set<CandidateSolution> nontrivial;
  for (auto& rec : report.found) {
    CHECK_FALSE(rec.trivial);  // m = n excluded by the m > n policy
    CHECK(rec.family == FamilyTag::T11);
    nontrivial.insert(rec.candidate);
  }
  CHECK(nontrivial.size() == 8);  // t = 2, 3 with all four sign variants
}

TEST_CASE("sweep E12: theorem 1.2 members and trivial patterns") {
  auto box = make_box(6, 4, 0, MnRange::AllPairs);
  auto report = sweep(EquationId::E12, box);
  CHECK(report.verdict == Verdict::Match);
  unsigned nontrivial = 0, trivial = 0;
  for (auto& rec : report.found) {
    if (rec.trivial) {
      ++trivial;
      CHECK(rec.family == FamilyTag::Trivial);
    } else {
      ++nontrivial;
      CHECK(rec.family == FamilyTag::T12);
      const auto& c = rec.candidate;
      const long long s = c.x + c.y;
      if (c.m == 2 && c.n == 1)
        CHECK((s == 1 || s == -1 || s == 2 || s == -2));
      else
        CHECK(((c.m == 1 && c.n == 2) && (s == 1 || s == -1)));
    }
  }
  // (x, y, 2, 1): 36 members; (x, y, 1, 2): 20 members at x_max = 6.
  CHECK(nontrivial == 56);
  CHECK(trivial > 0);
}

TEST_CASE("sweep E14 reproduces phi(3z) = z and nothing else") {
  auto report = sweep(EquationId::E14, make_box(6, 7, 30));
  CHECK(report.verdict == Verdict::Match);
  std::vector<long long> zs;
  for (auto& rec : report.found) {
    CHECK(rec.family == FamilyTag::T131);
    zs.push_back(*rec.candidate.z);
  }
  CHECK(zs == std::vector<long long>{2, 4, 6, 8, 12, 16, 18, 24});
}

TEST_CASE("sweep micro-box agrees with the coprime-counting oracle") {
  // Oracle: enumerate candidates with independent loops, evaluate both
  // quotients directly, compute phi by counting.
  auto box = make_box(4, 3, 5, MnRange::AllPairs);
  auto report = sweep(EquationId::E14, box, 2);
  std::set<CandidateSolution> oracle;
  unsigned long long oracle_candidates = 0;
  for (long long x = 2; x <= 4; ++x)
    for (long long y = 1; y < x; ++y)
      for (unsigned m = 1; m <= 3; m += 2)
        for (unsigned n = 1; n <= 3; n += 2)
          for (long long z = 1; z <= 5; ++z) {
            ++oracle_candidates;
            long long xm = 1, ym = 1, xn = 1, yn = 1;
            for (unsigned i = 0; i < m; ++i) xm *= x, ym *= y;
            for (unsigned i = 0; i < n; ++i) xn *= x, yn *= y;
            const long long a = (xm + ym) / (x + y);
            const long long b = (xn + yn) / (x + y);
            if (counting_phi(z * a) == z * b)
              oracle.insert({EquationId::E14, x, y, z, m, n});
          }
  CHECK(report.candidates == oracle_candidates);
  CHECK(report.checked == oracle_candidates);
  std::set<CandidateSolution> got;
  for (auto& rec : report.found) got.insert(rec.candidate);
  CHECK(got == oracle);
}

TEST_CASE("sweep E11 micro-box agrees with the coprime-counting oracle") {
  auto box = make_box(4, 3, 0, MnRange::AllPairs);
  auto report = sweep(EquationId::E11, box);
  std::set<CandidateSolution> oracle;
  for (long long x = -4; x <= 4; ++x)
    for (long long y = -4; y <= 4; ++y) {
      if (x == 0 || y == 0) continue;
      for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n) {
          long long xm = 1, ym = 1, xn = 1, yn = 1;
          for (unsigned i = 0; i < m; ++i) xm *= x, ym *= y;
          for (unsigned i = 0; i < n; ++i) xn *= x, yn *= y;
          const long long lhs = std::llabs(xm - ym);
          const long long rhs = std::llabs(xn - yn);
          if (lhs == 0 || rhs == 0) continue;
          if (counting_phi(lhs) == rhs)
            oracle.insert({EquationId::E11, x, y, std::nullopt, m, n});
        }
    }
  std::set<CandidateSolution> got;
  for (auto& rec : report.found) got.insert(rec.candidate);
  CHECK(got == oracle);
}

TEST_CASE("E16 with every (m, n) pair tags the m < n family as T1.2") {
  auto box = make_box(5, 3, 4, MnRange::AllPairs);
  box.nu2 = Nu2Filter::Distinct;
  // Under nu2-distinct the pairs (2,1), (3,2), (4,1), (4,3), (4,2), (5,2),
  // (5,4) survive; solutions are the catalogue plus the m = 1, n = 2 family.
  auto report = sweep(EquationId::E16, box);
  CHECK(report.verdict == Verdict::Match);
  std::map<FamilyTag, int> tags;
  for (auto& rec : report.found) ++tags[rec.family];
  CHECK(tags[FamilyTag::T133] == 2);  // (2,1,z,3,2) for z in {2, 4}
  CHECK(tags[FamilyTag::T12] > 0);    // (a+1,a,1,1,2) with nu2 distinct
  for (auto& rec : report.found)
    if (rec.family == FamilyTag::T12) {
      CHECK(rec.candidate.m == 1);
      CHECK(rec.candidate.n == 2);
      CHECK(*rec.candidate.z == 1);
      CHECK(rec.candidate.x - rec.candidate.y == 1);
    }
}

TEST_CASE("determinism: worker count does not change the report bytes") {
  auto box = make_box(6, 5, 20);
  auto r1 = sweep(EquationId::E15, box, 1);
  auto r4 = sweep(EquationId::E15, box, 4);
  auto r7 = sweep(EquationId::E15, box, 7);
  CHECK(render(r1) == render(r4));
  CHECK(render(r1) == render(r7));
  CHECK(r1.verdict == Verdict::Match);
}

TEST_CASE("completeness accounting matches the analytic count") {
  auto box = make_box(5, 5, 11);
  box.z_exclusions = {2, 100};
  auto report = sweep(EquationId::E16, box);
  // pairs * mn-pairs * z-values, recounted here by hand
  unsigned long long pairs = 0;
  for (long long x = 2; x <= 5; ++x) pairs += x - 1;
  unsigned long long mns = 0;
  for (unsigned m = 3; m <= 5; m += 2)
    for (unsigned n = 2; n < m; n += 2) ++mns;
  const unsigned long long zs = 11 - 1;  // z = 2 excluded
  CHECK(report.candidates == pairs * mns * zs);
  CHECK(report.checked + report.unresolved.size() == report.candidates);
  CHECK(box_cardinality(EquationId::E16, box) == report.candidates);
}

TEST_CASE("E16 without the nu2 filter exposes the off-catalogue base (3,1)") {
  // phi(6*7) = 12 = 6*2 and phi(6*61) = 120 = 6*20: genuine solutions of
  // 1.6 with nu2(x) = nu2(y) and z > x+y, outside every stated family.
  auto report = sweep(EquationId::E16, make_box(4, 5, 8));
  CHECK(report.verdict == Verdict::UnexpectedSolution);
  std::set<CandidateSolution> unexpected;
  for (auto& rec : report.found)
    if (rec.family == FamilyTag::Unexpected) unexpected.insert(rec.candidate);
  CHECK(unexpected ==
        std::set<CandidateSolution>{{EquationId::E16, 3, 1, 6, 3, 2},
                                    {EquationId::E16, 3, 1, 6, 5, 4}});
}

TEST_CASE("compare_to_known flags injected and missing records") {
  auto box = make_box(4, 5, 8);
  box.nu2 = Nu2Filter::Distinct;  // theorem 1.3(3) hypothesis
  auto report = sweep(EquationId::E16, box);
  REQUIRE(report.verdict == Verdict::Match);

  SUBCASE("negative control: an injected fake record") {
    report.found.push_back(
        {{EquationId::E16, 5, 2, 1, 3, 2}, false, FamilyTag::Unexpected});
    CHECK(compare_to_known(report, EquationId::E16, box) ==
          Verdict::UnexpectedSolution);
  }
  SUBCASE("a missing family member also breaks MATCH") {
    for (auto it = report.found.begin(); it != report.found.end(); ++it)
      if (it->family == FamilyTag::T133) {
        report.found.erase(it);
        break;
      }
    CHECK(compare_to_known(report, EquationId::E16, box) ==
          Verdict::UnexpectedSolution);
  }
  SUBCASE("unresolved entries force INCOMPLETE") {
    report.unresolved.push_back({{EquationId::E16, 4, 1, 3, 3, 2}, Int(91)});
    CHECK(compare_to_known(report, EquationId::E16, box) ==
          Verdict::Incomplete);
  }
}

TEST_CASE("a genuinely exhausted slice yields INCOMPLETE, never silence") {
  // (2^57 + 1)/3 carries the composite 174763 * 160465489 past trial
  // division; ten rho iterations cannot split it.
  auto box = make_box(2, 57, 1);
  box.effort.rho_iterations = 10;
  auto report = sweep(EquationId::E14, box);
  CHECK(report.verdict == Verdict::Incomplete);
  CHECK(!report.unresolved.empty());
  CHECK(report.checked + report.unresolved.size() == report.candidates);
  bool saw_57 = false;
  for (auto& entry : report.unresolved) saw_57 |= entry.candidate.m == 57;
  CHECK(saw_57);
}

TEST_CASE("nu2 filter shapes the pair grid") {
  auto base = make_box(4, 3, 4);
  auto all = sweep(EquationId::E14, base);
  base.nu2 = Nu2Filter::Distinct;
  auto distinct = sweep(EquationId::E14, base);
  base.nu2 = Nu2Filter::Equal;
  auto equal = sweep(EquationId::E14, base);
  CHECK(all.candidates == distinct.candidates + equal.candidates);
}

TEST_CASE("the z <= x+y rule and exclusions reach the family generator") {
  SearchBox box = make_box(12, 9, 0);
  box.z_le_x_plus_y = true;
  box.z_exclusions = {2};
  box.coprime_mn_only = true;
  // Inside 1 <= z <= x+y with z != 2 the 1.6 catalogue is empty: its members
  // at (2, 1) are the powers 2^b p^s >= 2, and only z = 2 fits below 3.
  CHECK(known_families(EquationId::E16, box).empty());
  CHECK(box_valid(EquationId::E16, box));
  SearchBox bad = make_box(12, 9, 0);
  CHECK_FALSE(box_valid(EquationId::E16, bad));  // unbounded z
}

TEST_CASE("report JSONL shape") {
  auto report = sweep(EquationId::E14, make_box(3, 5, 12));
  const std::string text = render(report);
  CHECK(text.find("{\"eq\":\"1.4\",\"x\":2,\"y\":1,\"z\":2,\"m\":3,\"n\":1,"
                  "\"trivial\":false,\"family\":\"T1.3-1\"}\n") !=
        std::string::npos);
  CHECK(text.find("\"verdict\":\"MATCH\"") != std::string::npos);
  auto e11 = sweep(EquationId::E11, make_box(3, 2, 0));
  const std::string text11 = render(e11);
  CHECK(text11.find("\"z\":null") != std::string::npos);
}
