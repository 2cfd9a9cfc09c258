#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "philucas/lemmas.hpp"
#include "philucas/lucas.hpp"

using namespace philucas;

namespace {

Int ipow(long base, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

TEST_CASE("wieferich scan anchors") {
  CHECK(wieferich_scan(3, 1, 173) == std::vector<long long>{11});
  CHECK(wieferich_scan(3, 1, 7).empty());
  CHECK(wieferich_scan(2, 1, 1100) == std::vector<long long>{1093});
}

TEST_CASE("the base-3 pair really is a square divisor") {
  // 3^10 - 1 = 59048 = 2^3 * 11^2 * 61
  CHECK((ipow(3, 10) - 1) % (11 * 11) == 0);
  CHECK(nu(Int(11), ipow(3, 10) - 1) == 2);
}

TEST_CASE("lemma 3.6 grid is empty at exponent six") {
  CHECK(lemma36_scan(6).empty());
}

TEST_CASE("scan bounds that overflow the residue arithmetic are rejected") {
  CHECK_THROWS_AS((void)lemma36_scan(6, 73, 100'000), std::invalid_argument);
  CHECK_THROWS_AS((void)wieferich_scan(3, 1, 1LL << 40),
                  std::invalid_argument);
}

TEST_CASE("lemma 3.6 grid at exponent three") {
  CHECK(lemma36_scan(3, 9).empty());  // x1 <= 9 has no hits

  auto hits = lemma36_scan(3, 73, 173, 10);
  CHECK(hits.size() == 41);
  std::map<std::pair<long long, long long>, int> per_pair;
  for (auto& h : hits) {
    CHECK(h.exponent_reached >= 3);
    ++per_pair[{h.x1, h.y1}];
  }
  int worst = 0;
  for (auto& [pair, count] : per_pair) worst = std::max(worst, count);
  CHECK(worst == 2);
  CHECK(per_pair[{37, 17}] == 2);
  CHECK(per_pair[{61, 47}] == 2);
}

TEST_CASE("hit lists are monotone in the exponent threshold") {
  auto h2 = lemma36_scan(2);
  auto h3 = lemma36_scan(3);
  std::set<std::tuple<long long, long long, long long>> at2;
  for (auto& h : h2) at2.insert({h.x1, h.y1, h.q});
  for (auto& h : h3) CHECK(at2.contains({h.x1, h.y1, h.q}));
  CHECK(h3.size() < h2.size());
}

TEST_CASE("residue scan agrees with full-integer arithmetic on a sample") {
  auto hits = lemma36_scan(3);
  std::set<std::tuple<long long, long long, long long>> hit_set;
  for (auto& h : hits) {
    hit_set.insert({h.x1, h.y1, h.q});
    // exponent_reached is the exact valuation, recomputed on full integers
    CHECK(nu(make_int(h.q), ipow(h.x1, h.q - 1) - ipow(h.y1, h.q - 1)) ==
          h.exponent_reached);
  }
  std::mt19937_64 rng(7);
  auto primes = std::vector<long long>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                       37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                       79, 83, 89, 97, 101, 103, 107, 109,
                                       113, 127, 131, 137, 139, 149, 151, 157,
                                       163, 167};
  int sampled = 0;
  while (sampled < 250) {
    long long x1 = 3 + 2 * (rng() % 36);
    long long y1 = 1 + 2 * (rng() % ((x1 - 1) / 2));
    long long q = primes[rng() % primes.size()];
    if (std::gcd(x1, y1) != 1 || (x1 - y1) % q == 0 || x1 % q == 0 ||
        y1 % q == 0)
      continue;
    ++sampled;
    const bool full = nu(make_int(q),
                         ipow(x1, q - 1) - ipow(y1, q - 1)) >= 3;
    CHECK(full == hit_set.contains({x1, y1, q}));
  }
}

TEST_CASE("scan output is ordered and respects the invariants") {
  auto hits = lemma36_scan(3);
  for (std::size_t i = 0; i + 1 < hits.size(); ++i)
    CHECK(std::tuple(hits[i].x1, hits[i].y1, hits[i].q) <
          std::tuple(hits[i + 1].x1, hits[i + 1].y1, hits[i + 1].q));
  for (auto& h : hits) {
    CHECK(h.x1 % 2 == 1);
    CHECK(h.y1 % 2 == 1);
    CHECK(std::gcd(h.x1, h.y1) == 1);
    CHECK((h.x1 - h.y1) % h.q != 0);
    CHECK(h.x1 % h.q != 0);
    CHECK(h.y1 % h.q != 0);
  }
}

TEST_CASE("identity catalog passes in full") {
  for (auto& item : identity_catalog()) {
    CAPTURE(item.id);
    CAPTURE(item.detail);
    REQUIRE(item.pass);
  }
}

TEST_CASE("lemma 3.1 building blocks") {
  // m = 3^2 * 5 = 45: nu_3 = 2, tau = 6
  CHECK(nu(Int(3), Int(45)) == 2);
  CHECK(tau(Int(45)) == 6);
  CHECK(lemma31_exponent(3, 45) == 6);
  // q = 3, (x1, y1) = (4, 1): nu_3(4^2 - 1) = nu_3(15) = 1
  CHECK(nu(Int(3), Int(15)) == 1);
  // q = 11, (x1, y1) = (3, 1): nu_11(3^10 - 1) = 2
  CHECK(nu(Int(11), ipow(3, 10) - 1) == 2);
  CHECK(lemma31_divisibility_check(3, 1, 11, 11 * 5));  // exponent 2, 11^1 ok
  CHECK(lemma31_exponent(11, 55) == 2);
  CHECK_FALSE(lemma31_divisibility_check(3, 1, 11, 11 * 11 * 5 * 5));
  CHECK_THROWS_AS((void)lemma31_divisibility_check(3, 1, 7, 5),
                  std::invalid_argument);
}
