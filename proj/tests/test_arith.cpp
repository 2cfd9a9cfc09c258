#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "philucas/arith.hpp"
#include "philucas/sieve.hpp"

using namespace philucas;

namespace {

// Independent primality oracle: plain trial division.
bool trial_division_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int pow2(unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

TEST_CASE("is_prime on the anchor values") {
  CHECK_FALSE(is_prime(Int(1)));
  CHECK(is_prime(Int(661)));
  REQUIRE(trial_division_prime((1ULL << 31) - 1));
  CHECK(is_prime(pow2(31) - 1));
  CHECK_FALSE(is_prime(pow2(31) + 1));
}

TEST_CASE("is_prime agrees with a sieve below 3*10^4") {
  auto primes = primes_up_to(30'000);
  std::set<unsigned> prime_set(primes.begin(), primes.end());
  for (unsigned n = 1; n <= 30'000; ++n)
    CHECK(is_prime(Int(n)) == prime_set.contains(n));
}

TEST_CASE("is_prime rejects Fermat/Carmichael pseudoprimes") {
  for (long n : {341L, 561L, 1105L, 1729L, 6601L, 75361L, 41041L})
    CHECK_FALSE(is_prime(Int(n)));
}

TEST_CASE("is_prime above the 12-witness proof bound") {
  // 2^89 - 1 is a Mersenne prime with 27 digits.
  CHECK(is_prime(pow2(89) - 1));
  CHECK_FALSE(is_prime(pow2(89) - 3));
}

TEST_CASE("factor on the anchor values") {
  CHECK(factor(Int(1)).factors.empty());
  Factorization f = factor(Int(177148));
  CHECK(f == Factorization{{{Int(2), 2}, {Int(67), 1}, {Int(661), 1}}});
  CHECK(factor(Int(242)) == Factorization{{{Int(2), 1}, {Int(11), 2}}});
  CHECK(f.value() == 177148);
}

TEST_CASE("factor matches the smallest-factor sieve for every n <= 10^6") {
  constexpr std::uint32_t kMax = 1'000'000;
  const auto spf = smallest_factor_table(kMax);
  for (std::uint32_t n = 1; n <= kMax; ++n) {
    Factorization got = factor(Int(n));
    std::uint32_t rest = n;
    bool ok = true;
    for (const auto& [p, e] : got.factors) {
      for (unsigned i = 0; i < e; ++i) {
        if (rest % p.get_ui() != 0 || spf[rest] > p.get_ui()) {
          ok = false;
          break;
        }
        rest /= p.get_ui();
      }
    }
    if (!ok || rest != 1) {
      CAPTURE(n);
      REQUIRE(false);
    }
  }
}

TEST_CASE("factor reconstructs random 128-bit integers or fails loudly") {
  std::mt19937_64 rng(20250809);
  EffortCap cap;
  cap.rho_iterations = 2'000'000;
  int exhausted = 0;
  const int kSamples = 10'000;
  for (int i = 0; i < kSamples; ++i) {
    Int n = Int(rng()) << 64 | Int(rng());
    if (n < 2) continue;
    try {
      Factorization f = factor(n, cap);
      REQUIRE(f.value() == n);
      for (const auto& [p, e] : f.factors) REQUIRE(is_prime(p));
    } catch (const EffortExhausted& e) {
      ++exhausted;
      // The cofactor must be a genuine composite divisor of n.
      REQUIRE(e.cofactor() > 1);
      REQUIRE(mpz_divisible_p(n.get_mpz_t(), e.cofactor().get_mpz_t()) != 0);
      REQUIRE_FALSE(is_prime(e.cofactor()));
    }
  }
  // Roughly a fifth of random 128-bit integers have a second-largest
  // prime factor beyond this budget's reach; they must fail loudly above.
  CHECK(exhausted < kSamples / 4);
}

TEST_CASE("factor exhausts deterministically on a hard semiprime") {
  const Int n = make_int(174763) * make_int(160465489);
  EffortCap tiny;
  tiny.rho_iterations = 10;
  CHECK_THROWS_AS((void)factor(n, tiny), EffortExhausted);
  try {
    (void)factor(n, tiny);
  } catch (const EffortExhausted& e) {
    CHECK(e.cofactor() == n);
  }
  CHECK(factor(n).value() == n);  // default budget succeeds
}

TEST_CASE("euler_phi anchors and closed forms") {
  CHECK(euler_phi(Int(1)) == 1);
  CHECK(euler_phi(Int(8)) == 4);
  // phi(2^b * 3^(s+1)) = 2^b * 3^s for b >= 1.
  for (unsigned b = 1; b <= 10; ++b)
    for (unsigned s = 0; s <= 6; ++s) {
      Int n = pow2(b);
      Int expected = n;
      for (unsigned i = 0; i < s; ++i) expected *= 3;
      Int arg = expected * 3;
      CHECK(euler_phi(arg) == expected);
    }
}

TEST_CASE("euler_phi agrees with the sieve for every n <= 10^6") {
  constexpr std::uint32_t kMax = 1'000'000;
  const auto phi = phi_table(kMax);
  for (std::uint32_t n = 1; n <= kMax; ++n) {
    if (euler_phi(Int(n)) != Int(phi[n])) {
      CAPTURE(n);
      REQUIRE(false);
    }
  }
}

TEST_CASE("phi is multiplicative on coprime pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(1, 1'000'000);
  int tested = 0;
  while (tested < 10'000) {
    long a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ++tested;
    CHECK(euler_phi(Int(a) * Int(b)) == euler_phi(Int(a)) * euler_phi(Int(b)));
  }
}

TEST_CASE("Gauss identity: sum of phi over divisors up to 10^5") {
  constexpr std::uint32_t kMax = 100'000;
  const auto phi = phi_table(kMax);
  std::vector<std::uint64_t> acc(kMax + 1, 0);
  for (std::uint32_t d = 1; d <= kMax; ++d)
    for (std::uint64_t mult = d; mult <= kMax; mult += d) acc[mult] += phi[d];
  for (std::uint32_t n = 1; n <= kMax; ++n) REQUIRE(acc[n] == n);
}

TEST_CASE("p-adic valuation") {
  CHECK(nu(Int(2), Int(7)) == 0);
  CHECK(nu(Int(11), Int(242)) == 2);
  CHECK(nu(Int(3), Int(162)) == 4);
  CHECK(nu(Int(3), Int(-162)) == 4);
  CHECK_THROWS_AS(nu(Int(3), Int(0)), std::invalid_argument);
}

TEST_CASE("tau, omega, least_prime_factor") {
  CHECK(tau(Int(1)) == 1);
  CHECK(omega(Int(1)) == 0);
  CHECK(tau(Int(12)) == 6);
  CHECK(omega(Int(12)) == 2);
  CHECK(least_prime_factor(Int(346)) == 2);
  CHECK(least_prime_factor(Int(661)) == 661);
  CHECK(tau(Int(45)) == 6);
  CHECK(nu(Int(3), Int(45)) == 2);
  CHECK_THROWS_AS(least_prime_factor(Int(1)), std::invalid_argument);
}

TEST_CASE("factorization product operator") {
  Factorization a = factor(Int(12));
  Factorization b = factor(Int(18));
  CHECK((a * b).value() == 216);
  CHECK(euler_phi(a * b) == euler_phi(Int(216)));
}
