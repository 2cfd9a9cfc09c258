#include "philucas/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "philucas/lucas.hpp"
#include "philucas/sieve.hpp"

namespace philucas {

namespace {

// Exact nu_q of x1^{q-1} - y1^{q-1}, assuming q^k already divides it.
unsigned lift_exponent(long long x1, long long y1, long long q, unsigned k) {
  Int diff;
  {
    Int xp, yp;
    mpz_ui_pow_ui(xp.get_mpz_t(), x1, q - 1);
    mpz_ui_pow_ui(yp.get_mpz_t(), y1, q - 1);
    diff = xp - yp;
  }
  if (diff == 0) return k;  // unreachable for coprime x1 > y1
  return nu(make_int(q), diff);
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::vector<ScanHit> lemma36_scan(unsigned k, long long x1_max,
                                  long long q_max, long long x1_min) {
  if (k < 1 || x1_max < 3 || q_max < 3)
    throw std::invalid_argument("lemma36_scan: bad bounds");
  std::vector<ScanHit> hits;
  const auto primes = primes_up_to(static_cast<std::uint32_t>(q_max - 1));
  std::vector<std::uint64_t> moduli;  // q^k per prime, 0 for q = 2
  constexpr std::uint64_t kModulusCap = std::uint64_t(1) << 62;
  for (auto q : primes) {
    if (q == 2) {
      moduli.push_back(0);
      continue;
    }
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (m > kModulusCap / q)
        throw std::invalid_argument(
            "lemma36_scan: q^k exceeds the 64-bit residue arithmetic");
      m *= q;
    }
    moduli.push_back(m);
  }
  for (long long x1 = std::max<long long>(3, x1_min | 1); x1 <= x1_max;
       x1 += 2) {
    for (long long y1 = 1; y1 < x1; y1 += 2) {
      if (std::gcd(x1, y1) != 1) continue;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const long long q = primes[i];
        if (q == 2 || (x1 - y1) % q == 0 || x1 % q == 0 || y1 % q == 0)
          continue;
        const std::uint64_t mod = moduli[i];
        const std::uint64_t xp = powmod_u64(x1, q - 1, mod);
        const std::uint64_t yp = powmod_u64(y1, q - 1, mod);
        if (xp == yp)
          hits.push_back({x1, y1, q, lift_exponent(x1, y1, q, k)});
      }
    }
  }
  return hits;
}

std::vector<long long> wieferich_scan(long long base_x, long long base_y,
                                      long long q_max) {
  if (q_max < 3 || q_max > (1LL << 31) || base_x < 1 || base_y < 1)
    throw std::invalid_argument("wieferich_scan: bad bounds");
  std::vector<long long> out;
  for (auto q : primes_up_to(static_cast<std::uint32_t>(q_max - 1))) {
    if (q == 2) continue;
    const std::uint64_t mod = std::uint64_t(q) * q;
    if (powmod_u64(base_x, q - 1, mod) == powmod_u64(base_y, q - 1, mod))
      out.push_back(q);
  }
  return out;
}

std::vector<CatalogItem> identity_catalog() {
  std::vector<CatalogItem> items;

  const auto factor_item = [&](const std::string& id,
                               const std::string& description, const Int& n,
                               const Factorization& expected) {
    Factorization got = factor(n);
    std::ostringstream detail;
    for (const auto& [p, e] : got.factors) detail << p << "^" << e << " ";
    items.push_back({id, description, got == expected, detail.str()});
  };
  factor_item("3^11+1", "3^11+1 = 2^2 * 67 * 661", Int(177148),
              Factorization{{{Int(2), 2}, {Int(67), 1}, {Int(661), 1}}});
  factor_item("3^5-1", "3^5-1 = 2 * 11^2", Int(242),
              Factorization{{{Int(2), 1}, {Int(11), 2}}});

  const auto rank_item = [&](const std::string& id, long long p,
                             long long expected) {
    Int got = rank_of_apparition(Int(3), Int(1), make_int(p));
    items.push_back({id, "rank of " + std::to_string(p) + " for (3,1)",
                     got == make_int(expected), got.get_str()});
  };
  rank_item("l67", 67, 22);
  rank_item("l661", 661, 22);

  // phi(3z) = z below 10^4 against the closed form z = 2^beta 3^s, beta >= 1.
  constexpr long long kZMax = 10'000;
  const auto phi = phi_table(3 * kZMax);
  const auto scan_solutions = [&phi](long long mult) {
    std::vector<long long> zs;
    for (long long z = 1; z <= kZMax; ++z)
      if (phi[mult * z] == static_cast<std::uint32_t>(z)) zs.push_back(z);
    return zs;
  };
  {
    std::vector<long long> expected;
    for (long long b = 2; b <= kZMax; b *= 2)
      for (long long z = b; z <= kZMax; z *= 3) expected.push_back(z);
    std::sort(expected.begin(), expected.end());
    auto got = scan_solutions(3);
    items.push_back({"phi3z", "phi(3z) = z solutions below 10^4 are 2^b 3^s, b >= 1",
                     got == expected, join(got)});
  }
  {
    std::vector<long long> expected;
    for (long long z = 1; z <= kZMax; z *= 2) expected.push_back(z);
    auto got = scan_solutions(2);
    items.push_back({"phi2z", "phi(2z) = z solutions below 10^4 are 2^s",
                     got == expected, join(got)});
  }
  return items;
}

unsigned lemma31_exponent(long long q, long long m) {
  const Factorization fm = factor(make_int(m));
  const unsigned nq = nu(make_int(q), make_int(m));
  const Int t = tau(fm);
  const Int e = Int(nq) * t / 2;
  return static_cast<unsigned>(e.get_ui());
}

bool lemma31_divisibility_check(long long x1, long long y1, long long q,
                                long long m) {
  if (m % q != 0)
    throw std::invalid_argument("lemma31_divisibility_check: q must divide m");
  const unsigned e = lemma31_exponent(q, m);
  if (e <= 1) return true;
  Int mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), q, e - 1);
  Int xp, yp;
  const Int exp = make_int(q - 1);
  mpz_powm(xp.get_mpz_t(), make_int(x1).get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  mpz_powm(yp.get_mpz_t(), make_int(y1).get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return xp == yp;
}

}  // namespace philucas
