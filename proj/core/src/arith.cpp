#include "philucas/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "philucas/sieve.hpp"

namespace philucas {

namespace {

constexpr std::uint32_t kTrialBound = 10'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialBound);
  return primes;
}

// Largest n for which the 12-witness Miller-Rabin set is a proof.
const Int& mr12_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

constexpr std::array<std::uint32_t, 12> kWitnesses12 = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_mpz(const Int& n, const Int& witness) {
  Int a = witness % n;
  if (a == 0) return true;
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin_u64(std::uint64_t n, std::uint64_t witness) {
  std::uint64_t a = witness % n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : kWitnesses12) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  for (std::uint32_t w : kWitnesses12) {
    if (!miller_rabin_u64(n, w)) return false;
  }
  return true;
}

// splitmix64, used to derive deterministic rho parameters.
struct Splitmix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Brent's cycle variant of Pollard rho on 64-bit values. Each evaluation of
// the iteration map costs one unit of budget. Returns 0 when the budget is
// exhausted before a proper divisor appears.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t& budget, Splitmix& rng) {
  const auto step = [n](std::uint64_t x, std::uint64_t c) {
    return (mulmod_u64(x, x, n) + c) % n;
  };
  while (budget > 0) {
    std::uint64_t c = rng.next() % (n - 1) + 1;
    std::uint64_t y = rng.next() % n;
    std::uint64_t g = 1, q = 1, x = 0, ys = 0, r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i, --budget)
        y = step(y, c);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim && budget > 0; ++i, --budget) {
          y = step(y, c);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1 && budget > 0) {
        ys = step(ys, c);
        --budget;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

// Montgomery arithmetic on 65..128-bit moduli, for the rho inner loop.
struct Mont128 {
  using u128 = unsigned __int128;
  u128 n;
  u128 neg_inv;  // -n^{-1} mod 2^128
  u128 one;      // 2^128 mod n (Montgomery form of 1)
  u128 r2;       // 2^256 mod n

  static void mul_full(u128 a, u128 b, u128& hi, u128& lo) {
    const std::uint64_t a0 = static_cast<std::uint64_t>(a), a1 = a >> 64;
    const std::uint64_t b0 = static_cast<std::uint64_t>(b), b1 = b >> 64;
    const u128 ll = static_cast<u128>(a0) * b0;
    const u128 m1 = static_cast<u128>(a1) * b0;
    const u128 m2 = static_cast<u128>(a0) * b1;
    const u128 hh = static_cast<u128>(a1) * b1;
    const u128 mid = m1 + m2;
    const u128 mid_carry = mid < m1 ? (static_cast<u128>(1) << 64) : 0;
    lo = ll + (mid << 64);
    hi = hh + (mid >> 64) + mid_carry + (lo < ll ? 1 : 0);
  }

  explicit Mont128(u128 modulus) : n(modulus) {
    u128 inv = 1;  // Newton iteration, doubling correct low bits
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    neg_inv = static_cast<u128>(0) - inv;
    one = (static_cast<u128>(0) - n) % n;
    r2 = one;
    for (int i = 0; i < 128; ++i) r2 = add(r2, r2);
  }

  u128 add(u128 a, u128 b) const {
    const u128 nb = n - b;
    return a >= nb ? a - nb : a + b;
  }

  u128 redc(u128 hi, u128 lo) const {
    const u128 m = lo * neg_inv;
    u128 mh, ml;
    mul_full(m, n, mh, ml);
    u128 t = hi + mh + (lo != 0 ? 1 : 0);
    if (t < hi || t >= n) t -= n;  // wrapping subtraction is exact here
    return t;
  }

  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    mul_full(a, b, hi, lo);
    return redc(hi, lo);
  }

  u128 to_mont(u128 a) const { return mul(a, r2); }
  u128 from_mont(u128 a) const { return redc(0, a); }
};

unsigned __int128 u128_from_mpz(const Int& n) {
  Int hi = n >> 64;
  return (static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
         mpz_get_ui(n.get_mpz_t());
}

Int mpz_from_u128(unsigned __int128 v) {
  Int r = Int(static_cast<unsigned long>(v >> 64));
  r <<= 64;
  r |= Int(static_cast<unsigned long>(v));
  return r;
}

// Brent rho over the Montgomery domain; moduli up to 128 bits.
Int rho_u128(const Int& n, std::uint64_t& budget, Splitmix& rng) {
  using u128 = unsigned __int128;
  const Mont128 mont(u128_from_mpz(n));
  const auto u128_gcd = [](u128 a, u128 b) {
    while (b != 0) {
      const u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  while (budget > 0) {
    const u128 c = mont.to_mont(rng.next() % 0xfffffffffffffffdULL + 1);
    u128 y = mont.to_mont(rng.next());
    u128 g = 1, q = mont.one, x = 0, ys = 0;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    const auto step = [&](u128 v) { return mont.add(mont.mul(v, v), c); };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i, --budget)
        y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim && budget > 0; ++i, --budget) {
          y = step(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = u128_gcd(mont.from_mont(q), mont.n);
        k += lim;
      }
      r *= 2;
    }
    if (g == mont.n) {
      g = 1;
      while (g == 1 && budget > 0) {
        ys = step(ys);
        --budget;
        g = u128_gcd(mont.from_mont(x > ys ? x - ys : ys - x), mont.n);
      }
    }
    if (g != 1 && g != mont.n) return mpz_from_u128(g);
  }
  return 0;
}

// Raw mpz arithmetic with preallocated temporaries; the iteration map runs
// millions of times per budget.
Int rho_mpz(const Int& n, std::uint64_t& budget, Splitmix& rng) {
  mpz_t x, y, ys, q, g, diff, c;
  mpz_inits(x, y, ys, q, g, diff, c, nullptr);
  const mpz_srcptr nn = n.get_mpz_t();
  const auto step = [&](mpz_ptr v) {
    mpz_mul(diff, v, v);
    mpz_add(diff, diff, c);
    mpz_mod(v, diff, nn);
  };
  Int result = 0;
  while (budget > 0 && result == 0) {
    mpz_set_ui(g, 1);
    mpz_set_ui(q, 1);
    mpz_set_ui(c, static_cast<unsigned long>(rng.next() >> 1));
    mpz_mod(c, c, nn);
    if (mpz_cmp_ui(c, 0) == 0) mpz_set_ui(c, 1);
    mpz_set_ui(y, static_cast<unsigned long>(rng.next() >> 1));
    mpz_mod(y, y, nn);
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (mpz_cmp_ui(g, 1) == 0 && budget > 0) {
      mpz_set(x, y);
      for (std::uint64_t i = 0; i < r && budget > 0; ++i, --budget) step(y);
      std::uint64_t k = 0;
      while (k < r && mpz_cmp_ui(g, 1) == 0 && budget > 0) {
        mpz_set(ys, y);
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim && budget > 0; ++i, --budget) {
          step(y);
          mpz_sub(diff, x, y);
          mpz_abs(diff, diff);
          mpz_mul(q, q, diff);
          mpz_mod(q, q, nn);
        }
        mpz_gcd(g, q, nn);
        k += lim;
      }
      r *= 2;
    }
    if (mpz_cmp(g, nn) == 0) {
      mpz_set_ui(g, 1);
      while (mpz_cmp_ui(g, 1) == 0 && budget > 0) {
        step(ys);
        --budget;
        mpz_sub(diff, x, ys);
        mpz_abs(diff, diff);
        mpz_gcd(g, diff, nn);
      }
    }
    if (mpz_cmp_ui(g, 1) != 0 && mpz_cmp(g, nn) != 0) result = Int(g);
  }
  mpz_clears(x, y, ys, q, g, diff, c, nullptr);
  return result;
}

void add_factor(std::map<Int, unsigned>& out, const Int& p, unsigned e) {
  out[p] += e;
}

// Splits composite n (no factor below kTrialBound) into primes, multiplied
// into `out` with multiplicity `mult`. Unsplit composites go to `leftover`.
void split(const Int& n, unsigned mult, std::map<Int, unsigned>& out,
           Int& leftover, std::uint64_t& budget, Splitmix& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    add_factor(out, n, mult);
    return;
  }
  // Perfect powers: rho converges slowly on them and the root is free.
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    unsigned long maxk = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= maxk; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        split(root, mult * static_cast<unsigned>(k), out, leftover, budget,
              rng);
        return;
      }
    }
  }
  Int divisor;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 64) {
    std::uint64_t d = rho_u64(mpz_get_ui(n.get_mpz_t()), budget, rng);
    divisor = d == 0 ? Int(0) : Int(d);
  } else if (bits <= 128) {
    divisor = rho_u128(n, budget, rng);
  } else {
    divisor = rho_mpz(n, budget, rng);
  }
  if (divisor == 0) {
    Int acc;
    mpz_pow_ui(acc.get_mpz_t(), n.get_mpz_t(), mult);
    leftover *= acc;
    return;
  }
  split(divisor, mult, out, leftover, budget, rng);
  split(n / divisor, mult, out, leftover, budget, rng);
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  Int pe;
  for (const auto& [p, e] : factors) {
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  Factorization out = a;
  for (const auto& [p, e] : b.factors) out.factors[p] += e;
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63)
    return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  for (std::uint32_t p : kWitnesses12) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  if (n < mr12_bound()) {
    for (std::uint32_t w : kWitnesses12)
      if (!miller_rabin_mpz(n, Int(w))) return false;
    return true;
  }
  static const std::vector<std::uint32_t> wide = primes_up_to(311);  // 64 primes
  for (std::uint32_t w : wide)
    if (!miller_rabin_mpz(n, Int(w))) return false;
  return true;
}

Factorization factor(const Int& n, const EffortCap& cap) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive");
  Factorization result;
  if (n == 1) return result;
  Int rest = n;
  for (std::uint32_t p : trial_primes()) {
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0);
    result.factors.emplace(Int(p), e);
  }
  if (rest == 1) return result;
  if (Int(kTrialBound) * kTrialBound > rest) {
    // rest is prime: no factor below its square root remains.
    result.factors.emplace(rest, 1);
    return result;
  }
  std::uint64_t budget = cap.rho_iterations;
  Splitmix rng{cap.seed ^ mpz_fdiv_ui(n.get_mpz_t(), 0xffffffffffffffc5ULL)};
  Int leftover = 1;
  split(rest, 1, result.factors, leftover, budget, rng);
  if (leftover != 1) throw EffortExhausted(leftover);
  return result;
}

Int euler_phi(const Factorization& f) {
  Int v = 1;
  Int pe;
  for (const auto& [p, e] : f.factors) {
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    v *= pe * (p - 1);
  }
  return v;
}

Int euler_phi(const Int& n, const EffortCap& cap) {
  return euler_phi(factor(n, cap));
}

unsigned nu(const Int& p, const Int& n) {
  if (n == 0) throw std::invalid_argument("nu: n must be nonzero");
  Int m = abs(n);
  Int q;
  return static_cast<unsigned>(
      mpz_remove(q.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

Int tau(const Factorization& f) {
  Int t = 1;
  for (const auto& [p, e] : f.factors) t *= e + 1;
  return t;
}

unsigned omega(const Factorization& f) {
  return static_cast<unsigned>(f.factors.size());
}

Int tau(const Int& n, const EffortCap& cap) { return tau(factor(n, cap)); }

unsigned omega(const Int& n, const EffortCap& cap) {
  return omega(factor(n, cap));
}

Int least_prime_factor(const Int& n, const EffortCap& cap) {
  if (n < 2) throw std::invalid_argument("least_prime_factor: n must be >= 2");
  for (std::uint32_t p : trial_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return Int(p);
    if (Int(p) * p > n) return n;
  }
  return factor(n, cap).factors.begin()->first;
}

}  // namespace philucas
