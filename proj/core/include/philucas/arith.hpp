#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace philucas {

using Int = mpz_class;

/// mpz from long long; gmpxx lacks this constructor on some platforms.
inline Int make_int(long long v) {
  static_assert(sizeof(long) == sizeof(long long));
  return Int(static_cast<long>(v));
}

/// Budget and seed for the randomized parts of factoring. The seed fixes the
/// Pollard-Brent parameter stream, so identical (n, cap) calls are
/// bit-identical across runs and worker counts.
struct EffortCap {
  std::uint64_t rho_iterations = 4'000'000;
  std::uint64_t seed = 1;
};

/// Raised when factor() exhausts its budget. Carries the composite cofactor
/// that remained unsplit; callers must record the instance as unresolved
/// rather than skip it.
class EffortExhausted : public std::runtime_error {
 public:
  explicit EffortExhausted(Int cofactor)
      : std::runtime_error("factoring effort exhausted, cofactor " +
                           cofactor.get_str()),
        cofactor_(std::move(cofactor)) {}
  const Int& cofactor() const { return cofactor_; }

 private:
  Int cofactor_;
};

/// Prime-power decomposition. Empty map is the factorization of 1.
struct Factorization {
  std::map<Int, unsigned> factors;

  Int value() const;
  bool operator==(const Factorization&) const = default;
};

/// Multiply two factorizations (factorization of the product).
Factorization operator*(const Factorization& a, const Factorization& b);

/// Deterministic primality. Miller-Rabin with the 12-witness set
/// {2,...,37}, proven correct for n < 3.317e24; above that bound a fixed
/// 64-witness set is used (no counterexample is known, but it is a strong
/// test rather than a proof).
bool is_prime(const Int& n);

/// Complete factorization of n >= 1. Trial division by primes below 10^4,
/// perfect-power reduction, then seeded Pollard-Brent rho under cap.
/// Throws EffortExhausted when the budget runs out.
Factorization factor(const Int& n, const EffortCap& cap = {});

Int euler_phi(const Factorization& f);
Int euler_phi(const Int& n, const EffortCap& cap = {});

/// p-adic valuation of n != 0.
unsigned nu(const Int& p, const Int& n);

Int tau(const Factorization& f);       // number of divisors
unsigned omega(const Factorization& f);  // number of distinct primes
Int tau(const Int& n, const EffortCap& cap = {});
unsigned omega(const Int& n, const EffortCap& cap = {});

/// Smallest prime dividing n >= 2.
Int least_prime_factor(const Int& n, const EffortCap& cap = {});

// 64-bit modular helpers, shared by the scan modules.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace philucas
