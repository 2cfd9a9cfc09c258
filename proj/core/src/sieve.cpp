#include "philucas/sieve.hpp"

namespace philucas {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

std::vector<std::uint32_t> phi_table(std::uint32_t n) {
  std::vector<std::uint32_t> phi(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) phi[i] = i;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (phi[i] != i) continue;  // i is prime
    for (std::uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

}  // namespace philucas
