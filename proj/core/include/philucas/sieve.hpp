#pragma once

#include <cstdint>
#include <vector>

namespace philucas {

/// All primes <= n, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Smallest prime factor for every 2 <= i <= n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n);

/// Euler phi for every 0 <= i <= n (phi[0] = 0).
std::vector<std::uint32_t> phi_table(std::uint32_t n);

}  // namespace philucas
