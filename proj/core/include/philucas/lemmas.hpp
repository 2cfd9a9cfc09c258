#pragma once

#include <string>
#include <vector>

#include "philucas/arith.hpp"

namespace philucas {

/// A cell of the odd-coprime grid where q^k divides x1^{q-1} - y1^{q-1}.
/// exponent_reached is the exact q-adic valuation of the difference.
struct ScanHit {
  long long x1 = 0;
  long long y1 = 0;
  long long q = 0;
  unsigned exponent_reached = 0;

  friend auto operator<=>(const ScanHit&, const ScanHit&) = default;
};

/// Scans odd coprime pairs x1_min <= y1 < x1 <= x1_max (both odd) against
/// odd primes 3 <= q < q_max with q not dividing x1 - y1 or x1*y1, and
/// reports the cells with q^k | x1^{q-1} - y1^{q-1}. Runs on residues mod
/// q^k, never on full powers. Ordered by (x1, y1, q).
std::vector<ScanHit> lemma36_scan(unsigned k, long long x1_max = 73,
                                  long long q_max = 173, long long x1_min = 1);

/// Odd primes q < q_max with q^2 | base_x^{q-1} - base_y^{q-1}.
std::vector<long long> wieferich_scan(long long base_x = 3,
                                      long long base_y = 1,
                                      long long q_max = 173);

struct CatalogItem {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

/// Re-verifies the small identities the proofs lean on: the factorizations
/// of 3^11+1 and 3^5-1, the ranks of 67 and 661 for the pair (3, 1), and
/// the solution sets of phi(3z) = z and phi(2z) = z below 10^4.
std::vector<CatalogItem> identity_catalog();

/// nu_q(m) * tau(m) / 2 (always integral).
unsigned lemma31_exponent(long long q, long long m);

/// Raw truth of q^{nu_q(m) tau(m)/2 - 1} | x1^{q-1} - y1^{q-1} on concrete
/// inputs. The statement is conditional in context, so this only evaluates;
/// it asserts nothing.
bool lemma31_divisibility_check(long long x1, long long y1, long long q,
                                long long m);

}  // namespace philucas
