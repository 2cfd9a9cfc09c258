#pragma once

#include <set>

#include "philucas/arith.hpp"

namespace philucas {

class ParityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by rank_of_apparition when p divides x1*y1.
class DividesBase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x = d1*x1, y = d1*y1 with gcd(x1, y1) = 1 and x1 > y1 >= 1.
struct ReducedPair {
  Int d1;
  Int x1;
  Int y1;
  bool operator==(const ReducedPair&) const = default;
};

ReducedPair reduce_pair(const Int& x, const Int& y);

/// The three quotient shapes the equations use. PlusOverPlus is
/// (x^m+y^m)/(x+y) and needs odd m; MinusOverPlus is (x^m-y^m)/(x+y) and
/// needs even m; MinusOverMinus is (x^m-y^m)/(x-y) for any m.
enum class QuotientKind { MinusOverMinus, PlusOverPlus, MinusOverPlus };

/// Exact integer quotient for x > y >= 1. Throws ParityViolation when the
/// parity of m contradicts the kind.
Int lucas_quotient(QuotientKind kind, const Int& x, const Int& y, unsigned m);

/// Least l >= 1 with p | x1^l - y1^l, for an odd prime p coprime to x1*y1.
/// Always divides p - 1. Below a threshold the value is found by direct
/// scan; above it by descending through the divisors of p - 1.
Int rank_of_apparition(const Int& x1, const Int& y1, const Int& p);

/// Rank of apparition when it is already known to divide `bound`
/// (e.g. p | x1^bound - y1^bound). Avoids factoring p - 1.
Int rank_dividing(const Int& x1, const Int& y1, const Int& p,
                  const Int& bound);

enum class Side { Minus, Plus };

/// Primes p dividing x1^m - y1^m (Minus) or x1^m + y1^m (Plus) whose rank
/// of apparition is exactly m (resp. 2m). May be empty on the classical
/// Zsygmondy exceptions; callers relying on existence must guard m >= 5.
std::set<Int> primitive_prime_divisors(const Int& x1, const Int& y1,
                                       unsigned m, Side side,
                                       const EffortCap& cap = {});

namespace detail {
// Both rank strategies, exposed for cross-validation in tests.
Int rank_by_scan(const Int& x1, const Int& y1, const Int& p);
Int rank_by_order(const Int& x1, const Int& y1, const Int& p,
                  const EffortCap& cap = {});
}  // namespace detail

}  // namespace philucas
