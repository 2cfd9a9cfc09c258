#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "philucas/arith.hpp"

namespace philucas {

/// 50-decimal-digit working precision. All comparisons against claimed
/// constants are directed: a strict inequality only passes when the margin
/// clears kMarginBudget, far above the representation error. "log" is the
/// natural logarithm throughout; the section-4 arithmetic only balances
/// under ln.
using Real = boost::multiprecision::mpfr_float_50;

inline const Real& margin_budget() {
  static const Real budget("1e-8");
  return budget;
}

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { Less, LessEq, Greater, GreaterEq };

std::string to_string(Relation r);

/// One audited inequality. `exact` marks items evaluated in rational
/// arithmetic (finite products and decimal constants), where the comparison
/// is exact rather than margin-based.
struct BoundReport {
  std::string bound_id;
  std::string claim;
  Real computed = 0;
  Real claimed = 0;
  Relation relation = Relation::Less;
  Real margin = 0;  // signed distance in the claimed direction
  bool exact = false;
  bool pass = false;
};

/// The four-term upper bound on S_d = sum of 1/p over primes with rank d:
/// 1.084/d + 1/(d log(d+1)) + 2 loglog d / phi(d) + 2 loglog x /(phi(d) log d).
/// Valid for d > 30, x >= 3; DomainError otherwise.
Real sd_upper_bound(long long d, long long x);

/// Truncated empirical S_d: sum of 1/p over odd primes p <= p_limit,
/// p not dividing x1*y1, whose rank of apparition for (x1, y1) is exactly d.
Real sd_empirical(long long x1, long long y1, long long d, long long p_limit);

/// f(p) = (log 2p / log 2) (loglog p / (p-1)) (p / (p - loglog p)).
/// DomainError below 79; strictly decreasing on primes.
Real f_of_p(long long p);

/// Sum of 1/p over primes p <= t (sieve-based).
Real mertens_sum(long long t);

/// Product of (1 + 1/(p_i - 1)) over index_lo <= i <= index_hi (p_1 = 2),
/// skipping primes in `exclusions`; empty ranges give 1.
Real prime_product(unsigned index_lo, unsigned index_hi,
                   const std::set<long long>& exclusions = {});
mpq_class prime_product_exact(unsigned index_lo, unsigned index_hi,
                              const std::set<long long>& exclusions = {});

/// Verifies N/phi(N) <= 1.79 loglog N + 2.5/loglog N for all 3 <= N <= n_max.
/// The report's computed value is the worst N/phi(N) - rhs(N) gap.
BoundReport totient_ratio_check(long long n_max);

enum class AuditSection { L33, L35, L36, L37, S41, S42, S43 };

std::optional<AuditSection> section_from_string(std::string_view s);
std::string to_string(AuditSection s);

/// Recomputes every audited constant of the section from its defining
/// expression and reports pass/fail per claimed inequality.
std::vector<BoundReport> chain_audit(AuditSection s);

/// All sections in order.
std::vector<BoundReport> full_audit();

/// Lookup by stable id ("L3.5-0.03834", "S4.2-f79", ...).
std::optional<BoundReport> run_bound(const std::string& id);
std::vector<std::string> all_bound_ids();

}  // namespace philucas
