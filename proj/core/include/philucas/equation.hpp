#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "philucas/lucas.hpp"

namespace philucas {

/// The six equation shapes:
///   1.1  phi(|x^m - y^m|)            = |x^n - y^n|          signed x, y
///   1.2  phi(|x^m - y^m| / |x - y|)  = |x^n - y^n| / |x-y|  signed x, y
///   1.3  phi(z (x^m - y^m)/(x - y))  = z (x^n - y^n)/(x-y)  x > y >= 1
///   1.4  phi(z (x^m + y^m)/(x + y))  = z (x^n + y^n)/(x+y)  odd m, odd n
///   1.5  phi(z (x^m - y^m)/(x + y))  = z (x^n + y^n)/(x+y)  even m, odd n
///   1.6  phi(z (x^m + y^m)/(x + y))  = z (x^n - y^n)/(x+y)  odd m, even n
enum class EquationId { E11, E12, E13, E14, E15, E16 };

std::string to_string(EquationId eq);  // "1.1" .. "1.6"
std::optional<EquationId> equation_from_string(std::string_view s);

/// Sign/parity case split of forms (1.1) and (1.2).
enum class CaseTag { None, A1, A2, A3, A4, A5, A6, A7, A8, A9 };

struct CasePair {
  CaseTag form1;  // a1..a4 case of (1.1)
  CaseTag form2;  // a5..a9 case of (1.2)
};

/// Requires xy != 0 and |x| > |y| >= 1; otherwise returns {None, None}.
CasePair classify_case(const Int& x, const Int& y, unsigned m, unsigned n);

/// Parity constraints of the equation id on (m, n).
bool equation_parity_ok(EquationId eq, unsigned m, unsigned n);

struct CandidateSolution {
  EquationId eq;
  long long x = 0;
  long long y = 0;
  std::optional<long long> z;  // present exactly for E13..E16
  unsigned m = 1;
  unsigned n = 1;

  friend auto operator<=>(const CandidateSolution& a,
                          const CandidateSolution& b) {
    auto key = [](const CandidateSolution& c) {
      return std::tuple(static_cast<int>(c.eq), c.x, c.y, c.z.value_or(0),
                        c.m, c.n);
    };
    return key(a) <=> key(b);
  }
  friend bool operator==(const CandidateSolution& a,
                         const CandidateSolution& b) {
    return (a <=> b) == 0;
  }
};

enum class FamilyTag { T11, T12, T131, T132, T133, Trivial, Unexpected };

std::string to_string(FamilyTag t);

struct SolutionRecord {
  CandidateSolution candidate;
  bool trivial = false;
  FamilyTag family = FamilyTag::Unexpected;

  friend auto operator<=>(const SolutionRecord& a, const SolutionRecord& b) {
    return a.candidate <=> b.candidate;
  }
  friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
    return a.candidate == b.candidate;
  }
};

/// Domain invariants of the equation id: sign constraints, parity of m and
/// n, presence of z. E12 additionally needs x != y (the quotient's
/// denominator).
bool well_formed(const CandidateSolution& c);

/// Exact truth of the equation, computed with integer arithmetic
/// throughout. A phi argument of zero (e.g. x = -y with even m in 1.1)
/// makes the candidate a non-solution. Propagates EffortExhausted.
bool check_solution(const CandidateSolution& c, const EffortCap& cap = {});

/// Exhaustive trivial patterns:
///   - any equation with m = n (both sides carry the same argument, so a
///     solution forces that argument to be 1); this subsumes the (a+-1, a,
///     1, 1) shapes of 1.1 and the (a, b, 1, 1) shapes of 1.2;
///   - 1.2 with (x, y) = (+-1, -+1) and m, n both odd.
/// Everything else, including the catalogued solution families, is
/// non-trivial.
bool is_trivial(const CandidateSolution& c);

struct SearchBox;  // defined in search.hpp

/// Catalogued solution-family members lying inside the box, with their tag.
std::vector<std::pair<CandidateSolution, FamilyTag>> tagged_families(
    EquationId eq, const SearchBox& box);

/// Same, without tags.
std::vector<CandidateSolution> known_families(EquationId eq,
                                              const SearchBox& box);

/// gcd(m, n) = d0 reduction: maps (x, y, z, m, n) to (x^d0, y^d0, z', m/d0,
/// n/d0) where z' rescales z so that both sides of the equation are
/// literally unchanged as integers. Only meaningful for E13..E16. Throws
/// ParityViolation if d0 is even for the x+y-denominator equations (their
/// parity invariants make this unreachable for well-formed candidates).
CandidateSolution reduce_to_coprime_exponents(const CandidateSolution& c);

}  // namespace philucas
