#pragma once

#include <functional>
#include <set>

#include "philucas/equation.hpp"

namespace philucas {

enum class MnRange {
  MGreaterThanN,  // m > n >= 1
  AllPairs,       // every (m, n) pair, m = n included
};

// Filter on nu_2(x) vs nu_2(y); applies to the positive-pair equations
// (E13..E16) and is ignored for the signed forms.
enum class Nu2Filter { Any, Distinct, Equal };

/// A finite certification region. For E13..E16 the z range per pair (x, y)
/// is [1, cap] minus exclusions, where cap combines z_max (0 = no absolute
/// cap) and the optional z <= x+y rule; at least one must be active.
struct SearchBox {
  long long x_max = 2;  // E11/E12: |x|,|y| <= x_max; E13..E16: y < x <= x_max
  unsigned m_max = 2;
  long long z_max = 0;
  bool z_le_x_plus_y = false;
  std::set<long long> z_exclusions;
  MnRange mn = MnRange::MGreaterThanN;
  bool coprime_mn_only = false;
  Nu2Filter nu2 = Nu2Filter::Any;
  EffortCap effort;
};

/// Validates box invariants for the given equation (x_max >= 2, m_max >= 2,
/// finite z range for the z-carrying equations).
bool box_valid(EquationId eq, const SearchBox& box);

/// Effective z cap for a pair (x, y), combining z_max with the optional
/// z <= x+y rule; nullopt when the box leaves z unbounded.
std::optional<long long> box_z_cap(const SearchBox& box, long long x,
                                   long long y);

/// Whether a well-formed candidate lies in the box (ranges, parities,
/// (m, n) policy, nu_2 filter, z rule and exclusions).
bool box_contains(EquationId eq, const SearchBox& box,
                  const CandidateSolution& c);

/// Number of candidates the box contains, counted without checking any.
unsigned long long box_cardinality(EquationId eq, const SearchBox& box);

enum class Verdict { Match, UnexpectedSolution, Incomplete };

std::string to_string(Verdict v);

struct UnresolvedEntry {
  CandidateSolution candidate;
  Int cofactor;

  friend auto operator<=>(const UnresolvedEntry& a, const UnresolvedEntry& b) {
    return a.candidate <=> b.candidate;
  }
};

struct CertificationReport {
  EquationId eq = EquationId::E11;
  SearchBox box;
  std::vector<SolutionRecord> found;          // sorted by candidate tuple
  std::vector<UnresolvedEntry> unresolved;    // sorted by candidate tuple
  unsigned long long candidates = 0;
  unsigned long long checked = 0;
  Verdict verdict = Verdict::Incomplete;
};

/// Exhaustive sweep of the box. Every candidate is either checked exactly
/// or listed as unresolved (factoring budget ran out); failures are data,
/// not exceptions. Deterministic: output is identical for any worker
/// count. workers = number of parallel (x, y) blocks, >= 1.
CertificationReport sweep(EquationId eq, const SearchBox& box,
                          unsigned workers = 1);

/// All z in [1, z_max] with phi(z*A) = z*B, where A and B are the two
/// quotients of the equation at (x, y, m, n). A is factored once.
std::vector<long long> z_solve(EquationId eq, long long x, long long y,
                               unsigned m, unsigned n, long long z_max,
                               const EffortCap& cap = {});

/// MATCH iff nothing is unresolved and the non-trivial found set equals
/// the catalogued families inside the box.
Verdict compare_to_known(const CertificationReport& report, EquationId eq,
                         const SearchBox& box);

}  // namespace philucas
