#include "philucas/search.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <numeric>

namespace philucas {

namespace {

bool has_z_form(EquationId eq) {
  return eq != EquationId::E11 && eq != EquationId::E12;
}

int nu2_ll(long long v) {
  return std::countr_zero(static_cast<unsigned long long>(std::llabs(v)));
}

bool nu2_passes(Nu2Filter f, long long x, long long y) {
  switch (f) {
    case Nu2Filter::Any: return true;
    case Nu2Filter::Distinct: return nu2_ll(x) != nu2_ll(y);
    case Nu2Filter::Equal: return nu2_ll(x) == nu2_ll(y);
  }
  return true;
}

std::vector<std::pair<long long, long long>> pair_list(EquationId eq,
                                                       const SearchBox& box) {
  std::vector<std::pair<long long, long long>> pairs;
  if (!has_z_form(eq)) {
    for (long long x = -box.x_max; x <= box.x_max; ++x) {
      if (x == 0) continue;
      for (long long y = -box.x_max; y <= box.x_max; ++y) {
        if (y == 0) continue;
        if (eq == EquationId::E12 && x == y) continue;
        pairs.emplace_back(x, y);
      }
    }
  } else {
    for (long long x = 2; x <= box.x_max; ++x)
      for (long long y = 1; y < x; ++y)
        if (nu2_passes(box.nu2, x, y)) pairs.emplace_back(x, y);
  }
  return pairs;
}

std::vector<std::pair<unsigned, unsigned>> mn_list(EquationId eq,
                                                   const SearchBox& box) {
  std::vector<std::pair<unsigned, unsigned>> mns;
  for (unsigned m = 1; m <= box.m_max; ++m)
    for (unsigned n = 1; n <= box.m_max; ++n) {
      if (box.mn == MnRange::MGreaterThanN && m <= n) continue;
      if (box.coprime_mn_only && std::gcd(m, n) != 1) continue;
      if (!equation_parity_ok(eq, m, n)) continue;
      mns.emplace_back(m, n);
    }
  return mns;
}

long long z_count(const SearchBox& box, long long cap) {
  long long excluded = 0;
  for (long long z : box.z_exclusions)
    if (z >= 1 && z <= cap) ++excluded;
  return cap - excluded;
}

struct BlockResult {
  std::vector<SolutionRecord> found;
  std::vector<UnresolvedEntry> unresolved;
  unsigned long long checked = 0;
};

QuotientKind lhs_kind(EquationId eq) {
  switch (eq) {
    case EquationId::E13: return QuotientKind::MinusOverMinus;
    case EquationId::E14: case EquationId::E16: return QuotientKind::PlusOverPlus;
    case EquationId::E15: return QuotientKind::MinusOverPlus;
    default: throw std::invalid_argument("lhs_kind");
  }
}

QuotientKind rhs_kind(EquationId eq) {
  switch (eq) {
    case EquationId::E13: return QuotientKind::MinusOverMinus;
    case EquationId::E14: case EquationId::E15: return QuotientKind::PlusOverPlus;
    case EquationId::E16: return QuotientKind::MinusOverPlus;
    default: throw std::invalid_argument("rhs_kind");
  }
}

// One (x, y, m, n) slice of a z-carrying equation. A and B are fixed; the z
// scan reuses A's factorization, the dominant cost.
void scan_z_slice(EquationId eq, const SearchBox& box, long long x,
                  long long y, unsigned m, unsigned n, BlockResult& out) {
  const long long cap = *box_z_cap(box, x, y);
  const Int a = lucas_quotient(lhs_kind(eq), make_int(x), make_int(y), m);
  const Int b = lucas_quotient(rhs_kind(eq), make_int(x), make_int(y), n);
  Factorization fa;
  bool have_fa = false;
  Int cofactor;
  try {
    fa = factor(a, box.effort);
    have_fa = true;
  } catch (const EffortExhausted& e) {
    cofactor = e.cofactor();
  }
  for (long long z = 1; z <= cap; ++z) {
    if (box.z_exclusions.contains(z)) continue;
    CandidateSolution c{eq, x, y, z, m, n};
    if (!have_fa) {
      out.unresolved.push_back({c, cofactor});
      continue;
    }
    try {
      Factorization fz = factor(make_int(z), box.effort);
      if (euler_phi(fz * fa) == make_int(z) * b) {
        const bool triv = is_trivial(c);
        out.found.push_back({c, triv,
                             triv ? FamilyTag::Trivial : FamilyTag::Unexpected});
      }
      ++out.checked;
    } catch (const EffortExhausted& e) {
      out.unresolved.push_back({c, e.cofactor()});
    }
  }
}

}  // namespace

bool box_valid(EquationId eq, const SearchBox& box) {
  if (box.x_max < 2 || box.m_max < 2) return false;
  // sanity caps: the enumeration is materialized, and the z loops use
  // signed 64-bit arithmetic
  if (box.x_max > 1'000'000 || box.m_max > 10'000) return false;
  if (box.z_max < 0 || box.z_max > (1LL << 50)) return false;
  if (has_z_form(eq) && !box_z_cap(box, 2, 1).has_value()) return false;
  return true;
}

std::optional<long long> box_z_cap(const SearchBox& box, long long x,
                                   long long y) {
  std::optional<long long> cap;
  if (box.z_max > 0) cap = box.z_max;
  if (box.z_le_x_plus_y) cap = cap ? std::min(*cap, x + y) : x + y;
  return cap;
}

bool box_contains(EquationId eq, const SearchBox& box,
                  const CandidateSolution& c) {
  if (c.eq != eq || !well_formed(c)) return false;
  if (c.m > box.m_max || c.n > box.m_max) return false;
  if (box.mn == MnRange::MGreaterThanN && c.m <= c.n) return false;
  if (box.coprime_mn_only && std::gcd(c.m, c.n) != 1) return false;
  if (!has_z_form(eq))
    return std::llabs(c.x) <= box.x_max && std::llabs(c.y) <= box.x_max;
  if (c.x > box.x_max) return false;
  if (!nu2_passes(box.nu2, c.x, c.y)) return false;
  auto cap = box_z_cap(box, c.x, c.y);
  if (cap && *c.z > *cap) return false;
  return !box.z_exclusions.contains(*c.z);
}

unsigned long long box_cardinality(EquationId eq, const SearchBox& box) {
  if (!box_valid(eq, box)) throw std::invalid_argument("invalid box");
  const auto pairs = pair_list(eq, box);
  const auto mns = mn_list(eq, box);
  if (!has_z_form(eq))
    return static_cast<unsigned long long>(pairs.size()) * mns.size();
  unsigned long long total = 0;
  for (auto [x, y] : pairs)
    total += static_cast<unsigned long long>(mns.size()) *
             z_count(box, *box_z_cap(box, x, y));
  return total;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::UnexpectedSolution: return "UNEXPECTED_SOLUTION";
    case Verdict::Incomplete: return "INCOMPLETE";
  }
  return "?";
}

CertificationReport sweep(EquationId eq, const SearchBox& box,
                          unsigned workers) {
  if (!box_valid(eq, box)) throw std::invalid_argument("sweep: invalid box");
  const auto pairs = pair_list(eq, box);
  const auto mns = mn_list(eq, box);

  auto run_block = [&](std::size_t lo, std::size_t hi) {
    BlockResult r;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto [x, y] = pairs[i];
      for (const auto &[m, n] : mns) {
        if (has_z_form(eq)) {
          scan_z_slice(eq, box, x, y, m, n, r);
          continue;
        }
        CandidateSolution c{eq, x, y, std::nullopt, m, n};
        try {
          if (check_solution(c, box.effort)) {
            const bool triv = is_trivial(c);
            r.found.push_back({c, triv,
                               triv ? FamilyTag::Trivial : FamilyTag::Unexpected});
          }
          ++r.checked;
        } catch (const EffortExhausted& e) {
          r.unresolved.push_back({c, e.cofactor()});
        }
      }
    }
    return r;
  };

  std::vector<BlockResult> blocks;
  if (workers <= 1) {
    blocks.push_back(run_block(0, pairs.size()));
  } else {
    const std::size_t count = std::min<std::size_t>(workers, std::max<std::size_t>(pairs.size(), 1));
    std::vector<std::future<BlockResult>> futures;
    const std::size_t chunk = (pairs.size() + count - 1) / count;
    for (std::size_t lo = 0; lo < pairs.size(); lo += chunk) {
      const std::size_t hi = std::min(pairs.size(), lo + chunk);
      futures.push_back(std::async(std::launch::async, run_block, lo, hi));
    }
    for (auto& f : futures) blocks.push_back(f.get());
  }

  CertificationReport report;
  report.eq = eq;
  report.box = box;
  report.candidates = box_cardinality(eq, box);
  for (auto& b : blocks) {
    report.checked += b.checked;
    std::move(b.found.begin(), b.found.end(), std::back_inserter(report.found));
    std::move(b.unresolved.begin(), b.unresolved.end(),
              std::back_inserter(report.unresolved));
  }
  std::sort(report.found.begin(), report.found.end());
  std::sort(report.unresolved.begin(), report.unresolved.end());

  std::map<CandidateSolution, FamilyTag> families;
  for (auto& [c, tag] : tagged_families(eq, box)) families.emplace(c, tag);
  for (auto& rec : report.found) {
    if (rec.trivial) continue;
    auto it = families.find(rec.candidate);
    rec.family = it == families.end() ? FamilyTag::Unexpected : it->second;
  }
  report.verdict = compare_to_known(report, eq, box);
  return report;
}

std::vector<long long> z_solve(EquationId eq, long long x, long long y,
                               unsigned m, unsigned n, long long z_max,
                               const EffortCap& cap) {
  if (!has_z_form(eq)) throw std::invalid_argument("z_solve: needs a z form");
  if (!equation_parity_ok(eq, m, n) || !(x > y && y >= 1))
    throw std::invalid_argument("z_solve: malformed slice");
  const Int a = lucas_quotient(lhs_kind(eq), make_int(x), make_int(y), m);
  const Int b = lucas_quotient(rhs_kind(eq), make_int(x), make_int(y), n);
  const Factorization fa = factor(a, cap);
  std::vector<long long> zs;
  for (long long z = 1; z <= z_max; ++z)
    if (euler_phi(factor(make_int(z), cap) * fa) == make_int(z) * b) zs.push_back(z);
  return zs;
}

Verdict compare_to_known(const CertificationReport& report, EquationId eq,
                         const SearchBox& box) {
  if (!report.unresolved.empty()) return Verdict::Incomplete;
  std::set<CandidateSolution> nontrivial;
  for (const auto& rec : report.found)
    if (!rec.trivial) nontrivial.insert(rec.candidate);
  const auto families = known_families(eq, box);
  std::set<CandidateSolution> expected(families.begin(), families.end());
  return nontrivial == expected ? Verdict::Match : Verdict::UnexpectedSolution;
}

}  // namespace philucas
