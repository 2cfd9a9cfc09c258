#include "philucas/equation.hpp"

#include <algorithm>
#include <numeric>

#include "philucas/search.hpp"

namespace philucas {

namespace {

Int pow_int(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

long long to_ll(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(what);
  return static_cast<long long>(v.get_si());
}

struct QuotientPair {
  QuotientKind lhs;
  QuotientKind rhs;
};

QuotientPair kinds_of(EquationId eq) {
  switch (eq) {
    case EquationId::E13:
      return {QuotientKind::MinusOverMinus, QuotientKind::MinusOverMinus};
    case EquationId::E14:
      return {QuotientKind::PlusOverPlus, QuotientKind::PlusOverPlus};
    case EquationId::E15:
      return {QuotientKind::MinusOverPlus, QuotientKind::PlusOverPlus};
    case EquationId::E16:
      return {QuotientKind::PlusOverPlus, QuotientKind::MinusOverPlus};
    default:
      throw std::invalid_argument("kinds_of: equation has no z form");
  }
}

// z = base^s * 2^beta <= cap with beta >= 1, s >= 0, ascending.
std::vector<long long> two_beta_p_s(long long p, long long cap) {
  std::vector<long long> zs;
  for (long long ps = 1; 2 * ps <= cap;) {
    for (long long v = 2 * ps; v <= cap; v *= 2) zs.push_back(v);
    if (ps > (cap / 2) / p) break;  // the next power of p cannot fit
    ps *= p;
  }
  std::sort(zs.begin(), zs.end());
  return zs;
}

void emit(std::vector<std::pair<CandidateSolution, FamilyTag>>& out,
          EquationId eq, const SearchBox& box, CandidateSolution c,
          FamilyTag tag) {
  if (well_formed(c) && box_contains(eq, box, c)) out.emplace_back(c, tag);
}

}  // namespace

std::string to_string(EquationId eq) {
  switch (eq) {
    case EquationId::E11: return "1.1";
    case EquationId::E12: return "1.2";
    case EquationId::E13: return "1.3";
    case EquationId::E14: return "1.4";
    case EquationId::E15: return "1.5";
    case EquationId::E16: return "1.6";
  }
  return "?";
}

std::optional<EquationId> equation_from_string(std::string_view s) {
  if (s == "1.1" || s == "E11") return EquationId::E11;
  if (s == "1.2" || s == "E12") return EquationId::E12;
  if (s == "1.3" || s == "E13") return EquationId::E13;
  if (s == "1.4" || s == "E14") return EquationId::E14;
  if (s == "1.5" || s == "E15") return EquationId::E15;
  if (s == "1.6" || s == "E16") return EquationId::E16;
  return std::nullopt;
}

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::T11: return "T1.1";
    case FamilyTag::T12: return "T1.2";
    case FamilyTag::T131: return "T1.3-1";
    case FamilyTag::T132: return "T1.3-2";
    case FamilyTag::T133: return "T1.3-3";
    case FamilyTag::Trivial: return "TRIVIAL";
    case FamilyTag::Unexpected: return "UNEXPECTED";
  }
  return "?";
}

bool equation_parity_ok(EquationId eq, unsigned m, unsigned n) {
  const bool om = m % 2 == 1, on = n % 2 == 1;
  switch (eq) {
    case EquationId::E14:
      return om && on;
    case EquationId::E15:
      return !om && on;
    case EquationId::E16:
      return om && !on;
    default:
      return true;
  }
}

CasePair classify_case(const Int& x, const Int& y, unsigned m, unsigned n) {
  if (x == 0 || y == 0 || !(abs(x) > abs(y))) return {CaseTag::None, CaseTag::None};
  const bool positive = sgn(x) == sgn(y);
  const bool om = m % 2 == 1, on = n % 2 == 1;
  CaseTag f1, f2;
  if (positive) {
    f1 = CaseTag::A1;
    f2 = CaseTag::A5;
  } else if (!om && !on) {
    f1 = CaseTag::A1;
    f2 = CaseTag::A6;
  } else if (om && on) {
    f1 = CaseTag::A2;
    f2 = CaseTag::A7;
  } else if (!om && on) {
    f1 = CaseTag::A3;
    f2 = CaseTag::A8;
  } else {
    f1 = CaseTag::A4;
    f2 = CaseTag::A9;
  }
  return {f1, f2};
}

bool well_formed(const CandidateSolution& c) {
  if (c.x == 0 || c.y == 0 || c.m < 1 || c.n < 1) return false;
  switch (c.eq) {
    case EquationId::E11:
      return !c.z.has_value();
    case EquationId::E12:
      return !c.z.has_value() && c.x != c.y;
    default:
      return c.z.has_value() && *c.z >= 1 && c.x > c.y && c.y >= 1 &&
             equation_parity_ok(c.eq, c.m, c.n);
  }
}

bool check_solution(const CandidateSolution& c, const EffortCap& cap) {
  if (!well_formed(c)) throw std::invalid_argument("check_solution: malformed candidate");
  const Int x = make_int(c.x), y = make_int(c.y);
  if (c.eq == EquationId::E11) {
    Int lhs = abs(pow_int(x, c.m) - pow_int(y, c.m));
    Int rhs = abs(pow_int(x, c.n) - pow_int(y, c.n));
    if (lhs == 0 || rhs == 0) return false;
    return euler_phi(lhs, cap) == rhs;
  }
  if (c.eq == EquationId::E12) {
    Int d = x - y;
    Int qm, qn;
    mpz_divexact(qm.get_mpz_t(), Int(pow_int(x, c.m) - pow_int(y, c.m)).get_mpz_t(), d.get_mpz_t());
    mpz_divexact(qn.get_mpz_t(), Int(pow_int(x, c.n) - pow_int(y, c.n)).get_mpz_t(), d.get_mpz_t());
    qm = abs(qm);
    qn = abs(qn);
    if (qm == 0 || qn == 0) return false;
    return euler_phi(qm, cap) == qn;
  }
  const auto [lk, rk] = kinds_of(c.eq);
  Int a = lucas_quotient(lk, x, y, c.m);
  Int b = lucas_quotient(rk, x, y, c.n);
  Int z = make_int(*c.z);
  return euler_phi(z * a, cap) == z * b;
}

bool is_trivial(const CandidateSolution& c) {
  if (c.m == c.n) return true;
  if (c.eq == EquationId::E12 && c.x == -c.y && std::abs(c.x) == 1 &&
      c.m % 2 == 1 && c.n % 2 == 1)
    return true;
  return false;
}

std::vector<std::pair<CandidateSolution, FamilyTag>> tagged_families(
    EquationId eq, const SearchBox& box) {
  std::vector<std::pair<CandidateSolution, FamilyTag>> out;
  switch (eq) {
    case EquationId::E11:
      // ((2^{t-1} +- 1), -(2^{t-1} -+ 1), 2, 1) and the negated pairs, t >= 2.
      for (long long h = 2; h + 1 <= box.x_max; h *= 2) {
        const long long a = h + 1, b = h - 1;
        for (auto [px, py] : {std::pair{a, -b}, {-a, b}, {b, -a}, {-b, a}})
          emit(out, eq, box, {eq, px, py, std::nullopt, 2, 1}, FamilyTag::T11);
      }
      break;
    case EquationId::E12:
      // (a +- 1, -a, 1, 2): x + y = +-1.  (a +- i, -a, 2, 1): x + y in {+-1, +-2}.
      for (long long s : {1LL, -1LL, 2LL, -2LL}) {
        for (long long x = -box.x_max; x <= box.x_max; ++x) {
          const long long y = s - x;
          if (x == 0 || y == 0 || x == y || std::abs(y) > box.x_max) continue;
          emit(out, eq, box, {eq, x, y, std::nullopt, 2, 1}, FamilyTag::T12);
          if (s == 1 || s == -1)
            emit(out, eq, box, {eq, x, y, std::nullopt, 1, 2}, FamilyTag::T12);
        }
      }
      break;
    case EquationId::E13:
      break;  // deferred to prior work; no catalogued family
    case EquationId::E14:
      if (auto cap = box_z_cap(box, 2, 1))
        for (long long z : two_beta_p_s(3, *cap))
          emit(out, eq, box, {eq, 2, 1, z, 3, 1}, FamilyTag::T131);
      break;
    case EquationId::E15:
      for (long long a = 1; a + 1 <= box.x_max; ++a) {
        emit(out, eq, box, {eq, a + 1, a, 1, 2, 1}, FamilyTag::T132);
        if (a + 2 <= box.x_max) {
          if (auto cap = box_z_cap(box, a + 2, a))
            for (long long z = 1; z <= *cap; z *= 2)
              emit(out, eq, box, {eq, a + 2, a, z, 2, 1}, FamilyTag::T132);
        }
        if (a + 3 <= box.x_max) {
          if (auto cap = box_z_cap(box, a + 3, a))
            for (long long z : two_beta_p_s(3, *cap))
              emit(out, eq, box, {eq, a + 3, a, z, 2, 1}, FamilyTag::T132);
        }
      }
      break;
    case EquationId::E16: {
      // (2, 1, 2^beta p^s, q, q-1) with q and p = (2^q + 1)/3 both prime.
      if (2 <= box.x_max) {
        if (auto cap = box_z_cap(box, 2, 1)) {
          for (unsigned q = 3; q <= box.m_max; q += 2) {
            if (!is_prime(Int(q))) continue;
            Int p = (pow_int(Int(2), q) + 1) / 3;
            if (!is_prime(p) || !p.fits_slong_p()) continue;
            for (long long z : two_beta_p_s(p.get_si(), *cap))
              emit(out, eq, box, {eq, 2, 1, z, q, q - 1}, FamilyTag::T133);
          }
        }
      }
      // The m < n side: (a+1, a, 1, 1, 2) solves 1.6 and corresponds to the
      // (a +- 1, -a, 1, 2) solutions of 1.2, so it carries the T1.2 tag.
      for (long long a = 1; a + 1 <= box.x_max; ++a)
        emit(out, eq, box, {eq, a + 1, a, 1, 1, 2}, FamilyTag::T12);
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& l, const auto& r) {
                          return l.first == r.first;
                        }),
            out.end());
  return out;
}

std::vector<CandidateSolution> known_families(EquationId eq,
                                              const SearchBox& box) {
  std::vector<CandidateSolution> out;
  for (auto& [c, tag] : tagged_families(eq, box)) out.push_back(c);
  return out;
}

CandidateSolution reduce_to_coprime_exponents(const CandidateSolution& c) {
  if (c.eq == EquationId::E11 || c.eq == EquationId::E12)
    throw std::invalid_argument("reduce_to_coprime_exponents: needs a z form");
  if (!well_formed(c))
    throw std::invalid_argument("reduce_to_coprime_exponents: malformed candidate");
  const unsigned d0 = std::gcd(c.m, c.n);
  const bool plus_form = c.eq != EquationId::E13;
  if (plus_form && d0 % 2 == 0)
    throw ParityViolation("reduce_to_coprime_exponents: even gcd(m, n)");
  if (d0 == 1) return c;
  const Int x = make_int(c.x), y = make_int(c.y);
  Int x0 = pow_int(x, d0);
  Int y0 = pow_int(y, d0);
  Int scale;
  if (plus_form)
    mpz_divexact(scale.get_mpz_t(), Int(x0 + y0).get_mpz_t(), Int(x + y).get_mpz_t());
  else
    mpz_divexact(scale.get_mpz_t(), Int(x0 - y0).get_mpz_t(), Int(x - y).get_mpz_t());
  Int z0 = make_int(*c.z) * scale;
  return CandidateSolution{c.eq, to_ll(x0, "reduced x overflows"),
                           to_ll(y0, "reduced y overflows"),
                           to_ll(z0, "reduced z overflows"), c.m / d0,
                           c.n / d0};
}

}  // namespace philucas
