#include "philucas/lucas.hpp"

#include <algorithm>
#include <vector>

namespace philucas {

namespace {

constexpr unsigned long kScanThreshold = 10'000;

Int pow_int(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<Int> sorted_divisors(const Int& n, const EffortCap& cap) {
  Factorization f = factor(n, cap);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : f.factors) {
    std::size_t count = divs.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

ReducedPair reduce_pair(const Int& x, const Int& y) {
  if (!(x > y && y >= 1))
    throw std::invalid_argument("reduce_pair: need x > y >= 1");
  Int d = gcd(x, y);
  return ReducedPair{d, x / d, y / d};
}

Int lucas_quotient(QuotientKind kind, const Int& x, const Int& y, unsigned m) {
  if (!(x > y && y >= 1))
    throw std::invalid_argument("lucas_quotient: need x > y >= 1");
  if (m == 0) throw std::invalid_argument("lucas_quotient: need m >= 1");
  const bool odd = (m % 2) == 1;
  if (kind == QuotientKind::PlusOverPlus && !odd)
    throw ParityViolation("(x^m+y^m)/(x+y) requires odd m");
  if (kind == QuotientKind::MinusOverPlus && odd)
    throw ParityViolation("(x^m-y^m)/(x+y) requires even m");
  Int num;
  if (kind == QuotientKind::PlusOverPlus)
    num = pow_int(x, m) + pow_int(y, m);
  else
    num = pow_int(x, m) - pow_int(y, m);
  Int den = kind == QuotientKind::MinusOverMinus ? Int(x - y) : Int(x + y);
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

namespace detail {

Int rank_by_scan(const Int& x1, const Int& y1, const Int& p) {
  Int a = x1 % p, b = y1 % p, xl = a, yl = b;
  for (Int l = 1; l < p; ++l) {
    if (xl == yl) return l;
    xl = xl * a % p;
    yl = yl * b % p;
  }
  throw std::logic_error("rank_by_scan: no rank below p");
}

Int rank_by_order(const Int& x1, const Int& y1, const Int& p,
                  const EffortCap& cap) {
  // l_p is the multiplicative order of x1 * y1^{-1} mod p.
  Int yinv;
  if (mpz_invert(yinv.get_mpz_t(), y1.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DividesBase("rank: p divides y1");
  Int a = x1 * yinv % p;
  Int ord = p - 1;
  Int t;
  for (const auto& [q, e] : factor(p - 1, cap).factors) {
    for (unsigned i = 0; i < e; ++i) {
      Int candidate = ord / q;
      mpz_powm(t.get_mpz_t(), a.get_mpz_t(), candidate.get_mpz_t(),
               p.get_mpz_t());
      if (t != 1) break;
      ord = candidate;
    }
  }
  return ord;
}

}  // namespace detail

Int rank_of_apparition(const Int& x1, const Int& y1, const Int& p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("rank_of_apparition: p must be an odd prime");
  if (mpz_divisible_p(x1.get_mpz_t(), p.get_mpz_t()) != 0 ||
      mpz_divisible_p(y1.get_mpz_t(), p.get_mpz_t()) != 0)
    throw DividesBase("rank_of_apparition: p divides x1*y1");
  if (p <= kScanThreshold) return detail::rank_by_scan(x1, y1, p);
  return detail::rank_by_order(x1, y1, p);
}

Int rank_dividing(const Int& x1, const Int& y1, const Int& p,
                  const Int& bound) {
  Int t;
  for (const Int& d : sorted_divisors(bound, EffortCap{})) {
    Int xd, yd;
    mpz_powm(xd.get_mpz_t(), x1.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    mpz_powm(yd.get_mpz_t(), y1.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (xd == yd) return d;
  }
  throw std::logic_error("rank_dividing: rank does not divide bound");
}

std::set<Int> primitive_prime_divisors(const Int& x1, const Int& y1,
                                       unsigned m, Side side,
                                       const EffortCap& cap) {
  if (!(x1 > y1 && y1 >= 1 && gcd(x1, y1) == 1))
    throw std::invalid_argument(
        "primitive_prime_divisors: need coprime x1 > y1 >= 1");
  if (m == 0) throw std::invalid_argument("primitive_prime_divisors: m >= 1");
  Int n;
  if (side == Side::Minus)
    n = pow_int(x1, m) - pow_int(y1, m);
  else
    n = pow_int(x1, m) + pow_int(y1, m);
  const Int target = side == Side::Minus ? Int(m) : Int(2 * m);
  std::set<Int> result;
  for (const auto& [p, e] : factor(n, cap).factors) {
    if (p == 2) {
      // When x1, y1 are both odd, l_2 = 1; 2 is primitive only for the
      // minus side at m = 1.
      if (side == Side::Minus && m == 1) result.insert(p);
      continue;
    }
    if (rank_dividing(x1, y1, p, target) == target) result.insert(p);
  }
  return result;
}

}  // namespace philucas
