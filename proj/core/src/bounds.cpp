#include "philucas/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>

#include "philucas/sieve.hpp"

namespace philucas {

namespace {

Real loglog(const Real& v) { return log(log(v)); }

Real rl(long long v) { return Real(v); }

// Exact rational from a plain decimal literal like "-0.03834".
mpq_class decimal(const std::string& s) {
  const auto dot = s.find('.');
  std::string digits = dot == std::string::npos
                           ? s
                           : s.substr(0, dot) + s.substr(dot + 1);
  mpz_class num;
  num.set_str(digits, 10);  // base fixed: leading zeros are not octal
  mpz_class den = 1;
  if (dot != std::string::npos)
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Real to_real(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

bool holds(Relation r, int cmp) {
  switch (r) {
    case Relation::Less: return cmp < 0;
    case Relation::LessEq: return cmp <= 0;
    case Relation::Greater: return cmp > 0;
    case Relation::GreaterEq: return cmp >= 0;
  }
  return false;
}

Real directed_margin(Relation r, const Real& computed, const Real& claimed) {
  return (r == Relation::Less || r == Relation::LessEq) ? claimed - computed
                                                        : computed - claimed;
}

struct Audit {
  std::vector<BoundReport> items;

  void real_item(std::string id, std::string claim, const Real& computed,
                 Relation rel, const Real& claimed) {
    BoundReport r{std::move(id), std::move(claim), computed, claimed, rel};
    r.margin = directed_margin(rel, computed, claimed);
    r.pass = holds(rel, computed.compare(claimed)) && r.margin > margin_budget();
    items.push_back(std::move(r));
  }

  void exact_item(std::string id, std::string claim, const mpq_class& computed,
                  Relation rel, const mpq_class& claimed) {
    BoundReport r{std::move(id), std::move(claim), to_real(computed),
                  to_real(claimed), rel};
    r.exact = true;
    r.margin = directed_margin(rel, r.computed, r.claimed);
    r.pass = holds(rel, cmp(computed, claimed));
    items.push_back(std::move(r));
  }
};

mpq_class phi_ratio_floor(const std::vector<long long>& primes) {
  mpq_class v = 1;
  for (long long p : primes) v *= mpq_class(long(p - 1), long(p));
  return v;
}

void audit_l33(Audit& a) {
  // sup over d of d*(-3/(4d) + 1/(d+1) + 1/(2d+1) + 1/(3d+1)) is 13/12.
  a.exact_item("L3.3-1.084",
               "-3/4 + d/(d+1) + d/(2d+1) + d/(3d+1) stays below 1.084 (supremum 13/12)",
               mpq_class(13, 12), Relation::Less, decimal("1.084"));
  a.real_item("L3.3-log30", "1/log(30) - log(log 4) < 0",
              1 / log(rl(30)) - loglog(rl(4)), Relation::Less, Real(0));
  a.real_item("L3.3-sd",
              "truncated S_100 for (2,1), primes to 10^5, below the analytic bound at x = 3",
              sd_empirical(2, 1, 100, 100'000), Relation::Less,
              sd_upper_bound(100, 3));
}

void audit_l35(Audit& a) {
  const Real ll73 = loglog(rl(73));
  a.real_item("L3.5-2.8431-d173",
              "2.084 + 1/log(174) + 2 loglog(73)/log(173) < 2.8431",
              Real("2.084") + 1 / log(rl(174)) + 2 * ll73 / log(rl(173)),
              Relation::Less, Real("2.8431"));
  a.real_item("L3.5-2.8431-d174",
              "2.084 + 1/log(175) + 2 loglog(73)/log(174) < 2.8431 (d > 173 reading)",
              Real("2.084") + 1 / log(rl(175)) + 2 * ll73 / log(rl(174)),
              Relation::Less, Real("2.8431"));
  a.real_item("L3.5-3.7341",
              "1.7341 loglog(173) exceeds 2.8431, so 2.8431/phi(d) folds into 3.7341 loglog d/phi(d)",
              Real("1.7341") * loglog(rl(173)), Relation::Greater,
              Real("2.8431"));
  a.real_item("L3.5-loglog173", "loglog(173)/172 < 1", loglog(rl(173)) / 172,
              Relation::Less, Real(1));
  a.real_item("L3.5-0.03834", "3.7341 loglog(346)/172 < 0.03834",
              Real("3.7341") * loglog(rl(346)) / 172, Relation::Less,
              Real("0.03834"));
}

void audit_l36(Audit& a) {
  a.exact_item("L3.6-1.8443",
               "product of (1+1/(p-1)), 4th..16th prime skipping 17, below 1.8443",
               prime_product_exact(4, 16, {17}), Relation::Less,
               decimal("1.8443"));
  a.real_item("L3.6-1.4673", "exp(10 * 0.03834) < 1.4673",
              exp(Real("0.3834")), Relation::Less, Real("1.4673"));
  a.exact_item("L3.6-2.7062", "1.8443 * 1.4673 < 2.7062",
               decimal("1.8443") * decimal("1.4673"), Relation::Less,
               decimal("2.7062"));
  a.exact_item("L3.6-2.93", "11 * (1/2)(2/3)(4/5) = 44/15 exceeds 2.93",
               mpq_class(11) * phi_ratio_floor({2, 3, 5}), Relation::Greater,
               decimal("2.93"));
  a.exact_item("L3.6-final", "upper bound 2.7062 contradicts lower bound 2.93",
               decimal("2.7062"), Relation::Less, decimal("2.93"));
}

void audit_l37(Audit& a) {
  a.exact_item("L3.7-1.72979",
               "product of (1+1/(p-1)), 4th..13th prime skipping 17, below 1.72979",
               prime_product_exact(4, 13, {17}), Relation::Less,
               decimal("1.72979"));
  a.exact_item("L3.7-1.65",
               "product of (1+1/(p-1)), 4th..10th prime skipping 17, below 1.65",
               prime_product_exact(4, 10, {17}), Relation::Less,
               decimal("1.65"));
  a.real_item("L3.7-1.08", "exp(2 * 0.03834) < 1.08", exp(Real("0.07668")),
              Relation::Less, Real("1.08"));
  a.exact_item("L3.7-1.782", "1.65 * 1.08 = 1.782 stays below 2",
               decimal("1.65") * decimal("1.08"), Relation::Less, mpq_class(2));
  a.exact_item("L3.7-1.4", "product of (1+1/(p-1)), 4th..6th prime, below 1.4",
               prime_product_exact(4, 6, {}), Relation::Less, decimal("1.4"));
  a.real_item("L3.7-1.17", "exp(4 * 0.03834) < 1.17", exp(Real("0.15336")),
              Relation::Less, Real("1.17"));
  a.exact_item("L3.7-1.638", "1.4 * 1.17 = 1.638 stays below 2",
               decimal("1.4") * decimal("1.17"), Relation::Less, mpq_class(2));
  a.exact_item("L3.7-1.34", "(1+1/6)(1+1/12)(1+1/18) < 1.34",
               mpq_class(7, 6) * mpq_class(13, 12) * mpq_class(19, 18),
               Relation::Less, decimal("1.34"));
  {
    // min over z in [1,4] of 3 phi(z)/z: values 3, 3/2, 2, 3/2.
    mpq_class best = 3;
    const auto phi = phi_table(4);
    for (long long z = 1; z <= 4; ++z)
      best = std::min(best, mpq_class(mpq_class(3) * mpq_class(long(phi[z]), long(z))));
    a.exact_item("L3.7-1.5-z4", "3 phi(z)/z >= 1.5 for every 1 <= z <= 4",
                 best, Relation::GreaterEq, mpq_class(3, 2));
  }
  a.exact_item("L3.7-final", "upper bound 1.34 contradicts lower bound 1.5",
               decimal("1.34"), Relation::Less, decimal("1.5"));
}

void audit_s41(Audit& a) {
  {
    // log(15/4) + sum over primes p >= 7 of 1/(p(p-1)), with the tail above
    // P certified by sum_{n>P} 1/(n(n-1)) = 1/P.
    constexpr long long kTail = 100'000;
    Real s = log(Real(15) / 4);
    for (auto p : primes_up_to(kTail))
      if (p >= 7) s += Real(1) / (rl(p) * (p - 1));
    s += Real(1) / kTail;
    a.real_item("L4.1-1.38",
                "log(15/4) + sum 1/(p(p-1)) over primes >= 7 (tail-certified) < 1.38",
                s, Relation::Less, Real("1.38"));
  }
  a.real_item("S4.1-mertens",
              "0.2615 + 1/(2 log^2 t) < 0.2772 from t = 287 on",
              Real("0.2615") + 1 / (2 * log(rl(287)) * log(rl(287))),
              Relation::Less, Real("0.2772"));
  a.real_item("S4.1-1.0357",
              "log 6 + 0.2772 - (1/2 + 1/3 + 1/5) < 1.0357",
              log(rl(6)) + Real("0.2772") - to_real(mpq_class(31, 30)),
              Relation::Less, Real("1.0357"));
  a.exact_item("S4.1-2.4157", "1.38 + 1.0357 = 2.4157",
               decimal("1.38") + decimal("1.0357"), Relation::LessEq,
               decimal("2.4157"));
  a.exact_item("S4.1-0.1667", "1/6 < 0.1667", mpq_class(1, 6), Relation::Less,
               decimal("0.1667"));
  {
    const Real x = 74;  // smallest integer above 73; the expression decreases
    const Real x2 = x * x;
    const Real lx3 = 3 * log(x);
    const Real llx3 = log(lx3);
    const Real llx = loglog(x);
    const Real t = Real("2.168") / x2 + 2 / (x2 * log(x * x * x + 1)) +
                   Real("7.16") * llx3 * llx3 / x2 + 10 / x2 +
                   Real("7.16") * llx3 * llx / (x2 * lx3) +
                   10 * llx / (x2 * lx3 * llx3);
    a.real_item("S4.1-0.04",
                "tail sum of T_d over divisors d > x^3, evaluated at x = 74, < 0.04",
                t, Relation::Less, Real("0.04"));
  }
  a.exact_item("S4.1-2.63", "2.4157 + 0.1667 + 0.04 < 2.63",
               decimal("2.4157") + decimal("0.1667") + decimal("0.04"),
               Relation::Less, decimal("2.63"));
  a.real_item("S4.1-final", "log 73 - loglog 73 > 2.83",
              log(rl(73)) - loglog(rl(73)), Relation::Greater, Real("2.83"));
  a.items.push_back(totient_ratio_check(100'000));
}

void audit_s42(Audit& a) {
  a.real_item("S4.2-0.07",
              "log 2 + 0.2615 + 1/(2 log^2 5329) - (1/2 + 1/3 + 1/5) < -0.07",
              log(rl(2)) + Real("0.2615") +
                  1 / (2 * log(rl(5329)) * log(rl(5329))) -
                  to_real(mpq_class(31, 30)),
              Relation::Less, Real("-0.07"));
  a.exact_item("S4.2-1.31", "1.38 - 0.07 = 1.31",
               decimal("1.38") - decimal("0.07"), Relation::LessEq,
               decimal("1.31"));
  a.real_item("S4.2-1.8659",
              "1.084 + 1/log(159) + 2 loglog(74)/log(148) < 1.8659",
              Real("1.084") + 1 / log(rl(159)) +
                  2 * loglog(rl(74)) / log(rl(148)),
              Relation::Less, Real("1.8659"));
  a.real_item("S4.2-3.16",
              "1.16 loglog(158) exceeds 1.8659, folding the chain into 3.16 loglog d/phi(d)",
              Real("1.16") * loglog(rl(158)), Relation::Greater,
              Real("1.8659"));
  a.real_item("S4.2-4loglog",
              "4 loglog(79) exceeds 3.16 loglog(158) (d = 2r step at r = 79)",
              4 * loglog(rl(79)), Relation::Greater,
              Real("3.16") * loglog(rl(158)));
  a.real_item("S4.2-f79", "f(79) < 0.15", f_of_p(79), Relation::Less,
              Real("0.15"));
  a.real_item("S4.2-0.68", "4 (exp(0.15) - 1) < 0.68",
              4 * (exp(Real("0.15")) - 1), Relation::Less, Real("0.68"));
  a.exact_item("S4.2-2", "1.31 + 0.68 < 2", decimal("1.31") + decimal("0.68"),
               Relation::Less, mpq_class(2));
  a.real_item("S4.2-final", "log 73 - loglog 73 > 2.8",
              log(rl(73)) - loglog(rl(73)), Relation::Greater, Real("2.8"));
}

void audit_s43(Audit& a) {
  a.real_item("S4.3-4.4903",
              "4.4903 loglog(173) exceeds 3.7341 loglog(346) (d = 2r step at r = 173)",
              Real("4.4903") * loglog(rl(173)), Relation::Greater,
              Real("3.7341") * loglog(rl(346)));
  a.real_item("S4.3-f173", "f(173) < 0.082", f_of_p(173), Relation::Less,
              Real("0.082"));
  a.real_item("S4.3-0.384", "4.4903 (exp(0.082) - 1) < 0.384",
              Real("4.4903") * (exp(Real("0.082")) - 1), Relation::Less,
              Real("0.384"));
  a.real_item("S4.3-1.47", "exp(0.3833) < 1.47", exp(Real("0.3833")),
              Relation::Less, Real("1.47"));
  a.real_item("S4.3-1.47b", "exp(0.384) < 1.47 (the 0.3833/0.384 line audited separately)",
              exp(Real("0.384")), Relation::Less, Real("1.47"));
  {
    // Case-by-case lower bounds on x1 phi(z d1)/z: d1 >= 3; d1 <= 2 with
    // x1 >= 7; x1 = 5; the x1 = 3 cases including z = 6 with d1 = 2.
    const mpq_class floor235 = phi_ratio_floor({2, 3, 5});
    const mpq_class cases[] = {
        mpq_class(3) * 2 * floor235,                  // d1 >= 3
        mpq_class(7) * floor235,                      // d1 in {1,2}, x1 >= 7
        mpq_class(5) * phi_ratio_floor({2, 3}),       // d1 in {1,2}, x1 = 5
        mpq_class(3) * phi_ratio_floor({2}),          // d1 = 2, x1 = 3, z != 6
        mpq_class(3) * mpq_class(4, 12) * 2,          // d1 = 2, x1 = 3, z = 6: 3 phi(12)/6
        mpq_class(3) * phi_ratio_floor({2}),          // d1 = 1, x1 = 3
    };
    mpq_class best = cases[0];
    for (const auto& c : cases) best = std::min(best, c);
    a.exact_item("S4.3-1.5",
                 "every closing case keeps x1 phi(z d1)/z at or above 1.5",
                 best, Relation::GreaterEq, decimal("1.5"));
  }
  a.real_item("S4.3-final",
              "exp(0.3833) < 1.5, contradicting the case minimum",
              exp(Real("0.3833")), Relation::Less, Real("1.5"));
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

Real sd_upper_bound(long long d, long long x) {
  if (d <= 30) throw DomainError("sd_upper_bound: requires d > 30");
  if (x < 3) throw DomainError("sd_upper_bound: requires x >= 3");
  const Real phi_d = to_real(mpq_class(euler_phi(make_int(d)).get_str()));
  return Real("1.084") / d + 1 / (rl(d) * log(rl(d) + 1)) +
         2 * loglog(rl(d)) / phi_d + 2 * loglog(rl(x)) / (phi_d * log(rl(d)));
}

Real sd_empirical(long long x1, long long y1, long long d, long long p_limit) {
  if (std::gcd(x1, y1) != 1 || d < 1)
    throw std::invalid_argument("sd_empirical: need coprime pair, d >= 1");
  Real sum = 0;
  if (p_limit < 3) return sum;
  const auto spf = smallest_factor_table(static_cast<std::uint32_t>(p_limit));
  for (long long p = 3; p <= p_limit; p += 2) {
    if (spf[p] != static_cast<std::uint32_t>(p)) continue;  // composite
    if (x1 % p == 0 || y1 % p == 0) continue;
    // multiplicative order of x1 * y1^{-1} mod p, descending from p - 1
    const std::uint64_t up = p;
    const std::uint64_t inv_y = powmod_u64(y1 % p, up - 2, up);
    const std::uint64_t base = mulmod_u64(x1 % p, inv_y, up);
    std::uint64_t ord = up - 1;
    std::uint64_t rest = up - 1;
    while (rest > 1) {
      const std::uint64_t f = spf[rest];
      while (ord % f == 0 && powmod_u64(base, ord / f, up) == 1) ord /= f;
      while (rest % f == 0) rest /= f;
    }
    if (ord == static_cast<std::uint64_t>(d)) sum += Real(1) / p;
  }
  return sum;
}

Real f_of_p(long long p) {
  if (p < 79) throw DomainError("f_of_p: requires p >= 79");
  const Real rp = rl(p);
  const Real llp = loglog(rp);
  return log(2 * rp) / log(Real(2)) * (llp / (rp - 1)) * (rp / (rp - llp));
}

Real mertens_sum(long long t) {
  if (t < 2) throw std::invalid_argument("mertens_sum: t >= 2");
  Real sum = 0;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(t)))
    sum += Real(1) / rl(p);
  return sum;
}

mpq_class prime_product_exact(unsigned index_lo, unsigned index_hi,
                              const std::set<long long>& exclusions) {
  if (index_lo < 1) throw std::invalid_argument("prime_product: 1-indexed");
  mpq_class prod = 1;
  if (index_hi < index_lo) return prod;
  std::uint32_t sieve_bound = 100;
  std::vector<std::uint32_t> primes = primes_up_to(sieve_bound);
  while (primes.size() < index_hi) {
    sieve_bound *= 2;
    primes = primes_up_to(sieve_bound);
  }
  for (unsigned i = index_lo; i <= index_hi; ++i) {
    const long long p = primes[i - 1];
    if (exclusions.contains(p)) continue;
    prod *= mpq_class(long(p), long(p - 1));
  }
  return prod;
}

Real prime_product(unsigned index_lo, unsigned index_hi,
                   const std::set<long long>& exclusions) {
  return to_real(prime_product_exact(index_lo, index_hi, exclusions));
}

BoundReport totient_ratio_check(long long n_max) {
  if (n_max < 3) throw std::invalid_argument("totient_ratio_check: n_max >= 3");
  const auto phi = phi_table(static_cast<std::uint32_t>(n_max));
  // Scan in doubles (margins are ~1e-2 at the primorial worst cases), then
  // re-evaluate the worst N at full precision for the report.
  long long worst_n = 3;
  double worst_gap = -1e9;
  for (long long n = 3; n <= n_max; ++n) {
    const double lln = std::log(std::log(static_cast<double>(n)));
    const double rhs = 1.79 * lln + 2.5 / lln;
    const double gap = static_cast<double>(n) / phi[n] - rhs;
    if (gap > worst_gap) {
      worst_gap = gap;
      worst_n = n;
    }
  }
  const Real lln = loglog(rl(worst_n));
  const Real gap = to_real(mpq_class(long(worst_n), long(phi[worst_n]))) -
                   (Real("1.79") * lln + Real("2.5") / lln);
  BoundReport r{"S4.1-totient-ratio",
                "N/phi(N) <= 1.79 loglog N + 2.5/loglog N for 3 <= N <= " +
                    std::to_string(n_max) + " (worst N = " +
                    std::to_string(worst_n) + ")",
                gap,
                Real(0),
                Relation::Less};
  r.margin = -gap;
  r.pass = gap < 0 && r.margin > margin_budget();
  return r;
}

std::optional<AuditSection> section_from_string(std::string_view s) {
  if (s == "3.3") return AuditSection::L33;
  if (s == "3.5") return AuditSection::L35;
  if (s == "3.6") return AuditSection::L36;
  if (s == "3.7") return AuditSection::L37;
  if (s == "4.1") return AuditSection::S41;
  if (s == "4.2") return AuditSection::S42;
  if (s == "4.3") return AuditSection::S43;
  return std::nullopt;
}

std::string to_string(AuditSection s) {
  switch (s) {
    case AuditSection::L33: return "3.3";
    case AuditSection::L35: return "3.5";
    case AuditSection::L36: return "3.6";
    case AuditSection::L37: return "3.7";
    case AuditSection::S41: return "4.1";
    case AuditSection::S42: return "4.2";
    case AuditSection::S43: return "4.3";
  }
  return "?";
}

std::vector<BoundReport> chain_audit(AuditSection s) {
  Audit a;
  switch (s) {
    case AuditSection::L33: audit_l33(a); break;
    case AuditSection::L35: audit_l35(a); break;
    case AuditSection::L36: audit_l36(a); break;
    case AuditSection::L37: audit_l37(a); break;
    case AuditSection::S41: audit_s41(a); break;
    case AuditSection::S42: audit_s42(a); break;
    case AuditSection::S43: audit_s43(a); break;
  }
  return std::move(a.items);
}

std::vector<BoundReport> full_audit() {
  std::vector<BoundReport> all;
  for (AuditSection s : {AuditSection::L33, AuditSection::L35,
                         AuditSection::L36, AuditSection::L37,
                         AuditSection::S41, AuditSection::S42,
                         AuditSection::S43}) {
    auto items = chain_audit(s);
    std::move(items.begin(), items.end(), std::back_inserter(all));
  }
  return all;
}

std::optional<BoundReport> run_bound(const std::string& id) {
  for (auto& item : full_audit())
    if (item.bound_id == id) return item;
  return std::nullopt;
}

std::vector<std::string> all_bound_ids() {
  std::vector<std::string> ids;
  for (auto& item : full_audit()) ids.push_back(item.bound_id);
  return ids;
}

}  // namespace philucas
