#include "zerosum/analytic.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "zerosum/modular.hpp"
#include "zerosum/parallel.hpp"
#include "zerosum/search.hpp"

namespace zerosum {

IntegralResult cos_log_integral(double lo, double hi) {
  if (!(lo > -0.5 && hi < 0.5 && lo <= hi)) {
    throw InvalidArgument("cos_log_integral: need -1/2 < lo <= hi < 1/2");
  }
  IntegralResult r;
  r.lo = lo;
  r.hi = hi;
  if (lo < hi) {
    auto f = [](double t) { return std::log(std::cos(std::numbers::pi * t)); };
    double error = 0;
    r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-14,
                                                                             &error);
    r.error_estimate = error;
    if (!(error <= 1e-9)) throw std::runtime_error("cos_log_integral: quadrature did not converge");
  }
  r.series_value = cos_log_series(lo, hi);
  r.series_gap = std::abs(r.value - r.series_value);
  return r;
}

double cos_log_series(double lo, double hi, int max_terms) {
  // ln cos x = -Σ_{n>=1} 2^{2n-1} (2^{2n} - 1) |B_{2n}| / (n (2n)!) x^{2n}
  using Real = long double;
  const Real pi = std::numbers::pi_v<Real>;
  Real total = 0;
  for (int n = 1; n <= max_terms; ++n) {
    const Real b2n = std::abs(boost::math::bernoulli_b2n<Real>(n));
    const Real coeff = std::ldexp(Real(1), 2 * n - 1) * (std::ldexp(Real(1), 2 * n) - 1) * b2n /
                       (n * std::tgamma(Real(2 * n + 1)));
    // ∫ (πt)^{2n} dt = π^{2n} t^{2n+1} / (2n+1)
    const Real antiderivative = std::pow(pi, 2 * n) *
                                (std::pow(Real(hi), 2 * n + 1) - std::pow(Real(lo), 2 * n + 1)) /
                                (2 * n + 1);
    const Real term = coeff * antiderivative;
    total -= term;
    if (std::abs(term) < 1e-22L) break;
  }
  return static_cast<double>(total);
}

bool growth_holds(double base, std::uint64_t n) {
  using Real = long double;
  return 2 * std::log(Real(n)) < Real(n) * std::log(Real(base));
}

GrowthThreshold growth_threshold(double base, std::uint64_t limit) {
  if (!(base > 1.0)) throw InvalidArgument("growth_threshold: base must exceed 1");
  if (limit < 1) throw InvalidArgument("growth_threshold: limit must be positive");
  GrowthThreshold g;
  g.base = base;
  g.verified_upto = limit;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (!growth_holds(base, n)) g.last_failure = n;
  }
  g.minimal_n = g.last_failure + 1;
  g.increasing_beyond = static_cast<long double>(limit) * std::log(static_cast<long double>(base)) > 2;
  g.certified = g.last_failure < limit && g.increasing_beyond;
  return g;
}

namespace {

struct Claim {
  std::string id;
  std::string inequality;
  bool primes_only;
  bool uses_olson;
  std::string role;
  std::int64_t claimed_from;
  std::function<bool(std::uint64_t p, std::uint64_t ol)> holds;
};

long double centered_log_cos_sum(std::uint64_t p) {
  // Σ_{|j| <= floor(p/10)} ln cos(jπ/p)
  const std::uint64_t half = p / 10;
  long double sum = 0, comp = 0;
  for (std::uint64_t j = 1; j <= half; ++j) {
    const long double x = 2 * std::log(std::cos(std::numbers::pi_v<long double> * j / p));
    const long double t = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

std::vector<Claim> claims(double integral) {
  using u64 = std::uint64_t;
  std::vector<Claim> out;
  out.push_back({"sigma-cover-6p/5", "6/5*p - sqrt(p) >= p", false, false, "threshold", 28,
                 [](u64 p, u64) { return p * p >= 25 * p; }});
  out.push_back({"coverage-p/5", "p/5 + Ol(Z_p) >= sqrt(4p-7)", true, true, "threshold", 100,
                 [](u64 p, u64 ol) {
                   const u64 lhs = p + 5 * ol;
                   return lhs * lhs >= 25 * (4 * p - 7);
                 }});
  out.push_back({"sqrt(p)/4>=8", "sqrt(p)/4 >= 8", false, false, "threshold", 1024,
                 [](u64 p, u64) { return p >= 1024; }});
  out.push_back({"zero-sum-count", "2^(p+Ol(Z_p)) / p^4 >= 2", true, true, "threshold", 10,
                 [](u64 p, u64 ol) {
                   return static_cast<long double>(p + ol - 1) * std::numbers::ln2_v<long double> >=
                          4 * std::log(static_cast<long double>(p));
                 }});
  out.push_back({"coverage-4p/5", "4p/5 + Ol(Z_p) > sqrt(4p-7)", true, true, "threshold", 6000,
                 [](u64 p, u64 ol) {
                   const u64 lhs = 4 * p + 5 * ol;
                   return lhs * lhs > 25 * (4 * p - 7);
                 }});
  out.push_back({"growth", "p^2 < 1.003328^p", false, false, "threshold", 6000,
                 [](u64 p, u64) { return growth_holds(1.003328, p); }});
  out.push_back({"condition2-centered",
                 "sum_{|j|<=floor(p/10)} ln cos(j*pi/p) <= -2 ln p", true, false, "threshold", 6000,
                 [](u64 p, u64) {
                   return centered_log_cos_sum(p) <= -2 * std::log(static_cast<long double>(p));
                 }});
  out.push_back({"sum-below-integral",
                 "sum_{|j|<=floor(p/10)} ln cos(j*pi/p) < p * int_{-1/10}^{1/10} ln cos(pi t) dt",
                 true, false, "proof-step", 6000,
                 [integral](u64 p, u64) {
                   return centered_log_cos_sum(p) < static_cast<long double>(p) * integral;
                 }});
  return out;
}

}  // namespace

std::vector<ThresholdAuditEntry> audit_thresholds(std::uint64_t p_max, const AuditOptions& options) {
  if (p_max < 2) throw InvalidArgument("audit_thresholds: p_max must be at least 2");

  std::vector<bool> prime(p_max + 1, true);
  prime[0] = prime[1] = false;
  for (std::uint64_t i = 2; i * i <= p_max; ++i) {
    if (prime[i]) {
      for (std::uint64_t j = i * i; j <= p_max; j += i) prime[j] = false;
    }
  }

  // Ol(Z_p) for primes: exact up to the limit, lower bound floor(sqrt(2p)) above.
  std::vector<std::uint64_t> ol(p_max + 1, 0);
  std::vector<std::uint64_t> exact_primes;
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    if (!prime[p]) continue;
    if (p <= options.exact_olson_limit) {
      exact_primes.push_back(p);
    } else {
      ol[p] = isqrt(2 * p);
    }
  }
  parallel_for(exact_primes.size(), options.threads, [&](std::size_t i) {
    const auto p = exact_primes[i];
    ol[p] = olson_cyclic_value(static_cast<std::uint32_t>(p));
  });
  const std::string ol_source =
      "exact search for p <= " + std::to_string(options.exact_olson_limit) +
      ", lower bound floor(sqrt(2p)) above (the inequality is monotone in Ol)";

  const auto all_claims = claims(cos_log_integral().value);
  std::vector<ThresholdAuditEntry> entries(all_claims.size());
  parallel_for(all_claims.size(), options.threads, [&](std::size_t c) {
    const auto& claim = all_claims[c];
    ThresholdAuditEntry e;
    e.claim_id = claim.id;
    e.inequality = claim.inequality;
    e.domain = claim.primes_only ? "primes" : "integers";
    e.role = claim.role;
    e.ol_source = claim.uses_olson ? ol_source : "";
    e.claimed_from = claim.claimed_from;
    std::uint64_t last_failure = 1;
    for (std::uint64_t p = 2; p <= p_max; ++p) {
      if (claim.primes_only && !prime[p]) continue;
      const bool ok = claim.holds(p, ol[p]);
      if (!ok) last_failure = p;
      if (static_cast<std::int64_t>(p) > claim.claimed_from) {
        if (e.points_checked == 0) e.verified_lo = p;
        e.verified_hi = p;
        ++e.points_checked;
        if (!ok) {
          ++e.failures_in_claimed_range;
          if (e.sample_failures.size() < 10) e.sample_failures.push_back(p);
        }
      }
    }
    e.minimal_p = last_failure + 1;
    e.holds_on_claimed_range = e.failures_in_claimed_range == 0;
    entries[c] = std::move(e);
  });
  return entries;
}

}  // namespace zerosum
