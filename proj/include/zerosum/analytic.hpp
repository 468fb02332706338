#pragma once

// Real-analytic side of the argument: the log-cosine integral, the growth
// threshold p² < b^p, and an audit of every numeric "for p > c" claim.

#include <cstdint>
#include <string>
#include <vector>

namespace zerosum {

/// The constant the integral is compared against.
inline constexpr double kCosLogIntegralBound = -0.00332296;

struct IntegralResult {
  double lo = 0, hi = 0;
  double value = 0;           // adaptive Gauss-Kronrod
  double error_estimate = 0;  // reported by the quadrature
  double series_value = 0;    // Taylor series of ln cos, integrated termwise
  double series_gap = 0;      // |value - series_value|
};

/// ∫_lo^hi ln cos(πt) dt; requires -1/2 < lo <= hi < 1/2. Throws
/// std::runtime_error if the quadrature error estimate exceeds 1e-9.
IntegralResult cos_log_integral(double lo = -0.1, double hi = 0.1);

/// Termwise integral of the Maclaurin series of ln cos(πt) over [lo, hi],
/// summed until terms drop below 1e-22 or `max_terms` are used.
double cos_log_series(double lo, double hi, int max_terms = 60);

struct GrowthThreshold {
  double base = 0;
  std::uint64_t minimal_n = 0;       // n² < base^n for every n in [minimal_n, verified_upto]
  std::uint64_t last_failure = 0;    // largest n <= verified_upto where it fails (0 if none)
  std::uint64_t verified_upto = 0;
  bool increasing_beyond = false;    // verified_upto · ln(base) > 2
  bool certified = false;            // holds at verified_upto and increasing beyond
};

/// n² < base^n, compared as 2 ln n < n ln base in extended precision.
bool growth_holds(double base, std::uint64_t n);

GrowthThreshold growth_threshold(double base, std::uint64_t limit = 1'000'000);

struct ThresholdAuditEntry {
  std::string claim_id;
  std::string inequality;
  std::string domain;  // "integers" or "primes"
  std::string role;    // "threshold" (a stated range) or "proof-step" (an intermediate estimate)
  std::string ol_source;  // how Ol(Z_p) was obtained, when the inequality uses it
  std::int64_t claimed_from = 0;  // the claim covers p > claimed_from
  std::uint64_t verified_lo = 0;  // first point checked inside the claimed range
  std::uint64_t verified_hi = 0;
  std::uint64_t points_checked = 0;
  std::uint64_t minimal_p = 0;    // one past the largest failing point in [2, p_max]
  std::uint64_t failures_in_claimed_range = 0;
  std::vector<std::uint64_t> sample_failures;  // first few failures in the claimed range
  bool holds_on_claimed_range = false;
};

struct AuditOptions {
  std::uint32_t exact_olson_limit = 60;  // exact Ol(Z_p) up to here, floor(sqrt(2p)) above
  unsigned threads = 1;
};

std::vector<ThresholdAuditEntry> audit_thresholds(std::uint64_t p_max, const AuditOptions& options = {});

}  // namespace zerosum
