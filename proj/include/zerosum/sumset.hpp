#pragma once

// Exact subset sums and sumsets over Z_p and Z_p + Z_p by bit-vector DP.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zerosum/bits.hpp"
#include "zerosum/modular.hpp"
#include "zerosum/plane.hpp"

namespace zerosum {

using BigInt = boost::multiprecision::cpp_int;

/// Subset sums of a set of residues. When includes_empty is set the empty
/// subset contributes 0; otherwise only nonempty subsets count.
struct SumSet {
  Bits bits;
  bool includes_empty = false;

  std::size_t size() const { return bits.count(); }
  bool contains(std::uint32_t r) const { return bits.test(r); }
};

SumSet subset_sums(const ResidueSet& a, bool include_empty);

/// Same DP for any cyclic order n >= 1 and any multiset of values (< n).
Bits cyclic_subset_sums(std::span<const std::uint32_t> values, std::uint32_t n, bool include_empty);

/// Σ_k(a): sums of the k-element subsets. Throws if k > |a|.
Bits fixed_size_subset_sums(const ResidueSet& a, std::size_t k);

/// Σ_k(a) for every k in [0, |a|] from one pass.
std::vector<Bits> all_fixed_size_subset_sums(const ResidueSet& a);

/// a + b = {x + y}.
Bits pairwise_sumset(const ResidueSet& a, const ResidueSet& b);

struct InequalityReport {
  std::uint64_t lhs = 0;
  double rhs = 0;  // integral except for the (p+3)/2 term, which may be a half
  bool holds = false;
};

struct DdshReport : InequalityReport {
  std::uint32_t ell = 0;          // floor(sqrt(4p-7)) + 1
  bool corollary_applies = false; // |a| >= ell
  bool corollary_holds = true;    // Σ_{floor(ell/2)}(a) == Z_p when it applies
};

/// |Σ_k(a)| >= min(p, k(|a|-k)+1), for 1 <= k <= |a|.
DdshReport verify_ddsh(const ResidueSet& a, std::size_t k);

/// |a+b| >= min(p, |a|+|b|-1) for nonempty a, b.
InequalityReport verify_cd(const ResidueSet& a, const ResidueSet& b);

/// True if 0 is not in a and no x in a has -x in a.
bool is_asymmetric_zero_free(const ResidueSet& a);

/// |Σ(a)| (empty sum included) >= min((p+3)/2, s(s+1)/2 + δ), δ = 1 for
/// even s. Throws InvalidArgument when a contains 0 or a pair {x, -x}.
InequalityReport verify_olson_sigma(const ResidueSet& a);

/// Translates of a plane sum set; one bit per cell, row-major (x, y).
struct PlaneSumSet {
  Bits bits;
  bool test(PlanePoint a, Modulus m) const { return bits.test(plane_index(a, m)); }
};

PlaneSumSet plane_subset_sums(const PlaneSet& a, bool include_empty);

template <class Point>
struct ZeroSumResult {
  bool found = false;
  std::vector<Point> witness;  // nonempty and summing to zero when found
};

/// Nonempty zero-sum subset detection with a witness rebuilt from one stored
/// predecessor per reached sum. The witness is checked before returning.
ZeroSumResult<PlanePoint> contains_zero_sum(const PlaneSet& a);
ZeroSumResult<std::uint32_t> contains_zero_sum(const ResidueSet& a);

/// Zero-sum freeness over Z_n for arbitrary n (used by the cyclic search).
bool is_zero_sum_free_cyclic(std::span<const std::uint32_t> values, std::uint32_t n);

/// Number of subsets (empty one included) summing to (0, 0).
BigInt count_zero_sum_subsets(const PlaneSet& a);

}  // namespace zerosum
