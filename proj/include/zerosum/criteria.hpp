#pragma once

// Sufficient conditions for a plane set to contain a zero-sum: the coset
// reduction, the two numerical conditions on coset profiles, and the count
// of zero-sum subsets through additive characters.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerosum/modular.hpp"
#include "zerosum/plane.hpp"

namespace zerosum {

/// floor(n/2) * ceil(n/2)
inline std::uint64_t half_product(std::uint64_t n) { return (n / 2) * ((n + 1) / 2); }

struct CombResult {
  bool covers = false;                // Σ(π(B)) with the empty sum is all of Z_p
  std::vector<std::uint32_t> projected_b;  // multiset π(B)
  std::vector<std::uint32_t> rest_profile;  // coset profile of A \ B
  std::uint64_t weight = 0;           // Σ_j half_product(rest_profile[j])
  std::uint64_t weight_needed = 0;    // p + 1
  bool hypotheses_met = false;
  bool zero_sum_found = false;        // exact search on A
  std::vector<PlanePoint> witness;
};

/// Coset reduction: if π(B) reaches every residue and the half-product
/// weight of A \ B is at least p+1, A contains a zero-sum. The exact search
/// runs alongside; a met hypothesis without a zero-sum throws SoundnessError.
/// Throws InvalidArgument if B is not a subset of A.
CombResult comb_criterion(const PlaneSet& a, const Subgroup& u, const PlaneSet& b);

enum class SearchOutcome { satisfied, unsatisfied, inconclusive };
std::string outcome_name(SearchOutcome o);

struct Condition1Report {
  SearchOutcome outcome = SearchOutcome::unsatisfied;
  std::vector<std::uint32_t> J;  // indices with odd lambda
  std::vector<std::uint32_t> I;  // found index set (when satisfied)
  std::uint64_t weight = 0;      // Σ half_product(lambda*) for the reported I (empty I if none)
  std::uint64_t weight_needed = 0;  // p - 1
  // How the answer was reached: "weight-bound", "closure-bound", "greedy",
  // "exhaustive", or "cap-exceeded".
  std::string method;
  // Overlap between I and J is permitted; it never helps, since it lowers
  // the weight while leaving I ∪ J unchanged, so the search skips it.
  bool overlap_permitted = true;
};

/// Default cap on the number of even-weight support indices searched
/// exhaustively; beyond it an unresolved search reports inconclusive.
inline constexpr std::size_t kCondition1SupportCap = 24;

Condition1Report numerik_condition1(Modulus m, std::span<const std::uint32_t> lambda,
                                    std::size_t support_cap = kCondition1SupportCap);
Condition1Report numerik_condition1(const CosetProfile& profile,
                                    std::size_t support_cap = kCondition1SupportCap);

struct Condition2Report {
  double log_product = 0;    // Σ_j λ_j ln|cos(jπ/p)|, natural log
  double threshold_log = 0;  // -2 ln p
  bool satisfied = false;    // log_product <= threshold_log
};

Condition2Report numerik_condition2(Modulus m, std::span<const std::uint32_t> lambda);
Condition2Report numerik_condition2(const CosetProfile& profile);

/// ln|cos(π t / p)| for t in [0, p); -inf where the cosine vanishes (p = 2).
std::vector<double> log_abs_cos_table(Modulus m);

struct CharacterCount {
  double value = 0;          // count of zero-sum subsets, empty one included
  double log_value = 0;      // natural log of value
  bool exact_regime = true;  // |A| <= kCharacterExactMaxSize
};

inline constexpr std::size_t kCharacterExactMaxSize = 60;

/// (1/p²) Σ_α Π_a (1 + e(<a, α>)), e(x) = exp(2πi x/p), in extended precision.
/// Beyond kCharacterExactMaxSize elements the result is a log-scale estimate.
CharacterCount character_count_zero_sums(const PlaneSet& a);

struct DirectionCheck {
  std::uint32_t subgroup_index = 0;
  double canonical_log_product = 0;  // condition 2 on the canonical profile
  double worst_log_product = 0;      // maximum over all unit rescalings
  std::uint32_t worst_scale = 1;
  bool satisfied = false;            // worst_log_product <= -2 ln p
};

struct ExistenceBound {
  double log_lower_bound = 0;  // |A| ln 2 - 4 ln p (nat)
  bool all_characters_bounded = false;
  bool guarantees_zero_sum = false;
  std::string reason;
  std::vector<DirectionCheck> directions;
};

/// Character-sum lower bound on the number of zero-sums. Every nonzero
/// character is checked: each subgroup with each unit rescaling of its
/// projection. If all products are at most 2^|A|/p², the count is at least
/// 2^|A|/p⁴, and a nonempty zero-sum is guaranteed once that is >= 2.
ExistenceBound zero_sum_existence_bound(const PlaneSet& a);

}  // namespace zerosum
