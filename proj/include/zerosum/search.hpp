#pragma once

// Exact Olson constants for small cyclic groups and small planes, the
// lower-bound constructions, and the structural classification of
// zero-sum-free plane sets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/modular.hpp"
#include "zerosum/plane.hpp"

namespace zerosum {

enum class GroupKind { cyclic, plane };

struct GroupDescriptor {
  GroupKind kind = GroupKind::cyclic;
  std::uint32_t n = 0;  // cyclic order, or the prime p of Z_p + Z_p

  static GroupDescriptor cyclic(std::uint32_t n) { return {GroupKind::cyclic, n}; }
  static GroupDescriptor plane(std::uint32_t p) { return {GroupKind::plane, p}; }

  /// "Z/7" or "Z/5+Z/5".
  std::string key() const;
  static GroupDescriptor parse(const std::string& key);
  std::uint32_t element_count() const { return kind == GroupKind::cyclic ? n : n * n; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

enum class Method { exact, lower_bound_only };
std::string method_name(Method m);

/// Elements are stored encoded: residues for cyclic groups, cell indices
/// x*p + y for planes.
using EncodedSet = std::vector<std::uint32_t>;

struct ConstantRecord {
  GroupDescriptor group;
  std::uint32_t olson = 0;  // exact value, or the certified lower bound
  Method method = Method::exact;
  std::vector<EncodedSet> extremal_examples;  // canonical orbit representatives
  bool examples_truncated = false;
  bool examples_verified = false;  // each example is zero-sum free of size olson - 1
  bool reorder_agrees = false;     // a descending-order search found the same value
  double compute_seconds = 0;

  friend bool operator==(const ConstantRecord&, const ConstantRecord&) = default;
};

struct SearchOptions {
  std::uint32_t cyclic_max = 60;
  std::uint32_t plane_max = 7;
  unsigned threads = 1;
  std::size_t max_examples = 8;
  bool certify = true;
};

enum class SearchOrder { ascending, descending };

/// Largest zero-sum-free subset size + 1 for Z_n, without examples or
/// certification. No limit is enforced here.
std::uint32_t olson_cyclic_value(std::uint32_t n, unsigned threads = 1,
                                 SearchOrder order = SearchOrder::ascending);
std::uint32_t olson_plane_value(std::uint32_t p, unsigned threads = 1,
                                SearchOrder order = SearchOrder::ascending);

/// Exact Ol(Z_n), 2 <= n <= options.cyclic_max; throws LimitExceeded otherwise.
ConstantRecord olson_cyclic(std::uint32_t n, const SearchOptions& options = {});

/// Exact Ol(Z_p + Z_p) when `exact` and p <= options.plane_max. With
/// exact == false the record holds the lower bound from the witness
/// construction. Throws LimitExceeded when exact is requested above the limit.
ConstantRecord olson_plane(std::uint32_t p, const SearchOptions& options = {}, bool exact = true);

struct Enumeration {
  std::vector<EncodedSet> orbits;  // sorted canonical representatives
  bool truncated = false;
};

/// Zero-sum-free sets of the given size up to linear automorphisms (unit
/// multiplication for Z_n, GL2(F_p) for planes). Stops after max_orbits
/// distinct orbits. Throws LimitExceeded above the configured group limits.
Enumeration enumerate_maximal_free_sets(const GroupDescriptor& group, std::size_t size,
                                        const SearchOptions& options = {},
                                        std::size_t max_orbits = SIZE_MAX);

/// Lexicographically least sorted image under the automorphism group.
EncodedSet canonical_form(const GroupDescriptor& group, const EncodedSet& set);

bool is_zero_sum_free(const GroupDescriptor& group, const EncodedSet& set);

/// {1, ..., k} with k maximal such that k(k+1)/2 <= p - 1. Verified zero-sum free.
ResidueSet construct_cyclic_witness(Modulus m);

/// S ∪ C: S is `cyclic_free` placed on the vertical subgroup, C is the
/// p - 1 points (1, 0), ..., (1, p-2) of one coset. Throws SoundnessError if
/// the result is not zero-sum free (only possible if `cyclic_free` is not).
PlaneSet construct_plane_witness(Modulus m, const ResidueSet& cyclic_free);

/// Uses an extremal set from the exact cyclic search when p <= cyclic_max,
/// otherwise construct_cyclic_witness.
PlaneSet construct_plane_witness(Modulus m, const SearchOptions& options = {});

struct StructureReport {
  bool matches_theorem2 = false;  // all elements in U or in one nonzero coset of U
  std::optional<std::uint32_t> subgroup_index;
  std::uint32_t in_u = 0;
  std::uint32_t coset_elements = 0;
  std::uint32_t coset = 0;  // label of the coset under the canonical projection
  bool degenerate = false;  // a ⊆ U
  std::vector<std::uint32_t> matching_subgroups;
};

/// Scans all p+1 subgroups. When several match, the one holding the most
/// elements of a is reported; ties prefer the vertical subgroup, then the
/// smallest slope. Throws InvalidArgument if a is not zero-sum free.
StructureReport classify_structure(const PlaneSet& a);

}  // namespace zerosum
