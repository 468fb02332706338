#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zerosum/modular.hpp"

namespace zerosum {

/// A point of Z_p + Z_p.
struct PlanePoint {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

/// Row-major cell index x*p + y.
inline std::uint32_t plane_index(PlanePoint a, Modulus m) { return a.x * m.value() + a.y; }
inline PlanePoint plane_point(std::uint32_t index, Modulus m) {
  return {index / m.value(), index % m.value()};
}

/// One of the p+1 subgroups of order p. A slope s names {(t, s t)};
/// the vertical subgroup is {(0, t)}.
class Subgroup {
 public:
  static Subgroup slope(Modulus m, std::uint32_t s);
  static Subgroup vertical(Modulus m) { return Subgroup(m, m.value()); }
  /// Inverse of index(): 0..p-1 are slopes, p is vertical.
  static Subgroup from_index(Modulus m, std::uint32_t index);

  Modulus modulus() const { return modulus_; }
  bool is_vertical() const { return index_ == modulus_.value(); }
  std::uint32_t slope_value() const;
  std::uint32_t index() const { return index_; }
  PlanePoint generator() const;
  bool contains(PlanePoint a) const;

  /// Canonical projection with kernel exactly this subgroup:
  /// y - s x for a slope, x for the vertical subgroup.
  std::uint32_t project(PlanePoint a) const;

  std::string name() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  Subgroup(Modulus m, std::uint32_t index) : modulus_(m), index_(index) {}
  Modulus modulus_;
  std::uint32_t index_;
};

/// Slopes 0..p-1 followed by the vertical subgroup.
std::vector<Subgroup> enumerate_subgroups(Modulus m);

/// A set of distinct plane points; insertion order is kept.
class PlaneSet {
 public:
  explicit PlaneSet(Modulus m) : modulus_(m) {}
  PlaneSet(Modulus m, std::span<const std::pair<std::int64_t, std::int64_t>> points);
  PlaneSet(Modulus m, std::initializer_list<std::pair<std::int64_t, std::int64_t>> points)
      : PlaneSet(m, std::span<const std::pair<std::int64_t, std::int64_t>>(points.begin(),
                                                                           points.size())) {}

  Modulus modulus() const { return modulus_; }
  std::span<const PlanePoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(PlanePoint a) const;

  /// Throws on duplicates or coordinates outside [0, p).
  void insert(PlanePoint a);
  void insert(std::int64_t x, std::int64_t y) { insert({modulus_.reduce(x), modulus_.reduce(y)}); }

  /// Points sorted lexicographically; a canonical form for comparisons.
  std::vector<PlanePoint> sorted() const;

 private:
  Modulus modulus_;
  std::vector<PlanePoint> points_;
  std::vector<bool> present_;
};

std::uint32_t project(PlanePoint a, const Subgroup& u);
/// Checked variant: both arguments carry a modulus.
std::uint32_t project(const PlaneSet& owner, PlanePoint a, const Subgroup& u);

struct CosetProfile {
  Subgroup subgroup;
  std::vector<std::uint32_t> lambda;  // lambda[j] = |B ∩ π^{-1}(j)|

  std::uint64_t total() const;
};

CosetProfile coset_profile(const PlaneSet& b, const Subgroup& u);

struct Concentration {
  std::uint32_t value = 0;  // M(A)
  std::uint32_t coset = 0;
  Subgroup subgroup;
};

/// M(A): maximum over all subgroups and cosets of |A ∩ (x+U)|. Ties go to
/// the first subgroup in enumeration order, then the smallest coset label.
Concentration max_concentration(const PlaneSet& a);

}  // namespace zerosum
