#include "zerosum/plane.hpp"

#include <algorithm>
#include <numeric>

namespace zerosum {

Subgroup Subgroup::slope(Modulus m, std::uint32_t s) {
  if (s >= m.value()) throw InvalidArgument("slope out of range");
  return Subgroup(m, s);
}

Subgroup Subgroup::from_index(Modulus m, std::uint32_t index) {
  if (index > m.value()) throw InvalidArgument("subgroup index out of range");
  return Subgroup(m, index);
}

std::uint32_t Subgroup::slope_value() const {
  if (is_vertical()) throw InvalidArgument("vertical subgroup has no slope");
  return index_;
}

PlanePoint Subgroup::generator() const {
  if (is_vertical()) return {0, 1};
  return {1, index_};
}

bool Subgroup::contains(PlanePoint a) const { return project(a) == 0; }

std::uint32_t Subgroup::project(PlanePoint a) const {
  if (is_vertical()) return a.x;
  return modulus_.sub(a.y, modulus_.mul(index_, a.x));
}

std::string Subgroup::name() const {
  return is_vertical() ? std::string("vertical") : "slope " + std::to_string(index_);
}

std::vector<Subgroup> enumerate_subgroups(Modulus m) {
  std::vector<Subgroup> out;
  out.reserve(m.value() + 1);
  for (std::uint32_t i = 0; i <= m.value(); ++i) out.push_back(Subgroup::from_index(m, i));
  return out;
}

PlaneSet::PlaneSet(Modulus m, std::span<const std::pair<std::int64_t, std::int64_t>> points)
    : modulus_(m) {
  for (auto [x, y] : points) insert(x, y);
}

bool PlaneSet::contains(PlanePoint a) const {
  auto idx = plane_index(a, modulus_);
  return a.x < modulus_.value() && a.y < modulus_.value() && idx < present_.size() &&
         present_[idx];
}

void PlaneSet::insert(PlanePoint a) {
  const auto p = modulus_.value();
  if (a.x >= p || a.y >= p) throw InvalidArgument("plane point coordinate out of range");
  if (present_.empty()) present_.assign(std::size_t{p} * p, false);
  auto idx = plane_index(a, modulus_);
  if (present_[idx]) {
    throw InvalidArgument("duplicate plane point (" + std::to_string(a.x) + "," +
                          std::to_string(a.y) + ")");
  }
  present_[idx] = true;
  points_.push_back(a);
}

std::vector<PlanePoint> PlaneSet::sorted() const {
  std::vector<PlanePoint> out(points_.begin(), points_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t project(PlanePoint a, const Subgroup& u) { return u.project(a); }

std::uint32_t project(const PlaneSet& owner, PlanePoint a, const Subgroup& u) {
  require_same_modulus(owner.modulus(), u.modulus(), "project");
  const auto p = u.modulus().value();
  if (a.x >= p || a.y >= p) throw InvalidArgument("project: point not reduced");
  return u.project(a);
}

std::uint64_t CosetProfile::total() const {
  return std::accumulate(lambda.begin(), lambda.end(), std::uint64_t{0});
}

CosetProfile coset_profile(const PlaneSet& b, const Subgroup& u) {
  require_same_modulus(b.modulus(), u.modulus(), "coset_profile");
  CosetProfile prof{u, std::vector<std::uint32_t>(u.modulus().value(), 0)};
  for (auto a : b.points()) ++prof.lambda[u.project(a)];
  return prof;
}

Concentration max_concentration(const PlaneSet& a) {
  const auto m = a.modulus();
  Concentration best{0, 0, Subgroup::slope(m, 0)};
  for (const auto& u : enumerate_subgroups(m)) {
    auto prof = coset_profile(a, u);
    for (std::uint32_t j = 0; j < m.value(); ++j) {
      if (prof.lambda[j] > best.value) best = {prof.lambda[j], j, u};
    }
  }
  return best;
}

}  // namespace zerosum
