#include "zerosum/sumset.hpp"

#include <algorithm>
#include <string>

#include "zerosum/kernels.hpp"

namespace zerosum {

Bits cyclic_subset_sums(std::span<const std::uint32_t> values, std::uint32_t n, bool include_empty) {
  Bits sums(n);
  if (include_empty) sums.set(0);
  for (auto x : values) {
    Bits prev = sums;
    sums.or_rotated(prev, x % n);
    sums.set(x % n);
  }
  return sums;
}

SumSet subset_sums(const ResidueSet& a, bool include_empty) {
  return {cyclic_subset_sums(a.values(), a.modulus().value(), include_empty), include_empty};
}

std::vector<Bits> all_fixed_size_subset_sums(const ResidueSet& a) {
  const auto p = a.modulus().value();
  std::vector<Bits> layer(a.size() + 1, Bits(p));
  layer[0].set(0);
  std::size_t used = 0;
  for (auto x : a.values()) {
    ++used;
    for (std::size_t c = used; c >= 1; --c) {
      layer[c].or_rotated(layer[c - 1], x);
    }
  }
  return layer;
}

Bits fixed_size_subset_sums(const ResidueSet& a, std::size_t k) {
  if (k > a.size()) {
    throw InvalidArgument("fixed_size_subset_sums: k=" + std::to_string(k) + " exceeds |A|=" +
                          std::to_string(a.size()));
  }
  const auto p = a.modulus().value();
  std::vector<Bits> layer(k + 1, Bits(p));
  layer[0].set(0);
  std::size_t used = 0;
  for (auto x : a.values()) {
    ++used;
    for (std::size_t c = std::min(used, k); c >= 1; --c) layer[c].or_rotated(layer[c - 1], x);
  }
  return layer[k];
}

Bits pairwise_sumset(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a.modulus(), b.modulus(), "pairwise_sumset");
  Bits bbits(b.modulus().value());
  for (auto y : b.values()) bbits.set(y);
  Bits out(a.modulus().value());
  for (auto x : a.values()) out.or_rotated(bbits, x);
  return out;
}

DdshReport verify_ddsh(const ResidueSet& a, std::size_t k) {
  if (k < 1 || k > a.size()) {
    throw InvalidArgument("verify_ddsh: k must satisfy 1 <= k <= |A|");
  }
  const std::uint64_t p = a.modulus().value();
  const std::uint64_t s = a.size();
  DdshReport r;
  r.lhs = fixed_size_subset_sums(a, k).count();
  r.rhs = static_cast<double>(std::min<std::uint64_t>(p, k * (s - k) + 1));
  r.holds = static_cast<double>(r.lhs) >= r.rhs;
  r.ell = static_cast<std::uint32_t>(isqrt(4 * p - 7) + 1);
  r.corollary_applies = s >= r.ell;
  if (r.corollary_applies) r.corollary_holds = fixed_size_subset_sums(a, r.ell / 2).all();
  return r;
}

InequalityReport verify_cd(const ResidueSet& a, const ResidueSet& b) {
  if (a.empty() || b.empty()) throw InvalidArgument("verify_cd: both sets must be nonempty");
  const std::uint64_t p = a.modulus().value();
  InequalityReport r;
  r.lhs = pairwise_sumset(a, b).count();
  r.rhs = static_cast<double>(std::min<std::uint64_t>(p, a.size() + b.size() - 1));
  r.holds = static_cast<double>(r.lhs) >= r.rhs;
  return r;
}

bool is_asymmetric_zero_free(const ResidueSet& a) {
  const auto m = a.modulus();
  for (auto x : a.values()) {
    if (x == 0 || a.contains(m.neg(x))) return false;
  }
  return true;
}

InequalityReport verify_olson_sigma(const ResidueSet& a) {
  if (!is_asymmetric_zero_free(a)) {
    throw InvalidArgument("verify_olson_sigma: set contains 0 or an element together with its negative");
  }
  const std::uint64_t p = a.modulus().value();
  const std::uint64_t s = a.size();
  const std::uint64_t delta = (s % 2 == 0) ? 1 : 0;
  // Compare doubled quantities to stay in integers.
  const std::uint64_t rhs2 = std::min<std::uint64_t>(p + 3, s * (s + 1) + 2 * delta);
  InequalityReport r;
  r.lhs = subset_sums(a, true).size();
  r.rhs = static_cast<double>(rhs2) / 2.0;
  r.holds = 2 * r.lhs >= rhs2;
  return r;
}

PlaneSumSet plane_subset_sums(const PlaneSet& a, bool include_empty) {
  const auto m = a.modulus();
  PlaneShifter shifter(m);
  PlaneSumSet out{Bits(shifter.cells())};
  if (include_empty) out.bits.set(0);
  for (auto pt : a.points()) {
    Bits prev = out.bits;
    shifter.or_translated(out.bits, prev, pt);
    out.bits.set(plane_index(pt, m));
  }
  return out;
}

ZeroSumResult<PlanePoint> contains_zero_sum(const PlaneSet& a) {
  const auto m = a.modulus();
  const auto p = m.value();
  PlaneShifter shifter(m);
  const auto cells = shifter.cells();
  Bits reached(cells);
  std::vector<std::int32_t> pred(cells, -1);
  const auto pts = a.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Bits next = reached;
    shifter.or_translated(next, reached, pts[i]);
    next.set(plane_index(pts[i], m));
    Bits fresh = next;
    fresh.subtract(reached);
    fresh.for_each_set([&](std::size_t idx) { pred[idx] = static_cast<std::int32_t>(i); });
    reached = std::move(next);
    if (reached.test(0)) break;
  }
  ZeroSumResult<PlanePoint> result;
  if (!reached.test(0)) return result;

  // Walk back: the sum s was first reached at step pred[s], either as the
  // singleton or as (s - a_i) from an earlier step.
  std::uint32_t s = 0;
  std::int32_t last = static_cast<std::int32_t>(pts.size());
  while (true) {
    const auto i = pred[s];
    if (i < 0 || i >= last) throw SoundnessError("zero-sum witness reconstruction failed");
    const auto pt = pts[i];
    result.witness.push_back(pt);
    if (s == plane_index(pt, m)) break;
    auto cur = plane_point(s, m);
    s = plane_index({m.sub(cur.x, pt.x), m.sub(cur.y, pt.y)}, m);
    last = i;
  }
  std::uint32_t sx = 0, sy = 0;
  for (auto pt : result.witness) {
    sx = (sx + pt.x) % p;
    sy = (sy + pt.y) % p;
  }
  if (sx != 0 || sy != 0) throw SoundnessError("zero-sum witness does not sum to zero");
  std::reverse(result.witness.begin(), result.witness.end());
  result.found = true;
  return result;
}

ZeroSumResult<std::uint32_t> contains_zero_sum(const ResidueSet& a) {
  const auto m = a.modulus();
  const auto p = m.value();
  Bits reached(p);
  std::vector<std::int32_t> pred(p, -1);
  const auto vals = a.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Bits next = reached;
    next.or_rotated(reached, vals[i]);
    next.set(vals[i]);
    Bits fresh = next;
    fresh.subtract(reached);
    fresh.for_each_set([&](std::size_t idx) { pred[idx] = static_cast<std::int32_t>(i); });
    reached = std::move(next);
    if (reached.test(0)) break;
  }
  ZeroSumResult<std::uint32_t> result;
  if (!reached.test(0)) return result;
  std::uint32_t s = 0;
  std::int32_t last = static_cast<std::int32_t>(vals.size());
  while (true) {
    const auto i = pred[s];
    if (i < 0 || i >= last) throw SoundnessError("zero-sum witness reconstruction failed");
    result.witness.push_back(vals[i]);
    if (s == vals[i]) break;
    s = m.sub(s, vals[i]);
    last = i;
  }
  std::uint64_t total = 0;
  for (auto v : result.witness) total += v;
  if (total % p != 0) throw SoundnessError("zero-sum witness does not sum to zero");
  std::reverse(result.witness.begin(), result.witness.end());
  result.found = true;
  return result;
}

bool is_zero_sum_free_cyclic(std::span<const std::uint32_t> values, std::uint32_t n) {
  return !cyclic_subset_sums(values, n, false).test(0);
}

namespace {

// counts'[c + a] += counts[c]; one row at a time, each row split in two runs.
template <class T, class AddRun>
void translate_add(std::vector<T>& counts, const std::vector<T>& prev, std::uint32_t p,
                   PlanePoint by, AddRun add_run) {
  for (std::uint32_t x = 0; x < p; ++x) {
    const T* src = prev.data() + std::size_t{x} * p;
    T* dst = counts.data() + std::size_t{(x + by.x) % p} * p;
    add_run(dst + by.y, src, p - by.y);
    add_run(dst, src + (p - by.y), by.y);
  }
}

}  // namespace

BigInt count_zero_sum_subsets(const PlaneSet& a) {
  const auto p = a.modulus().value();
  const std::size_t cells = std::size_t{p} * p;
  if (a.size() < 64) {
    const auto& k = kernels::active();
    std::vector<std::uint64_t> counts(cells, 0);
    counts[0] = 1;
    for (auto pt : a.points()) {
      const auto prev = counts;
      translate_add(counts, prev, p, pt, [&](std::uint64_t* d, const std::uint64_t* s, std::size_t n) {
        if (n) k.add_u64(d, s, n);
      });
    }
    return BigInt(counts[0]);
  }
  std::vector<BigInt> counts(cells, 0);
  counts[0] = 1;
  for (auto pt : a.points()) {
    const auto prev = counts;
    translate_add(counts, prev, p, pt, [](BigInt* d, const BigInt* s, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) d[i] += s[i];
    });
  }
  return counts[0];
}

}  // namespace zerosum
