#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zerosum/rng.hpp"
#include "zerosum/sumset.hpp"

using namespace zerosum;

namespace {

std::set<std::uint32_t> as_set(const Bits& b) {
  const auto v = b.indices();
  return {v.begin(), v.end()};
}

std::vector<std::uint32_t> values(const ResidueSet& s) { return {s.values().begin(), s.values().end()}; }

ResidueSet random_residues(Rng& rng, Modulus m, std::uint32_t k) {
  ResidueSet s(m);
  for (auto v : rng.sample(m.value(), k)) s.insert(v);
  return s;
}

PlaneSet random_plane(Rng& rng, Modulus m, std::uint32_t k) {
  PlaneSet s(m);
  for (auto c : rng.sample(m.value() * m.value(), k)) s.insert(plane_point(c, m));
  return s;
}

std::vector<oracle::Pt> points(const PlaneSet& s) {
  std::vector<oracle::Pt> out;
  for (auto pt : s.points()) out.emplace_back(pt.x, pt.y);
  return out;
}

}  // namespace

TEST_CASE("subset_sums examples") {
  const Modulus m7(7);
  CHECK(subset_sums(ResidueSet(m7), false).size() == 0);
  CHECK(as_set(subset_sums(ResidueSet(m7, {0}), false).bits) == std::set<std::uint32_t>{0});
  const auto s = subset_sums(ResidueSet(m7, {1, 2}), true);
  CHECK(s.includes_empty);
  CHECK(as_set(s.bits) == std::set<std::uint32_t>{0, 1, 2, 3});
  CHECK(subset_sums(ResidueSet(m7, {1, 2}), false).size() == 3);
}

TEST_CASE("fixed_size_subset_sums examples") {
  const Modulus m7(7);
  CHECK(as_set(fixed_size_subset_sums(ResidueSet(m7, {1, 2, 3}), 0)) == std::set<std::uint32_t>{0});
  CHECK(as_set(fixed_size_subset_sums(ResidueSet(m7, {1, 2, 3}), 2)) == std::set<std::uint32_t>{3, 4, 5});
  CHECK(fixed_size_subset_sums(ResidueSet(Modulus(11), {0, 1, 2, 3, 4, 5, 6}), 3).count() == 11);
  CHECK_THROWS_AS(fixed_size_subset_sums(ResidueSet(m7, {1}), 2), InvalidArgument);
}

TEST_CASE("pairwise_sumset examples") {
  const Modulus m5(5);
  const ResidueSet b(m5, {1, 3});
  CHECK(as_set(pairwise_sumset(ResidueSet(m5, {0}), b)) == std::set<std::uint32_t>{1, 3});
  CHECK(as_set(pairwise_sumset(ResidueSet(m5, {0, 1}), ResidueSet(m5, {0, 1}))) == std::set<std::uint32_t>{0, 1, 2});
  CHECK(pairwise_sumset(ResidueSet::full(m5), ResidueSet(m5, {2})).count() == 5);
}

TEST_CASE("verify_ddsh examples") {
  const Modulus m7(7);
  const auto r = verify_ddsh(ResidueSet(m7, {1, 2, 3}), 2);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3);
  CHECK(r.holds);
  const auto full = verify_ddsh(ResidueSet(m7, {1, 2, 3}), 3);
  CHECK(full.lhs == 1);
  CHECK(full.rhs == 1);
  const auto cor = verify_ddsh(ResidueSet(Modulus(11), {0, 1, 2, 3, 4, 5, 6}), 3);
  CHECK(cor.ell == 7);
  CHECK(cor.corollary_applies);
  CHECK(cor.corollary_holds);
  CHECK(cor.lhs == 11);
  CHECK_THROWS_AS(verify_ddsh(ResidueSet(m7, {1, 2}), 0), InvalidArgument);
  CHECK_THROWS_AS(verify_ddsh(ResidueSet(m7, {1, 2}), 3), InvalidArgument);
}

TEST_CASE("verify_cd examples") {
  const Modulus m5(5);
  const auto r = verify_cd(ResidueSet(m5, {0, 1}), ResidueSet(m5, {0, 1}));
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3);
  CHECK(r.holds);
  const auto t = verify_cd(ResidueSet(m5, {4}), ResidueSet(m5, {0, 2, 3}));
  CHECK(t.lhs == 3);
  CHECK(t.rhs == 3);
  const Modulus m7(7);
  const auto f = verify_cd(ResidueSet::full(m7), ResidueSet::full(m7));
  CHECK(f.lhs == 7);
  CHECK(f.rhs == 7);
  CHECK_THROWS_AS(verify_cd(ResidueSet(m5), ResidueSet(m5, {1})), InvalidArgument);
}

TEST_CASE("verify_olson_sigma examples") {
  const auto a = verify_olson_sigma(ResidueSet(Modulus(7), {1, 2}));
  CHECK(a.lhs == 4);
  CHECK(a.rhs == 4);
  CHECK(a.holds);
  const auto b = verify_olson_sigma(ResidueSet(Modulus(5), {1}));
  CHECK(b.lhs == 2);
  CHECK(b.rhs == 1);
  const auto c = verify_olson_sigma(ResidueSet(Modulus(11), {1, 2, 3}));
  CHECK(c.lhs == 7);
  CHECK(c.rhs == 6);
  CHECK_THROWS_AS(verify_olson_sigma(ResidueSet(Modulus(7), {1, 6})), InvalidArgument);
  CHECK_THROWS_AS(verify_olson_sigma(ResidueSet(Modulus(7), {0, 2})), InvalidArgument);
}

TEST_CASE("contains_zero_sum examples") {
  const Modulus m3(3);
  const auto z = contains_zero_sum(PlaneSet(m3, {{0, 0}, {1, 2}}));
  CHECK(z.found);
  CHECK(z.witness == std::vector<PlanePoint>{{0, 0}});
  const auto pair = contains_zero_sum(PlaneSet(m3, {{1, 1}, {2, 2}}));
  CHECK(pair.found);
  CHECK(pair.witness.size() == 2);
  CHECK_FALSE(contains_zero_sum(PlaneSet(m3, {{1, 0}, {0, 1}, {1, 1}})).found);
  CHECK_FALSE(contains_zero_sum(PlaneSet(m3)).found);
}

TEST_CASE("count_zero_sum_subsets examples") {
  CHECK(count_zero_sum_subsets(PlaneSet(Modulus(5), {{1, 0}})) == 1);
  CHECK(count_zero_sum_subsets(PlaneSet(Modulus(3), {{1, 1}, {2, 2}})) == 2);
  // All four points of Z_2^2: the empty set, {0}, {a, b, a+b} and {0, a, b, a+b}.
  const PlaneSet all(Modulus(2), {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(count_zero_sum_subsets(all) == 4);
  CHECK(count_zero_sum_subsets(all) == oracle::count_plane_zero_sums(points(all), 2));
}

TEST_CASE("DP agrees with naive enumeration") {
  Rng rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Modulus m(p);
    for (int trial = 0; trial < 60; ++trial) {
      const auto k = static_cast<std::uint32_t>(rng.below(p + 1));
      const auto a = random_residues(rng, m, k);
      const auto v = values(a);
      for (bool e : {false, true}) CHECK(as_set(subset_sums(a, e).bits) == oracle::subset_sums(v, p, e));
      const auto all = all_fixed_size_subset_sums(a);
      REQUIRE(all.size() == k + 1);
      for (std::size_t j = 0; j <= k; ++j) {
        CHECK(as_set(all[j]) == oracle::fixed_size_sums(v, p, j));
        CHECK(as_set(fixed_size_subset_sums(a, j)) == as_set(all[j]));
        // Σ_k ⊆ Σ with the empty sum admitted only for k = 0.
        const auto sigma = as_set(subset_sums(a, j == 0).bits);
        for (auto x : as_set(all[j])) CHECK(sigma.count(x) == 1);
      }
      const auto b = random_residues(rng, m, 1 + static_cast<std::uint32_t>(rng.below(p)));
      CHECK(as_set(pairwise_sumset(a, b)) == oracle::sumset(v, values(b), p));
      CHECK(contains_zero_sum(a).found == !oracle::cyclic_free(v, p));
    }
  }
}

TEST_CASE("plane DP agrees with naive enumeration") {
  Rng rng(99);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Modulus m(p);
    for (int trial = 0; trial < 40; ++trial) {
      const auto k = static_cast<std::uint32_t>(rng.below(std::min<std::uint32_t>(p * p, 18) + 1));
      const auto a = random_plane(rng, m, k);
      const auto count = oracle::count_plane_zero_sums(points(a), p);
      CHECK(count_zero_sum_subsets(a) == count);
      const auto z = contains_zero_sum(a);
      CHECK(z.found == (count >= 2));
      if (z.found) {
        std::uint32_t x = 0, y = 0;
        for (auto pt : z.witness) {
          CHECK(a.contains(pt));
          x = m.add(x, pt.x);
          y = m.add(y, pt.y);
        }
        CHECK(x == 0);
        CHECK(y == 0);
      }
      std::set<std::uint32_t> reach;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint32_t x = 0, y = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
          if (mask >> i & 1) {
            x = m.add(x, a.points()[i].x);
            y = m.add(y, a.points()[i].y);
          }
        }
        reach.insert(x * p + y);
      }
      CHECK(as_set(plane_subset_sums(a, false).bits) == reach);
    }
  }
}

TEST_CASE("large sets use the big-integer count") {
  // 80 nonzero points of Z_11^2: roughly 2^80 / 121 zero-sum subsets.
  const Modulus m(11);
  PlaneSet a(m);
  for (std::uint32_t c = 1; c <= 80; ++c) a.insert(plane_point(c, m));
  const auto n = count_zero_sum_subsets(a);
  CHECK(n > BigInt(std::numeric_limits<std::uint64_t>::max()));
  // Adding 0 doubles the count.
  PlaneSet b = a;
  b.insert(PlanePoint{0, 0});
  CHECK(count_zero_sum_subsets(b) == 2 * n);
}

TEST_CASE("lemma inequalities hold on random inputs") {
  Rng rng(17);
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 101u}) {
    const Modulus m(p);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto a = random_residues(rng, m, 1 + static_cast<std::uint32_t>(rng.below(std::min(p, 30u))));
      CHECK(verify_ddsh(a, 1 + rng.below(a.size())).holds);
      const auto b = random_residues(rng, m, 1 + static_cast<std::uint32_t>(rng.below(std::min(p, 30u))));
      CHECK(verify_cd(a, b).holds);
    }
  }
}
