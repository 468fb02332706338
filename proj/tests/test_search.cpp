#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zerosum/modular.hpp"
#include "zerosum/search.hpp"
#include "zerosum/sumset.hpp"

using namespace zerosum;

TEST_CASE("group descriptors") {
  CHECK(GroupDescriptor::cyclic(7).key() == "Z/7");
  CHECK(GroupDescriptor::plane(5).key() == "Z/5+Z/5");
  CHECK(GroupDescriptor::parse("Z/5+Z/5") == GroupDescriptor::plane(5));
  CHECK(GroupDescriptor::parse("Z/12") == GroupDescriptor::cyclic(12));
  CHECK_THROWS_AS(GroupDescriptor::parse("Z/5+Z/7"), InvalidArgument);
  CHECK_THROWS_AS(GroupDescriptor::parse("Q/5"), InvalidArgument);
}

TEST_CASE("olson_cyclic small values") {
  CHECK(olson_cyclic(2).olson == 2);
  CHECK(olson_cyclic(3).olson == 2);
  const auto r5 = olson_cyclic(5);
  CHECK(r5.olson == 3);
  CHECK(r5.method == Method::exact);
  const auto r7 = olson_cyclic(7);
  CHECK(r7.olson == 4);
  REQUIRE_FALSE(r7.extremal_examples.empty());
  CHECK(r7.extremal_examples.front() == EncodedSet{1, 2, 3});
  CHECK(r7.examples_verified);
  CHECK(r7.reorder_agrees);
}

TEST_CASE("olson_cyclic matches the naive oracle for n <= 20") {
  for (std::uint32_t n = 2; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(olson_cyclic_value(n) == oracle::olson_naive(n));
  }
}

TEST_CASE("olson_cyclic limits") {
  CHECK_THROWS_AS(olson_cyclic(61), LimitExceeded);
  CHECK_THROWS_AS(olson_cyclic(1), LimitExceeded);
  SearchOptions o;
  o.cyclic_max = 10;
  CHECK_THROWS_AS(olson_cyclic(11, o), LimitExceeded);
}

TEST_CASE("extremal examples are free, of the right size and canonical") {
  for (std::uint32_t n : {6u, 11u, 12u, 17u}) {
    const auto g = GroupDescriptor::cyclic(n);
    const auto r = olson_cyclic(n);
    for (const auto& e : r.extremal_examples) {
      CHECK(e.size() + 1 == r.olson);
      CHECK(oracle::cyclic_free(e, n));
      CHECK(canonical_form(g, e) == e);
    }
  }
}

TEST_CASE("thread count does not change results") {
  SearchOptions one, many;
  many.threads = 4;
  for (std::uint32_t n : {13u, 24u, 31u}) {
    auto a = olson_cyclic(n, one), b = olson_cyclic(n, many);
    a.compute_seconds = b.compute_seconds = 0;
    CHECK(a == b);
  }
  auto a = olson_plane(5, one), b = olson_plane(5, many);
  a.compute_seconds = b.compute_seconds = 0;
  CHECK(a == b);
}

TEST_CASE("olson_plane small values") {
  CHECK(olson_plane(2).olson == 3);
  const auto r3 = olson_plane(3);
  CHECK(r3.olson == 4);
  CHECK(r3.examples_verified);
  CHECK(olson_plane(5).olson == 7);
  SearchOptions o;
  o.plane_max = 5;
  CHECK_THROWS_AS(olson_plane(7, o, true), LimitExceeded);
  const auto lb = olson_plane(7, o, false);
  CHECK(lb.method == Method::lower_bound_only);
  CHECK(lb.olson == 10);
  CHECK_THROWS_AS(olson_plane(9, o, false), InvalidArgument);
}

TEST_CASE("Z_2^2 by brute force") {
  // Every 3-subset of Z_2^2 with zero excluded is {a, b, a+b}; so Ol = 3.
  const Modulus m(2);
  std::uint32_t best = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<oracle::Pt> pts;
    for (std::uint32_t c = 0; c < 4; ++c)
      if (mask >> c & 1) pts.emplace_back(c / 2, c % 2);
    if (oracle::count_plane_zero_sums(pts, 2) == 1) best = std::max<std::uint32_t>(best, pts.size());
  }
  CHECK(best + 1 == olson_plane(2).olson);
}

TEST_CASE("canonical forms") {
  const auto g = GroupDescriptor::cyclic(7);
  CHECK(canonical_form(g, {2, 4, 6}) == EncodedSet{1, 2, 3});
  CHECK(canonical_form(g, {}) == EncodedSet{});
  const auto pl = GroupDescriptor::plane(3);
  // Any two independent points map to (0,1), (1,0).
  CHECK(canonical_form(pl, {4, 5}) == EncodedSet{1, 3});
}

TEST_CASE("enumerate_maximal_free_sets") {
  SearchOptions o;
  // Z_5 pairs: the free pairs are the 8 pairs without {x, -x}; units act
  // with orbits {1,2}-type and {1,3}-type.
  std::set<EncodedSet> orbits;
  for (std::uint32_t a = 1; a < 5; ++a)
    for (std::uint32_t b = a + 1; b < 5; ++b)
      if ((a + b) % 5) orbits.insert(canonical_form(GroupDescriptor::cyclic(5), {a, b}));
  const auto e = enumerate_maximal_free_sets(GroupDescriptor::cyclic(5), 2, o);
  CHECK(std::set<EncodedSet>(e.orbits.begin(), e.orbits.end()) == orbits);
  CHECK(e.orbits.size() == 1);
  CHECK_FALSE(e.truncated);

  const auto z2 = enumerate_maximal_free_sets(GroupDescriptor::plane(2), 2, o);
  CHECK(z2.orbits.size() == 1);
  const auto empty = enumerate_maximal_free_sets(GroupDescriptor::cyclic(11), 0, o);
  REQUIRE(empty.orbits.size() == 1);
  CHECK(empty.orbits.front().empty());

  const auto capped = enumerate_maximal_free_sets(GroupDescriptor::cyclic(23), 6, o, 2);
  CHECK(capped.orbits.size() == 2);
  CHECK(capped.truncated);
}

TEST_CASE("unit multiplication preserves freeness") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const Modulus m(p);
    for (std::uint32_t mask = 1; mask < (1u << (p - 1)); mask += (p > 7 ? 7 : 1)) {
      EncodedSet s;
      for (std::uint32_t e = 1; e < p; ++e)
        if (mask >> (e - 1) & 1) s.push_back(e);
      const bool free = oracle::cyclic_free(s, p);
      for (std::uint32_t u = 2; u < p; ++u) {
        EncodedSet t;
        for (auto x : s) t.push_back(m.mul(u, x));
        CHECK(is_zero_sum_free(GroupDescriptor::cyclic(p), t) == free);
      }
    }
  }
}

TEST_CASE("cyclic witness") {
  CHECK(construct_cyclic_witness(Modulus(7)).size() == 3);
  CHECK(construct_cyclic_witness(Modulus(3)).size() == 1);
  const auto w = construct_cyclic_witness(Modulus(101));
  CHECK(w.size() == 13);
  CHECK(w.size() + 1 >= isqrt(202));
  for (std::uint32_t p : oracle::primes_upto(400)) {
    if (p < 3) continue;
    const auto s = construct_cyclic_witness(Modulus(p));
    CHECK_FALSE(contains_zero_sum(s).found);
    CHECK(s.size() + 1 >= isqrt(2 * p));
  }
}

TEST_CASE("plane witness") {
  const auto w3 = construct_plane_witness(Modulus(3));
  CHECK(w3.size() == 3);
  CHECK(w3.contains({1, 0}));
  CHECK(w3.contains({1, 1}));
  CHECK(construct_plane_witness(Modulus(5)).size() == 6);
  CHECK(construct_plane_witness(Modulus(7)).size() == 9);
  for (std::uint32_t p : oracle::primes_upto(31)) {
    const Modulus m(p);
    const auto w = construct_plane_witness(m);
    CHECK(w.size() + 1 == p - 1 + olson_cyclic_value(p));
    CHECK(count_zero_sum_subsets(w) == 1);
  }
  CHECK_THROWS_AS(construct_plane_witness(Modulus(5), ResidueSet(Modulus(5), {1, 4})), SoundnessError);
}

TEST_CASE("classify_structure") {
  const Modulus m3(3);
  const auto s = classify_structure(construct_plane_witness(m3));
  CHECK(s.matches_theorem2);
  REQUIRE(s.subgroup_index);
  CHECK(*s.subgroup_index == 3);  // vertical
  CHECK(s.in_u == 1);
  CHECK(s.coset_elements == 2);

  // {(1,0),(0,1),(1,1)}: slope 0 holds (1,0) and puts the other two on y = 1.
  const auto t = classify_structure(PlaneSet(m3, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(t.matches_theorem2);
  CHECK(t.matching_subgroups.size() == 2);

  const auto d = classify_structure(PlaneSet(m3, {{0, 1}}));
  CHECK(d.degenerate);
  CHECK(d.coset_elements == 0);

  CHECK_THROWS_AS(classify_structure(PlaneSet(m3, {{1, 1}, {2, 2}})), InvalidArgument);

  // No subgroup puts these four points into U and a single coset.
  const Modulus m5(5);
  const auto n = classify_structure(PlaneSet(m5, {{1, 0}, {0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(n.matches_theorem2);
}

TEST_CASE("coset structure of extremal plane sets") {
  // p = 3: every extremal set is one point of U plus a coset pair. p = 5:
  // four orbits, only one of them (the construction's) has the structure.
  SearchOptions o;
  o.max_examples = 1000;
  const std::pair<std::uint32_t, std::size_t> expected[] = {{3, 1}, {5, 1}};
  for (auto [p, matching] : expected) {
    const Modulus m(p);
    const auto r = olson_plane(p, o);
    CHECK_FALSE(r.examples_truncated);
    std::size_t matched = 0;
    for (const auto& e : r.extremal_examples) {
      PlaneSet s(m);
      std::vector<oracle::Pt> pts;
      for (auto c : e) {
        s.insert(plane_point(c, m));
        pts.emplace_back(c / p, c % p);
      }
      CHECK(oracle::count_plane_zero_sums(pts, p) == 1);
      const auto st = classify_structure(s);
      if (st.matches_theorem2) {
        ++matched;
        CHECK(st.in_u == olson_cyclic_value(p) - 1);
      }
    }
    CHECK(matched == matching);
  }
  CHECK(olson_plane(5, o).extremal_examples.size() == 4);
}
