#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "zerosum/modular.hpp"
#include "zerosum/plane.hpp"

using namespace zerosum;

TEST_CASE("primality and modulus construction") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(7917));
  CHECK_THROWS_AS(Modulus(9), InvalidArgument);
  CHECK_THROWS_AS(Modulus(1), InvalidArgument);
  CHECK(isqrt(1020) == 31);
  CHECK(isqrt(1024) == 32);
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
}

TEST_CASE("residue arithmetic") {
  const Modulus m(7);
  const Residue a(5, m), b(-3, m);
  CHECK(b.value() == 4);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((a * b).value() == 6);
  CHECK((-a).value() == 2);
  for (std::uint32_t x = 1; x < 7; ++x) CHECK(m.mul(x, m.inverse(x)) == 1);
  CHECK_THROWS_AS(Residue(1, m) + Residue(1, Modulus(5)), ModulusMismatch);
}

TEST_CASE("residue sets reject duplicates after reduction") {
  const Modulus m(5);
  CHECK_THROWS_AS(ResidueSet(m, {1, 6}), InvalidArgument);
  ResidueSet s(m, {4, -1 + 5 * 3 + 1});
  CHECK(s.size() == 2);
  CHECK(s.contains(0));
  CHECK(ResidueSet::full(m).size() == 5);
}

TEST_CASE("enumerate_subgroups") {
  CHECK(enumerate_subgroups(Modulus(3)).size() == 4);
  CHECK(enumerate_subgroups(Modulus(2)).size() == 3);

  // p = 5: the 6 subgroups split the 24 nonzero points into classes of 4,
  // matching the classes of the ratio y/x (x = 0 being its own class).
  const Modulus m(5);
  const auto subs = enumerate_subgroups(m);
  REQUIRE(subs.size() == 6);
  std::map<int, std::set<PlanePoint>> by_ratio;
  for (std::uint32_t x = 0; x < 5; ++x) {
    for (std::uint32_t y = 0; y < 5; ++y) {
      if (x == 0 && y == 0) continue;
      const int ratio = x == 0 ? -1 : static_cast<int>(m.mul(y, m.inverse(x)));
      by_ratio[ratio].insert({x, y});
    }
  }
  std::set<std::set<PlanePoint>> classes, found;
  for (auto& [r, pts] : by_ratio) classes.insert(pts);
  for (const auto& u : subs) {
    std::set<PlanePoint> pts;
    for (std::uint32_t x = 0; x < 5; ++x)
      for (std::uint32_t y = 0; y < 5; ++y)
        if ((x || y) && u.contains({x, y})) pts.insert({x, y});
    CHECK(pts.size() == 4);
    found.insert(pts);
  }
  CHECK(found == classes);
}

TEST_CASE("project") {
  CHECK(project({3, 1}, Subgroup::vertical(Modulus(5))) == 3);
  CHECK(project({3, 1}, Subgroup::slope(Modulus(5), 2)) == 0);
  CHECK(project({4, 2}, Subgroup::slope(Modulus(7), 0)) == 2);

  PlaneSet owner(Modulus(5), {{1, 1}});
  CHECK_THROWS_AS(project(owner, {1, 1}, Subgroup::vertical(Modulus(7))), ModulusMismatch);
}

TEST_CASE("project vanishes exactly on multiples of the generator") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Modulus m(p);
    for (const auto& u : enumerate_subgroups(m)) {
      const auto g = u.generator();
      std::set<PlanePoint> multiples;
      for (std::uint32_t t = 0; t < p; ++t) multiples.insert({m.mul(t, g.x), m.mul(t, g.y)});
      for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y < p; ++y) {
          const PlanePoint a{x, y};
          CHECK((u.project(a) == 0) == (multiples.count(a) == 1));
        }
      }
    }
  }
}

TEST_CASE("distinct subgroups meet only in zero") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Modulus m(p);
    for (std::uint32_t x = 0; x < p; ++x) {
      for (std::uint32_t y = 0; y < p; ++y) {
        if (!x && !y) continue;
        int holders = 0;
        for (const auto& u : enumerate_subgroups(m)) holders += u.contains({x, y});
        CHECK(holders == 1);
      }
    }
  }
}

TEST_CASE("coset_profile") {
  const Modulus m(5);
  const auto v = Subgroup::vertical(m);
  PlaneSet whole(m);
  for (std::uint32_t t = 0; t < 5; ++t) whole.insert(PlanePoint{0, t});
  CHECK(coset_profile(whole, v).lambda == std::vector<std::uint32_t>{5, 0, 0, 0, 0});

  CHECK(coset_profile(PlaneSet(m, {{1, 0}, {1, 1}, {1, 2}}), v).lambda ==
        std::vector<std::uint32_t>{0, 3, 0, 0, 0});

  const auto prof = coset_profile(PlaneSet(m, {{0, 1}, {1, 1}, {2, 4}}), Subgroup::slope(m, 1));
  CHECK(prof.lambda == std::vector<std::uint32_t>{1, 1, 1, 0, 0});
  CHECK(prof.total() == 3);
}

TEST_CASE("max_concentration") {
  const Modulus m(5);
  CHECK(max_concentration(PlaneSet(m, {{0, 0}})).value == 1);
  const auto c = max_concentration(PlaneSet(m, {{1, 0}, {2, 0}, {0, 1}}));
  CHECK(c.value == 2);

  PlaneSet coset(m, {{3, 0}, {3, 1}, {3, 4}});
  CHECK(max_concentration(coset).value == 3);
}

TEST_CASE("profiles sum to the set size and concentration meets pigeonhole") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Modulus m(p);
    std::uint64_t state = p;
    for (int trial = 0; trial < 50; ++trial) {
      PlaneSet s(m);
      for (std::uint32_t c = 0; c < p * p; ++c) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        if ((state >> 61) < 3) s.insert(PlanePoint{c / p, c % p});
      }
      for (const auto& u : enumerate_subgroups(m)) CHECK(coset_profile(s, u).total() == s.size());
      CHECK(max_concentration(s).value >= (s.size() + p - 1) / p);
    }
  }
}

TEST_CASE("plane sets") {
  const Modulus m(3);
  PlaneSet s(m, {{4, -1}});
  CHECK(s.contains({1, 2}));
  CHECK_THROWS_AS(s.insert(1, 2), InvalidArgument);
  CHECK_THROWS_AS(s.insert(PlanePoint{3, 0}), InvalidArgument);
}
