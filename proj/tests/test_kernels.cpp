#include <doctest.h>

#include <vector>

#include "zerosum/bits.hpp"
#include "zerosum/kernels.hpp"
#include "zerosum/rng.hpp"

using namespace zerosum;
namespace k = zerosum::kernels;

namespace {

std::vector<std::uint64_t> random_words(Rng& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) w = rng.next();
  return v;
}

// Bit-at-a-time model of dst |= (src << shift) & mask.
std::vector<std::uint64_t> model_shift(std::vector<std::uint64_t> dst, const std::vector<std::uint64_t>& src,
                                       std::size_t shift, const std::uint64_t* mask, bool left) {
  const std::size_t bits = src.size() * 64;
  for (std::size_t i = 0; i < bits; ++i) {
    if (!(src[i / 64] >> (i % 64) & 1)) continue;
    if (left ? i + shift >= bits : i < shift) continue;
    const std::size_t j = left ? i + shift : i - shift;
    if (mask && !(mask[j / 64] >> (j % 64) & 1)) continue;
    dst[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  return dst;
}

}  // namespace

TEST_CASE("scalar shifts match a bitwise model") {
  Rng rng(11);
  for (std::size_t words : {1u, 2u, 3u, 7u, 16u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto src = random_words(rng, words);
      const auto dst = random_words(rng, words);
      const auto mask = random_words(rng, words);
      const std::size_t shift = rng.below(words * 64 + 10);
      for (bool left : {true, false}) {
        for (const std::uint64_t* mk : {static_cast<const std::uint64_t*>(nullptr), mask.data()}) {
          auto got = dst;
          (left ? k::scalar::kTable.shl_or : k::scalar::kTable.shr_or)(got.data(), src.data(), words, shift, mk);
          CHECK(got == model_shift(dst, src, shift, mk, left));
        }
      }
    }
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!k::supported(k::Isa::avx2)) {
    MESSAGE("avx2 not available on this CPU; equivalence not exercised");
    return;
  }
  const auto& s = k::table(k::Isa::scalar);
  const auto& v = k::table(k::Isa::avx2);
  Rng rng(7);
  for (std::size_t words = 1; words <= 40; ++words) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto src = random_words(rng, words);
      const auto dst = random_words(rng, words);
      const auto mask = random_words(rng, words);
      const std::size_t shift = rng.below(words * 64 + 70);
      for (const std::uint64_t* mk : {static_cast<const std::uint64_t*>(nullptr), mask.data()}) {
        auto a = dst, b = dst;
        s.shl_or(a.data(), src.data(), words, shift, mk);
        v.shl_or(b.data(), src.data(), words, shift, mk);
        CHECK(a == b);
        a = dst, b = dst;
        s.shr_or(a.data(), src.data(), words, shift, mk);
        v.shr_or(b.data(), src.data(), words, shift, mk);
        CHECK(a == b);
      }
      auto a = dst, b = dst;
      s.add_u64(a.data(), src.data(), words);
      v.add_u64(b.data(), src.data(), words);
      CHECK(a == b);
      CHECK(s.popcount(src.data(), words) == v.popcount(src.data(), words));
    }
  }
}

TEST_CASE("dispatch selects a supported table") {
  CHECK(k::supported(k::Isa::scalar));
  CHECK(k::supported(k::best_available()));
  const auto before = k::active().isa;
  k::select(k::Isa::scalar);
  CHECK(k::active().isa == k::Isa::scalar);
  k::select(before);
}

TEST_CASE("rotations and plane translations match index arithmetic") {
  Rng rng(3);
  for (std::size_t n : {5u, 63u, 64u, 65u, 130u, 257u}) {
    Bits src(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.below(3) == 0) src.set(i);
    const auto shift = rng.below(n);
    Bits got(n);
    got.or_rotated(src, shift);
    Bits want(n);
    for (std::size_t i = 0; i < n; ++i)
      if (src.test(i)) want.set((i + shift) % n);
    CHECK(got == want);
  }
  for (std::uint32_t p : {2u, 3u, 7u, 11u, 13u, 31u}) {
    const Modulus m(p);
    const PlaneShifter shifter(m);
    Bits src(p * p);
    for (std::size_t i = 0; i < p * p; ++i)
      if (rng.below(4) == 0) src.set(i);
    for (int trial = 0; trial < 10; ++trial) {
      const PlanePoint by{static_cast<std::uint32_t>(rng.below(p)), static_cast<std::uint32_t>(rng.below(p))};
      Bits got(p * p);
      shifter.or_translated(got, src, by);
      Bits want(p * p);
      src.for_each_set([&](std::size_t c) {
        const auto pt = plane_point(static_cast<std::uint32_t>(c), m);
        want.set(plane_index({m.add(pt.x, by.x), m.add(pt.y, by.y)}, m));
      });
      CHECK(got == want);
    }
  }
}

TEST_CASE("library results do not depend on the selected kernels") {
  if (!k::supported(k::Isa::avx2)) return;
  const auto before = k::active().isa;
  Rng rng(5);
  const std::size_t n = 1000;
  Bits src(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.below(5) == 0) src.set(i);
  Bits a(n), b(n);
  k::select(k::Isa::scalar);
  a.or_rotated(src, 333);
  const auto ca = a.count();
  k::select(k::Isa::avx2);
  b.or_rotated(src, 333);
  CHECK(a == b);
  CHECK(ca == b.count());
  k::select(before);
}
