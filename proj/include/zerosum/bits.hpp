#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zerosum/modular.hpp"
#include "zerosum/plane.hpp"

namespace zerosum {

/// Fixed-width bit vector. Bits at positions >= size() are always zero.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void clear();
  void fill();

  std::size_t count() const;
  bool none() const;
  bool all() const { return count() == nbits_; }

  Bits& operator|=(const Bits& other);
  Bits& operator&=(const Bits& other);
  /// this &= ~other
  Bits& subtract(const Bits& other);

  /// this |= rotl(src, shift) over size() bits (cyclic). src must not be *this.
  void or_rotated(const Bits& src, std::size_t shift);

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t v = words_[w]; v; v &= v - 1) f(w * 64 + std::countr_zero(v));
    }
  }

  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  void trim();
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Translation of p*p-bit plane vectors (row-major (x, y)) by a point.
/// Row rotation uses two masked linear shifts; the row permutation is a
/// cyclic shift by a multiple of p.
class PlaneShifter {
 public:
  explicit PlaneShifter(Modulus m);

  Modulus modulus() const { return modulus_; }
  std::size_t cells() const { return std::size_t{modulus_.value()} * modulus_.value(); }

  /// dst |= src + by. dst must not be src.
  void or_translated(Bits& dst, const Bits& src, PlanePoint by) const;

 private:
  Modulus modulus_;
  std::vector<Bits> keep_shifted_;  // in-row positions >= b
  std::vector<Bits> keep_wrapped_;  // in-row positions < b
};

}  // namespace zerosum
