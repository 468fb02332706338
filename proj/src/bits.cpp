#include "zerosum/bits.hpp"

#include <algorithm>

#include "zerosum/kernels.hpp"

namespace zerosum {

void Bits::clear() { std::fill(words_.begin(), words_.end(), 0); }

void Bits::fill() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  trim();
}

void Bits::trim() {
  if (nbits_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
}

std::size_t Bits::count() const {
  return kernels::active().popcount(words_.data(), words_.size());
}

bool Bits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Bits& Bits::operator|=(const Bits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bits& Bits::subtract(const Bits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

void Bits::or_rotated(const Bits& src, std::size_t shift) {
  if (nbits_ == 0) return;
  shift %= nbits_;
  const auto& k = kernels::active();
  k.shl_or(words_.data(), src.words_.data(), words_.size(), shift, nullptr);
  if (shift) k.shr_or(words_.data(), src.words_.data(), words_.size(), nbits_ - shift, nullptr);
  trim();
}

std::vector<std::uint32_t> Bits::indices() const {
  std::vector<std::uint32_t> out;
  for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

PlaneShifter::PlaneShifter(Modulus m) : modulus_(m) {
  const std::uint32_t p = m.value();
  keep_shifted_.assign(p, Bits(cells()));
  keep_wrapped_.assign(p, Bits(cells()));
  for (std::uint32_t b = 0; b < p; ++b) {
    for (std::size_t i = 0; i < cells(); ++i) {
      if (i % p >= b) {
        keep_shifted_[b].set(i);
      } else {
        keep_wrapped_[b].set(i);
      }
    }
  }
}

void PlaneShifter::or_translated(Bits& dst, const Bits& src, PlanePoint by) const {
  const std::uint32_t p = modulus_.value();
  const auto& k = kernels::active();
  Bits rows(cells());
  auto* out = rows.words().data();
  const auto* in = src.words().data();
  const auto n = rows.word_count();
  k.shl_or(out, in, n, by.y, keep_shifted_[by.y].words().data());
  if (by.y) k.shr_or(out, in, n, p - by.y, keep_wrapped_[by.y].words().data());
  dst.or_rotated(rows, std::size_t{by.x} * p);
}

}  // namespace zerosum
