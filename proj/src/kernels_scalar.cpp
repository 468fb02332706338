#include <bit>

#include "zerosum/kernels.hpp"

namespace zerosum::kernels::scalar {
namespace {

void shl_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t words, std::size_t shift,
            const std::uint64_t* mask) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= words) return;
  for (std::size_t i = q; i < words; ++i) {
    std::uint64_t v = src[i - q] << r;
    if (r && i > q) v |= src[i - q - 1] >> (64 - r);
    dst[i] |= mask ? (v & mask[i]) : v;
  }
}

void shr_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t words, std::size_t shift,
            const std::uint64_t* mask) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= words) return;
  for (std::size_t i = 0; i + q < words; ++i) {
    std::uint64_t v = src[i + q] >> r;
    if (r && i + q + 1 < words) v |= src[i + q + 1] << (64 - r);
    dst[i] |= mask ? (v & mask[i]) : v;
  }
}

void add_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

std::uint64_t popcount(const std::uint64_t* src, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(src[i]);
  return total;
}

}  // namespace

const Table kTable{Isa::scalar, shl_or, shr_or, add_u64, popcount};

}  // namespace zerosum::kernels::scalar
