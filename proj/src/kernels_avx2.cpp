#include "zerosum/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <bit>

#define ZS_AVX2 __attribute__((target("avx2")))

namespace zerosum::kernels::avx2 {
namespace {

ZS_AVX2 inline void or_store(std::uint64_t* dst, const std::uint64_t* mask, std::size_t i,
                             __m256i v) {
  if (mask) v = _mm256_and_si256(v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i)));
  auto* d = reinterpret_cast<__m256i*>(dst + i);
  _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), v));
}

ZS_AVX2 void shl_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                    std::size_t shift, const std::uint64_t* mask) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= words) return;
  auto scalar_word = [&](std::size_t i) {
    std::uint64_t v = src[i - q] << r;
    if (r && i > q) v |= src[i - q - 1] >> (64 - r);
    dst[i] |= mask ? (v & mask[i]) : v;
  };
  // srl by 64 yields zero, which covers r == 0.
  const __m128i left = _mm_cvtsi64_si128(static_cast<long long>(r));
  const __m128i right = _mm_cvtsi64_si128(static_cast<long long>(64 - r));
  std::size_t i = q;
  scalar_word(i++);
  for (; i + 4 <= words; i += 4) {
    __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - q));
    __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - q - 1));
    or_store(dst, mask, i, _mm256_or_si256(_mm256_sll_epi64(hi, left), _mm256_srl_epi64(lo, right)));
  }
  for (; i < words; ++i) scalar_word(i);
}

ZS_AVX2 void shr_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                    std::size_t shift, const std::uint64_t* mask) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= words) return;
  const std::size_t n = words - q;  // output words that receive data
  auto scalar_word = [&](std::size_t i) {
    std::uint64_t v = src[i + q] >> r;
    if (r && i + q + 1 < words) v |= src[i + q + 1] << (64 - r);
    dst[i] |= mask ? (v & mask[i]) : v;
  };
  const __m128i right = _mm_cvtsi64_si128(static_cast<long long>(r));
  const __m128i left = _mm_cvtsi64_si128(static_cast<long long>(64 - r));
  std::size_t i = 0;
  // The last output word has no upper neighbour; keep it scalar.
  for (; i + 4 < n; i += 4) {
    __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + q));
    __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + q + 1));
    or_store(dst, mask, i, _mm256_or_si256(_mm256_srl_epi64(lo, right), _mm256_sll_epi64(hi, left)));
  }
  for (; i < n; ++i) scalar_word(i);
}

ZS_AVX2 void add_u64(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_add_epi64(_mm256_loadu_si256(d), s));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

// Nibble-lookup popcount (Muła), accumulated with vpsadbw.
ZS_AVX2 std::uint64_t popcount(const std::uint64_t* src, std::size_t words) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; i < words; ++i) total += std::popcount(src[i]);
  return total;
}

}  // namespace

const Table kTable{Isa::avx2, shl_or, shr_or, add_u64, popcount};
bool compiled() { return true; }

}  // namespace zerosum::kernels::avx2

#else

namespace zerosum::kernels::avx2 {
const Table kTable{Isa::avx2, nullptr, nullptr, nullptr, nullptr};
bool compiled() { return false; }
}  // namespace zerosum::kernels::avx2

#endif
