#pragma once

// Word-parallel inner loops of the subset-sum dynamic programs. Every kernel
// has a portable scalar reference; vector variants are picked at runtime and
// must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace zerosum::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct Table {
  Isa isa;
  // dst[i] |= ((src << shift) & mask)[i] for i < words; mask may be null.
  // Shifts are linear over the multiword integer (bits fall off the top).
  // dst and src must not overlap.
  void (*shl_or)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                 std::size_t shift, const std::uint64_t* mask);
  // dst[i] |= ((src >> shift) & mask)[i]; same contract as shl_or.
  void (*shr_or)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                 std::size_t shift, const std::uint64_t* mask);
  // dst[i] += src[i] (wrapping).
  void (*add_u64)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  std::uint64_t (*popcount)(const std::uint64_t* src, std::size_t words);
};

bool supported(Isa isa);
Isa best_available();

/// Table for a specific ISA; throws InvalidArgument if the CPU lacks it.
const Table& table(Isa isa);

/// Kernels used by the library. Defaults to best_available(), or to the
/// value of ZEROSUM_ISA ("scalar" / "avx2") when set.
const Table& active();
void select(Isa isa);

namespace scalar {
extern const Table kTable;
}
namespace avx2 {
// Null entries when the build target is not x86-64.
extern const Table kTable;
bool compiled();
}  // namespace avx2

}  // namespace zerosum::kernels
