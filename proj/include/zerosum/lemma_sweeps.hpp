#pragma once

// Exhaustive and seeded-random sweeps of the three inequality verifiers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/modular.hpp"

namespace zerosum {

enum class Lemma { ddsh, cauchy_davenport, olson_sigma };

std::string lemma_name(Lemma l);

struct SweepConfig {
  std::uint64_t trials = 0;  // random cases (ignored in exhaustive mode)
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool exhaustive = false;
};

struct SweepCase {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;  // second set for Cauchy-Davenport
  std::uint64_t k = 0;           // subset size for Dias da Silva-Hamidoune
  std::uint64_t lhs = 0;
  double rhs = 0;
};

struct SweepResult {
  Lemma lemma;
  std::uint32_t p = 0;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<SweepCase> first_violation;  // lowest case index
};

/// Largest p accepted in exhaustive mode.
inline constexpr std::uint32_t kExhaustiveSweepMaxP = 13;

SweepResult sweep_lemma(Lemma lemma, Modulus m, const SweepConfig& config);

}  // namespace zerosum
