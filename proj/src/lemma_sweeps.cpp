#include "zerosum/lemma_sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "zerosum/parallel.hpp"
#include "zerosum/rng.hpp"
#include "zerosum/sumset.hpp"

namespace zerosum {
namespace {

ResidueSet from_mask(Modulus m, std::uint64_t mask) {
  ResidueSet s(m);
  for (std::uint32_t v = 0; v < m.value(); ++v) {
    if ((mask >> v) & 1u) s.insert(v);
  }
  return s;
}

ResidueSet from_values(Modulus m, const std::vector<std::uint32_t>& values) {
  ResidueSet s(m);
  for (auto v : values) s.insert(v);
  return s;
}

std::vector<std::uint32_t> to_vector(const ResidueSet& s) {
  return {s.values().begin(), s.values().end()};
}

// Tracks the violation with the smallest case index.
class ViolationLog {
 public:
  void record(std::uint64_t index, SweepCase c) {
    std::lock_guard lock(mutex_);
    ++count_;
    if (!first_ || index < first_index_) {
      first_ = std::move(c);
      first_index_ = index;
    }
  }
  void fill(SweepResult& r) const {
    r.violations = count_;
    r.first_violation = first_;
  }

 private:
  std::mutex mutex_;
  std::uint64_t count_ = 0;
  std::uint64_t first_index_ = 0;
  std::optional<SweepCase> first_;
};

// Asymmetric zero-free set from a base-3 code: digit i picks none / i+1 / -(i+1).
ResidueSet asymmetric_from_code(Modulus m, std::uint64_t code) {
  ResidueSet s(m);
  const std::uint32_t half = (m.value() - 1) / 2;
  for (std::uint32_t i = 1; i <= half; ++i, code /= 3) {
    if (code % 3 == 1) s.insert(i);
    if (code % 3 == 2) s.insert(m.neg(i));
  }
  return s;
}

std::uint64_t pow3(std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= 3;
  return r;
}

ResidueSet random_subset(Modulus m, Rng& rng, std::uint32_t min_size) {
  const auto p = m.value();
  // Half the draws are small sets, where the bounds are not saturated.
  const std::uint64_t small = std::min<std::uint64_t>(p, 2 * isqrt(p) + 2);
  const auto size = static_cast<std::uint32_t>(rng.below(2) ? rng.between(min_size, p)
                                                            : rng.between(min_size, small));
  auto vals = rng.sample(p, size);
  return from_values(m, vals);
}

ResidueSet random_asymmetric(Modulus m, Rng& rng) {
  const std::uint32_t half = (m.value() - 1) / 2;
  const auto size = static_cast<std::uint32_t>(rng.between(0, half));
  ResidueSet s(m);
  for (auto i : rng.sample(half, size)) {
    const std::uint32_t v = i + 1;
    s.insert(rng.below(2) ? v : m.neg(v));
  }
  return s;
}

void check_ddsh(const ResidueSet& a, std::uint64_t k, std::uint64_t index, ViolationLog& log) {
  auto r = verify_ddsh(a, k);
  if (!r.holds || !r.corollary_holds) log.record(index, {to_vector(a), {}, k, r.lhs, r.rhs});
}

void check_cd(const ResidueSet& a, const ResidueSet& b, std::uint64_t index, ViolationLog& log) {
  auto r = verify_cd(a, b);
  if (!r.holds) log.record(index, {to_vector(a), to_vector(b), 0, r.lhs, r.rhs});
}

void check_olson(const ResidueSet& a, std::uint64_t index, ViolationLog& log) {
  auto r = verify_olson_sigma(a);
  if (!r.holds) log.record(index, {to_vector(a), {}, 0, r.lhs, r.rhs});
}

}  // namespace

std::string lemma_name(Lemma l) {
  switch (l) {
    case Lemma::ddsh:
      return "ddsh";
    case Lemma::cauchy_davenport:
      return "cd";
    case Lemma::olson_sigma:
      return "olson";
  }
  return "unknown";
}

SweepResult sweep_lemma(Lemma lemma, Modulus m, const SweepConfig& config) {
  const auto p = m.value();
  SweepResult result;
  result.lemma = lemma;
  result.p = p;
  result.exhaustive = config.exhaustive;
  ViolationLog log;
  std::atomic<std::uint64_t> cases{0};

  if (config.exhaustive) {
    if (p > kExhaustiveSweepMaxP) {
      throw LimitExceeded("exhaustive lemma sweep limited to p <= " +
                          std::to_string(kExhaustiveSweepMaxP));
    }
    const std::uint64_t subsets = std::uint64_t{1} << p;
    switch (lemma) {
      case Lemma::ddsh:
        parallel_for(subsets - 1, config.threads, [&](std::size_t i) {
          auto a = from_mask(m, i + 1);
          for (std::uint64_t k = 1; k <= a.size(); ++k) check_ddsh(a, k, i * (p + 1) + k, log);
          cases += a.size();
        });
        break;
      case Lemma::cauchy_davenport:
        parallel_for(subsets - 1, config.threads, [&](std::size_t i) {
          auto a = from_mask(m, i + 1);
          for (std::uint64_t j = 1; j < subsets; ++j) {
            check_cd(a, from_mask(m, j), i * subsets + j, log);
          }
          cases += subsets - 1;
        });
        break;
      case Lemma::olson_sigma: {
        const std::uint64_t codes = pow3((p - 1) / 2);
        parallel_for(codes, config.threads, [&](std::size_t i) {
          check_olson(asymmetric_from_code(m, i), i, log);
          ++cases;
        });
        break;
      }
    }
  } else {
    const auto stream = static_cast<std::uint64_t>(lemma) + 1;
    parallel_for(config.trials, config.threads, [&](std::size_t i) {
      auto rng = Rng::for_trial(config.seed, stream, i);
      switch (lemma) {
        case Lemma::ddsh: {
          auto a = random_subset(m, rng, 1);
          check_ddsh(a, rng.between(1, a.size()), i, log);
          break;
        }
        case Lemma::cauchy_davenport: {
          auto a = random_subset(m, rng, 1);
          auto b = random_subset(m, rng, 1);
          check_cd(a, b, i, log);
          break;
        }
        case Lemma::olson_sigma:
          check_olson(random_asymmetric(m, rng), i, log);
          break;
      }
      ++cases;
    });
  }
  result.cases = cases.load();
  log.fill(result);
  return result;
}

}  // namespace zerosum
