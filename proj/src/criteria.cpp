#include "zerosum/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zerosum/sumset.hpp"

namespace zerosum {
namespace {

// Neumaier compensated sum.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    if (std::isinf(x)) {
      inf_ += x;
      return;
    }
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return inf_ != 0 ? inf_ : sum_ + comp_; }

 private:
  T sum_ = 0, comp_ = 0, inf_ = 0;
};

bool covers_everything(std::span<const std::uint32_t> values, std::uint32_t p) {
  return cyclic_subset_sums(values, p, true).all();
}

}  // namespace

std::string outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::satisfied:
      return "satisfied";
    case SearchOutcome::unsatisfied:
      return "unsatisfied";
    case SearchOutcome::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

CombResult comb_criterion(const PlaneSet& a, const Subgroup& u, const PlaneSet& b) {
  const auto m = a.modulus();
  require_same_modulus(m, u.modulus(), "comb_criterion");
  require_same_modulus(m, b.modulus(), "comb_criterion");
  for (auto pt : b.points()) {
    if (!a.contains(pt)) throw InvalidArgument("comb_criterion: B is not a subset of A");
  }
  const auto p = m.value();
  CombResult r;
  for (auto pt : b.points()) r.projected_b.push_back(u.project(pt));
  r.covers = covers_everything(r.projected_b, p);

  r.rest_profile.assign(p, 0);
  for (auto pt : a.points()) {
    if (!b.contains(pt)) ++r.rest_profile[u.project(pt)];
  }
  for (auto n : r.rest_profile) r.weight += half_product(n);
  r.weight_needed = std::uint64_t{p} + 1;
  r.hypotheses_met = r.covers && r.weight >= r.weight_needed;

  auto zs = contains_zero_sum(a);
  r.zero_sum_found = zs.found;
  r.witness = std::move(zs.witness);
  if (r.hypotheses_met && !r.zero_sum_found) {
    throw SoundnessError("comb_criterion: hypotheses met but the set is zero-sum free");
  }
  return r;
}

Condition1Report numerik_condition1(Modulus m, std::span<const std::uint32_t> lambda,
                                    std::size_t support_cap) {
  const auto p = m.value();
  if (lambda.size() != p) throw InvalidArgument("numerik_condition1: profile length must be p");
  Condition1Report r;
  r.weight_needed = p - 1;

  std::uint64_t base_weight = 0;
  std::vector<std::uint32_t> candidates;  // even lambda >= 2; cost lambda/2 each
  for (std::uint32_t j = 0; j < p; ++j) {
    base_weight += half_product(lambda[j]);
    if (lambda[j] % 2 == 1) {
      r.J.push_back(j);
    } else if (lambda[j] >= 2) {
      candidates.push_back(j);
    }
  }
  r.weight = base_weight;
  // Moving index i into I lowers the weight by floor(lambda_i / 2).
  auto cost = [&](std::uint32_t j) -> std::uint64_t { return lambda[j] / 2; };

  if (base_weight < r.weight_needed) {
    r.outcome = SearchOutcome::unsatisfied;
    r.method = "weight-bound";
    return r;
  }
  const std::uint64_t budget = base_weight - r.weight_needed;

  auto covers_with = [&](const std::vector<std::uint32_t>& chosen) {
    std::vector<std::uint32_t> idx = r.J;
    idx.insert(idx.end(), chosen.begin(), chosen.end());
    return covers_everything(idx, p);
  };
  auto accept = [&](std::vector<std::uint32_t> chosen, std::uint64_t spent, const char* method) {
    std::sort(chosen.begin(), chosen.end());
    r.I = std::move(chosen);
    r.weight = base_weight - spent;
    r.outcome = SearchOutcome::satisfied;
    r.method = method;
    return r;
  };

  // Σ(I ∪ J) only grows with I, so the largest choice decides coverage.
  if (!covers_with(candidates)) {
    r.outcome = SearchOutcome::unsatisfied;
    r.method = "closure-bound";
    return r;
  }

  // Greedy: cheapest indices first until everything is covered.
  {
    std::vector<std::uint32_t> order = candidates;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return cost(x) < cost(y); });
    std::vector<std::uint32_t> chosen;
    std::uint64_t spent = 0;
    bool done = covers_with(chosen);
    for (std::size_t i = 0; !done && i < order.size(); ++i) {
      chosen.push_back(order[i]);
      spent += cost(order[i]);
      done = covers_with(chosen);
    }
    if (done && spent <= budget) return accept(chosen, spent, "greedy");
  }

  if (candidates.size() > support_cap) {
    r.outcome = SearchOutcome::inconclusive;
    r.method = "cap-exceeded";
    return r;
  }

  // Exhaustive, by increasing |I|, pruning on the weight budget.
  const std::size_t n = candidates.size();
  std::vector<std::uint32_t> chosen;
  std::optional<std::pair<std::vector<std::uint32_t>, std::uint64_t>> found;
  auto dfs = [&](auto&& self, std::size_t start, std::size_t remaining, std::uint64_t spent) -> bool {
    if (remaining == 0) {
      if (covers_with(chosen)) {
        found.emplace(chosen, spent);
        return true;
      }
      return false;
    }
    for (std::size_t i = start; i + remaining <= n; ++i) {
      const auto c = cost(candidates[i]);
      if (spent + c > budget) continue;
      chosen.push_back(candidates[i]);
      if (self(self, i + 1, remaining - 1, spent + c)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= n; ++size) {
    if (dfs(dfs, 0, size, 0)) return accept(found->first, found->second, "exhaustive");
  }
  r.outcome = SearchOutcome::unsatisfied;
  r.method = "exhaustive";
  return r;
}

Condition1Report numerik_condition1(const CosetProfile& profile, std::size_t support_cap) {
  return numerik_condition1(profile.subgroup.modulus(), profile.lambda, support_cap);
}

std::vector<double> log_abs_cos_table(Modulus m) {
  const auto p = m.value();
  std::vector<double> table(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    if (2 * t == p) {
      table[t] = -std::numeric_limits<double>::infinity();
    } else {
      table[t] = static_cast<double>(
          std::log(std::abs(std::cos(std::numbers::pi_v<long double> * t / p))));
    }
  }
  return table;
}

namespace {

double weighted_log(std::span<const double> table, std::span<const std::uint32_t> lambda,
                    std::uint32_t scale, std::uint32_t p) {
  CompensatedSum<double> sum;
  for (std::uint32_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j]) sum.add(lambda[j] * table[std::uint64_t{scale} * j % p]);
  }
  return sum.value();
}

}  // namespace

Condition2Report numerik_condition2(Modulus m, std::span<const std::uint32_t> lambda) {
  const auto p = m.value();
  if (lambda.size() != p) throw InvalidArgument("numerik_condition2: profile length must be p");
  const auto table = log_abs_cos_table(m);
  Condition2Report r;
  r.log_product = weighted_log(table, lambda, 1, p);
  r.threshold_log = -2.0 * std::log(static_cast<double>(p));
  r.satisfied = r.log_product <= r.threshold_log;
  return r;
}

Condition2Report numerik_condition2(const CosetProfile& profile) {
  return numerik_condition2(profile.subgroup.modulus(), profile.lambda);
}

CharacterCount character_count_zero_sums(const PlaneSet& a) {
  using Real = long double;
  const auto m = a.modulus();
  const auto p = m.value();
  const auto n = a.size();
  std::vector<Real> cos_table(2 * p);
  for (std::uint32_t k = 0; k < 2 * p; ++k) {
    cos_table[k] = std::cos(std::numbers::pi_v<Real> * k / p);
  }
  // 1 + e(t) = 2 cos(πt/p) exp(iπt/p); the real part of the product over A
  // is 2^|A| Π cos(πt_a/p) · cos(π Σt_a / p).
  CompensatedSum<Real> total;
  for (std::uint32_t a1 = 0; a1 < p; ++a1) {
    for (std::uint32_t a2 = 0; a2 < p; ++a2) {
      Real magnitude = 1;
      std::uint64_t phase = 0;
      for (auto pt : a.points()) {
        const std::uint32_t t = static_cast<std::uint32_t>((std::uint64_t{a1} * pt.x + std::uint64_t{a2} * pt.y) % p);
        magnitude *= cos_table[t];
        phase += t;
      }
      total.add(magnitude * cos_table[phase % (2 * p)]);
    }
  }
  const Real scaled = total.value() / (Real(p) * p);
  CharacterCount r;
  r.exact_regime = n <= kCharacterExactMaxSize;
  r.log_value = static_cast<double>(n * std::log(Real(2)) + std::log(scaled));
  r.value = static_cast<double>(std::ldexp(scaled, static_cast<int>(n)));
  return r;
}

ExistenceBound zero_sum_existence_bound(const PlaneSet& a) {
  const auto m = a.modulus();
  const auto p = m.value();
  const auto table = log_abs_cos_table(m);
  const double threshold = -2.0 * std::log(static_cast<double>(p));
  ExistenceBound r;
  r.log_lower_bound = static_cast<double>(a.size()) * std::numbers::ln2 -
                      4.0 * std::log(static_cast<double>(p));
  r.all_characters_bounded = true;
  for (const auto& u : enumerate_subgroups(m)) {
    const auto prof = coset_profile(a, u);
    DirectionCheck d;
    d.subgroup_index = u.index();
    d.canonical_log_product = weighted_log(table, prof.lambda, 1, p);
    d.worst_log_product = -std::numeric_limits<double>::infinity();
    for (std::uint32_t c = 1; c < p; ++c) {
      const double v = weighted_log(table, prof.lambda, c, p);
      if (v > d.worst_log_product) {
        d.worst_log_product = v;
        d.worst_scale = c;
      }
    }
    d.satisfied = d.worst_log_product <= threshold;
    if (!d.satisfied && r.all_characters_bounded) {
      r.all_characters_bounded = false;
      r.reason = "character product bound fails along " + u.name() + " (scale " +
                 std::to_string(d.worst_scale) + ")";
    }
    r.directions.push_back(d);
  }
  const bool enough = r.log_lower_bound >= std::numbers::ln2;
  r.guarantees_zero_sum = r.all_characters_bounded && enough;
  if (r.all_characters_bounded && !enough) r.reason = "2^|A|/p^4 < 2";
  if (r.guarantees_zero_sum) r.reason = "all characters bounded and 2^|A|/p^4 >= 2";
  return r;
}

}  // namespace zerosum
