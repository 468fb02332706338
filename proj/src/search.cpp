#include "zerosum/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>

#include "zerosum/bits.hpp"
#include "zerosum/parallel.hpp"
#include "zerosum/sumset.hpp"

namespace zerosum {

std::string GroupDescriptor::key() const {
  const auto s = std::to_string(n);
  return kind == GroupKind::cyclic ? "Z/" + s : "Z/" + s + "+Z/" + s;
}

GroupDescriptor GroupDescriptor::parse(const std::string& key) {
  auto bad = [&] { return InvalidArgument("unrecognised group key: " + key); };
  if (key.rfind("Z/", 0) != 0) throw bad();
  const auto plus = key.find('+');
  try {
    if (plus == std::string::npos) {
      return cyclic(static_cast<std::uint32_t>(std::stoul(key.substr(2))));
    }
    const auto a = key.substr(2, plus - 2);
    if (key.substr(plus) != "+Z/" + a) throw bad();
    return plane(static_cast<std::uint32_t>(std::stoul(a)));
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string method_name(Method m) { return m == Method::exact ? "exact" : "lower_bound_only"; }

namespace {

using u64 = std::uint64_t;

// ---- mask primitives: one word, or a Bits vector --------------------------

inline bool any(u64 m) { return m != 0; }
inline std::size_t count(u64 m) { return std::popcount(m); }
inline u64 with(u64 m, std::uint32_t i) { return m | (u64{1} << i); }
inline u64 without(u64 m, std::uint32_t i) { return m & ~(u64{1} << i); }
inline u64 andnot(u64 a, u64 b) { return a & ~b; }
inline u64 both(u64 a, u64 b) { return a & b; }
inline u64 either(u64 a, u64 b) { return a | b; }
inline std::uint32_t lowest(u64 m) { return std::countr_zero(m); }
inline std::uint32_t highest(u64 m) { return 63 - std::countl_zero(m); }
template <class F>
void each(u64 m, F&& f) {
  for (; m; m &= m - 1) f(static_cast<std::uint32_t>(std::countr_zero(m)));
}

inline bool any(const Bits& m) { return !m.none(); }
inline std::size_t count(const Bits& m) { return m.count(); }
inline Bits with(Bits m, std::uint32_t i) {
  m.set(i);
  return m;
}
inline Bits without(Bits m, std::uint32_t i) {
  m.reset(i);
  return m;
}
inline Bits andnot(Bits a, const Bits& b) { return a.subtract(b); }
inline Bits both(Bits a, const Bits& b) { return a &= b; }
inline Bits either(Bits a, const Bits& b) { return a |= b; }
inline std::uint32_t lowest(const Bits& m) {
  const auto w = m.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(w[i]));
  }
  return static_cast<std::uint32_t>(m.size());
}
inline std::uint32_t highest(const Bits& m) {
  const auto w = m.words();
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i]) return static_cast<std::uint32_t>(i * 64 + 63 - std::countl_zero(w[i]));
  }
  return static_cast<std::uint32_t>(m.size());
}
template <class F>
void each(const Bits& m, F&& f) {
  m.for_each_set([&](std::size_t i) { f(static_cast<std::uint32_t>(i)); });
}

// ---- groups ---------------------------------------------------------------

// Z_n with n <= 64 in a single word.
struct Cyclic64 {
  using Mask = u64;
  std::uint32_t n;
  u64 full;
  explicit Cyclic64(std::uint32_t n_) : n(n_), full(n_ == 64 ? ~u64{0} : (u64{1} << n_) - 1) {}
  std::uint32_t size() const { return n; }
  Mask empty() const { return 0; }
  Mask translate(Mask m, std::uint32_t e) const {
    if (e == 0) return m;
    return ((m << e) | (m >> (n - e))) & full;
  }
  std::uint32_t neg(std::uint32_t e) const { return e == 0 ? 0 : n - e; }
};

// Z_p + Z_p with p*p <= 64; rows of p bits packed in one word.
struct Plane64 {
  using Mask = u64;
  std::uint32_t p, cells;
  u64 full;
  std::vector<u64> keep_shifted, keep_wrapped;
  explicit Plane64(std::uint32_t p_) : p(p_), cells(p_ * p_) {
    full = cells == 64 ? ~u64{0} : (u64{1} << cells) - 1;
    keep_shifted.assign(p, 0);
    keep_wrapped.assign(p, 0);
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t i = 0; i < cells; ++i) {
        (i % p >= b ? keep_shifted[b] : keep_wrapped[b]) |= u64{1} << i;
      }
    }
  }
  std::uint32_t size() const { return cells; }
  Mask empty() const { return 0; }
  Mask translate(Mask m, std::uint32_t cell) const {
    const std::uint32_t a = cell / p, b = cell % p;
    if (b) m = ((m << b) & keep_shifted[b]) | ((m >> (p - b)) & keep_wrapped[b]);
    const std::uint32_t s = a * p;
    if (s) m = ((m << s) | (m >> (cells - s))) & full;
    return m;
  }
  std::uint32_t neg(std::uint32_t cell) const {
    const std::uint32_t a = cell / p, b = cell % p;
    return ((p - a) % p) * p + (p - b) % p;
  }
};

struct CyclicWide {
  using Mask = Bits;
  std::uint32_t n;
  explicit CyclicWide(std::uint32_t n_) : n(n_) {}
  std::uint32_t size() const { return n; }
  Mask empty() const { return Bits(n); }
  Mask translate(const Mask& m, std::uint32_t e) const {
    Bits out(n);
    out.or_rotated(m, e);
    return out;
  }
  std::uint32_t neg(std::uint32_t e) const { return e == 0 ? 0 : n - e; }
};

struct PlaneWide {
  using Mask = Bits;
  Modulus m;
  PlaneShifter shifter;
  explicit PlaneWide(std::uint32_t p) : m(p), shifter(m) {}
  std::uint32_t size() const { return m.value() * m.value(); }
  Mask empty() const { return Bits(size()); }
  Mask translate(const Mask& mask, std::uint32_t cell) const {
    Bits out(size());
    shifter.or_translated(out, mask, plane_point(cell, m));
    return out;
  }
  std::uint32_t neg(std::uint32_t cell) const {
    auto pt = plane_point(cell, m);
    return plane_index({m.neg(pt.x), m.neg(pt.y)}, m);
  }
};

// ---- depth-first search over zero-sum-free sets --------------------------
//
// State: the chosen set S, its nonempty subset sums Σ, the negated sums -Σ,
// and the candidates C = {y not yet considered : y != 0, -y not in Σ}. A
// candidate may join S exactly when S ∪ {y} stays zero-sum free.

template <class G>
struct Node {
  typename G::Mask sums, neg_sums, candidates;
  std::vector<std::uint32_t> chosen;
};

template <class G>
class FreeSetSearch {
 public:
  using Mask = typename G::Mask;

  FreeSetSearch(const G& g, std::vector<std::uint32_t> roots, SearchOrder order)
      : g_(g), roots_(std::move(roots)), order_(order) {
    self_inverse_ = g_.empty();
    for (std::uint32_t e = 1; e < g_.size(); ++e) {
      if (g_.neg(e) == e) self_inverse_ = with(self_inverse_, e);
    }
  }

  // Nodes one level below each root, in deterministic order, plus the roots.
  std::vector<Node<G>> first_level() const {
    std::vector<Node<G>> out;
    for (auto r : roots_) {
      Node<G> root;
      root.sums = with(g_.empty(), r);
      root.neg_sums = with(g_.empty(), g_.neg(r));
      Mask all = g_.empty();
      for (std::uint32_t e = 1; e < g_.size(); ++e) all = with(all, e);
      root.candidates = andnot(without(all, r), root.neg_sums);
      root.chosen = {r};
      Mask c = root.candidates;
      out.push_back(root);
      // The root itself is represented with no candidates.
      out.back().candidates = g_.empty();
      while (any(c)) {
        const auto x = pick(c);
        c = without(c, x);
        out.push_back(extend(root.sums, root.neg_sums, c, root.chosen, x));
      }
    }
    return out;
  }

  // Largest |S| reachable from `node`, given a shared lower bound.
  void maximize(const Node<G>& node, std::atomic<std::uint32_t>& best) const {
    Node<G> n = node;
    max_rec(n, best);
  }

  // Every set of exactly `target` elements reachable from `node`.
  template <class F>
  void enumerate(const Node<G>& node, std::size_t target, F&& visit) const {
    Node<G> n = node;
    enum_rec(n, target, visit);
  }

 private:
  std::uint32_t pick(const Mask& c) const {
    return order_ == SearchOrder::ascending ? lowest(c) : highest(c);
  }

  Node<G> extend(const Mask& sums, const Mask& neg_sums, const Mask& rest,
                 const std::vector<std::uint32_t>& chosen, std::uint32_t x) const {
    Node<G> child;
    child.sums = either(with(sums, x), g_.translate(sums, x));
    const auto nx = g_.neg(x);
    child.neg_sums = either(with(neg_sums, nx), g_.translate(neg_sums, nx));
    child.candidates = andnot(rest, child.neg_sums);
    child.chosen = chosen;
    child.chosen.push_back(x);
    return child;
  }

  // Upper bound on how many more candidates can join: y and -y exclude each other.
  std::size_t room(const Mask& c) const {
    Mask negated = g_.empty();
    each(c, [&](std::uint32_t y) { negated = with(negated, g_.neg(y)); });
    const Mask paired = both(c, negated);
    const Mask self = both(paired, self_inverse_);
    return count(andnot(c, negated)) + count(self) + count(andnot(paired, self_inverse_)) / 2;
  }

  void max_rec(Node<G>& n, std::atomic<std::uint32_t>& best) const {
    const auto size = static_cast<std::uint32_t>(n.chosen.size());
    auto cur = best.load(std::memory_order_relaxed);
    while (size > cur && !best.compare_exchange_weak(cur, size, std::memory_order_relaxed)) {
    }
    Mask c = n.candidates;
    while (any(c)) {
      if (size + room(c) <= best.load(std::memory_order_relaxed)) return;
      const auto x = pick(c);
      c = without(c, x);
      auto child = extend(n.sums, n.neg_sums, c, n.chosen, x);
      max_rec(child, best);
    }
  }

  template <class F>
  bool enum_rec(Node<G>& n, std::size_t target, F& visit) const {
    if (n.chosen.size() == target) return visit(n.chosen);
    Mask c = n.candidates;
    while (any(c)) {
      if (n.chosen.size() + room(c) < target) return true;
      const auto x = pick(c);
      c = without(c, x);
      auto child = extend(n.sums, n.neg_sums, c, n.chosen, x);
      if (!enum_rec(child, target, visit)) return false;
    }
    return true;
  }

  const G& g_;
  std::vector<std::uint32_t> roots_;
  SearchOrder order_;
  Mask self_inverse_;
};

// Every orbit of nonzero elements under the automorphism group meets the roots.
std::vector<std::uint32_t> cyclic_roots(std::uint32_t n) {
  std::vector<std::uint32_t> roots;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) roots.push_back(d);
  }
  return roots;
}

std::vector<std::uint32_t> plane_roots(std::uint32_t p) { return {p}; }  // the point (1, 0)

template <class G>
std::uint32_t max_free_size(const G& g, std::vector<std::uint32_t> roots, unsigned threads,
                            SearchOrder order) {
  if (roots.empty()) return 0;
  FreeSetSearch<G> search(g, std::move(roots), order);
  const auto tasks = search.first_level();
  std::atomic<std::uint32_t> best{0};
  parallel_for(tasks.size(), threads, [&](std::size_t i) { search.maximize(tasks[i], best); });
  return best.load();
}

std::uint32_t cyclic_max_free(std::uint32_t n, unsigned threads, SearchOrder order) {
  if (n <= 64) return max_free_size(Cyclic64(n), cyclic_roots(n), threads, order);
  return max_free_size(CyclicWide(n), cyclic_roots(n), threads, order);
}

std::uint32_t plane_max_free(std::uint32_t p, unsigned threads, SearchOrder order) {
  if (p * p <= 64) return max_free_size(Plane64(p), plane_roots(p), threads, order);
  return max_free_size(PlaneWide(p), plane_roots(p), threads, order);
}

// ---- automorphisms --------------------------------------------------------

struct Automorphisms {
  GroupDescriptor group;
  std::vector<std::uint32_t> units;              // cyclic
  std::vector<std::array<std::uint32_t, 4>> gl2;  // plane: (a b; c d)

  explicit Automorphisms(const GroupDescriptor& g) : group(g) {
    if (g.kind == GroupKind::cyclic) {
      for (std::uint32_t u = 1; u < std::max(g.n, 2u); ++u) {
        if (std::gcd(u, g.n) == 1) units.push_back(u % g.n);
      }
      if (g.n == 1) units = {0};
    } else {
      const auto p = g.n;
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
          for (std::uint32_t c = 0; c < p; ++c)
            for (std::uint32_t d = 0; d < p; ++d)
              if ((a * d + p * p - (b * c) % p) % p != 0) gl2.push_back({a, b, c, d});
    }
  }

  EncodedSet canonical(const EncodedSet& set) const {
    EncodedSet best, img(set.size());
    auto consider = [&] {
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    };
    if (group.kind == GroupKind::cyclic) {
      for (auto u : units) {
        for (std::size_t i = 0; i < set.size(); ++i) img[i] = static_cast<std::uint32_t>(u64{u} * set[i] % group.n);
        consider();
      }
    } else {
      const auto p = group.n;
      for (const auto& g : gl2) {
        for (std::size_t i = 0; i < set.size(); ++i) {
          const auto x = set[i] / p, y = set[i] % p;
          img[i] = ((g[0] * x + g[1] * y) % p) * p + (g[2] * x + g[3] * y) % p;
        }
        consider();
      }
    }
    return set.empty() ? EncodedSet{} : best;
  }
};

template <class G>
Enumeration enumerate_with(const G& g, std::vector<std::uint32_t> roots, const GroupDescriptor& group,
                           std::size_t size, unsigned threads, std::size_t max_orbits) {
  Enumeration out;
  if (size == 0) {
    out.orbits.push_back({});
    return out;
  }
  if (max_orbits == 0) {
    out.truncated = true;
    return out;
  }
  const Automorphisms autos(group);
  FreeSetSearch<G> search(g, std::move(roots), SearchOrder::ascending);
  const auto tasks = search.first_level();
  std::vector<std::set<EncodedSet>> found(tasks.size());
  std::vector<char> stopped(tasks.size(), 0);
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    auto& local = found[i];
    search.enumerate(tasks[i], size, [&](const std::vector<std::uint32_t>& chosen) {
      local.insert(autos.canonical(chosen));
      if (local.size() >= max_orbits) {
        stopped[i] = 1;
        return false;
      }
      return true;
    });
  });
  std::set<EncodedSet> merged;
  for (const auto& s : found) merged.insert(s.begin(), s.end());
  out.truncated = std::any_of(stopped.begin(), stopped.end(), [](char c) { return c != 0; }) ||
                  merged.size() > max_orbits;
  for (const auto& s : merged) {
    if (out.orbits.size() == max_orbits) break;
    out.orbits.push_back(s);
  }
  return out;
}

void check_limits(const GroupDescriptor& group, const SearchOptions& options) {
  if (group.kind == GroupKind::cyclic) {
    if (group.n < 2 || group.n > options.cyclic_max) {
      throw LimitExceeded("cyclic order " + std::to_string(group.n) + " outside [2, " +
                          std::to_string(options.cyclic_max) + "]");
    }
  } else {
    if (!is_prime(group.n)) throw InvalidArgument("plane modulus must be prime");
    if (group.n > options.plane_max) {
      throw LimitExceeded("exact plane search limited to p <= " + std::to_string(options.plane_max));
    }
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::uint32_t olson_cyclic_value(std::uint32_t n, unsigned threads, SearchOrder order) {
  if (n < 1) throw InvalidArgument("cyclic order must be positive");
  return cyclic_max_free(n, threads, order) + 1;
}

std::uint32_t olson_plane_value(std::uint32_t p, unsigned threads, SearchOrder order) {
  if (!is_prime(p)) throw InvalidArgument("plane modulus must be prime");
  return plane_max_free(p, threads, order) + 1;
}

EncodedSet canonical_form(const GroupDescriptor& group, const EncodedSet& set) {
  return Automorphisms(group).canonical(set);
}

bool is_zero_sum_free(const GroupDescriptor& group, const EncodedSet& set) {
  if (group.kind == GroupKind::cyclic) return is_zero_sum_free_cyclic(set, group.n);
  const Modulus m(group.n);
  PlaneSet s(m);
  for (auto cell : set) s.insert(plane_point(cell, m));
  return !contains_zero_sum(s).found;
}

Enumeration enumerate_maximal_free_sets(const GroupDescriptor& group, std::size_t size,
                                        const SearchOptions& options, std::size_t max_orbits) {
  check_limits(group, options);
  if (group.kind == GroupKind::cyclic) {
    const auto n = group.n;
    if (n <= 64) return enumerate_with(Cyclic64(n), cyclic_roots(n), group, size, options.threads, max_orbits);
    return enumerate_with(CyclicWide(n), cyclic_roots(n), group, size, options.threads, max_orbits);
  }
  const auto p = group.n;
  if (p * p <= 64) return enumerate_with(Plane64(p), plane_roots(p), group, size, options.threads, max_orbits);
  return enumerate_with(PlaneWide(p), plane_roots(p), group, size, options.threads, max_orbits);
}

namespace {

ConstantRecord exact_record(const GroupDescriptor& group, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ConstantRecord r;
  r.group = group;
  r.method = Method::exact;
  const bool cyclic = group.kind == GroupKind::cyclic;
  r.olson = cyclic ? olson_cyclic_value(group.n, options.threads)
                   : olson_plane_value(group.n, options.threads);
  auto examples = enumerate_maximal_free_sets(group, r.olson - 1, options, options.max_examples);
  r.extremal_examples = std::move(examples.orbits);
  r.examples_truncated = examples.truncated;
  if (options.certify) {
    r.examples_verified =
        !r.extremal_examples.empty() &&
        std::all_of(r.extremal_examples.begin(), r.extremal_examples.end(), [&](const EncodedSet& s) {
          return s.size() + 1 == r.olson && is_zero_sum_free(group, s);
        });
    const auto again = cyclic ? olson_cyclic_value(group.n, options.threads, SearchOrder::descending)
                              : olson_plane_value(group.n, options.threads, SearchOrder::descending);
    r.reorder_agrees = again == r.olson;
    if (!r.examples_verified || !r.reorder_agrees) {
      throw SoundnessError("certification failed for " + group.key());
    }
  }
  r.compute_seconds = seconds_since(start);
  return r;
}

}  // namespace

ConstantRecord olson_cyclic(std::uint32_t n, const SearchOptions& options) {
  const auto group = GroupDescriptor::cyclic(n);
  check_limits(group, options);
  return exact_record(group, options);
}

ConstantRecord olson_plane(std::uint32_t p, const SearchOptions& options, bool exact) {
  const auto group = GroupDescriptor::plane(p);
  if (!is_prime(p)) throw InvalidArgument("plane modulus must be prime");
  if (exact) {
    check_limits(group, options);
    return exact_record(group, options);
  }
  const auto start = std::chrono::steady_clock::now();
  const Modulus m(p);
  const auto witness = construct_plane_witness(m, options);
  ConstantRecord r;
  r.group = group;
  r.method = Method::lower_bound_only;
  r.olson = static_cast<std::uint32_t>(witness.size()) + 1;
  EncodedSet cells;
  for (auto pt : witness.points()) cells.push_back(plane_index(pt, m));
  std::sort(cells.begin(), cells.end());
  r.extremal_examples = {cells};
  r.examples_verified = true;  // construct_plane_witness checks freeness
  r.compute_seconds = seconds_since(start);
  return r;
}

ResidueSet construct_cyclic_witness(Modulus m) {
  const std::uint64_t p = m.value();
  std::uint64_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= p - 1) ++k;
  ResidueSet s(m);
  for (std::uint64_t i = 1; i <= k; ++i) s.insert(static_cast<std::int64_t>(i));
  if (contains_zero_sum(s).found) throw SoundnessError("cyclic witness is not zero-sum free");
  return s;
}

PlaneSet construct_plane_witness(Modulus m, const ResidueSet& cyclic_free) {
  require_same_modulus(m, cyclic_free.modulus(), "construct_plane_witness");
  const auto p = m.value();
  PlaneSet a(m);
  for (auto v : cyclic_free.values()) a.insert(PlanePoint{0, v});
  for (std::uint32_t y = 0; y + 1 < p; ++y) a.insert(PlanePoint{1 % p, y});
  if (contains_zero_sum(a).found) throw SoundnessError("plane witness is not zero-sum free");
  return a;
}

PlaneSet construct_plane_witness(Modulus m, const SearchOptions& options) {
  const auto p = m.value();
  if (p <= options.cyclic_max && p >= 2) {
    SearchOptions quick = options;
    quick.certify = false;
    quick.max_examples = 1;
    const auto rec = olson_cyclic(p, quick);
    ResidueSet free(m);
    for (auto v : rec.extremal_examples.front()) free.insert(v);
    return construct_plane_witness(m, free);
  }
  return construct_plane_witness(m, construct_cyclic_witness(m));
}

StructureReport classify_structure(const PlaneSet& a) {
  if (contains_zero_sum(a).found) {
    throw InvalidArgument("classify_structure: input is not zero-sum free");
  }
  const auto m = a.modulus();
  StructureReport best;
  auto better = [&](const StructureReport& cand, bool cand_vertical) {
    if (!best.matches_theorem2) return true;
    if (cand.in_u != best.in_u) return cand.in_u > best.in_u;
    return cand_vertical && *best.subgroup_index != m.value();
  };
  std::vector<std::uint32_t> matching;
  for (const auto& u : enumerate_subgroups(m)) {
    StructureReport r;
    std::optional<std::uint32_t> coset;
    bool ok = true;
    for (auto pt : a.points()) {
      const auto j = u.project(pt);
      if (j == 0) {
        ++r.in_u;
      } else if (!coset || *coset == j) {
        coset = j;
        ++r.coset_elements;
      } else {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    matching.push_back(u.index());
    r.matches_theorem2 = true;
    r.subgroup_index = u.index();
    r.coset = coset.value_or(0);
    r.degenerate = r.coset_elements == 0;
    if (better(r, u.is_vertical())) best = r;
  }
  best.matching_subgroups = std::move(matching);
  return best;
}

}  // namespace zerosum
