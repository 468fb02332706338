#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zerosum {

/// Raised when a precondition of a public operation is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two values built over different primes are combined.
class ModulusMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Raised when a guarantee produced by a criterion is contradicted by the
/// exact zero-sum search. Indicates an implementation bug.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n);

/// A prime modulus p >= 2. Composite values are rejected at construction.
class Modulus {
 public:
  explicit Modulus(std::uint32_t p);

  std::uint32_t value() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t inverse(std::uint32_t a) const;

  friend bool operator==(Modulus, Modulus) = default;

 private:
  std::uint32_t p_;
};

/// An element of Z_p, always reduced into [0, p).
class Residue {
 public:
  Residue(std::int64_t value, Modulus m) : value_(m.reduce(value)), modulus_(m) {}

  std::uint32_t value() const { return value_; }
  Modulus modulus() const { return modulus_; }

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  Residue operator-() const { return Residue(modulus_.neg(value_), modulus_); }

  friend bool operator==(Residue, Residue) = default;

 private:
  std::uint32_t value_;
  Modulus modulus_;
};

void require_same_modulus(Modulus a, Modulus b, const char* where);


/// A finite set of distinct residues mod p. Insertion order is preserved.
class ResidueSet {
 public:
  explicit ResidueSet(Modulus m) : modulus_(m) {}
  /// Values are reduced mod p; duplicates after reduction are rejected.
  ResidueSet(Modulus m, std::span<const std::int64_t> values);
  ResidueSet(Modulus m, std::initializer_list<std::int64_t> values)
      : ResidueSet(m, std::span<const std::int64_t>(values.begin(), values.size())) {}

  static ResidueSet full(Modulus m);

  Modulus modulus() const { return modulus_; }
  std::span<const std::uint32_t> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(std::uint32_t v) const;

  /// Appends v (reduced). Throws on duplicate.
  void insert(std::int64_t v);

 private:
  Modulus modulus_;
  std::vector<std::uint32_t> values_;
  std::vector<bool> present_;
};

}  // namespace zerosum

namespace zerosum {

/// A request exceeds a configured exact-computation limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zerosum
