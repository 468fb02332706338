#include "zerosum/modular.hpp"

#include <cmath>

namespace zerosum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

Modulus::Modulus(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw InvalidArgument("modulus must be prime, got " + std::to_string(p));
  }
}

std::uint32_t Modulus::inverse(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_modulus(Modulus a, Modulus b, const char* where) {
  if (!(a == b)) {
    throw ModulusMismatch(std::string(where) + ": modulus mismatch (" +
                          std::to_string(a.value()) + " vs " +
                          std::to_string(b.value()) + ")");
  }
}

Residue operator+(Residue a, Residue b) {
  require_same_modulus(a.modulus_, b.modulus_, "Residue +");
  return Residue(a.modulus_.add(a.value_, b.value_), a.modulus_);
}

Residue operator-(Residue a, Residue b) {
  require_same_modulus(a.modulus_, b.modulus_, "Residue -");
  return Residue(a.modulus_.sub(a.value_, b.value_), a.modulus_);
}

Residue operator*(Residue a, Residue b) {
  require_same_modulus(a.modulus_, b.modulus_, "Residue *");
  return Residue(a.modulus_.mul(a.value_, b.value_), a.modulus_);
}


ResidueSet::ResidueSet(Modulus m, std::span<const std::int64_t> values) : modulus_(m) {
  for (auto v : values) insert(v);
}

ResidueSet ResidueSet::full(Modulus m) {
  ResidueSet s(m);
  for (std::uint32_t v = 0; v < m.value(); ++v) s.insert(v);
  return s;
}

bool ResidueSet::contains(std::uint32_t v) const {
  return v < present_.size() && present_[v];
}

void ResidueSet::insert(std::int64_t v) {
  auto r = modulus_.reduce(v);
  if (present_.empty()) present_.assign(modulus_.value(), false);
  if (present_[r]) {
    throw InvalidArgument("duplicate residue " + std::to_string(r) + " mod " +
                          std::to_string(modulus_.value()));
  }
  present_[r] = true;
  values_.push_back(r);
}

}  // namespace zerosum
