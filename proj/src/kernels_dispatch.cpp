#include <atomic>
#include <cstdlib>
#include <string>

#include "zerosum/kernels.hpp"
#include "zerosum/modular.hpp"

namespace zerosum::kernels {
namespace {

const Table* initial_table() {
  if (const char* env = std::getenv("ZEROSUM_ISA")) {
    std::string v(env);
    if (v == "scalar") return &scalar::kTable;
    if (v == "avx2" && supported(Isa::avx2)) return &avx2::kTable;
  }
  return &table(best_available());
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> ptr{initial_table()};
  return ptr;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_available() { return supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const Table& table(Isa isa) {
  if (!supported(isa)) {
    throw InvalidArgument("kernel ISA not available: " + std::string(isa_name(isa)));
  }
  return isa == Isa::avx2 ? avx2::kTable : scalar::kTable;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) { current().store(&table(isa), std::memory_order_relaxed); }

}  // namespace zerosum::kernels
