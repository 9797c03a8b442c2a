#include <atomic>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace viaccel::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(VIACCEL_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table& best_table() noexcept {
  if (const Table* t = avx2_table()) return *t;
  return scalar_table();
}

std::atomic<const Table*>& active_slot() noexcept {
  static std::atomic<const Table*> slot{&best_table()};
  return slot;
}

}  // namespace

const Table* avx2_table() noexcept {
#if defined(VIACCEL_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void select(Backend backend) {
  const Table* t = backend == Backend::Scalar ? &scalar_table() : avx2_table();
  if (t == nullptr) {
    throw std::runtime_error("kernel backend '" + std::string(to_string(backend)) +
                             "' is not available on this machine");
  }
  active_slot().store(t, std::memory_order_release);
}

std::vector<Backend> available() {
  std::vector<Backend> out{Backend::Scalar};
  if (avx2_table() != nullptr) out.push_back(Backend::Avx2);
  return out;
}

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

Backend parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  if (name == "auto") return best_table().backend;
  throw std::invalid_argument("unknown kernel backend '" + std::string(name) +
                              "' (expected scalar, avx2 or auto)");
}

}  // namespace viaccel::kernels

#if !defined(VIACCEL_HAVE_AVX2)
namespace viaccel::kernels::detail {
const Table& avx2_table_unchecked() noexcept { return scalar_table(); }
}  // namespace viaccel::kernels::detail
#endif
