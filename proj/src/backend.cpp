#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ifma_itoa/vector.hpp"
#include "kernels.hpp"

namespace ifma_itoa {

namespace {

bool cpu_has_ifma() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512bw") &&
         __builtin_cpu_supports("avx512vl") && __builtin_cpu_supports("avx512vbmi") &&
         __builtin_cpu_supports("avx512ifma");
#else
  return false;
#endif
}

bool env_forces_portable() noexcept {
  const char* v = std::getenv(std::string(kForcePortableEnv).c_str());
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

// 0 = not yet detected, otherwise 1 + Backend.
std::atomic<int> g_detected{0};
std::atomic<bool> g_forced{false};

}  // namespace

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::portable: return "portable";
    case Backend::hardware_ifma: return "hardware-ifma";
  }
  return "unknown";
}

bool host_supports_ifma() noexcept {
  static const bool supported = detail::ifma_kernels() != nullptr && cpu_has_ifma();
  return supported;
}

Backend detect_backend() noexcept {
  if (g_forced.load(std::memory_order_relaxed)) return Backend::portable;
  int d = g_detected.load(std::memory_order_acquire);
  if (d == 0) {
    d = 1 + static_cast<int>(select_backend(host_supports_ifma(), env_forces_portable()));
    g_detected.store(d, std::memory_order_release);
  }
  return static_cast<Backend>(d - 1);
}

void force_portable_backend(bool force) noexcept { g_forced.store(force, std::memory_order_relaxed); }

namespace detail {

const KernelSet& kernels_for(Backend backend) {
  if (backend == Backend::hardware_ifma) {
    if (!host_supports_ifma()) throw std::invalid_argument("hardware-ifma backend is not available on this host");
    return *ifma_kernels();
  }
  return portable_kernels();
}

}  // namespace detail

}  // namespace ifma_itoa
