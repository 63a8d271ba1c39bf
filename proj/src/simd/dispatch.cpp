#include <atomic>
#include <cstdlib>
#include <string>

#include "backends.hpp"
#include "jwalk/errors.hpp"

namespace jwalk::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_if_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &scalar_kernels();
    case Backend::Avx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Backend::Neon:
      // NEON is mandatory on AArch64, so being compiled is enough.
      return detail::neon_table();
  }
  return nullptr;
}

Backend fastest() {
  if (table_if_available(Backend::Avx2)) return Backend::Avx2;
  if (table_if_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend from_environment() {
  const char* env = std::getenv("JWALK_SIMD");
  if (env == nullptr || *env == '\0') return fastest();
  const std::string want(env);
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (want == backend_name(b) && table_if_available(b)) return b;
  }
  // Unknown or unsupported request: keep the safe default.
  return fastest();
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{table_if_available(from_environment())};
  return slot;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (table_if_available(b)) out.push_back(b);
  }
  return out;
}

Backend detected_backend() { return from_environment(); }

const KernelTable& kernels_for(Backend b) {
  const KernelTable* t = table_if_available(b);
  if (t == nullptr) {
    throw DomainError("SIMD backend '" + std::string(backend_name(b)) + "' is not available on this CPU/build");
  }
  return *t;
}

const KernelTable& kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_backend(Backend b) { active_slot().store(&kernels_for(b), std::memory_order_release); }

ScopedBackend::ScopedBackend(Backend b) : previous_(kernels().backend) { set_backend(b); }
ScopedBackend::~ScopedBackend() { set_backend(previous_); }

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("dot: length mismatch");
  return kernels().dot(x.data(), y.data(), x.size());
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  if (x.size() != y.size()) throw DomainError("rotate: length mismatch");
  kernels().rotate(x.data(), y.data(), x.size(), c, s);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw DomainError("axpy: length mismatch");
  kernels().axpy(a, x.data(), y.data(), x.size());
}

}  // namespace jwalk::simd
