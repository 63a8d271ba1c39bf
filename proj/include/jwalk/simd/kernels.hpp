#pragma once

// Data-parallel inner loops used by the eigensolver and the propagator.
//
// Every kernel has a portable scalar reference implementation plus optional
// AVX2/FMA (x86-64) and NEON (AArch64) variants. The variant is chosen once at
// startup from the CPU's capabilities; JWALK_SIMD=scalar|avx2|neon in the
// environment or set_backend() overrides it. Vector variants may differ from
// the scalar reference by rounding (FMA contraction, reassociated sums) only.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace jwalk::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b) noexcept;

struct KernelTable {
  Backend backend;
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // (x, y) <- (c x - s y, s x + c y)
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  // y <- y + a x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
};

// Reference implementations, always available.
const KernelTable& scalar_kernels() noexcept;

// Backends compiled into this binary and supported by the running CPU.
std::vector<Backend> available_backends();

// Fastest available backend unless overridden by JWALK_SIMD.
Backend detected_backend();

// Table for a specific backend; throws DomainError if unavailable.
const KernelTable& kernels_for(Backend b);

// The active table. Cheap; safe to call from any thread.
const KernelTable& kernels() noexcept;

// Switch the active table (tests and benchmarks). Not meant to be raced
// against running computations.
void set_backend(Backend b);

// RAII override for tests.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b);
  ~ScopedBackend();
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

// Span conveniences over the active table.
double dot(std::span<const double> x, std::span<const double> y);
void rotate(std::span<double> x, std::span<double> y, double c, double s);
void axpy(double a, std::span<const double> x, std::span<double> y);

}  // namespace jwalk::simd
