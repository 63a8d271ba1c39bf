#pragma once

// Time evolution under a real symmetric Hamiltonian via its spectral
// decomposition: psi(t) = V exp(-i diag(E) t) V^T psi(0).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "jwalk/eigen.hpp"
#include "jwalk/matrix.hpp"

namespace jwalk {

using Complex = std::complex<double>;

enum class Basis { Full, Distance, Transformed };

// Unit-norm complex amplitude vector tagged with the basis it lives in.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-10;

  // Throws DomainError if sum |a_i|^2 differs from 1 by more than kNormTolerance.
  StateVector(std::vector<Complex> amplitudes, Basis basis);
  // Real amplitudes convenience.
  static StateVector from_real(std::span<const double> amplitudes, Basis basis);
  // Rescales to unit norm first; throws DomainError for the zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes, Basis basis);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  Basis basis() const noexcept { return basis_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_.at(i); }
  double probability(std::size_t i) const { return std::norm(amplitudes_.at(i)); }
  double norm() const;

 private:
  std::vector<Complex> amplitudes_;
  Basis basis_;
};

// Uniform time grid inclusive of both endpoints, with the matching
// probabilities.
struct TimeSeries {
  std::vector<double> times;
  std::vector<double> probabilities;

  std::size_t size() const noexcept { return times.size(); }
  // Index of the largest probability (first one on ties).
  std::size_t argmax() const;
};

// t_j = j t_max / (steps - 1), j = 0..steps-1. Requires steps >= 2, t_max >= 0.
std::vector<double> uniform_grid(double t_max, std::size_t steps);

// Caches the decomposition of H so many evaluations share one diagonalization.
class Propagator {
 public:
  explicit Propagator(const Matrix& hamiltonian);
  explicit Propagator(SpectralDecomposition spectrum);

  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  std::size_t dimension() const noexcept { return spectrum_.dimension(); }

  // Exactly psi0 when t == 0.
  StateVector evolve(const StateVector& psi0, double t) const;

  // <index| psi(t)> without forming the whole state.
  Complex amplitude(const StateVector& psi0, std::size_t index, double t) const;

  // |<marked|psi(t_j)>|^2 over uniform_grid(t_max, steps).
  TimeSeries success_curve(const StateVector& psi0, std::size_t marked, double t_max, std::size_t steps) const;

 private:
  // c_i = <psi_i | psi0>
  std::vector<Complex> project(const StateVector& psi0) const;
  void check_dimension(const StateVector& psi0) const;

  SpectralDecomposition spectrum_;
};

StateVector evolve(const Matrix& hamiltonian, const StateVector& psi0, double t);

TimeSeries success_curve(const Matrix& hamiltonian, const StateVector& psi0, std::size_t marked, double t_max,
                         std::size_t steps);

struct OverlapRecord {
  double energy;
  double overlap_s;  // |<s|psi_i>|^2
  double overlap_w;  // |<w|psi_i>|^2
};

std::vector<OverlapRecord> overlap_spectrum(const SpectralDecomposition& spectrum, const StateVector& s,
                                            std::size_t marked);
std::vector<OverlapRecord> overlap_spectrum(const Matrix& hamiltonian, const StateVector& s, std::size_t marked);

}  // namespace jwalk
