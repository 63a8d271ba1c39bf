#include "jwalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jwalk/errors.hpp"
#include "jwalk/simd/kernels.hpp"

namespace jwalk {
namespace {

double squared_norm(const std::vector<Complex>& a) {
  double s = 0.0;
  for (const auto& z : a) s += std::norm(z);
  return s;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes, Basis basis)
    : amplitudes_(std::move(amplitudes)), basis_(basis) {
  const double n2 = squared_norm(amplitudes_);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw DomainError("StateVector: squared norm is " + std::to_string(n2) + ", expected 1");
  }
}

StateVector StateVector::from_real(std::span<const double> amplitudes, Basis basis) {
  return StateVector(std::vector<Complex>(amplitudes.begin(), amplitudes.end()), basis);
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes, Basis basis) {
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("StateVector: cannot normalize a zero or non-finite vector");
  for (auto& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes), basis);
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

std::size_t TimeSeries::argmax() const {
  if (probabilities.empty()) throw DomainError("TimeSeries::argmax: empty series");
  return static_cast<std::size_t>(std::max_element(probabilities.begin(), probabilities.end()) -
                                  probabilities.begin());
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  if (steps < 2) throw DomainError("time grid needs at least 2 steps");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw DomainError("time grid needs a finite t_max >= 0");
  std::vector<double> t(steps);
  for (std::size_t j = 0; j < steps; ++j) t[j] = static_cast<double>(j) * t_max / static_cast<double>(steps - 1);
  return t;
}

Propagator::Propagator(const Matrix& hamiltonian) : spectrum_(eig_sym(hamiltonian)) {}

Propagator::Propagator(SpectralDecomposition spectrum) : spectrum_(std::move(spectrum)) {}

void Propagator::check_dimension(const StateVector& psi0) const {
  if (psi0.size() != dimension()) {
    throw DomainError("evolve: state has dimension " + std::to_string(psi0.size()) + " but the Hamiltonian has " +
                      std::to_string(dimension()));
  }
}

std::vector<Complex> Propagator::project(const StateVector& psi0) const {
  const std::size_t n = dimension();
  std::vector<double> re(n);
  std::vector<double> im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = psi0[j].real();
    im[j] = psi0[j].imag();
  }
  const auto& k = simd::kernels();
  std::vector<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* v = spectrum_.eigenvector(i).data();
    c[i] = {k.dot(v, re.data(), n), k.dot(v, im.data(), n)};
  }
  return c;
}

StateVector Propagator::evolve(const StateVector& psi0, double t) const {
  check_dimension(psi0);
  if (t == 0.0) return psi0;
  const std::size_t n = dimension();
  const auto c = project(psi0);
  std::vector<double> re(n, 0.0);
  std::vector<double> im(n, 0.0);
  const auto& k = simd::kernels();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex z = std::polar(1.0, -spectrum_.eigenvalues[i] * t) * c[i];
    const double* v = spectrum_.eigenvector(i).data();
    k.axpy(z.real(), v, re.data(), n);
    k.axpy(z.imag(), v, im.data(), n);
  }
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = {re[j], im[j]};
  return StateVector(std::move(out), psi0.basis());
}

Complex Propagator::amplitude(const StateVector& psi0, std::size_t index, double t) const {
  check_dimension(psi0);
  if (index >= dimension()) throw DomainError("amplitude: index out of range");
  if (t == 0.0) return psi0[index];
  const auto c = project(psi0);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < dimension(); ++i) {
    sum += spectrum_.vectors_t(i, index) * c[i] * std::polar(1.0, -spectrum_.eigenvalues[i] * t);
  }
  return sum;
}

TimeSeries Propagator::success_curve(const StateVector& psi0, std::size_t marked, double t_max,
                                     std::size_t steps) const {
  check_dimension(psi0);
  if (marked >= dimension()) throw DomainError("success_curve: marked index out of range");
  TimeSeries out;
  out.times = uniform_grid(t_max, steps);
  out.probabilities.resize(steps);

  // <marked|psi(t)> = sum_i V(marked, i) c_i exp(-i E_i t)
  const auto c = project(psi0);
  std::vector<Complex> weights(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) weights[i] = spectrum_.vectors_t(i, marked) * c[i];

  for (std::size_t j = 0; j < steps; ++j) {
    const double t = out.times[j];
    if (t == 0.0) {
      out.probabilities[j] = psi0.probability(marked);
      continue;
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
      sum += weights[i] * std::polar(1.0, -spectrum_.eigenvalues[i] * t);
    }
    out.probabilities[j] = std::norm(sum);
  }
  return out;
}

StateVector evolve(const Matrix& hamiltonian, const StateVector& psi0, double t) {
  return Propagator(hamiltonian).evolve(psi0, t);
}

TimeSeries success_curve(const Matrix& hamiltonian, const StateVector& psi0, std::size_t marked, double t_max,
                         std::size_t steps) {
  return Propagator(hamiltonian).success_curve(psi0, marked, t_max, steps);
}

std::vector<OverlapRecord> overlap_spectrum(const SpectralDecomposition& spectrum, const StateVector& s,
                                            std::size_t marked) {
  const std::size_t n = spectrum.dimension();
  if (s.size() != n) throw DomainError("overlap_spectrum: state dimension does not match the Hamiltonian");
  if (marked >= n) throw DomainError("overlap_spectrum: marked index out of range");
  std::vector<OverlapRecord> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = spectrum.eigenvector(i);
    Complex overlap{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) overlap += std::conj(s[j]) * v[j];
    out[i] = {spectrum.eigenvalues[i], std::norm(overlap), v[marked] * v[marked]};
  }
  return out;
}

std::vector<OverlapRecord> overlap_spectrum(const Matrix& hamiltonian, const StateVector& s, std::size_t marked) {
  return overlap_spectrum(eig_sym(hamiltonian), s, marked);
}

}  // namespace jwalk
