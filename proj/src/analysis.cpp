#include "jwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jwalk/eigen.hpp"
#include "jwalk/errors.hpp"
#include "jwalk/evolution.hpp"
#include "jwalk/reduced_model.hpp"

namespace jwalk {
namespace {

void require_k3(int n, const char* what) {
  if (n < 6) throw DomainError(std::string(what) + ": needs n >= 6 (got n=" + std::to_string(n) + ")");
}

void require_positive_gamma(double gamma, const char* what) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(what) + ": jumping rate must be finite and positive");
  }
}

double cubic_derivative(const std::array<double, 4>& c, double x) { return (3 * c[0] * x + 2 * c[1]) * x + c[2]; }

// A few Newton steps, kept only while they reduce |p(x)|.
double polish_root(const std::array<double, 4>& c, double x) {
  for (int i = 0; i < 4; ++i) {
    const double fx = eval_cubic(c, x);
    const double dfx = cubic_derivative(c, x);
    if (fx == 0.0 || dfx == 0.0) break;
    const double next = x - fx / dfx;
    if (!(std::abs(eval_cubic(c, next)) < std::abs(fx))) break;
    x = next;
  }
  return x;
}

double nearest(const std::vector<double>& values, double target) {
  return *std::min_element(values.begin(), values.end(),
                           [&](double a, double b) { return std::abs(a - target) < std::abs(b - target); });
}

}  // namespace

CriticalGammaResult gamma_c_formula_k3(int n) {
  require_k3(n, "gamma_c_formula_k3");
  const double nn = n;
  return {1.0 / (3.0 * nn) + 7.0 / (6.0 * nn * nn), GammaMethod::FormulaK3};
}

double overlap_balance(const JohnsonParams& params, double gamma) {
  const ReducedModel model = search_hamiltonian(params, gamma);
  const auto records = overlap_spectrum(model.hamiltonian, initial_state(params), model.marked_index);
  return records[0].overlap_s - records[1].overlap_s;
}

CriticalGammaResult gamma_c_numeric(const JohnsonParams& params, const GammaSearchOptions& options) {
  params.require_reduced_model("gamma_c_numeric");
  const double kn = static_cast<double>(params.k()) * params.n();
  double lo = 1.0 / (2.0 * kn);
  double hi = 2.0 / kn;
  double f_lo = overlap_balance(params, lo);
  double f_hi = overlap_balance(params, hi);
  int expansions = 0;
  while (!(f_lo * f_hi <= 0.0)) {
    if (expansions == options.max_expansions) {
      throw SearchFailure("gamma_c_numeric: no sign change of the overlap balance in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] after " + std::to_string(expansions) + " expansions");
    }
    lo /= 2.0;
    hi *= 2.0;
    f_lo = overlap_balance(params, lo);
    f_hi = overlap_balance(params, hi);
    ++expansions;
  }
  if (f_lo == 0.0) return {lo, GammaMethod::Numeric, 0.0, 0.0};
  if (f_hi == 0.0) return {hi, GammaMethod::Numeric, 0.0, 0.0};

  while (hi - lo >= options.bracket_tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    const double f_mid = overlap_balance(params, mid);
    if (f_mid == 0.0) return {mid, GammaMethod::Numeric, 0.0, hi - lo};
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double gamma = 0.5 * (lo + hi);
  return {gamma, GammaMethod::Numeric, overlap_balance(params, gamma), hi - lo};
}

double energy_gap(const JohnsonParams& params, double gamma) {
  const ReducedModel model = search_hamiltonian(params, gamma);
  const auto spectrum = eig_sym(model.hamiltonian);
  return spectrum.eigenvalues[1] - spectrum.eigenvalues[0];
}

double predicted_peak_time(const JohnsonParams& params) {
  return std::numbers::pi * std::sqrt(static_cast<double>(params.vertex_count())) / 2.0;
}

NaiveSplitting naive_splitting_diagnostic(int n, double gamma) {
  require_k3(n, "naive_splitting_diagnostic");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("naive_splitting_diagnostic: bad jumping rate");
  const double nn = n;
  const std::array<double, 4> diag{-1.0, -gamma * nn, -2.0 * gamma * nn, -3.0 * gamma * nn};
  Matrix h0 = Matrix::diagonal(diag);
  Matrix h1(4, 4);
  h1(0, 1) = h1(1, 0) = -gamma * std::sqrt(3.0 * nn);
  h1(1, 2) = h1(2, 1) = -gamma * 2.0 * std::sqrt(2.0 * nn);
  h1(2, 3) = h1(3, 2) = -gamma * 3.0 * std::sqrt(nn);
  const double coupling = h0(0, 3) + h1(0, 3);
  return {std::move(h0), std::move(h1), coupling};
}

Matrix leading_block_k3(int n, double gamma) {
  require_k3(n, "leading_block_k3");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("leading_block_k3: bad jumping rate");
  const double nn = n;
  const double s3n = std::sqrt(3.0 * nn);
  const double s2n = std::sqrt(2.0 * nn);
  return Matrix{{-1.0, 0.0, -gamma * s3n},
                {0.0, -gamma * (2.0 * nn - 17.0), gamma * 2.0 * s2n},
                {-gamma * s3n, gamma * 2.0 * s2n, -gamma * (nn - 2.0)}};
}

std::array<double, 4> char_cubic_coeffs(int n, double gamma) {
  require_k3(n, "char_cubic_coeffs");
  const double g = gamma;
  const double nn = n;
  return {-1.0, -(3.0 * g * nn - 19.0 * g + 1.0), g * (19.0 - 34.0 * g - 2.0 * g * nn * nn + nn * (32.0 * g - 3.0)),
          g * g * (-34.0 + nn * (29.0 - 51.0 * g) + nn * nn * (-2.0 + 6.0 * g))};
}

double eval_cubic(const std::array<double, 4>& c, double x) { return ((c[0] * x + c[1]) * x + c[2]) * x + c[3]; }

std::array<double, 3> cubic_roots(const std::array<double, 4>& c) {
  if (c[0] == 0.0) throw DomainError("cubic_roots: leading coefficient is zero");
  // Monic form x^3 + b x^2 + cc x + d, then depressed t^3 + p t + q with x = t - b/3.
  const double b = c[1] / c[0];
  const double cc = c[2] / c[0];
  const double d = c[3] / c[0];
  const double p = cc - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * cc / 3.0 + d;
  std::array<double, 3> roots{};
  if (p >= 0.0) {
    // Only reachable for a (numerically) triple root when all roots are real.
    roots.fill(-b / 3.0 - std::cbrt(q));
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int j = 0; j < 3; ++j) {
      roots[j] = m * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0) - b / 3.0;
    }
  }
  for (double& r : roots) r = polish_root(c, r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

LambdaU lambda_u(int n, double gamma) {
  const auto coeffs = char_cubic_coeffs(n, gamma);
  const double seed = -1.0 - 1.0 / (2.0 * n);
  const auto block_spectrum = eig_sym(leading_block_k3(n, gamma)).eigenvalues;

  double x = seed;
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    const double dfx = cubic_derivative(coeffs, x);
    if (dfx == 0.0 || !std::isfinite(dfx)) break;
    const double step = eval_cubic(coeffs, x) / dfx;
    x -= step;
    if (!std::isfinite(x)) break;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) {
      converged = true;
      break;
    }
  }
  // Newton may wander to a different root; accept only the one nearest the seed.
  if (converged) {
    const auto roots = cubic_roots(coeffs);
    const double wanted = nearest({roots.begin(), roots.end()}, seed);
    converged = std::abs(x - wanted) <= 1e-9 * std::max(1.0, std::abs(wanted)) &&
                std::abs(x - nearest(block_spectrum, x)) <= 1e-8;
  }
  if (!converged) return {nearest(block_spectrum, seed), false};
  return {x, true};
}

std::array<double, 3> vector_u(int n, double gamma, double lambda) {
  require_k3(n, "vector_u");
  require_positive_gamma(gamma, "vector_u");
  const Matrix block = leading_block_k3(n, gamma);
  const auto spectrum = eig_sym(block).eigenvalues;
  if (std::abs(nearest(spectrum, lambda) - lambda) > 1e-8) {
    throw DomainError("vector_u: lambda is not an eigenvalue of the leading block");
  }
  const double nn = n;
  const double denominator = 2.0 * nn - 17.0 + lambda / gamma;
  if (std::abs(denominator) < 1e-10) {
    throw SingularityError("vector_u: 2n - 17 + lambda/gamma vanishes");
  }
  // Rows d_0 and r' of (block - lambda) u = 0 with u_d0 = 1.
  const double u_r2 = -(1.0 + lambda) / (gamma * std::sqrt(3.0 * nn));
  const double u_r1 = 2.0 * std::sqrt(2.0 * nn) / denominator * u_r2;
  const double norm = std::sqrt(1.0 + u_r1 * u_r1 + u_r2 * u_r2);
  return {1.0 / norm, u_r1 / norm, u_r2 / norm};
}

TwoLevelSystem effective_two_level(int n, double gamma) {
  require_positive_gamma(gamma, "effective_two_level");
  const Matrix h = transformed_hamiltonian(n, gamma);
  const auto u3 = vector_u(n, gamma, lambda_u(n, gamma).value);
  const std::array<double, 4> u{u3[0], 0.0, u3[1], u3[2]};
  constexpr std::size_t r = 1;

  double h_ru = 0.0;
  double h_uu = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) h_uu += u[i] * h(i, j) * u[j];
    h_ru += h(r, i) * u[i];
  }
  Matrix m{{h(r, r), h_ru}, {h_ru, h_uu}};
  const auto spectrum = eig_sym(m);
  TwoLevelSystem out{m, spectrum.eigenvalues[0], spectrum.eigenvalues[1], {}};
  for (std::size_t i = 0; i < 2; ++i) out.alpha[i] = {spectrum.vectors_t(i, 0), spectrum.vectors_t(i, 1)};
  return out;
}

PerturbationReport perturbation_report(int n, double gamma) {
  require_k3(n, "perturbation_report");
  require_positive_gamma(gamma, "perturbation_report");
  const LambdaU lu = lambda_u(n, gamma);
  const TwoLevelSystem two = effective_two_level(n, gamma);
  const double gap = two.e_plus - two.e_minus;
  return PerturbationReport{
      n,
      gamma,
      char_cubic_coeffs(n, gamma),
      lu.value,
      -gamma * (3.0 * n - 9.0),
      vector_u(n, gamma, lu.value),
      two.matrix,
      two.e_plus,
      two.e_minus,
      gap,
      gap > 0.0 ? std::numbers::pi / gap : std::numeric_limits<double>::infinity(),
  };
}

VerificationResult run_verification(const JohnsonParams& params, double gamma, double t_max, std::size_t steps,
                                    std::size_t vertex_cap) {
  const ReducedModel reduced = search_hamiltonian(params, gamma);
  const FullGraph graph = full_adjacency(params, vertex_cap);
  const std::size_t count = graph.vertex_count();

  Matrix h_full = -gamma * graph.adjacency_matrix();
  h_full(0, 0) -= 1.0;
  const std::vector<Complex> uniform(count, Complex(1.0 / std::sqrt(static_cast<double>(count)), 0.0));
  const StateVector s_full(uniform, Basis::Full);

  const TimeSeries full = success_curve(h_full, s_full, 0, t_max, steps);
  const TimeSeries small = success_curve(reduced.hamiltonian, initial_state(params), reduced.marked_index, t_max, steps);
  double worst = 0.0;
  for (std::size_t j = 0; j < steps; ++j) {
    worst = std::max(worst, std::abs(full.probabilities[j] - small.probabilities[j]));
  }
  return {worst, count};
}

}  // namespace jwalk
