#pragma once

// Critical jumping rate, energy gap and runtime predictions, and the
// numerical checks of the degenerate-perturbation-theory treatment of
// search on tetrahedral graphs J(n, 3).

#include <array>
#include <cstddef>

#include "jwalk/johnson.hpp"
#include "jwalk/matrix.hpp"

namespace jwalk {

enum class GammaMethod { FormulaK3, Numeric };

struct CriticalGammaResult {
  double gamma;
  GammaMethod method;
  // Overlap-balance residual |<s|psi0>|^2 - |<s|psi1>|^2 at `gamma` (0 for the formula).
  double residual = 0.0;
  // Final bisection bracket width (0 for the formula).
  double bracket_width = 0.0;
};

// 1/(3n) + 7/(6n^2). Requires n >= 6.
CriticalGammaResult gamma_c_formula_k3(int n);

struct GammaSearchOptions {
  double bracket_tolerance = 1e-12;
  int max_expansions = 10;
};

// Overlap balance f(gamma) = |<s|psi0>|^2 - |<s|psi1>|^2 on the reduced model.
double overlap_balance(const JohnsonParams& params, double gamma);

// Bisection root of overlap_balance, starting from [1/(2kn), 2/(kn)] and
// widening geometrically until it brackets a sign change. Throws
// SearchFailure when no sign change is found. The optimal-runtime jumping rate
// needs precision o(n^{-5/2}); the default 1e-12 bracket is far below that
// for every n the tool handles.
CriticalGammaResult gamma_c_numeric(const JohnsonParams& params, const GammaSearchOptions& options = {});

// E_1 - E_0 of the reduced Hamiltonian.
double energy_gap(const JohnsonParams& params, double gamma);

// pi sqrt(N) / 2 with N = C(n, k).
double predicted_peak_time(const JohnsonParams& params);

struct NaiveSplitting {
  Matrix h0;  // leading order: -diag(1, gamma n, 2 gamma n, 3 gamma n)
  Matrix h1;  // O(sqrt n) couplings
  double d0_d3_coupling;  // <d0|(H0 + H1)|d3>
};

// Leading/next-order split of the J(n,3) Hamiltonian in the distance basis.
NaiveSplitting naive_splitting_diagnostic(int n, double gamma);

// The 3x3 block of the leading-order transformed Hamiltonian over
// (d_0, r', r''):
//   -gamma [[1/gamma, 0, sqrt(3n)], [0, 2n-17, -2 sqrt(2n)], [sqrt(3n), -2 sqrt(2n), n-2]]
Matrix leading_block_k3(int n, double gamma);

// Coefficients (lambda^3, lambda^2, lambda, 1) of det(block - lambda I).
std::array<double, 4> char_cubic_coeffs(int n, double gamma);

// Evaluates sum coeffs[i] lambda^(3-i).
double eval_cubic(const std::array<double, 4>& coeffs, double lambda);

// All three (real) roots of the cubic, ascending.
std::array<double, 3> cubic_roots(const std::array<double, 4>& coeffs);

struct LambdaU {
  double value;
  bool newton_converged;
};

// Eigenvalue of the leading block nearest -1 - 1/(2n), by Newton iteration
// on the cubic; falls back to the block's nearest eigenvalue if Newton fails.
LambdaU lambda_u(int n, double gamma);

// Normalized eigenvector (u_d0, u_r', u_r'') of the leading block for
// eigenvalue lambda, with u_d0 > 0. Throws DomainError if lambda is not an
// eigenvalue within 1e-8, SingularityError if 2n - 17 + lambda/gamma ~ 0.
std::array<double, 3> vector_u(int n, double gamma, double lambda);

struct TwoLevelSystem {
  Matrix matrix;  // 2x2 over (r, u)
  double e_minus;  // lower eigenvalue
  double e_plus;   // upper eigenvalue
  // (alpha_r, alpha_u) for e_minus and e_plus respectively.
  std::array<std::array<double, 2>, 2> alpha;
};

// Quadratic forms of the full transformed Hamiltonian against |r> = (0,1,0,0)
// and |u> = (u_d0, 0, u_r', u_r'') in the (d_0, r, r', r'') ordering.
TwoLevelSystem effective_two_level(int n, double gamma);

struct PerturbationReport {
  int n;
  double gamma;
  std::array<double, 4> cubic_coefficients;
  double lambda_u;
  double e_r;  // -gamma (3n - 9)
  std::array<double, 3> u;
  Matrix effective;
  double e_plus;
  double e_minus;
  double predicted_gap;      // e_plus - e_minus
  double predicted_runtime;  // pi / predicted_gap
};

PerturbationReport perturbation_report(int n, double gamma);

struct VerificationResult {
  double max_deviation;
  std::size_t vertex_count;
};

// Max over the grid of |p_full(t) - p_reduced(t)| with the marked vertex as
// vertex 0 of the brute-force graph. Throws ResourceError above `vertex_cap`.
VerificationResult run_verification(const JohnsonParams& params, double gamma, double t_max, std::size_t steps,
                                    std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace jwalk
