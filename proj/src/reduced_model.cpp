#include "jwalk/reduced_model.hpp"

#include <array>
#include <cmath>
#include <string>

#include "jwalk/errors.hpp"

namespace jwalk {
namespace {

void require_k3(int n, const char* what) {
  if (n < 6) throw DomainError(std::string(what) + ": tetrahedral graphs J(n,3) need n >= 6 (got n=" +
                               std::to_string(n) + ")");
}

void require_gamma(double gamma, const char* what) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError(std::string(what) + ": jumping rate must be finite and non-negative");
  }
}

using Ext = long double;
using Ext4 = std::array<std::array<Ext, 4>, 4>;

// T for J(n, 3), columns (d_0, r, r', r''), rows (d_0, d_1, d_2, d_3).
template <typename Real>
std::array<std::array<Real, 4>, 4> tetrahedral_basis(int n_int) {
  using std::sqrt;
  const Real n = n_int;
  const Real n2p2 = n * n + 2;
  std::array<std::array<Real, 4>, 4> t{};
  t[0][0] = 1;
  // |r> = sqrt(18/(n^2+2)) (|d1> + sqrt((n-4)/2)|d2> + sqrt((n-4)(n-5)/18)|d3>)
  const Real rs = sqrt(Real(18) / n2p2);
  t[1][1] = rs;
  t[2][1] = rs * sqrt((n - 4) / 2);
  t[3][1] = rs * sqrt((n - 4) * (n - 5) / 18);
  // |r'> = sqrt(9/(n+4)) (-sqrt((n-5)/9)|d2> + |d3>)
  const Real r1 = sqrt(Real(9) / (n + 4));
  t[2][2] = -r1 * sqrt((n - 5) / 9);
  t[3][2] = r1;
  // |r''> = 9 sqrt2 / sqrt((n^2+2)(n+4)) ((n+4)sqrt(n-4)/(9 sqrt2)|d1> - |d2> - sqrt(n-5)/3 |d3>)
  const Real sqrt2 = sqrt(Real(2));
  const Real r2 = 9 * sqrt2 / sqrt(n2p2 * (n + 4));
  t[1][3] = r2 * (n + 4) * sqrt(n - 4) / (9 * sqrt2);
  t[2][3] = -r2;
  t[3][3] = -r2 * sqrt(n - 5) / 3;
  return t;
}

}  // namespace

IntersectionArray intersection_array(const JohnsonParams& params) {
  params.require_reduced_model("intersection_array");
  const std::int64_t n = params.n();
  const std::int64_t k = params.k();
  IntersectionArray ia;
  for (std::int64_t i = 1; i <= k; ++i) ia.c.push_back(i * i);
  for (std::int64_t i = 0; i <= k; ++i) ia.a.push_back(i * (n - 2 * i));
  for (std::int64_t i = 0; i < k; ++i) ia.b.push_back((k - i) * (n - k - i));
  return ia;
}

Matrix reduced_adjacency(const JohnsonParams& params) {
  const IntersectionArray ia = intersection_array(params);
  const int k = params.k();
  Matrix a(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) {
    a(i, i) = static_cast<double>(ia.same(i));
    if (i < k) {
      // Exact integer radicand b_i c_{i+1}.
      const std::int64_t radicand = ia.up(i) * ia.down(i + 1);
      a(i, i + 1) = a(i + 1, i) = std::sqrt(static_cast<double>(radicand));
    }
  }
  return a;
}

ReducedModel search_hamiltonian(const JohnsonParams& params, double gamma) {
  require_gamma(gamma, "search_hamiltonian");
  Matrix adjacency = reduced_adjacency(params);
  Matrix h = -gamma * adjacency;
  h(0, 0) -= 1.0;
  return ReducedModel{params, gamma, std::move(adjacency), std::move(h), 0};
}

StateVector initial_state(const JohnsonParams& params) {
  const auto sizes = class_sizes(params);
  const double total = static_cast<double>(params.vertex_count());
  std::vector<Complex> amp(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) amp[i] = std::sqrt(static_cast<double>(sizes[i])) / std::sqrt(total);
  return StateVector(std::move(amp), Basis::Distance);
}

BasisChange basis_change_T(int n) {
  require_k3(n, "basis_change_T");
  const auto t = tetrahedral_basis<double>(n);
  BasisChange out{n, Matrix(4, 4)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.t(i, j) = t[i][j];
  return out;
}

Matrix transformed_hamiltonian(int n, double gamma) {
  require_k3(n, "transformed_hamiltonian");
  require_gamma(gamma, "transformed_hamiltonian");
  // The r-r'' entry is a small difference of O(gamma n) terms; plain double
  // loses ~12 digits of it at n ~ 1000, so the product runs in long double.
  const auto t = tetrahedral_basis<Ext>(n);
  const Ext nn = n;
  const Ext g = gamma;
  Ext4 h{};
  h[0][0] = -1;
  h[0][1] = h[1][0] = -g * std::sqrt(3 * (nn - 3));
  h[1][1] = -g * (nn - 2);
  h[1][2] = h[2][1] = -g * 2 * std::sqrt(2 * (nn - 4));
  h[2][2] = -g * 2 * (nn - 4);
  h[2][3] = h[3][2] = -g * 3 * std::sqrt(nn - 5);
  h[3][3] = -g * 3 * (nn - 6);

  Ext4 ht{};  // H T
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int m = 0; m < 4; ++m) ht[i][j] += h[i][m] * t[m][j];
  Matrix out(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Ext sum = 0;
      for (int m = 0; m < 4; ++m) sum += t[m][i] * ht[m][j];
      out(i, j) = static_cast<double>(sum);
    }
  }
  // Enforce exact symmetry after rounding.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out(j, i) = out(i, j);
  return out;
}

Matrix transformed_hamiltonian_closed_form(int n_int, double gamma) {
  require_k3(n_int, "transformed_hamiltonian_closed_form");
  require_gamma(gamma, "transformed_hamiltonian_closed_form");
  const double n = n_int;
  const double n2p2 = n * n + 2;
  const double np4 = n + 4;
  const double d0r = 3 * std::sqrt(6 * (n - 3)) / std::sqrt(n2p2);
  const double d0r2 = std::sqrt(3 * (n - 3) * (n - 4) * np4) / std::sqrt(n2p2);
  const double rr = 3 * (n * n * n - 3 * n * n + 2 * n - 12) / n2p2;
  const double rr2 = -3 * std::sqrt(2 * (n - 4) * np4) / n2p2;
  const double r1r1 = (2 * n * n - 9 * n - 32) / np4;
  const double r1r2 = -2 * std::sqrt(2 * (n - 5) * n2p2) / np4;
  const double r2r2 = (n * n * n * n + 2 * n * n * n - 42 * n * n + 22 * n - 16) / (np4 * n2p2);

  Matrix m(4, 4);
  m(0, 0) = -1.0;
  m(0, 1) = m(1, 0) = -gamma * d0r;
  m(0, 3) = m(3, 0) = -gamma * d0r2;
  m(1, 1) = -gamma * rr;
  m(1, 3) = m(3, 1) = -gamma * rr2;
  m(2, 2) = -gamma * r1r1;
  m(2, 3) = m(3, 2) = -gamma * r1r2;
  m(3, 3) = -gamma * r2r2;
  return m;
}

}  // namespace jwalk
