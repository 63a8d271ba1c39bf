// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion is evaluated at its stated tolerance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jwalk/analysis.hpp"
#include "jwalk/evolution.hpp"
#include "jwalk/johnson.hpp"
#include "jwalk/reduced_model.hpp"
#include "jwalk/simd/kernels.hpp"
#include "oracles.hpp"

namespace {

using namespace jwalk;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Peak {
  double time;
  double probability;
};

Peak simulate_peak(int n, int k, double gamma, double t_max, std::size_t steps) {
  const JohnsonParams p(n, k);
  const auto model = search_hamiltonian(p, gamma);
  const auto curve = success_curve(model.hamiltonian, initial_state(p), model.marked_index, t_max, steps);
  const std::size_t i = curve.argmax();
  return {curve.times[i], curve.probabilities[i]};
}

void c1_small_peak(Outcome& o) {
  const auto start = Clock::now();
  const Peak peak = simulate_peak(100, 3, 0.003455, 700.0, 2001);
  const double elapsed = seconds_since(start);
  o.detail << "max p=" << peak.probability << " at t=" << peak.time << ", " << elapsed << " s";
  o.require(peak.probability >= 0.99, "max p >= 0.99");
  o.require(std::abs(peak.time - 631.65) <= 5.0, "t within 631.65 +/- 5");
  o.require(elapsed < 1.0, "runtime < 1 s");
}

void c2_large_peak(Outcome& o) {
  const int n = 1000;
  const double gamma = 1.0 / 3000.0 + 7.0 / 6e6;
  const JohnsonParams p(n, 3);
  const double t_max = 1.5 * predicted_peak_time(p);
  const auto start = Clock::now();
  const Peak peak = simulate_peak(n, 3, gamma, t_max, 60001);
  const double elapsed = seconds_since(start);
  const auto model = search_hamiltonian(p, gamma);
  const double at_target = evolve(model.hamiltonian, initial_state(p), 20248.5).probability(0);
  o.detail << "max p=" << peak.probability << " at t=" << peak.time << ", p(20248.5)=" << at_target << ", "
           << elapsed << " s";
  o.require(peak.probability >= 0.99, "max p >= 0.99");
  o.require(std::abs(peak.time - 20248.5) <= 50.0, "t within 20248.5 +/- 50");
  o.require(elapsed < 1.0, "runtime < 1 s");
}

void c3_oracle_equivalence(Outcome& o) {
  const std::vector<std::pair<int, int>> cases{{5, 2}, {6, 2}, {6, 3}, {7, 3}, {8, 4}};
  double worst = 0.0;
  for (auto [n, k] : cases) {
    const JohnsonParams p(n, k);
    const double t_max = 2.0 * std::numbers::pi * std::sqrt(static_cast<double>(p.vertex_count()));
    for (double scale : {0.5, 1.0, 2.0}) {
      const double gamma = scale / (static_cast<double>(k) * n);
      const double dev = run_verification(p, gamma, t_max, 200).max_deviation;
      worst = std::max(worst, dev);
      if (dev > 1e-10) {
        std::ostringstream what;
        what << "J(" << n << "," << k << ") gamma=" << gamma << " deviation " << dev;
        o.require(false, what.str());
      }
    }
  }
  o.detail << "max deviation " << worst << " over 15 cases";
}

void c4_critical_gamma(Outcome& o) {
  const auto start = Clock::now();
  for (int n : {50, 100, 200, 500}) {
    const double numeric = gamma_c_numeric(JohnsonParams(n, 3)).gamma;
    const double diff = std::abs(numeric - gamma_c_formula_k3(n).gamma);
    const double bound = 20.0 / (static_cast<double>(n) * n * n);
    o.detail << "n=" << n << " diff=" << diff << " (bound " << bound << "); ";
    o.require(diff <= bound, "n=" + std::to_string(n) + " within 20/n^3");
    if (n == 100) o.require(diff >= 1e-6 && diff <= 1e-5, "n=100 difference in [1e-6, 1e-5]");
  }
  const double elapsed = seconds_since(start);
  o.detail << elapsed << " s";
  o.require(elapsed < 10.0, "runtime < 10 s");
}

void c5_gap_law(Outcome& o) {
  for (int n : {100, 300, 1000}) {
    const JohnsonParams p(n, 3);
    const double gap = energy_gap(p, gamma_c_numeric(p).gamma);
    const double ratio = gap * std::sqrt(static_cast<double>(p.vertex_count())) / 2.0;
    o.detail << "n=" << n << " dE*sqrt(N)/2=" << ratio << "; ";
    o.require(std::abs(ratio - 1.0) <= 0.1, "n=" + std::to_string(n) + " gap law");
  }
}

void c6_perturbation(Outcome& o) {
  for (int n : {100, 1000}) {
    const double nn = n;
    const double gamma = gamma_c_formula_k3(n).gamma;
    const auto r = perturbation_report(n, gamma);
    const double target = std::sqrt(6.0) / std::pow(nn, 1.5);
    const double off = std::abs(r.effective(0, 1));
    const double split = r.e_plus - r.e_minus;
    const double lam = std::abs(r.lambda_u + 1.0 + 1.0 / (2.0 * nn));
    o.detail << "n=" << n << " |H_ru|/target=" << off / target << " dE/target=" << split / (2 * target)
             << " |lambda_u+1+1/2n|*n^2=" << lam * nn * nn << "; ";
    const std::string tag = "n=" + std::to_string(n);
    o.require(std::abs(off - target) <= 0.25 * target, tag + " off-diagonal within 25%");
    o.require(std::abs(split - 2 * target) <= 0.25 * 2 * target, tag + " E+ - E- within 25%");
    o.require(lam <= 10.0 / (nn * nn), tag + " lambda_u expansion");
  }
}

void c7_structure(Outcome& o) {
  std::size_t checked = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2 * k; n <= 40; ++n) {
      const JohnsonParams p(n, k);
      const auto ia = intersection_array(p);
      for (int i = 0; i <= k; ++i) {
        ++checked;
        if (ia.column_sum(i) != p.degree()) o.require(false, "column sum J(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  o.detail << checked << " column sums; ";

  double worst_orth = 0.0, worst_h = 0.0;
  for (int n : {6, 10, 100, 1000}) {
    const Matrix t = basis_change_T(n).t;
    worst_orth = std::max(worst_orth, (t.transpose() * t - Matrix::identity(4)).max_abs());
    for (double gamma : {gamma_c_formula_k3(n).gamma, 0.00345, 0.05}) {
      const Matrix a = transformed_hamiltonian(n, gamma);
      const Matrix b = transformed_hamiltonian_closed_form(n, gamma);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          const double err = b(i, j) == 0.0 ? std::abs(a(i, j)) : std::abs(a(i, j) - b(i, j)) / std::abs(b(i, j));
          worst_h = std::max(worst_h, err);
        }
    }
  }
  o.detail << "T^T T err " << worst_orth << ", H' rel err " << worst_h << "; ";
  o.require(worst_orth <= 1e-12, "T^T T = I");
  o.require(worst_h <= 1e-12, "H' closed form");

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> nd(6, 2000);
  std::uniform_real_distribution<double> gd(0.0, 0.05);
  double worst_cubic = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = nd(rng);
    double gamma = gd(rng);
    if (gamma == 0.0) gamma = 0.05;
    const auto coeffs = char_cubic_coeffs(n, gamma);
    const auto fit = oracle::char_poly_invariants(leading_block_k3(n, gamma));
    for (int i = 0; i < 4; ++i) {
      const double scale = std::max(std::abs(coeffs[i]), std::abs(fit[i]));
      worst_cubic = std::max(worst_cubic, std::abs(coeffs[i] - fit[i]) / scale);
    }
  }
  o.detail << "cubic rel err " << worst_cubic << "; ";
  o.require(worst_cubic <= 1e-9, "cubic coefficients");

  bool zero = true;
  for (int n : {6, 10, 100, 1000})
    for (double gamma : {0.001, 1.0 / (3 * n), 0.1}) zero = zero && naive_splitting_diagnostic(n, gamma).d0_d3_coupling == 0.0;
  o.detail << "d0-d3 coupling " << (zero ? "0" : "nonzero");
  o.require(zero, "d0-d3 coupling exactly 0");
}

void c8_diameter(Outcome& o) {
  for (int n = 6; n <= 10; ++n) {
    const auto g = full_adjacency(JohnsonParams(n, 3));
    int diameter = 0;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      const auto d = bfs_distances(g, u);
      diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
    }
    o.detail << "J(" << n << ",3):" << diameter << " ";
    o.require(diameter == 3, "J(" + std::to_string(n) + ",3) diameter 3");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"C1 success curve J(100,3)", c1_small_peak},
      {"C2 success curve J(1000,3)", c2_large_peak},
      {"C3 full vs reduced oracle", c3_oracle_equivalence},
      {"C4 critical gamma consistency", c4_critical_gamma},
      {"C5 gap law", c5_gap_law},
      {"C6 perturbation report", c6_perturbation},
      {"C7 structural identities", c7_structure},
      {"C8 tetrahedral diameter", c8_diameter},
  };
  std::printf("kernels: %s\n", std::string(simd::backend_name(simd::kernels().backend)).c_str());
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    o.detail.precision(10);
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
