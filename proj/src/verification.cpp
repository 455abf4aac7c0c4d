#include "polariton/verification.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "polariton/fock_oracle.hpp"
#include "polariton/microscopic.hpp"

namespace polariton::verification {

using numerics::Mat;
using numerics::Vec;
using two_mode::TwoModeParams;

double symplectic_residual(const NormalModeDecomposition& decomp) {
  const int n = decomp.mode_count();
  const Mat s = decomp.symplectic();
  Mat metric = Mat::Identity(2 * n, 2 * n);
  metric.bottomRightCorner(n, n) *= -1.0;
  return (s * metric * s.transpose() - metric).cwiseAbs().maxCoeff();
}

double normalization_residual(const NormalModeDecomposition& decomp) {
  double worst = 0.0;
  for (int k = 0; k < decomp.mode_count(); ++k) {
    const double sum =
        decomp.mu.row(k).squaredNorm() - decomp.nu.row(k).squaredNorm();
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

namespace {

CheckResult bounded(const std::string& name, double worst, double bound) {
  CheckResult r;
  r.name = name;
  r.worst = worst;
  r.passed = worst <= bound;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "worst %.3g, bound %.3g", worst, bound);
  r.detail = buf;
  return r;
}

}  // namespace

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> results;
  std::mt19937 rng(20240515);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  {  // symplectic + normalization + product rule on random stable models
    double worst_sym = 0.0, worst_norm = 0.0, worst_prod = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      TwoModeParams p;
      p.omega_a = 0.5 + unit(rng);
      p.lambda = 0.4 * unit(rng);
      p.D = 0.2 * unit(rng);
      p.eta = 0.2 * unit(rng);
      p.u = 0.2 * unit(rng);
      try {
        p.validate();
      } catch (const UnstableHamiltonian&) {
        continue;
      }
      const auto model = make_two_mode_model(p);
      const auto decomp = diagonalize(model);
      worst_sym = std::max(worst_sym, symplectic_residual(decomp));
      worst_norm = std::max(worst_norm, normalization_residual(decomp));
      const double det = position_form(model).entries().determinant();
      worst_prod = std::max(
          worst_prod, std::abs(frequency_product_residual(model, decomp)) / det);
    }
    results.push_back(bounded("symplectic_identity", worst_sym, 1e-10));
    results.push_back(bounded("bogoliubov_normalization", worst_norm, 1e-10));
    results.push_back(bounded("frequency_product_rule", worst_prod, 1e-10));
  }

  {  // equal populations under the sum rule
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        TwoModeParams p;
        p.lambda = 0.4 * i / 20.0;
        p.omega_a = 1.0 + (-0.5 + j / 20.0);
        p.D = two_mode::trk_D(p.lambda, p.omega_b);
        const auto [nu, nl] = two_mode::populations(p);
        worst = std::max(worst, std::abs(nu - nl));
      }
    results.push_back(bounded("sum_rule_equal_populations", worst, 1e-10));
  }

  {  // closed form vs Fock-space oracle
    double worst = 0.0;
    for (double lambda : {0.1, 0.2, 0.3}) {
      TwoModeParams p;
      p.lambda = lambda;
      p.D = two_mode::trk_D(lambda, 1.0);
      const auto [nu, nl] = two_mode::populations(p);
      const auto oracle = fock_oracle::oracle_populations(p);
      const double tol = std::max(1e-4, oracle.residual);
      worst = std::max({worst, std::abs(nu - oracle.n_upper) / tol,
                        std::abs(nl - oracle.n_lower) / tol});
    }
    results.push_back(bounded("fock_oracle_agreement", worst, 1.0));
  }

  {  // cavity-harmonic sum against the closed form
    const auto spec = microscopic::build_fabry_perot(1.0, 1.0, 0.2, 25, 5, 0.0);
    const auto elim = microscopic::adiabatic_eliminate(spec);
    const double expected = microscopic::fabry_perot_eta(1.0, 0.2, 25);
    results.push_back(bounded("fabry_perot_eta_sum",
                              std::abs(elim.effective.eta - expected), 1e-14));
  }

  return results;
}

}  // namespace polariton::verification
