#pragma once

#include <string>
#include <vector>

#include "polariton/quadratic_model.hpp"

namespace polariton::verification {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst observed residual / deviation
  std::string detail;
};

/// || S K S^T - K ||_max with K = diag(I, -I); the commutation metric
/// preserved by any Bogoliubov transformation.
double symplectic_residual(const NormalModeDecomposition& decomp);

/// max_k | sum_i (mu_ki^2 - nu_ki^2) - 1 |.
double normalization_residual(const NormalModeDecomposition& decomp);

/// Invariant and oracle battery used by the `verify` subcommand.
/// Deterministic (fixed seed).
std::vector<CheckResult> run_all_checks();

}  // namespace polariton::verification
