#pragma once

#include "polariton/quadratic_model.hpp"
#include "polariton/two_mode.hpp"

namespace polariton::fock_oracle {

/// Truncated two-mode Fock space with per-mode cutoff N_c; basis ordered
/// lexicographically in (n_a, n_b). Deliberately shares nothing with the
/// symplectic machinery beyond the eigensolver.
struct FockSpace2 {
  explicit FockSpace2(int cutoff = 14);

  int cutoff;
  int dim;                // cutoff * cutoff
  numerics::Mat x_a;      // a + a^dag
  numerics::Mat y_a;      // a - a^dag
  numerics::Mat x_b;      // b + b^dag
  numerics::Mat y_b;      // b - b^dag (real antisymmetric; [i(b-b^dag)]^2 = -y_b^2)
  numerics::Mat n_a;      // a^dag a
  numerics::Mat n_b;

  int index(int na, int nb) const { return na * cutoff + nb; }
};

struct OracleLabels {
  // indices into the ascending eigenvalue order
  int ground = -1, one_lower = -1, one_upper = -1;
  int two_lower = -1, mixed = -1, two_upper = -1;
};

struct OracleResult {
  numerics::Vec eigenvalues;  // ascending
  numerics::Mat eigenvectors;
  OracleLabels labels;
  double c0 = 0.0, c_two_upper = 0.0, c_two_lower = 0.0, c_mixed = 0.0;
  double residual = 0.0;  // 1 - sum |c|^2
  double n_upper = 0.0, n_lower = 0.0;
};

numerics::Mat build_fock_hamiltonian(const two_mode::TwoModeParams& p,
                                     const FockSpace2& space);

/// Diagonalizes the truncated Hamiltonian, labels the low-lying states by
/// parity and energy rank, expands the bare vacuum on them (including the
/// four-quanta shell, matched by energy) and returns the resulting
/// population estimates. Throws ExpansionBreakdown when the retained
/// states miss more than 5% of the bare vacuum.
OracleResult oracle_populations(const two_mode::TwoModeParams& p, int cutoff = 14);

/// max_k || p_k |G> || over the truncated ground state, with the polariton
/// operators built from the Bogoliubov coefficients of `decomp`.
double polariton_vacuum_check(const two_mode::TwoModeParams& p,
                              const NormalModeDecomposition& decomp,
                              int cutoff = 14);

}  // namespace polariton::fock_oracle
