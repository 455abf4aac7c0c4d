#pragma once

#include <array>
#include <vector>

#include "polariton/quadratic_model.hpp"

namespace polariton::dicke {

/// Generalized Dicke model: a cavity mode coupled to a spin built from n
/// two-level systems, reducing to the effective two-mode Hamiltonian in
/// the large-n (Holstein-Primakoff) limit.
struct DickeParams {
  int n = 5;  // collective spin n/2
  double omega_a = 1.0;
  double omega_b = 1.0;
  double lambda = 0.0;
  double D = 0.0;
  double eta = 0.0;
  double u = 0.0;
  int cavity_cutoff = 10;

  void validate() const;
  int dimension() const { return cavity_cutoff * (n + 1); }
};

/// Standard spin-n/2 angular momentum matrices of dimension n+1, with
/// J_z diagonal and eigenvalues -n/2 .. n/2 ascending.
struct SpinMatrices {
  numerics::CMat jx, jy, jz;
};
SpinMatrices spin_matrices(int n);

/// Dense real symmetric representation in the product basis
/// |N_a> (x) |J_z = m - n/2>, m = 0..n.
numerics::Mat build_hamiltonian(const DickeParams& p);

struct DickeDiagonalization {
  numerics::Vec eigenvalues;   // ascending
  numerics::Mat eigenvectors;  // columns
  std::vector<int> parity;     // +1 even / -1 odd per eigenstate
  // labeled states (indices into the ascending order):
  // ground, 1_L, 1_U (odd), 2_L, 1_L 1_U, 2_U (even)
  std::array<int, 6> labels{};
};

DickeDiagonalization diagonalize_with_parity(const DickeParams& p);

struct OverlapCoefficients {
  double c0 = 0.0, c_two_upper = 0.0, c_two_lower = 0.0, c_mixed = 0.0;
  double residual = 0.0;  // 1 - sum |c|^2
};

OverlapCoefficients bare_ground_overlaps(const DickeDiagonalization& diag,
                                         const DickeParams& p);

/// n_U = 2|c_2U|^2 + |c_1L1U|^2, n_L = 2|c_2L|^2 + |c_1L1U|^2.
std::pair<double, double> dicke_populations(const OverlapCoefficients& c);

struct ComparisonPoint {
  std::array<double, 6> dicke_energies{};      // relative to the ground state
  std::array<double, 6> effective_energies{};  // 0, w_L, w_U, 2w_L, w_L+w_U, 2w_U
  double n_upper_dicke = 0.0, n_lower_dicke = 0.0;
  double n_upper_effective = 0.0, n_lower_effective = 0.0;
};

ComparisonPoint compare_with_effective(const DickeParams& p);

}  // namespace polariton::dicke
