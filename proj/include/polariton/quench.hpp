#pragma once

#include <functional>
#include <vector>

#include "polariton/quadratic_model.hpp"

namespace polariton::quench {

/// Coupling of the cavity to the radiation continuum, sampled on a
/// uniform frequency grid. The default profile is flat,
/// J(w) = sqrt(gamma / 2 pi); a tabulated profile may be supplied.
struct BathSpec {
  double gamma = 0.01;  // cavity decay rate in units of w_a
  double omega_min = 0.5;
  double omega_max = 1.6;
  int grid_size = 2000;
  std::function<double(double)> profile;  // optional override of J(w)

  double flat_J() const;
};

struct DiscreteBath {
  numerics::Vec frequencies;  // omega_j, uniform
  double delta_omega = 0.0;
  numerics::Mat couplings;  // 2 x N: J_k(omega_j) * sqrt(delta_omega)
};

struct QuenchResult {
  numerics::Vec sample_times;
  /// v_{kk'}(t): row k in {U, L}, per sample time.
  std::vector<Eigen::Matrix2cd> v;
  /// phi_k(omega_j, t): one N x n_samples matrix per polariton.
  numerics::CMat phi_upper, phi_lower;
  numerics::Vec norm_error;  // | sum |v|^2 + sum |phi|^2 - 1 | per row, max over k
  DiscreteBath bath;
  double omega_upper = 0.0, omega_lower = 0.0;
  numerics::Mat normal_moments0;     // <p_k^dag p_k'> at t = 0
  numerics::Mat anomalous_moments0;  // <p_k p_k'> at t = 0

  double final_v_norm() const { return v.empty() ? 1.0 : v.back().norm(); }
};

struct SpectrumResult {
  numerics::Vec spectrum;  // S(omega_j) = <alpha_j^dag alpha_j> / delta_omega
  double total_photons = 0.0;
  double weight_upper = 0.0;  // integrated weight above the peak midpoint
  double weight_lower = 0.0;
};

struct OutputPopulations {
  double n_upper = 0.0, n_lower = 0.0;
  std::complex<double> cross = 0.0;  // <f_U^dag f_L>
};

/// Checks the grid invariants (N >= 400, >= 20 gamma margin around both
/// polariton peaks) and builds the RWA couplings
/// J_U = J(w) cos(theta) sqrt(w_a/w_U), J_L = J(w) sin(theta) sqrt(w_a/w_L).
DiscreteBath discretize_bath(const BathSpec& spec,
                             const two_mode::TwoModeParams& p);

/// Propagates the mode-decomposition amplitudes from v = identity,
/// phi = 0 under dv_kk'/dt = i w_k' v_kk' + i sum_j g_k'j phi_kj,
/// dphi_kj/dt = i w_j phi_kj + i sum_k' g_k'j v_kk'.
QuenchResult propagate_decomposition(const two_mode::TwoModeParams& p,
                                     const BathSpec& bath, double t_final,
                                     int n_samples = 40);

/// phi_k(., T) e^{i w_j T}; requires the polaritons to have decayed.
numerics::CMat asymptotic_amplitudes(const QuenchResult& result);

/// Initial polariton second moments in the bare vacuum (2x2 normal and
/// anomalous blocks).
std::pair<numerics::Mat, numerics::Mat> bare_vacuum_polariton_moments(
    const NormalModeDecomposition& decomp);

/// Final bath covariance, emission spectrum and photon bookkeeping.
SpectrumResult propagate_covariance(const QuenchResult& result);

/// Serial reference for the spectrum assembly; the parallel path must
/// match it bitwise (fixed per-bin summation order).
numerics::Vec assemble_spectrum_serial(const QuenchResult& result);

/// Populations of the output modes defined by the asymptotic amplitudes.
OutputPopulations extract_output_populations(const QuenchResult& result);

}  // namespace polariton::quench
