#pragma once

#include "polariton/quadratic_model.hpp"
#include "polariton/two_mode.hpp"

namespace polariton::microscopic {

/// Multimode light-matter Hamiltonian with K cavity modes and L matter
/// transitions. The diamagnetic matrix is fixed by the sum rule,
/// D_kn = sum_l lambda_{l,k} lambda_{l,n} / w_{b,l}, and the
/// image-potential coefficient u acts on matter mode 1 only.
struct MultimodeSpec {
  numerics::Vec cavity_frequencies;  // w_{a,k}, k = 1..K
  numerics::Vec matter_frequencies;  // w_{b,l}, l = 1..L
  numerics::Mat couplings;           // L x K, lambda_{l,k}
  numerics::Mat diamagnetic;         // K x K, filled by the TRK construction
  double u = 0.0;

  int cavity_modes() const { return static_cast<int>(cavity_frequencies.size()); }
  int matter_modes() const { return static_cast<int>(matter_frequencies.size()); }
};

struct EliminationResult {
  two_mode::TwoModeParams effective;
  double raw_D11 = 0.0;               // D_{1,1} before the subtraction
  double matter_correction = 0.0;     // sum_{l>1} lambda_{l,1}^2 / w_{b,l}
  double cavity_harmonic_sum = 0.0;   // eta = sum_{k>1} lambda_{1,k}^2 / w_{a,k}
};

struct DiscrepancyReport {
  double n_upper_multimode = 0.0, n_lower_multimode = 0.0;
  double n_upper_effective = 0.0, n_lower_effective = 0.0;
  double rel_diff_upper = 0.0, rel_diff_lower = 0.0;
};

/// Assembles a multimode spec with the sum-rule diamagnetic matrix from
/// arbitrary frequencies and couplings.
MultimodeSpec make_spec(numerics::Vec cavity_frequencies,
                        numerics::Vec matter_frequencies,
                        numerics::Mat couplings, double u);

/// Deep-rectangular-well-in-a-Fabry-Perot parameterization:
/// w_{a,k} = (2k-1) w_a, w_{b,j} = (4 j^2 - 1) w_b / 3,
/// lambda_{j,k} = lambda * 3 j / ((4 j^2 - 1) sqrt(2k-1)).
MultimodeSpec build_fabry_perot(double omega_a, double omega_b, double lambda,
                                int cavity_modes, int matter_modes, double u);

/// Full quadratic model over the K + L modes (cavity modes first).
QuadraticBosonicModel to_quadratic_model(const MultimodeSpec& spec);

/// Second-order elimination of every mode except cavity 1 and matter 1:
/// eta picks up the higher cavity harmonics, and the eliminated matter
/// transitions are subtracted from D_{1,1}.
EliminationResult adiabatic_eliminate(const MultimodeSpec& spec,
                                      int kept_cavity = 0, int kept_matter = 0);

/// Populations of the two lowest-frequency normal modes of the full
/// multimode model, returned as (n_U, n_L) with L the lowest.
std::pair<double, double> multimode_populations(const MultimodeSpec& spec);

DiscrepancyReport compare_multimode_vs_effective(double omega_a, double omega_b,
                                                 double lambda, int cavity_modes,
                                                 int matter_modes, double u);

/// Closed form of the Fabry-Perot eta sum: lambda^2 / w_a *
/// sum_{k=2}^{K} 1/(2k-1)^2, converging to (pi^2/8 - 1) lambda^2 / w_a.
double fabry_perot_eta(double omega_a, double lambda, int cavity_modes);

}  // namespace polariton::microscopic
