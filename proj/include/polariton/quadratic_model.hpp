#pragma once

#include <optional>

#include "polariton/numerics.hpp"
#include "polariton/two_mode.hpp"

namespace polariton {

/// Generic N-mode quadratic bosonic Hamiltonian
///   H = sum_i w_i a_i^dag a_i
///     + sum_{i<j} g_ij (a_i + a_i^dag)(a_j + a_j^dag)
///     + sum_i s_i (a_i + a_i^dag)^2
///     + sum_i t_i [i(a_i - a_i^dag)]^2
/// All frequencies in units of the reference matter frequency.
class QuadraticBosonicModel {
 public:
  QuadraticBosonicModel(numerics::Vec frequencies, numerics::Mat couplings,
                        numerics::Vec x2_shifts, numerics::Vec y2_shifts);

  int mode_count() const { return static_cast<int>(freq_.size()); }
  const numerics::Vec& frequencies() const { return freq_; }
  const numerics::Mat& couplings() const { return g_; }
  const numerics::Vec& x2_shifts() const { return s_; }
  const numerics::Vec& y2_shifts() const { return t_; }
  /// Effective position frequency w_i + 4 t_i entering the canonical
  /// coordinates of mode i.
  double position_frequency(int i) const { return freq_[i] + 4.0 * t_[i]; }

 private:
  numerics::Vec freq_, s_, t_;
  numerics::Mat g_;
};

/// Result of the normal-mode (Bogoliubov) decomposition.
/// Normal frequencies are stored descending, so index 0 is "U" for N = 2.
/// The symplectic map is kept in block form: p_k = sum_i [ mu(k,i) a_i +
/// nu(k,i) a_i^dag ].
struct NormalModeDecomposition {
  numerics::Vec frequencies;  // descending
  numerics::Mat mu;           // N x N, row k = normal mode k
  numerics::Mat nu;           // N x N
  std::optional<double> mixing_angle;  // theta < 0, only for N = 2

  int mode_count() const { return static_cast<int>(frequencies.size()); }
  /// Full 2N x 2N symplectic matrix mapping (a, a^dag) -> (p, p^dag).
  numerics::Mat symplectic() const;
};

/// Bare-vacuum second moments of the normal modes.
struct VacuumReport {
  numerics::Vec populations;      // n_k = <p_k^dag p_k> >= 0
  numerics::Mat normal_moments;   // <p_k^dag p_k'>
  numerics::Mat anomalous_moments;  // <p_k p_k'>
};

/// Position-form matrix M with M_ii = (w_i + 4 s_i)(w_i + 4 t_i) and
/// M_ij = 2 g_ij sqrt((w_i + 4 t_i)(w_j + 4 t_j)); its eigenvalues are the
/// squared normal frequencies.
numerics::SymmetricMatrix position_form(const QuadraticBosonicModel& model);

/// Throws UnstableHamiltonian when M is not positive definite (smallest
/// eigenvalue below 1e-12 * max|M|), which signals a genuine instability
/// such as D = 0 with 4 lambda^2 > w_a w_b.
NormalModeDecomposition diagonalize(const QuadraticBosonicModel& model);

VacuumReport vacuum_report(const NormalModeDecomposition& decomp);

/// prod_k w_k^2 - det(M); vanishes identically for any valid model.
double frequency_product_residual(const QuadraticBosonicModel& model,
                                  const NormalModeDecomposition& decomp);

/// Two-mode model with mode 0 = cavity (s_a = D), mode 1 = matter
/// (s_b = -eta, t_b = u), g_ab = lambda.
QuadraticBosonicModel make_two_mode_model(const two_mode::TwoModeParams& p);

}  // namespace polariton
