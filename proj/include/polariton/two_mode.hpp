#pragma once

#include <utility>

#include "polariton/errors.hpp"

namespace polariton::two_mode {

/// Parameters of the two-mode Hamiltonian
///   H = w_a a^dag a + w_b b^dag b + lambda (a + a^dag)(b + b^dag)
///     + D (a + a^dag)^2 - eta (b + b^dag)^2 + u [i(b - b^dag)]^2.
/// All frequencies in units of w_b.
struct TwoModeParams {
  double omega_a = 1.0;
  double omega_b = 1.0;
  double lambda = 0.0;
  double D = 0.0;
  double eta = 0.0;
  double u = 0.0;

  double detuning() const { return omega_a - omega_b; }
  /// Effective matter position frequency w_b + 4u.
  double omega_b_eff() const { return omega_b + 4.0 * u; }

  /// Throws UnstableHamiltonian when the spectrum is not positive.
  void validate() const;
};

enum class SignCase { CaseI, CaseII, CaseIII, Outside };

/// Sign analysis of n_U - n_L for eta = u = 0: the sign equals that of
/// F(D) = 4 D w_a w_b - (w_U w_L - w_a w_b)(w_a + w_b), whose positive
/// roots D_+- exist only for w_b > w_a below the coupling threshold
/// lambda_max.
struct SignClassification {
  SignCase sign_case = SignCase::Outside;
  double F = 0.0;
  double D_plus = 0.0;   // NaN when complex
  double D_minus = 0.0;  // NaN when complex
  double lambda_max = 0.0;  // defined for w_b > w_a, else NaN
  double D_max = 0.0;       // = D_minus when real, else NaN
  int predicted_sign = 0;   // -1, 0, +1; meaningful within cases (i)-(iii)
};

/// TRK sum-rule value of the diamagnetic coefficient, lambda^2 / w_b.
double trk_D(double lambda, double omega_b);

/// (w_U, w_L), w_U >= w_L > 0.
std::pair<double, double> polariton_frequencies(const TwoModeParams& p);

/// theta in (-pi/2, 0] for lambda >= 0, from
/// cos 2theta = [w_a^2 + 4 D w_a - (w_b - 4 eta)(w_b + 4u)] / (w_U^2 - w_L^2).
double mixing_angle(const TwoModeParams& p);

/// Bare-vacuum polariton populations (n_U, n_L).
std::pair<double, double> populations(const TwoModeParams& p);

/// Requires eta = u = 0.
SignClassification classify_sign(const TwoModeParams& p);

/// Image-potential coefficient making n_U = n_L:
/// u = -(w_a + 4D) eta / w_a + (w_b / w_a)(D - lambda^2 / w_b).
double equal_population_u(double omega_a, double omega_b, double lambda,
                          double D, double eta);

/// Lower bound D_max >= (w_b + w_a)/(w_b - w_a) * lambda^2 / w_b valid in
/// case (iii).
double d_max_lower_bound(double omega_a, double omega_b, double lambda);

}  // namespace polariton::two_mode
