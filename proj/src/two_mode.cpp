#include "polariton/two_mode.hpp"

#include <cmath>
#include <limits>

namespace polariton::two_mode {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct PositionForm {
  double maa, mbb, mab;
  double trace() const { return maa + mbb; }
  double det() const { return maa * mbb - mab * mab; }
  double disc() const { return std::hypot(maa - mbb, 2.0 * mab); }
};

PositionForm position_form(const TwoModeParams& p) {
  PositionForm m;
  m.maa = p.omega_a * p.omega_a + 4.0 * p.D * p.omega_a;
  m.mbb = (p.omega_b - 4.0 * p.eta) * p.omega_b_eff();
  m.mab = 2.0 * p.lambda * std::sqrt(p.omega_a * p.omega_b_eff());
  return m;
}

double nu_sq(double x) { return 0.25 * (x + 1.0 / x) - 0.5; }

}  // namespace

void TwoModeParams::validate() const {
  if (!(omega_a > 0.0) || !(omega_b > 0.0))
    throw UnstableHamiltonian("two_mode: bare frequencies must be positive");
  if (!(omega_b_eff() > 0.0))
    throw UnstableHamiltonian("two_mode: w_b + 4u must be positive");
  const double bracket =
      (omega_a + 4.0 * D) * (omega_b - 4.0 * eta) - 4.0 * lambda * lambda;
  if (!(bracket > 0.0))
    throw UnstableHamiltonian(
        "two_mode: (w_a + 4D)(w_b - 4eta) - 4 lambda^2 must be positive");
}

double trk_D(double lambda, double omega_b) {
  if (!(omega_b > 0.0)) throw UnstableHamiltonian("trk_D: w_b must be positive");
  return lambda * lambda / omega_b;
}

std::pair<double, double> polariton_frequencies(const TwoModeParams& p) {
  p.validate();
  const auto m = position_form(p);
  const double hi = 0.5 * (m.trace() + m.disc());
  return {std::sqrt(hi), std::sqrt(m.det() / hi)};
}

double mixing_angle(const TwoModeParams& p) {
  p.validate();
  const auto m = position_form(p);
  const double disc = m.disc();
  if (disc == 0.0)
    throw DegenerateSpectrum("mixing_angle: w_U = w_L, angle undefined");
  return 0.5 * std::atan2(-2.0 * m.mab / disc, (m.maa - m.mbb) / disc);
}

std::pair<double, double> populations(const TwoModeParams& p) {
  const auto [wu, wl] = polariton_frequencies(p);
  const auto m = position_form(p);
  const double disc = m.disc();
  double c2 = 0.5, s2 = 0.5;  // degenerate limit is coupling-free
  if (disc > 0.0) {
    const double cos2t = (m.maa - m.mbb) / disc;
    c2 = 0.5 * (1.0 + cos2t);
    s2 = 0.5 * (1.0 - cos2t);
  }
  const double wbe = p.omega_b_eff();
  const double nu_up = c2 * nu_sq(wu / p.omega_a) + s2 * nu_sq(wu / wbe);
  const double nu_lo = s2 * nu_sq(wl / p.omega_a) + c2 * nu_sq(wl / wbe);
  return {nu_up, nu_lo};
}

SignClassification classify_sign(const TwoModeParams& p) {
  if (p.eta != 0.0 || p.u != 0.0)
    throw InvalidModel("classify_sign: defined for eta = u = 0 only");
  p.validate();
  SignClassification c;
  const auto [wu, wl] = polariton_frequencies(p);
  const double wa = p.omega_a, wb = p.omega_b, l2 = p.lambda * p.lambda;
  c.F = 4.0 * p.D * wa * wb - (wu * wl - wa * wb) * (wa + wb);

  const double root_arg = (wb - wa) * (wb - wa) - 16.0 * wa * l2 / wb;
  if (root_arg >= 0.0) {
    const double r = std::sqrt(root_arg);
    c.D_plus = (wa + wb) / (8.0 * wa) * ((wb - wa) + r);
    c.D_minus = (wa + wb) / (8.0 * wa) * ((wb - wa) - r);
  } else {
    c.D_plus = c.D_minus = kNaN;
  }

  if (wb > wa) {
    c.lambda_max = std::sqrt(wb * (wb - wa) * (wb - wa) / (16.0 * wa));
    if (p.lambda >= c.lambda_max) {
      c.sign_case = SignCase::CaseII;
      c.D_max = kNaN;
    } else {
      c.D_max = c.D_minus;
      c.sign_case = p.D < c.D_max ? SignCase::CaseIII : SignCase::Outside;
    }
  } else {
    c.lambda_max = kNaN;
    c.D_max = kNaN;
    c.sign_case = SignCase::CaseI;
  }

  if (c.sign_case != SignCase::Outside) {
    const double delta = p.D - l2 / wb;
    const double tol = 1e-12 * (std::abs(p.D) + l2 / wb + 1e-300);
    c.predicted_sign = std::abs(delta) <= tol ? 0 : (delta > 0.0 ? 1 : -1);
  }
  return c;
}

double equal_population_u(double omega_a, double omega_b, double lambda,
                          double D, double eta) {
  const double u = -(omega_a + 4.0 * D) * eta / omega_a +
                   (omega_b / omega_a) * (D - lambda * lambda / omega_b);
  TwoModeParams p{omega_a, omega_b, lambda, D, eta, u};
  p.validate();
  return u;
}

double d_max_lower_bound(double omega_a, double omega_b, double lambda) {
  return (omega_b + omega_a) / (omega_b - omega_a) * lambda * lambda / omega_b;
}

}  // namespace polariton::two_mode
