#include "polariton/quadratic_model.hpp"

#include <cmath>

namespace polariton {

using numerics::Mat;
using numerics::Vec;

QuadraticBosonicModel::QuadraticBosonicModel(Vec frequencies, Mat couplings,
                                             Vec x2_shifts, Vec y2_shifts)
    : freq_(std::move(frequencies)),
      s_(std::move(x2_shifts)),
      t_(std::move(y2_shifts)),
      g_(std::move(couplings)) {
  const int n = static_cast<int>(freq_.size());
  if (n < 2) throw InvalidModel("model: need at least two modes");
  if (g_.rows() != n || g_.cols() != n || s_.size() != n || t_.size() != n)
    throw InvalidModel("model: parameter dimensions inconsistent");
  if (!freq_.allFinite() || !g_.allFinite() || !s_.allFinite() || !t_.allFinite())
    throw InvalidModel("model: non-finite parameters");
  if ((g_ - g_.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, g_.cwiseAbs().maxCoeff()))
    throw InvalidModel("model: coupling matrix must be symmetric");
  g_ = 0.5 * (g_ + g_.transpose());
  g_.diagonal().setZero();
  for (int i = 0; i < n; ++i) {
    if (!(freq_[i] > 0.0)) throw InvalidModel("model: bare frequencies must be positive");
    if (!(freq_[i] + 4.0 * t_[i] > 0.0))
      throw InvalidModel("model: effective position frequency w_i + 4 t_i must be positive");
  }
}

numerics::SymmetricMatrix position_form(const QuadraticBosonicModel& model) {
  const int n = model.mode_count();
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    const double wti = model.position_frequency(i);
    m(i, i) = (model.frequencies()[i] + 4.0 * model.x2_shifts()[i]) * wti;
    for (int j = i + 1; j < n; ++j) {
      const double wtj = model.position_frequency(j);
      m(i, j) = m(j, i) = 2.0 * model.couplings()(i, j) * std::sqrt(wti * wtj);
    }
  }
  return numerics::SymmetricMatrix(m);
}

namespace {

double squeeze_mu(double x) { return 0.5 * (std::sqrt(x) + 1.0 / std::sqrt(x)); }
double squeeze_nu(double x) { return 0.5 * (std::sqrt(x) - 1.0 / std::sqrt(x)); }

}  // namespace

NormalModeDecomposition diagonalize(const QuadraticBosonicModel& model) {
  const int n = model.mode_count();
  const auto m = position_form(model);
  const auto eig = numerics::sym_eigen(m);
  const double scale = m.entries().cwiseAbs().maxCoeff();
  if (eig.eigenvalues[0] <= 1e-12 * scale)
    throw UnstableHamiltonian(
        "diagonalize: position-form matrix not positive definite");

  NormalModeDecomposition d;
  d.frequencies.resize(n);
  Mat rot(n, n);  // rows = normal modes, descending frequency
  if (n == 2) {
    // Two-mode convention: rotation parameterized by the mixing angle,
    // fixed negative for positive coupling.
    const double mz = m(0, 0) - m(1, 1);
    const double mx = 2.0 * m(0, 1);
    const double disc = std::hypot(mx, mz);
    double theta = 0.0;
    if (disc > 0.0) theta = 0.5 * std::atan2(-mx / disc, mz / disc);
    const double c = std::cos(theta), s = std::sin(theta);
    rot << c, -s, s, c;
    d.mixing_angle = theta;
    // larger root directly, smaller via the determinant to avoid cancellation
    const double hi = 0.5 * (m(0, 0) + m(1, 1) + disc);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1);
    d.frequencies[0] = std::sqrt(hi);
    d.frequencies[1] = std::sqrt(det / hi);
  } else {
    for (int k = 0; k < n; ++k) {
      d.frequencies[k] = std::sqrt(eig.eigenvalues[n - 1 - k]);
      rot.row(k) = eig.eigenvectors.col(n - 1 - k).transpose();
    }
  }

  d.mu.resize(n, n);
  d.nu.resize(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double x = d.frequencies[k] / model.position_frequency(i);
      d.mu(k, i) = rot(k, i) * squeeze_mu(x);
      d.nu(k, i) = rot(k, i) * squeeze_nu(x);
    }
  }
  return d;
}

numerics::Mat NormalModeDecomposition::symplectic() const {
  const int n = mode_count();
  Mat s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = mu;
  s.topRightCorner(n, n) = nu;
  s.bottomLeftCorner(n, n) = nu;
  s.bottomRightCorner(n, n) = mu;
  return s;
}

VacuumReport vacuum_report(const NormalModeDecomposition& decomp) {
  VacuumReport r;
  r.normal_moments = decomp.nu * decomp.nu.transpose();
  r.anomalous_moments = decomp.mu * decomp.nu.transpose();
  r.populations = r.normal_moments.diagonal();
  return r;
}

double frequency_product_residual(const QuadraticBosonicModel& model,
                                  const NormalModeDecomposition& decomp) {
  double prod = 1.0;
  for (int k = 0; k < decomp.mode_count(); ++k)
    prod *= decomp.frequencies[k] * decomp.frequencies[k];
  return prod - position_form(model).entries().determinant();
}

QuadraticBosonicModel make_two_mode_model(const two_mode::TwoModeParams& p) {
  Vec freq(2), s(2), t(2);
  freq << p.omega_a, p.omega_b;
  s << p.D, -p.eta;
  t << 0.0, p.u;
  Mat g = Mat::Zero(2, 2);
  g(0, 1) = g(1, 0) = p.lambda;
  return QuadraticBosonicModel(std::move(freq), std::move(g), std::move(s),
                               std::move(t));
}

}  // namespace polariton
