#include "polariton/quench.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>

namespace polariton::quench {

using numerics::CMat;
using numerics::CVec;
using numerics::Mat;
using numerics::Vec;
using std::complex;

double BathSpec::flat_J() const { return std::sqrt(gamma / (2.0 * M_PI)); }

DiscreteBath discretize_bath(const BathSpec& spec,
                             const two_mode::TwoModeParams& p) {
  if (spec.grid_size < 400)
    throw InvalidModel("discretize_bath: need at least 400 grid points");
  if (!(spec.omega_max > spec.omega_min))
    throw InvalidModel("discretize_bath: empty frequency window");
  const auto [wu, wl] = two_mode::polariton_frequencies(p);
  const double margin = 20.0 * spec.gamma;
  if (spec.omega_min > wl - margin || spec.omega_max < wu + margin)
    throw InvalidModel(
        "discretize_bath: grid must cover both polaritons with 20 gamma margin");

  const double theta = p.lambda == 0.0 ? 0.0 : two_mode::mixing_angle(p);
  DiscreteBath bath;
  const int n = spec.grid_size;
  bath.delta_omega = (spec.omega_max - spec.omega_min) / (n - 1);
  bath.frequencies.resize(n);
  bath.couplings.resize(2, n);
  const double cu = std::cos(theta) * std::sqrt(p.omega_a / wu);
  const double cl = std::sin(theta) * std::sqrt(p.omega_a / wl);
  const double root_dw = std::sqrt(bath.delta_omega);
  for (int j = 0; j < n; ++j) {
    const double w = spec.omega_min + j * bath.delta_omega;
    bath.frequencies[j] = w;
    const double base = (spec.profile ? spec.profile(w) : spec.flat_J()) * root_dw;
    bath.couplings(0, j) = base * cu;
    bath.couplings(1, j) = base * cl;
  }
  return bath;
}

std::pair<Mat, Mat> bare_vacuum_polariton_moments(
    const NormalModeDecomposition& decomp) {
  const auto rep = vacuum_report(decomp);
  return {rep.normal_moments, rep.anomalous_moments};
}

QuenchResult propagate_decomposition(const two_mode::TwoModeParams& p,
                                     const BathSpec& bath_spec, double t_final,
                                     int n_samples) {
  if (bath_spec.gamma > 0.0 && !(t_final * bath_spec.gamma >= 10.0))
    throw InvalidModel("propagate_decomposition: need T >= 10 / gamma");
  if (n_samples < 2)
    throw InvalidModel("propagate_decomposition: need at least 2 samples");

  QuenchResult res;
  res.bath = discretize_bath(bath_spec, p);
  std::tie(res.omega_upper, res.omega_lower) = two_mode::polariton_frequencies(p);
  const auto decomp = diagonalize(make_two_mode_model(p));
  std::tie(res.normal_moments0, res.anomalous_moments0) =
      bare_vacuum_polariton_moments(decomp);

  const int nb = static_cast<int>(res.bath.frequencies.size());
  const int dim = 2 + nb;
  const double w_pol[2] = {res.omega_upper, res.omega_lower};
  const Mat& g = res.bath.couplings;
  const Vec& wj = res.bath.frequencies;

  // Arrowhead generator i*A: two polariton rows coupled to every bath row.
  numerics::OdeSystem sys;
  sys.dimension = dim;
  sys.t_final = t_final;
  sys.generator = [&, nb](const CVec& in, CVec& out) {
    complex<double> acc0 = w_pol[0] * in[0];
    complex<double> acc1 = w_pol[1] * in[1];
    for (int j = 0; j < nb; ++j) {
      const complex<double> fj = in[2 + j];
      acc0 += g(0, j) * fj;
      acc1 += g(1, j) * fj;
      out[2 + j] =
          complex<double>(0, 1) * (wj[j] * fj + g(0, j) * in[0] + g(1, j) * in[1]);
    }
    out[0] = complex<double>(0, 1) * acc0;
    out[1] = complex<double>(0, 1) * acc1;
  };

  res.sample_times = Vec::LinSpaced(n_samples, 0.0, t_final);
  res.v.assign(n_samples, Eigen::Matrix2cd::Zero());
  res.phi_upper.setZero(nb, n_samples);
  res.phi_lower.setZero(nb, n_samples);
  res.norm_error.setZero(n_samples);

  numerics::OdeOptions opts;
  opts.norm_tolerance = 1e-7;
  opts.initial_step = 0.01;

  for (int k = 0; k < 2; ++k) {
    sys.initial_state = CVec::Zero(dim);
    sys.initial_state[k] = 1.0;
    const CMat traj = integrate_linear_ode(sys, res.sample_times, opts);
    for (int s = 0; s < n_samples; ++s) {
      res.v[s](k, 0) = traj(0, s);
      res.v[s](k, 1) = traj(1, s);
      auto& phi = k == 0 ? res.phi_upper : res.phi_lower;
      phi.col(s) = traj.col(s).tail(nb);
      const double drift = std::abs(traj.col(s).norm() - 1.0);
      res.norm_error[s] = std::max(res.norm_error[s], drift);
      if (drift > 1e-5)
        throw IntegrationFailure(
            "propagate_decomposition: normalization drift exceeds 1e-5");
    }
  }
  return res;
}

CMat asymptotic_amplitudes(const QuenchResult& result) {
  if (result.final_v_norm() > 0.01)
    throw NotConverged(
        "asymptotic_amplitudes: polaritons not decayed, increase T");
  const int nb = static_cast<int>(result.bath.frequencies.size());
  const double t_final = result.sample_times[result.sample_times.size() - 1];
  CMat out(2, nb);
  for (int j = 0; j < nb; ++j) {
    const complex<double> phase =
        std::exp(complex<double>(0.0, result.bath.frequencies[j] * t_final));
    out(0, j) = result.phi_upper(j, result.phi_upper.cols() - 1) * phase;
    out(1, j) = result.phi_lower(j, result.phi_lower.cols() - 1) * phase;
  }
  return out;
}

Vec assemble_spectrum_serial(const QuenchResult& result) {
  const int nb = static_cast<int>(result.bath.frequencies.size());
  const int last = static_cast<int>(result.sample_times.size()) - 1;
  const Mat& n0 = result.normal_moments0;
  Vec spectrum(nb);
  for (int j = 0; j < nb; ++j) {
    const complex<double> pu = result.phi_upper(j, last);
    const complex<double> pl = result.phi_lower(j, last);
    const double occ = n0(0, 0) * std::norm(pu) + n0(1, 1) * std::norm(pl) +
                       2.0 * n0(0, 1) * std::real(pu * std::conj(pl));
    spectrum[j] = occ / result.bath.delta_omega;
  }
  return spectrum;
}

SpectrumResult propagate_covariance(const QuenchResult& result) {
  if (result.final_v_norm() > 0.01)
    throw NotConverged("propagate_covariance: polaritons not decayed, increase T");
  SpectrumResult out;
  const int nb = static_cast<int>(result.bath.frequencies.size());
  out.spectrum.resize(nb);
  // Each bin is an independent, fixed-order reduction, so the parallel
  // result is bitwise identical to the serial reference.
  const int last = static_cast<int>(result.sample_times.size()) - 1;
  const Mat& n0 = result.normal_moments0;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nb; ++j) {
    const complex<double> pu = result.phi_upper(j, last);
    const complex<double> pl = result.phi_lower(j, last);
    const double occ = n0(0, 0) * std::norm(pu) + n0(1, 1) * std::norm(pl) +
                       2.0 * n0(0, 1) * std::real(pu * std::conj(pl));
    out.spectrum[j] = occ / result.bath.delta_omega;
  }

  const double midpoint = 0.5 * (result.omega_upper + result.omega_lower);
  for (int j = 0; j < nb; ++j) {
    const double occ = out.spectrum[j] * result.bath.delta_omega;
    out.total_photons += occ;
    (result.bath.frequencies[j] >= midpoint ? out.weight_upper
                                            : out.weight_lower) += occ;
  }
  return out;
}

OutputPopulations extract_output_populations(const QuenchResult& result) {
  const CMat phi_tilde = asymptotic_amplitudes(result);  // also checks decay
  (void)phi_tilde;
  const int last = static_cast<int>(result.sample_times.size()) - 1;
  const Mat& n0 = result.normal_moments0;
  // z(k, m) = sum_j conj(phi_kj) phi_mj; phases e^{i w T} cancel, so the
  // final-time amplitudes can be used directly.
  Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
  const CVec pu = result.phi_upper.col(last);
  const CVec pl = result.phi_lower.col(last);
  z(0, 0) = pu.dot(pu);
  z(0, 1) = pu.dot(pl);
  z(1, 0) = pl.dot(pu);
  z(1, 1) = pl.dot(pl);

  auto moment = [&](int k, int kp) {
    complex<double> acc = 0.0;
    for (int m = 0; m < 2; ++m)
      for (int mp = 0; mp < 2; ++mp)
        acc += n0(m, mp) * z(k, m) * std::conj(z(kp, mp));
    return acc;
  };
  OutputPopulations pops;
  pops.n_upper = std::real(moment(0, 0));
  pops.n_lower = std::real(moment(1, 1));
  pops.cross = moment(0, 1);
  return pops;
}

}  // namespace polariton::quench
