#include "polariton/microscopic.hpp"

#include <cmath>

namespace polariton::microscopic {

using numerics::Mat;
using numerics::Vec;

MultimodeSpec make_spec(Vec cavity_frequencies, Vec matter_frequencies,
                        Mat couplings, double u) {
  MultimodeSpec spec;
  spec.cavity_frequencies = std::move(cavity_frequencies);
  spec.matter_frequencies = std::move(matter_frequencies);
  spec.couplings = std::move(couplings);
  spec.u = u;
  const int nk = spec.cavity_modes();
  const int nl = spec.matter_modes();
  if (nk < 1 || nl < 1) throw InvalidModel("multimode: need K, L >= 1");
  if (spec.couplings.rows() != nl || spec.couplings.cols() != nk)
    throw InvalidModel("multimode: coupling matrix must be L x K");
  if ((spec.cavity_frequencies.array() <= 0.0).any() ||
      (spec.matter_frequencies.array() <= 0.0).any())
    throw InvalidModel("multimode: all frequencies must be positive");

  spec.diamagnetic.setZero(nk, nk);
  for (int k = 0; k < nk; ++k)
    for (int n = k; n < nk; ++n) {
      double d = 0.0;
      for (int l = 0; l < nl; ++l)
        d += spec.couplings(l, k) * spec.couplings(l, n) /
             spec.matter_frequencies[l];
      spec.diamagnetic(k, n) = spec.diamagnetic(n, k) = d;
    }
  return spec;
}

MultimodeSpec build_fabry_perot(double omega_a, double omega_b, double lambda,
                                int cavity_modes, int matter_modes, double u) {
  Vec wa(cavity_modes), wb(matter_modes);
  for (int k = 0; k < cavity_modes; ++k) wa[k] = (2.0 * (k + 1) - 1.0) * omega_a;
  for (int j = 0; j < matter_modes; ++j) {
    const double jj = j + 1;
    wb[j] = (4.0 * jj * jj - 1.0) * omega_b / 3.0;
  }
  Mat lam(matter_modes, cavity_modes);
  for (int j = 0; j < matter_modes; ++j)
    for (int k = 0; k < cavity_modes; ++k) {
      const double jj = j + 1;
      lam(j, k) =
          lambda * 3.0 * jj / ((4.0 * jj * jj - 1.0) * std::sqrt(2.0 * (k + 1) - 1.0));
    }
  return make_spec(std::move(wa), std::move(wb), std::move(lam), u);
}

QuadraticBosonicModel to_quadratic_model(const MultimodeSpec& spec) {
  const int nk = spec.cavity_modes();
  const int nl = spec.matter_modes();
  const int n = nk + nl;
  Vec freq(n), s(n), t(n);
  Mat g = Mat::Zero(n, n);
  for (int k = 0; k < nk; ++k) {
    freq[k] = spec.cavity_frequencies[k];
    s[k] = spec.diamagnetic(k, k);
    t[k] = 0.0;
    // each unordered mode pair carries one diamagnetic cross term D_kn
    for (int m = k + 1; m < nk; ++m) g(k, m) = g(m, k) = spec.diamagnetic(k, m);
  }
  for (int l = 0; l < nl; ++l) {
    freq[nk + l] = spec.matter_frequencies[l];
    s[nk + l] = 0.0;
    t[nk + l] = l == 0 ? spec.u : 0.0;
    for (int k = 0; k < nk; ++k) g(nk + l, k) = g(k, nk + l) = spec.couplings(l, k);
  }
  return QuadraticBosonicModel(std::move(freq), std::move(g), std::move(s),
                               std::move(t));
}

EliminationResult adiabatic_eliminate(const MultimodeSpec& spec, int kept_cavity,
                                      int kept_matter) {
  if (kept_cavity < 0 || kept_cavity >= spec.cavity_modes() || kept_matter < 0 ||
      kept_matter >= spec.matter_modes())
    throw InvalidSelection("adiabatic_eliminate: kept-mode index out of range");

  EliminationResult r;
  r.raw_D11 = spec.diamagnetic(kept_cavity, kept_cavity);
  for (int l = 0; l < spec.matter_modes(); ++l) {
    if (l == kept_matter) continue;
    r.matter_correction += spec.couplings(l, kept_cavity) *
                           spec.couplings(l, kept_cavity) /
                           spec.matter_frequencies[l];
  }
  for (int k = 0; k < spec.cavity_modes(); ++k) {
    if (k == kept_cavity) continue;
    r.cavity_harmonic_sum += spec.couplings(kept_matter, k) *
                             spec.couplings(kept_matter, k) /
                             spec.cavity_frequencies[k];
  }
  r.effective.omega_a = spec.cavity_frequencies[kept_cavity];
  r.effective.omega_b = spec.matter_frequencies[kept_matter];
  r.effective.lambda = spec.couplings(kept_matter, kept_cavity);
  r.effective.D = r.raw_D11 - r.matter_correction;
  r.effective.eta = r.cavity_harmonic_sum;
  r.effective.u = spec.u;
  return r;
}

std::pair<double, double> multimode_populations(const MultimodeSpec& spec) {
  const auto model = to_quadratic_model(spec);
  const auto decomp = diagonalize(model);
  const auto report = vacuum_report(decomp);
  const int n = decomp.mode_count();
  // frequencies are stored descending: lowest mode is L, second lowest U
  return {report.populations[n - 2], report.populations[n - 1]};
}

DiscrepancyReport compare_multimode_vs_effective(double omega_a, double omega_b,
                                                 double lambda, int cavity_modes,
                                                 int matter_modes, double u) {
  const auto spec =
      build_fabry_perot(omega_a, omega_b, lambda, cavity_modes, matter_modes, u);
  DiscrepancyReport rep;
  std::tie(rep.n_upper_multimode, rep.n_lower_multimode) =
      multimode_populations(spec);
  const auto eff = adiabatic_eliminate(spec);
  std::tie(rep.n_upper_effective, rep.n_lower_effective) =
      two_mode::populations(eff.effective);
  auto rel = [](double mic, double eff_val) {
    return mic == 0.0 ? std::abs(eff_val) : std::abs(mic - eff_val) / std::abs(mic);
  };
  rep.rel_diff_upper = rel(rep.n_upper_multimode, rep.n_upper_effective);
  rep.rel_diff_lower = rel(rep.n_lower_multimode, rep.n_lower_effective);
  return rep;
}

double fabry_perot_eta(double omega_a, double lambda, int cavity_modes) {
  double sum = 0.0;
  for (int k = 2; k <= cavity_modes; ++k) {
    const double odd = 2.0 * k - 1.0;
    sum += 1.0 / (odd * odd);
  }
  return sum * lambda * lambda / omega_a;
}

}  // namespace polariton::microscopic
