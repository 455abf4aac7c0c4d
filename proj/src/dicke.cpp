#include "polariton/dicke.hpp"

#include <cmath>

namespace polariton::dicke {

using numerics::CMat;
using numerics::Mat;
using numerics::Vec;

void DickeParams::validate() const {
  if (n < 1) throw InvalidModel("dicke: n must be >= 1");
  if (cavity_cutoff < 10) throw InvalidModel("dicke: cavity cutoff must be >= 10");
  if (!(omega_a > 0.0) || !(omega_b > 0.0))
    throw InvalidModel("dicke: frequencies must be positive");
}

namespace {

// Real building blocks: S_x and the antisymmetric K = S_+ - S_- with
// S_y = -i K / 2, so S_y^2 = -K^2 / 4.
void spin_blocks(int n, Mat& sx, Mat& k, Mat& sz) {
  const int dim = n + 1;
  const double j = 0.5 * n;
  Mat splus = Mat::Zero(dim, dim);
  for (int m = 0; m < n; ++m) {
    const double mz = m - j;
    splus(m + 1, m) = std::sqrt((j - mz) * (j + mz + 1.0));
  }
  sx = 0.5 * (splus + splus.transpose());
  k = splus - splus.transpose();
  sz = Mat::Zero(dim, dim);
  for (int m = 0; m <= n; ++m) sz(m, m) = m - j;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int jj = 0; jj < a.cols(); ++jj)
      out.block(i * b.rows(), jj * b.cols(), b.rows(), b.cols()) = a(i, jj) * b;
  return out;
}

}  // namespace

SpinMatrices spin_matrices(int n) {
  if (n < 1) throw InvalidModel("spin_matrices: n must be >= 1");
  Mat sx, k, sz;
  spin_blocks(n, sx, k, sz);
  SpinMatrices s;
  s.jx = sx.cast<std::complex<double>>();
  s.jy = std::complex<double>(0.0, -0.5) * k.cast<std::complex<double>>();
  s.jz = sz.cast<std::complex<double>>();
  return s;
}

Mat build_hamiltonian(const DickeParams& p) {
  p.validate();
  const int nc = p.cavity_cutoff;
  Mat sx, k, sz;
  spin_blocks(p.n, sx, k, sz);

  Mat xa = Mat::Zero(nc, nc), na = Mat::Zero(nc, nc);
  for (int m = 0; m < nc; ++m) {
    na(m, m) = m;
    if (m + 1 < nc) xa(m, m + 1) = xa(m + 1, m) = std::sqrt(m + 1.0);
  }
  const Mat id_spin = Mat::Identity(p.n + 1, p.n + 1);
  const Mat id_cav = Mat::Identity(nc, nc);

  // In the Holstein-Primakoff limit the terms below reduce to
  // w_b b^dag b, lambda (a+a^dag)(b+b^dag), -eta (b+b^dag)^2 and
  // u [i(b-b^dag)]^2 of the effective two-mode Hamiltonian.
  const double sn = std::sqrt(static_cast<double>(p.n));
  Mat h = p.omega_a * kron(na, id_spin) + p.omega_b * kron(id_cav, sz) +
          (2.0 * p.lambda / sn) * kron(xa, sx) + p.D * kron(xa * xa, id_spin) -
          (4.0 * p.eta / p.n) * kron(id_cav, sx * sx) -
          (p.u / p.n) * kron(id_cav, k * k);  // u (2 S_y)^2 / n, S_y^2 = -K^2/4
  return 0.5 * (h + h.transpose());
}

DickeDiagonalization diagonalize_with_parity(const DickeParams& p) {
  const Mat h = build_hamiltonian(p);
  auto eig = numerics::sym_eigen(numerics::SymmetricMatrix(h));
  const int dim = p.dimension();
  const int nspin = p.n + 1;

  DickeDiagonalization d;
  d.eigenvalues = eig.eigenvalues;
  d.eigenvectors = eig.eigenvectors;
  d.parity.resize(dim);
  std::vector<int> even, odd;
  for (int state = 0; state < dim; ++state) {
    double expectation = 0.0;  // <Pi> with Pi = (-1)^(N_a + J_z + n/2)
    for (int idx = 0; idx < dim; ++idx) {
      const int na = idx / nspin;
      const int m = idx % nspin;
      const double c = d.eigenvectors(idx, state);
      expectation += ((na + m) % 2 == 0 ? 1.0 : -1.0) * c * c;
    }
    if (std::abs(std::abs(expectation) - 1.0) > 1e-6)
      throw ParityMixing("diagonalize_with_parity: truncation too small");
    d.parity[state] = expectation > 0.0 ? 1 : -1;
    if (d.parity[state] > 0) {
      if (even.size() < 4) even.push_back(state);
    } else {
      if (odd.size() < 2) odd.push_back(state);
    }
  }
  if (even.size() < 4 || odd.size() < 2)
    throw ParityMixing("diagonalize_with_parity: too few states per sector");
  d.labels = {even[0], odd[0], odd[1], even[1], even[2], even[3]};
  return d;
}

OverlapCoefficients bare_ground_overlaps(const DickeDiagonalization& diag,
                                         const DickeParams& p) {
  // bare vacuum = cavity vacuum (x) |J_z = -n/2>, i.e. index (0, 0)
  OverlapCoefficients c;
  c.c0 = diag.eigenvectors(0, diag.labels[0]);
  c.c_two_lower = diag.eigenvectors(0, diag.labels[3]);
  c.c_mixed = diag.eigenvectors(0, diag.labels[4]);
  c.c_two_upper = diag.eigenvectors(0, diag.labels[5]);
  c.residual = 1.0 - (c.c0 * c.c0 + c.c_two_lower * c.c_two_lower +
                      c.c_mixed * c.c_mixed + c.c_two_upper * c.c_two_upper);
  if (c.residual > 0.05)
    throw ExpansionBreakdown(
        "bare_ground_overlaps: four-state expansion misses > 5% of the vacuum");
  (void)p;
  return c;
}

std::pair<double, double> dicke_populations(const OverlapCoefficients& c) {
  return {2.0 * c.c_two_upper * c.c_two_upper + c.c_mixed * c.c_mixed,
          2.0 * c.c_two_lower * c.c_two_lower + c.c_mixed * c.c_mixed};
}

ComparisonPoint compare_with_effective(const DickeParams& p) {
  ComparisonPoint out;
  const auto diag = diagonalize_with_parity(p);
  const double e0 = diag.eigenvalues[diag.labels[0]];
  for (int i = 0; i < 6; ++i)
    out.dicke_energies[i] = diag.eigenvalues[diag.labels[i]] - e0;

  const auto overlaps = bare_ground_overlaps(diag, p);
  std::tie(out.n_upper_dicke, out.n_lower_dicke) = dicke_populations(overlaps);

  const two_mode::TwoModeParams eff{p.omega_a, p.omega_b, p.lambda,
                                    p.D,       p.eta,     p.u};
  const auto [wu, wl] = two_mode::polariton_frequencies(eff);
  out.effective_energies = {0.0, wl, wu, 2.0 * wl, wl + wu, 2.0 * wu};
  std::tie(out.n_upper_effective, out.n_lower_effective) =
      two_mode::populations(eff);
  return out;
}

}  // namespace polariton::dicke
