#include "polariton/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace polariton::numerics {

SymmetricMatrix::SymmetricMatrix(const Mat& m) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw InvalidMatrix("SymmetricMatrix: need a square matrix of dimension >= 1");
  if (!m.allFinite()) throw InvalidMatrix("SymmetricMatrix: non-finite entries");
  m_ = 0.5 * (m + m.transpose());
}

namespace {

// One cyclic sweep of Jacobi rotations over the upper triangle.
// Returns the off-diagonal Frobenius norm after the sweep.
double jacobi_sweep(Mat& a, Mat& v) {
  const int n = static_cast<int>(a.rows());
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double app = a(p, p);
      const double aqq = a(q, q);
      const double tau = (aqq - app) / (2.0 * apq);
      // smaller-magnitude root of t^2 + 2 tau t - 1 = 0
      double t;
      if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
      else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      for (int i = 0; i < n; ++i) {
        const double aip = a(i, p);
        const double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(i, q) = s * aip + c * aiq;
      }
      for (int j = 0; j < n; ++j) {
        const double apj = a(p, j);
        const double aqj = a(q, j);
        a(p, j) = c * apj - s * aqj;
        a(q, j) = s * apj + c * aqj;
      }
      for (int i = 0; i < n; ++i) {
        const double vip = v(i, p);
        const double viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
      }
    }
  }
  double off = 0.0;
  for (int p = 0; p < n - 1; ++p)
    for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
  return std::sqrt(2.0 * off);
}

}  // namespace

EigenDecomposition sym_eigen(const SymmetricMatrix& m) {
  const int n = m.dimension();
  Mat a = m.entries();
  Mat v = Mat::Identity(n, n);
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  const double tol = 1e-15 * scale * n;
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (jacobi_sweep(a, v) <= tol) break;
  }

  EigenDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(n, n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) {
              if (a(i, i) != a(j, j)) return a(i, i) < a(j, j);
              return i < j;  // deterministic tie-break for exact crossings
            });
  for (int k = 0; k < n; ++k) {
    d.eigenvalues[k] = a(order[k], order[k]);
    d.eigenvectors.col(k) = v.col(order[k]);
    // deterministic sign: largest-magnitude entry positive
    int imax = 0;
    d.eigenvectors.col(k).cwiseAbs().maxCoeff(&imax);
    if (d.eigenvectors(imax, k) < 0.0) d.eigenvectors.col(k) *= -1.0;
  }
  return d;
}

OdeSystem OdeSystem::from_dense(const CMat& g, const CVec& y0, double t_final) {
  if (!g.allFinite()) throw InvalidSystem("OdeSystem: non-finite generator");
  if (g.rows() != g.cols() || g.rows() != y0.size())
    throw InvalidSystem("OdeSystem: generator/state dimension mismatch");
  if (!(t_final > 0.0) || !std::isfinite(t_final))
    throw InvalidSystem("OdeSystem: time span must be finite and positive");
  OdeSystem sys;
  sys.dimension = static_cast<int>(g.rows());
  auto gp = std::make_shared<CMat>(g);
  sys.generator = [gp](const CVec& in, CVec& out) { out.noalias() = (*gp) * in; };
  sys.initial_state = y0;
  sys.t_final = t_final;
  return sys;
}

namespace {

// One RK4 step; work vectors are reused across calls.
void rk4_step(const OdeSystem& sys, const CVec& y, double h, CVec& out, CVec& k1,
              CVec& k2, CVec& k3, CVec& k4, CVec& tmp) {
  sys.generator(y, k1);
  tmp = y + (0.5 * h) * k1;
  sys.generator(tmp, k2);
  tmp = y + (0.5 * h) * k2;
  sys.generator(tmp, k3);
  tmp = y + h * k3;
  sys.generator(tmp, k4);
  out = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

CMat integrate_linear_ode(const OdeSystem& sys, const Vec& sample_times,
                          const OdeOptions& opts) {
  if (!sys.generator || sys.dimension < 1)
    throw InvalidSystem("integrate_linear_ode: empty system");
  for (int i = 0; i < sample_times.size(); ++i) {
    if (sample_times[i] < 0.0 || sample_times[i] > sys.t_final)
      throw InvalidSystem("integrate_linear_ode: sample time outside [0, T]");
    if (i > 0 && sample_times[i] < sample_times[i - 1])
      throw InvalidSystem("integrate_linear_ode: sample times must be ascending");
  }

  CMat samples(sys.dimension, sample_times.size());
  CVec y = sys.initial_state;
  CVec ynew(sys.dimension), k1(sys.dimension), k2(sys.dimension),
      k3(sys.dimension), k4(sys.dimension), tmp(sys.dimension);

  const double norm0 = y.norm();
  double t = 0.0;
  double h = std::min(opts.initial_step, sys.t_final);
  int isample = 0;
  while (isample < sample_times.size() && sample_times[isample] <= 0.0)
    samples.col(isample++) = y;

  while (isample < sample_times.size()) {
    const double target = sample_times[isample];
    while (t < target) {
      double hstep = std::min(h, target - t);
      rk4_step(sys, y, hstep, ynew, k1, k2, k3, k4, tmp);
      const double drift = std::abs(ynew.norm() - y.norm());
      // proportional budget plus a rounding floor: short (clipped) steps
      // produce eps-level drift that no step size can reduce
      const double allowed =
          opts.norm_tolerance * (hstep / sys.t_final) * std::max(norm0, 1e-300) +
          32.0 * std::numeric_limits<double>::epsilon() * std::max(norm0, 1e-300);
      if (drift > allowed && hstep > opts.min_step) {
        h = 0.5 * hstep;
        if (h < opts.min_step)
          throw IntegrationFailure("integrate_linear_ode: step-size underflow");
        continue;
      }
      t += hstep;
      y.swap(ynew);
      if (drift < 0.01 * allowed) h = std::min(2.0 * hstep, sys.t_final);
    }
    samples.col(isample++) = y;
  }
  return samples;
}

}  // namespace polariton::numerics
