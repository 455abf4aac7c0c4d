#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "polariton/errors.hpp"

namespace polariton::numerics {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Dense real symmetric matrix. Construction symmetrizes by averaging
/// so that entries(i,j) == entries(j,i) exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Mat& m);

  int dimension() const { return static_cast<int>(m_.rows()); }
  const Mat& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat m_;
};

struct EigenDecomposition {
  Vec eigenvalues;   // ascending
  Mat eigenvectors;  // columns; m = V diag(lambda) V^T
};

/// Cyclic Jacobi eigensolver for small dense symmetric matrices.
/// Eigenvalues ascending, eigenvector columns orthonormal with the
/// largest-magnitude entry of each column made positive.
EigenDecomposition sym_eigen(const SymmetricMatrix& m);

/// Linear, time-independent ODE dy/dt = G y. The generator is given as a
/// callback so large structured systems avoid storing a dense matrix.
struct OdeSystem {
  int dimension = 0;
  std::function<void(const CVec&, CVec&)> generator;  // out = G * in
  CVec initial_state;
  double t_final = 0.0;

  static OdeSystem from_dense(const CMat& g, const CVec& y0, double t_final);
};

struct OdeOptions {
  double initial_step = 1e-2;
  double min_step = 1e-12;
  /// Total relative norm-drift budget over the full span; per-step
  /// tolerance is scaled by h / t_final.
  double norm_tolerance = 1e-9;
};

/// Classic RK4 with step doubling/halving driven by norm conservation
/// (the generators used here all have purely imaginary spectrum, so the
/// exact flow is an isometry). Returns the state at each sample time.
CMat integrate_linear_ode(const OdeSystem& sys, const Vec& sample_times,
                          const OdeOptions& opts = {});

}  // namespace polariton::numerics
