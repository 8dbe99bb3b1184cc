#pragma once

// Hermiticity- and trace-preserving linear qubit maps in Bloch form, their
// Choi matrices, and a complete-positivity probe. Covers the equatorial
// projection family ("pancake" maps): the Bloch ball is shrunk onto a disc
// of radius r in the x-y plane, optionally displaced to z = eps.

#include <cmath>
#include <utility>
#include <vector>

#include "gge_thermo/operators.hpp"

namespace gge_thermo {

// rho = (I + v.sigma)/2  |->  (I + (linear v + offset).sigma)/2.
struct BlochMapSpec {
  Eigen::Matrix3d linear;
  Eigen::Vector3d offset;

  static BlochMapSpec identity() {
    return {Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero()};
  }

  static BlochMapSpec pancake(double r = 1.0, double eps = 0.0) {
    Eigen::Matrix3d l = Eigen::Matrix3d::Zero();
    l(0, 0) = r;
    l(1, 1) = r;
    return {l, Eigen::Vector3d(0.0, 0.0, eps)};
  }

  // Action on an arbitrary qubit operator, extended linearly from states:
  // a0 I + a.sigma |-> a0 I + (a0 offset + linear a).sigma.
  Matrix apply(const Matrix& op) const {
    if (op.rows() != 2 || op.cols() != 2)
      throw dimension_mismatch_error("Bloch maps act on qubit operators");
    const Matrix sigma[3] = {pauli_x(), pauli_y(), pauli_z()};
    Complex a0 = 0.5 * op.trace();
    Eigen::Vector3cd a;
    for (int i = 0; i < 3; ++i) a(i) = 0.5 * (sigma[i] * op).trace();
    Eigen::Vector3cd image = linear.cast<Complex>() * a + a0 * offset.cast<Complex>();
    Matrix out = a0 * Matrix::Identity(2, 2);
    for (int i = 0; i < 3; ++i) out += image(i) * sigma[i];
    return out;
  }

  Eigen::Vector3d apply_bloch(const Eigen::Vector3d& v) const { return linear * v + offset; }
};

struct ChoiMatrix {
  Matrix entries;  // d^2 x d^2, here 4 x 4
  double min_eigenvalue = 0.0;
  double trace_preservation_residual = 0.0;

  int dim() const { return static_cast<int>(entries.rows()); }
  Eigen::VectorXd eigenvalues() const { return eigvalsh(entries); }
};

// Apply the map to the first half of the maximally entangled state
// |Omega> = (|00> + |11>)/sqrt(2): choi = (E (x) id)(|Omega><Omega|).
inline ChoiMatrix choi(const BlochMapSpec& map) {
  ChoiMatrix result;
  result.entries = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix unit = Matrix::Zero(2, 2);
      unit(i, j) = 1.0;
      result.entries += 0.5 * kron(map.apply(unit), unit);
    }
  result.entries = 0.5 * (result.entries + result.entries.adjoint().eval());
  result.min_eigenvalue = eigvalsh(result.entries).minCoeff();
  // Trace preservation of the map shows up as tr_out(choi) = I/2.
  Matrix reduced = partial_trace(result.entries, {2, 2}, {1});
  result.trace_preservation_residual =
      detail::max_abs(reduced - 0.5 * Matrix::Identity(2, 2));
  return result;
}

struct CpVerdict {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
};

inline CpVerdict is_completely_positive(const BlochMapSpec& map, double tol = 1e-10) {
  double min_ev = choi(map).min_eigenvalue;
  return {min_ev >= -tol, min_ev};
}

struct CpBoundary {
  double r_star = 0.0;     // largest grid radius that is still CP
  double grid_step = 0.0;
};

// Scan the displaced pancake family in r at fixed eps and report the largest
// completely positive radius on the grid.
inline CpBoundary cp_boundary_scan(double eps, int grid_points = 1000) {
  if (grid_points < 1) throw invalid_operator_error("grid must have at least one interval");
  CpBoundary b;
  b.grid_step = 1.0 / grid_points;
  for (int k = 0; k <= grid_points; ++k) {
    double r = k * b.grid_step;
    if (is_completely_positive(BlochMapSpec::pancake(r, eps)).completely_positive)
      b.r_star = r;
  }
  return b;
}

}  // namespace gge_thermo
