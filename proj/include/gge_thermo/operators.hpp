#pragma once

// Dense operator algebra for finite-dimensional quantum systems: validated
// Hermitian observables and density matrices, tensor products, partial
// traces and the handful of functionals everything else is built from.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <utility>
#include <vector>

#include "gge_thermo/errors.hpp"

namespace gge_thermo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Tolerances shared by the validation layer.
inline constexpr double kHermiticityTol = 1e-10;  // relative, on max entry
inline constexpr double kTraceTol = 1e-10;        // absolute, on tr(rho) - 1
inline constexpr double kPsdTol = 1e-9;           // absolute, on min eigenvalue
inline constexpr double kSupportTol = 1e-12;      // eigenvalues below count as zero

namespace detail {

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace detail

inline bool is_hermitian(const Matrix& m, double tol = kHermiticityTol) {
  if (m.rows() != m.cols()) return false;
  return detail::max_abs(m - m.adjoint()) <= tol * (1.0 + detail::max_abs(m));
}

inline bool is_unitary(const Matrix& u, double tol = kHermiticityTol) {
  if (u.rows() != u.cols()) return false;
  Matrix residual = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return detail::max_abs(residual) <= tol * (1.0 + detail::max_abs(u));
}

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct EigenSystem {
  Eigen::VectorXd values;
  Matrix vectors;
};

inline EigenSystem eigh(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw nonfinite_result_error("Hermitian eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline Eigen::VectorXd eigvalsh(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw nonfinite_result_error("Hermitian eigendecomposition failed");
  return solver.eigenvalues();
}

// Largest singular value.
inline double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
      throw invalid_operator_error("operator must be square and non-empty");
    if (!is_hermitian(entries_))
      throw invalid_operator_error("operator is not Hermitian within tolerance");
  }

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

  // Real spectrum, ascending. Computed on demand.
  Eigen::VectorXd spectrum() const { return eigvalsh(entries_); }

 private:
  Matrix entries_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
      throw invalid_operator_error("state must be square and non-empty");
    if (!is_hermitian(entries_))
      throw invalid_operator_error("state is not Hermitian within tolerance");
    if (std::abs(entries_.trace().real() - 1.0) > kTraceTol ||
        std::abs(entries_.trace().imag()) > kTraceTol)
      throw invalid_operator_error("state trace differs from 1 beyond tolerance");
    if (eigvalsh(entries_).minCoeff() < -kPsdTol)
      throw invalid_operator_error("state has a negative eigenvalue beyond tolerance");
  }

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Eigen::VectorXd spectrum() const { return eigvalsh(entries_); }

 private:
  Matrix entries_;
};

// Kronecker product with the row-major factor convention:
// (A (x) B)[i*dB + k, j*dB + l] = A(i,j) B(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

// Partial trace over the factors NOT listed in `keep`. `dims` lists the
// factor dimensions in tensor order; their product must equal the matrix dim.
inline Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw dimension_mismatch_error("factor dimensions must be positive");
    total *= d;
  }
  if (total != m.rows() || m.rows() != m.cols())
    throw dimension_mismatch_error("factor dimensions do not multiply to the matrix dimension");

  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw dimension_mismatch_error("keep index out of range");
    kept[k] = true;
  }

  long dim_keep = 1, dim_trace = 1;
  for (int i = 0; i < n; ++i) (kept[i] ? dim_keep : dim_trace) *= dims[i];

  // Strides of each factor within the full index.
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> kept_idx, traced_idx;
  for (int i = 0; i < n; ++i) (kept[i] ? kept_idx : traced_idx).push_back(i);

  auto offset = [&](const std::vector<int>& factors, long flat) {
    long off = 0;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      int f = factors[i];
      off += (flat % dims[f]) * stride[f];
      flat /= dims[f];
    }
    return off;
  };

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (long r = 0; r < dim_keep; ++r) {
    long row_base = offset(kept_idx, r);
    for (long c = 0; c < dim_keep; ++c) {
      long col_base = offset(kept_idx, c);
      Complex sum = 0.0;
      for (long t = 0; t < dim_trace; ++t) {
        long tb = offset(traced_idx, t);
        sum += m(row_base + tb, col_base + tb);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

inline double expectation(const DensityMatrix& rho, const HermitianOperator& c) {
  if (rho.dim() != c.dim())
    throw dimension_mismatch_error("state and observable dimensions differ");
  return (rho.matrix() * c.matrix()).trace().real();
}

inline double commutator_norm(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_mismatch_error("commutator operands differ in shape");
  return spectral_norm(a * b - b * a);
}

inline double commutator_norm(const HermitianOperator& a, const HermitianOperator& b) {
  return commutator_norm(a.matrix(), b.matrix());
}

inline double commutator_norm(const DensityMatrix& rho, const HermitianOperator& c) {
  return commutator_norm(rho.matrix(), c.matrix());
}

// Ordered set of charges C_0..C_n with conjugate multipliers; index 0 is the
// Hamiltonian and multipliers[0] the inverse temperature.
class ChargeSet {
 public:
  ChargeSet(std::vector<HermitianOperator> charges, std::vector<double> multipliers)
      : charges_(std::move(charges)), multipliers_(std::move(multipliers)) {
    if (charges_.empty()) throw invalid_operator_error("charge set is empty");
    if (charges_.size() != multipliers_.size())
      throw dimension_mismatch_error("charge and multiplier counts differ");
    for (const auto& c : charges_)
      if (c.dim() != charges_.front().dim())
        throw dimension_mismatch_error("charges act on different dimensions");
  }

  int dim() const { return charges_.front().dim(); }
  std::size_t size() const { return charges_.size(); }
  const std::vector<HermitianOperator>& charges() const { return charges_; }
  const std::vector<double>& multipliers() const { return multipliers_; }
  const HermitianOperator& hamiltonian() const { return charges_.front(); }
  double beta() const { return multipliers_.front(); }

  // sum_i mu_i C_i, the combination that is conserved on average.
  HermitianOperator combined() const {
    Matrix sum = Matrix::Zero(dim(), dim());
    for (std::size_t i = 0; i < charges_.size(); ++i)
      sum += multipliers_[i] * charges_[i].matrix();
    return HermitianOperator(std::move(sum));
  }

 private:
  std::vector<HermitianOperator> charges_;
  std::vector<double> multipliers_;
};

// Common building blocks.

inline Matrix identity_matrix(int d) { return Matrix::Identity(d, d); }

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Spin-1/2 angular momentum components (hbar = 1).
inline Matrix spin_x() { return 0.5 * pauli_x(); }
inline Matrix spin_y() { return 0.5 * pauli_y(); }
inline Matrix spin_z() { return 0.5 * pauli_z(); }

inline Eigen::VectorXcd basis_ket(int d, int k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v(k) = 1.0;
  return v;
}

inline Matrix projector(const Eigen::VectorXcd& psi) {
  return psi * psi.adjoint() / psi.squaredNorm();
}

inline DensityMatrix pure_state(const Eigen::VectorXcd& psi) {
  return DensityMatrix(projector(psi));
}

inline DensityMatrix maximally_mixed(int d) {
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

inline HermitianOperator diagonal_operator(const std::vector<double>& values) {
  Matrix m = Matrix::Zero(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianOperator(std::move(m));
}

inline DensityMatrix diagonal_state(const std::vector<double>& populations) {
  Matrix m = Matrix::Zero(populations.size(), populations.size());
  for (std::size_t i = 0; i < populations.size(); ++i) m(i, i) = populations[i];
  return DensityMatrix(std::move(m));
}

}  // namespace gge_thermo
