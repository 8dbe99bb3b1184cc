#pragma once

// Work extraction and passivity with respect to an arbitrary observable:
// the extractable amount (ergotropy) is the gap between tr(rho C) and its
// minimum over unitary orbits, reached by pairing state populations in
// descending order with charge levels in ascending order. Multi-copy checks
// work on spectra alone, so no d^n matrices are ever formed.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "gge_thermo/operators.hpp"
#include "gge_thermo/states.hpp"

namespace gge_thermo {

inline constexpr double kPassivityTol = 1e-10;
inline constexpr long kCopyDimensionCap = 4096;

struct ErgotropyResult {
  double value = 0.0;                     // tr(rho C) - min_U tr(U rho U^dag C)
  double optimal_final_expectation = 0.0; // the minimum itself
  bool passive = false;
  // witness_permutation[k] = index into the charge's ascending spectrum paired
  // with the k-th largest state population in the minimising arrangement.
  std::vector<int> witness_permutation;
};

inline ErgotropyResult ergotropy(const DensityMatrix& rho, const HermitianOperator& c,
                                 double tol = kPassivityTol) {
  if (rho.dim() != c.dim())
    throw dimension_mismatch_error("state and charge dimensions differ");
  const int d = rho.dim();
  Eigen::VectorXd p = rho.spectrum();  // ascending
  Eigen::VectorXd levels = c.spectrum();

  ErgotropyResult r;
  r.witness_permutation.resize(d);
  double minimum = 0.0;
  for (int k = 0; k < d; ++k) {
    minimum += p(d - 1 - k) * levels(k);  // largest population on lowest level
    r.witness_permutation[k] = k;
  }
  r.optimal_final_expectation = minimum;
  r.value = expectation(rho, c) - minimum;
  if (r.value < 0.0 && r.value > -tol) r.value = 0.0;  // round-off on aligned states
  r.passive = r.value <= tol;
  return r;
}

struct PassivityReport {
  bool passive = false;
  double ergotropy_value = 0.0;
  double commutator = 0.0;         // spectral norm of [rho, C]
  bool commutes = false;
  bool populations_ordered = false;  // non-increasing along ascending charge levels
  bool criteria_agree = false;       // zero ergotropy vs commute-and-ordered
};

// Structural passivity check: [rho, C] = 0 and populations non-increasing in
// the charge eigenvalue. Within a degenerate charge level any ordering is
// allowed, so blocks are compared through their extremal populations.
inline PassivityReport is_passive(const DensityMatrix& rho, const HermitianOperator& c,
                                  double tol = kPassivityTol) {
  PassivityReport report;
  report.ergotropy_value = ergotropy(rho, c, tol).value;
  report.commutator = commutator_norm(rho, c);
  double scale = 1.0 + detail::max_abs(rho.matrix()) * detail::max_abs(c.matrix());
  report.commutes = report.commutator <= 1e-8 * scale;

  if (report.commutes) {
    EigenSystem es = eigh(c.matrix());
    // Populations blockwise in the charge eigenbasis; rho is block diagonal
    // there once it commutes with C.
    report.populations_ordered = true;
    int start = 0;
    double prev_min = std::numeric_limits<double>::infinity();
    const double level_tol = 1e-10 * (1.0 + es.values.cwiseAbs().maxCoeff());
    while (start < c.dim()) {
      int end = start + 1;
      while (end < c.dim() && es.values(end) - es.values(start) <= level_tol) ++end;
      Matrix block = es.vectors.middleCols(start, end - start).adjoint() * rho.matrix() *
                     es.vectors.middleCols(start, end - start);
      Eigen::VectorXd pops = eigvalsh(block);
      if (pops.maxCoeff() > prev_min + 1e-9) report.populations_ordered = false;
      prev_min = pops.minCoeff();
      start = end;
    }
  }
  report.passive = report.ergotropy_value <= tol;
  report.criteria_agree = report.passive == (report.commutes && report.populations_ordered);
  return report;
}

namespace detail {

// Spectra of rho^(x)n and of the n-copy total charge sum_k 1x..xCx..x1:
// products of populations and sums of levels over index tuples.
inline std::pair<std::vector<double>, std::vector<double>> copy_spectra(
    const Eigen::VectorXd& populations, const Eigen::VectorXd& levels, int n) {
  const int d = static_cast<int>(populations.size());
  long total = 1;
  for (int k = 0; k < n; ++k) {
    total *= d;
    if (total > kCopyDimensionCap)
      throw dimension_guard_error("d^n exceeds the copy dimension cap of 4096");
  }
  std::vector<double> p(total, 1.0), c(total, 0.0);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    for (int k = 0; k < n; ++k) {
      int component = static_cast<int>(rest % d);
      rest /= d;
      p[idx] *= populations(component);
      c[idx] += levels(component);
    }
  }
  return {std::move(p), std::move(c)};
}

inline double paired_minimum(std::vector<double> p, std::vector<double> c) {
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(c.begin(), c.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * c[i];
  return sum;
}

}  // namespace detail

// Ergotropy of rho^(x)n with respect to the n-copy extensive charge.
inline double n_copy_ergotropy(const DensityMatrix& rho, const HermitianOperator& c, int n) {
  if (rho.dim() != c.dim())
    throw dimension_mismatch_error("state and charge dimensions differ");
  if (n < 1) throw invalid_operator_error("copy count must be positive");
  auto [p, levels] = detail::copy_spectra(rho.spectrum(), c.spectrum(), n);
  return n * expectation(rho, c) - detail::paired_minimum(std::move(p), std::move(levels));
}

inline bool is_n_copy_passive(const DensityMatrix& rho, const HermitianOperator& c, int n,
                              double tol = kPassivityTol) {
  return n_copy_ergotropy(rho, c, n) <= tol;
}

// F(rho) = sum_i mu_i tr(rho C_i) - S(rho). The generalised Gibbs state of
// the same charge set is its unique minimiser, and the gap to it equals the
// relative entropy S(rho || rho_gge).
inline double free_energy(const DensityMatrix& rho, const ChargeSet& cs) {
  if (rho.dim() != cs.dim())
    throw dimension_mismatch_error("state and charge set dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    sum += cs.multipliers()[i] * expectation(rho, cs.charges()[i]);
  return sum - entropy(rho);
}

struct CmuPassivityReport {
  std::vector<double> ergotropy_per_copy;  // n = 1 .. max_copies
  bool passive_for_all_tested = false;
};

// The generalised Gibbs state is completely passive with respect to the
// combined charge sum mu_i C_i; verified copy by copy up to the cap.
inline CmuPassivityReport check_cmu_complete_passivity(const ChargeSet& cs, int max_copies,
                                                       double tol = kPassivityTol) {
  DensityMatrix state = gge_state(cs);
  HermitianOperator combined = cs.combined();
  CmuPassivityReport report;
  report.passive_for_all_tested = true;
  for (int n = 1; n <= max_copies; ++n) {
    double value = n_copy_ergotropy(state, combined, n);
    report.ergotropy_per_copy.push_back(value);
    if (value > tol) report.passive_for_all_tested = false;
  }
  return report;
}

// Hilbert-Schmidt-orthonormal Hermitian basis of {X : [X, C_i] = 0 for all i},
// computed as the nullspace of the stacked commutator superoperators over the
// real vector space of Hermitian matrices. Always contains I/sqrt(d).
inline std::vector<HermitianOperator> commutant_intersection(
    const std::vector<HermitianOperator>& charges) {
  if (charges.empty()) throw invalid_operator_error("no charges given");
  const int d = charges.front().dim();
  for (const auto& c : charges)
    if (c.dim() != d) throw dimension_mismatch_error("charges act on different dimensions");

  // Orthonormal Hermitian basis: diagonal units, symmetric and antisymmetric
  // off-diagonal combinations.
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    Matrix e = Matrix::Zero(d, d);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix s = Matrix::Zero(d, d), a = Matrix::Zero(d, d);
      s(i, j) = s(j, i) = inv_sqrt2;
      a(i, j) = Complex(0.0, -inv_sqrt2);
      a(j, i) = Complex(0.0, inv_sqrt2);
      basis.push_back(s);
      basis.push_back(a);
    }

  const int nb = static_cast<int>(basis.size());
  // Rows: real and imaginary parts of every entry of [C_k, B_j].
  Eigen::MatrixXd stacked(2 * d * d * static_cast<int>(charges.size()), nb);
  for (int j = 0; j < nb; ++j) {
    int row = 0;
    for (const auto& c : charges) {
      Matrix comm = c.matrix() * basis[j] - basis[j] * c.matrix();
      for (int r = 0; r < d; ++r)
        for (int cidx = 0; cidx < d; ++cidx) {
          stacked(row++, j) = comm(r, cidx).real();
          stacked(row++, j) = comm(r, cidx).imag();
        }
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinV);
  Eigen::VectorXd sv = svd.singularValues();
  double threshold = 1e-10 * (sv.size() > 0 ? sv(0) : 0.0);

  std::vector<HermitianOperator> result;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) > threshold) continue;
    Matrix op = Matrix::Zero(d, d);
    for (int j = 0; j < nb; ++j) op += svd.matrixV()(j, k) * basis[j];
    op = 0.5 * (op + op.adjoint().eval());
    result.push_back(HermitianOperator(std::move(op)));
  }
  return result;
}

}  // namespace gge_thermo
