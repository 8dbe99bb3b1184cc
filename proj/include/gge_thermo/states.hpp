#pragma once

// Entropic functionals (natural log, nats throughout) and the generalised
// Gibbs state built from a charge set.

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gge_thermo/operators.hpp"

namespace gge_thermo {

// exp(-sum_i mu_i C_i) / Z via eigendecomposition of the Hermitian exponent.
// The spectrum is shifted by its extremum before exponentiating so the
// populations stay in (0, 1] regardless of scale.
inline DensityMatrix gge_state(const ChargeSet& cs) {
  EigenSystem es = eigh(-cs.combined().matrix());
  const double shift = es.values.maxCoeff();
  Eigen::VectorXd weights = (es.values.array() - shift).exp();
  const double z = weights.sum();
  if (!std::isfinite(z) || z <= 0.0)
    throw nonfinite_result_error("partition function is non-finite after spectral shift");
  Matrix rho = es.vectors * (weights / z).asDiagonal() * es.vectors.adjoint();
  // Symmetrize away eigensolver round-off before validation.
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

// ln tr exp(-sum_i mu_i C_i), evaluated as a log-sum-exp over the spectrum.
inline double log_partition(const ChargeSet& cs) {
  Eigen::VectorXd vals = eigvalsh(-cs.combined().matrix());
  const double shift = vals.maxCoeff();
  return shift + std::log((vals.array() - shift).exp().sum());
}

namespace detail {

// Eigenvalues in [-kPsdTol, 0] are clipped to zero; anything at or below
// kSupportTol contributes nothing to entropic sums.
inline double clipped(double lambda) { return lambda < 0.0 ? 0.0 : lambda; }

}  // namespace detail

// von Neumann entropy, in nats.
inline double entropy(const DensityMatrix& rho) {
  Eigen::VectorXd vals = rho.spectrum();
  double s = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    double p = detail::clipped(vals(i));
    if (p > kSupportTol) s -= p * std::log(p);
  }
  return s;
}

// S(rho || sigma) in nats; +infinity when rho has support outside sigma's.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw dimension_mismatch_error("relative entropy requires equal dimensions");
  EigenSystem es = eigh(sigma.matrix());
  double cross = 0.0;  // tr(rho log sigma)
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    double s = detail::clipped(es.values(i));
    double weight = (es.vectors.col(i).adjoint() * rho.matrix() * es.vectors.col(i))(0).real();
    if (s <= kSupportTol) {
      if (weight > kSupportTol) return std::numeric_limits<double>::infinity();
    } else {
      cross += weight * std::log(s);
    }
  }
  return -entropy(rho) - cross;
}

// I(A:B) = S(rho_A) + S(rho_B) - S(rho_AB) for a bipartite state.
inline double mutual_information(const DensityMatrix& joint, std::pair<int, int> dims) {
  if (static_cast<long>(dims.first) * dims.second != joint.dim())
    throw dimension_mismatch_error("bipartition does not match the joint dimension");
  std::vector<int> d = {dims.first, dims.second};
  DensityMatrix rho_a = partial_trace(joint, d, {0});
  DensityMatrix rho_b = partial_trace(joint, d, {1});
  return entropy(rho_a) + entropy(rho_b) - entropy(joint);
}

// (1/2) ||rho - sigma||_1.
inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw dimension_mismatch_error("trace distance requires equal dimensions");
  return 0.5 * eigvalsh(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

}  // namespace gge_thermo
