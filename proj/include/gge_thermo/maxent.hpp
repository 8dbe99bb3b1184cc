#pragma once

// Maximum-entropy inference over a set of (generally non-commuting) charges:
// the state of maximal von Neumann entropy matching prescribed expectation
// values is the generalised Gibbs state exp(-sum mu_i C_i)/Z, and the
// multipliers are found by minimising the smooth convex dual
//
//   f(mu) = ln tr exp(-sum_i mu_i C_i) + sum_i mu_i target_i,
//
// whose exact gradient is target_i - tr(rho_mu C_i) for commuting and
// non-commuting charges alike. A BFGS iteration with backtracking line
// search avoids the Kubo-Mori covariances an exact Newton step would need.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gge_thermo/operators.hpp"
#include "gge_thermo/states.hpp"

namespace gge_thermo {

struct GGESolution {
  std::vector<double> multipliers;
  DensityMatrix state;
  double log_partition = 0.0;
  std::vector<double> achieved;  // tr(state C_i)
  double residual = 0.0;         // max_i |achieved_i - target_i|
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_history;  // dual value at each accepted iterate
};

struct SolveOptions {
  double tol = 1e-9;               // on the max expectation residual
  int max_iter = 1000;
  double multiplier_bound = 1e3;   // ||mu|| beyond this with a stuck residual
                                   // is treated as an infeasibility certificate
};

namespace detail {

struct DualPoint {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::VectorXd achieved;
  Matrix state;
  double log_partition = 0.0;
};

inline DualPoint evaluate_dual(const std::vector<HermitianOperator>& charges,
                               const Eigen::VectorXd& targets, const Eigen::VectorXd& mu) {
  const int d = charges.front().dim();
  const int n = static_cast<int>(charges.size());
  Matrix exponent = Matrix::Zero(d, d);
  for (int i = 0; i < n; ++i) exponent -= mu(i) * charges[i].matrix();
  EigenSystem es = eigh(exponent);
  const double shift = es.values.maxCoeff();
  Eigen::VectorXd weights = (es.values.array() - shift).exp();
  const double z = weights.sum();

  DualPoint p;
  p.log_partition = shift + std::log(z);
  p.state = es.vectors * (weights / z).asDiagonal() * es.vectors.adjoint();
  p.state = 0.5 * (p.state + p.state.adjoint().eval());
  p.achieved.resize(n);
  p.gradient.resize(n);
  for (int i = 0; i < n; ++i) {
    p.achieved(i) = (p.state * charges[i].matrix()).trace().real();
    p.gradient(i) = targets(i) - p.achieved(i);
  }
  p.value = p.log_partition + mu.dot(targets);
  return p;
}

// Linear dependence among {identity, C_1, ..., C_n} makes the dual Hessian
// singular everywhere; detected on the Hilbert-Schmidt Gram matrix of the
// normalised operators.
inline void check_degenerate(const std::vector<HermitianOperator>& charges) {
  const int d = charges.front().dim();
  const int n = static_cast<int>(charges.size());
  std::vector<Matrix> ops;
  ops.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  for (const auto& c : charges) {
    double norm = std::sqrt((c.matrix() * c.matrix()).trace().real());
    if (norm <= 0.0) throw degenerate_charges_error("a charge is numerically zero");
    ops.push_back(c.matrix() / norm);
  }
  Eigen::MatrixXd gram(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) gram(i, j) = (ops[i] * ops[j]).trace().real();
  Eigen::VectorXd ev = gram.selfadjointView<Eigen::Lower>().eigenvalues();
  if (ev.minCoeff() <= 1e-10 * ev.maxCoeff())
    throw degenerate_charges_error(
        "charges (with the identity) are linearly dependent; multipliers are not identifiable");
}

}  // namespace detail

inline GGESolution solve_gge(const std::vector<HermitianOperator>& charges,
                             const std::vector<double>& targets,
                             const SolveOptions& options = {}) {
  if (charges.empty()) throw invalid_operator_error("no charges given");
  if (charges.size() != targets.size())
    throw dimension_mismatch_error("charge and target counts differ");
  for (const auto& c : charges)
    if (c.dim() != charges.front().dim())
      throw dimension_mismatch_error("charges act on different dimensions");

  detail::check_degenerate(charges);

  // Each target must lie strictly inside its charge's spectral range; values
  // on or beyond the edge are reachable only by diverging multipliers.
  for (std::size_t i = 0; i < charges.size(); ++i) {
    Eigen::VectorXd spec = charges[i].spectrum();
    if (targets[i] <= spec.minCoeff() || targets[i] >= spec.maxCoeff())
      throw infeasible_targets_error("target " + std::to_string(i) +
                                     " lies outside the open spectral range of its charge");
  }

  const int n = static_cast<int>(charges.size());
  Eigen::VectorXd t = Eigen::Map<const Eigen::VectorXd>(targets.data(), n);

  Eigen::VectorXd mu = Eigen::VectorXd::Zero(n);  // maximally mixed start
  detail::DualPoint cur = detail::evaluate_dual(charges, t, mu);
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

  GGESolution sol{std::vector<double>(n, 0.0), DensityMatrix(cur.state), cur.log_partition,
                  {},  0.0, 0, false, {cur.value}};

  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    if (cur.gradient.cwiseAbs().maxCoeff() <= options.tol) {
      sol.converged = true;
      break;
    }
    if (mu.norm() > options.multiplier_bound)
      throw infeasible_targets_error(
          "multiplier norm exceeded " + std::to_string(options.multiplier_bound) +
          " with residual " + std::to_string(cur.gradient.cwiseAbs().maxCoeff()) +
          "; targets appear infeasible");

    Eigen::VectorXd direction = -(h_inv * cur.gradient);
    double slope = direction.dot(cur.gradient);
    if (!(slope < 0.0)) {  // lost descent property; restart from steepest descent
      h_inv.setIdentity();
      direction = -cur.gradient;
      slope = direction.dot(cur.gradient);
    }

    // Backtracking Armijo line search. The dual is smooth and convex, so a
    // sufficient-decrease step always exists; near the minimum the true
    // decrease drops below double resolution, so acceptance carries a noise
    // floor and progress is then judged by the gradient alone.
    const double noise_floor = 8.0 * std::numeric_limits<double>::epsilon() *
                               (1.0 + std::abs(cur.value));
    double step = 1.0;
    detail::DualPoint next;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      next = detail::evaluate_dual(charges, t, mu + step * direction);
      if (next.value <= cur.value + 1e-4 * step * slope + noise_floor) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // step underflow: report non-convergence below
    if (step * direction.norm() <= 1e-16 * (1.0 + mu.norm()) &&
        next.gradient.cwiseAbs().maxCoeff() >= cur.gradient.cwiseAbs().maxCoeff())
      break;  // stagnated at floating-point resolution

    Eigen::VectorXd s = step * direction;
    Eigen::VectorXd y = next.gradient - cur.gradient;
    double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (iter == 0) h_inv *= sy / y.squaredNorm();  // curvature-scaled start
      Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      Eigen::MatrixXd left = eye - s * y.transpose() / sy;
      h_inv = left * h_inv * left.transpose() + s * s.transpose() / sy;
    }
    mu += s;
    cur = next;
    sol.objective_history.push_back(cur.value);
  }

  sol.multipliers.assign(mu.data(), mu.data() + n);
  sol.state = DensityMatrix(cur.state);
  sol.log_partition = cur.log_partition;
  sol.achieved.assign(cur.achieved.data(), cur.achieved.data() + n);
  sol.residual = cur.gradient.cwiseAbs().maxCoeff();
  sol.iterations = iter;
  sol.converged = sol.residual <= options.tol;
  return sol;
}

// Entropy-maximising state with the same charge expectations as rho.
inline DensityMatrix maxent_project(const DensityMatrix& rho,
                                    const std::vector<HermitianOperator>& charges,
                                    const SolveOptions& options = {}) {
  std::vector<double> targets;
  targets.reserve(charges.size());
  for (const auto& c : charges) targets.push_back(expectation(rho, c));
  return solve_gge(charges, targets, options).state;
}

}  // namespace gge_thermo
