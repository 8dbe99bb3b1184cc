#pragma once

// Seeded generators for states, observables and unitaries. Every randomized
// check in the library and the CLI routes through an explicit seed so runs
// are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "gge_thermo/operators.hpp"

namespace gge_thermo {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline Matrix random_ginibre(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  return g;
}

inline HermitianOperator random_hermitian(int d, Rng& rng, double scale = 1.0) {
  Matrix g = random_ginibre(d, rng);
  return HermitianOperator(scale * 0.5 * (g + g.adjoint().eval()));
}

// Haar-distributed unitary: QR of a Ginibre matrix with the phase convention
// fixed by the sign of R's diagonal.
inline Matrix random_unitary(int d, Rng& rng) {
  Matrix g = random_ginibre(d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex diag = r(i, i);
    q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

// Full-rank random state; mix_identity in [0, 1) pulls the spectrum away
// from zero, which keeps entropic quantities well-conditioned.
inline DensityMatrix random_density_matrix(int d, Rng& rng, double mix_identity = 0.0) {
  Matrix g = random_ginibre(d, rng);
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  if (mix_identity > 0.0)
    w = (1.0 - mix_identity) * w + mix_identity / d * Matrix::Identity(d, d);
  w = 0.5 * (w + w.adjoint().eval());
  return DensityMatrix(std::move(w));
}

// Random unitary commuting with `conserved`: Haar blocks on each eigenspace,
// where eigenvalues closer than `cluster_tol` count as degenerate.
inline Matrix random_conserving_unitary(const HermitianOperator& conserved, Rng& rng,
                                        double cluster_tol = 1e-9) {
  EigenSystem es = eigh(conserved.matrix());
  const int d = conserved.dim();
  Matrix u_blocks = Matrix::Zero(d, d);
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && es.values(end) - es.values(end - 1) <= cluster_tol) ++end;
    u_blocks.block(start, start, end - start, end - start) =
        random_unitary(end - start, rng);
    start = end;
  }
  return es.vectors * u_blocks * es.vectors.adjoint();
}

// A commuting pair of bath observables: simultaneously diagonal in one
// random basis, with spectra drawn from the given ranges.
inline std::pair<HermitianOperator, HermitianOperator> random_commuting_pair(
    int d, Rng& rng, double lo = 0.0, double hi = 1.0) {
  Matrix v = random_unitary(d, rng);
  Matrix da = Matrix::Zero(d, d), db = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    da(i, i) = rng.uniform(lo, hi);
    db(i, i) = rng.uniform(lo, hi);
  }
  auto symm = [](Matrix m) { return HermitianOperator(0.5 * (m + m.adjoint().eval())); };
  return {symm(v * da * v.adjoint()), symm(v * db * v.adjoint())};
}

}  // namespace gge_thermo
