#include "gge_thermo/states.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gge_thermo/random.hpp"

using namespace gge_thermo;
using Catch::Approx;

namespace {

// Relative entropy of two diagonal states, summed directly on the diagonals.
double diagonal_relative_entropy(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 1e-15) s += p[i] * (std::log(p[i]) - std::log(q[i]));
  return s;
}

}  // namespace

TEST_CASE("generalised Gibbs state construction", "[states]") {
  SECTION("infinite temperature gives the maximally mixed state") {
    ChargeSet cs({HermitianOperator(pauli_z())}, {0.0});
    CHECK(gge_state(cs).matrix().isApprox(0.5 * identity_matrix(2), 1e-14));
  }

  SECTION("two-level thermal populations") {
    ChargeSet cs({diagonal_operator({0.0, 1.0})}, {1.0});
    double z = 1.0 + std::exp(-1.0);
    DensityMatrix rho = gge_state(cs);
    CHECK(rho.matrix()(0, 0).real() == Approx(1.0 / z).epsilon(1e-12));
    CHECK(rho.matrix()(1, 1).real() == Approx(std::exp(-1.0) / z).epsilon(1e-12));
    CHECK(std::abs(rho.matrix()(0, 1)) < 1e-14);
  }

  SECTION("multi-charge set equals the single joint exponent") {
    double a = 0.4, b = -0.7;
    ChargeSet multi({HermitianOperator(identity_matrix(2)), HermitianOperator(pauli_x()),
                     HermitianOperator(pauli_y())},
                    {0.0, a, b});
    ChargeSet joint({HermitianOperator(a * pauli_x() + b * pauli_y())}, {1.0});
    CHECK(gge_state(multi).matrix().isApprox(gge_state(joint).matrix(), 1e-12));

    // A multiplier on the identity only rescales the partition function.
    ChargeSet shifted({HermitianOperator(identity_matrix(2)), HermitianOperator(pauli_x()),
                       HermitianOperator(pauli_y())},
                      {3.0, a, b});
    CHECK(gge_state(shifted).matrix().isApprox(gge_state(joint).matrix(), 1e-12));
    CHECK(log_partition(shifted) == Approx(log_partition(multi) - 3.0).margin(1e-12));
  }

  SECTION("single charge reproduces the Gibbs state") {
    Rng rng(5);
    HermitianOperator h = random_hermitian(4, rng);
    ChargeSet cs({h}, {0.8});
    EigenSystem es = eigh(h.matrix());
    Eigen::VectorXd w = (-0.8 * es.values.array()).exp();
    Matrix gibbs = es.vectors * (w / w.sum()).asDiagonal() * es.vectors.adjoint();
    CHECK((gge_state(cs).matrix() - gibbs).cwiseAbs().maxCoeff() < 1e-12);
  }

  SECTION("large multipliers stay finite through the spectral shift") {
    ChargeSet cs({diagonal_operator({0.0, 1.0})}, {2000.0});
    DensityMatrix rho = gge_state(cs);
    CHECK(rho.matrix()(0, 0).real() == Approx(1.0).margin(1e-12));
    CHECK(log_partition(cs) == Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("von Neumann entropy", "[states]") {
  CHECK(entropy(pure_state(basis_ket(3, 1))) == Approx(0.0).margin(1e-12));
  CHECK(entropy(maximally_mixed(5)) == Approx(std::log(5.0)).epsilon(1e-12));
  // One bit in nats.
  CHECK(entropy(diagonal_state({0.5, 0.5})) == Approx(0.693147).margin(1e-6));
  CHECK(entropy(diagonal_state({0.5, 0.5})) == Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("entropy is unitarily invariant", "[states]") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DensityMatrix rho = random_density_matrix(4, rng);
    Matrix u = random_unitary(4, rng);
    Matrix rotated = u * rho.matrix() * u.adjoint();
    rotated = 0.5 * (rotated + rotated.adjoint().eval());
    CHECK(std::abs(entropy(DensityMatrix(rotated)) - entropy(rho)) < 1e-10);
  }
}

TEST_CASE("relative entropy", "[states]") {
  Rng rng(9);

  SECTION("vanishes on identical states") {
    DensityMatrix rho = random_density_matrix(3, rng);
    CHECK(relative_entropy(rho, rho) == Approx(0.0).margin(1e-10));
  }

  SECTION("disjoint support is infinite") {
    DensityMatrix zero = pure_state(basis_ket(2, 0));
    DensityMatrix one = pure_state(basis_ket(2, 1));
    CHECK(std::isinf(relative_entropy(zero, one)));
  }

  SECTION("diagonal case matches the direct formula") {
    double z = 1.0 + std::exp(-1.0);
    std::vector<double> q = {1.0 / z, std::exp(-1.0) / z};
    double expected = diagonal_relative_entropy({0.5, 0.5}, q);
    CHECK(relative_entropy(maximally_mixed(2), diagonal_state(q)) ==
          Approx(expected).margin(1e-12));
    // Same value from the closed form -ln 2 + ln(1+e^{-1}) + 1/2.
    CHECK(expected == Approx(-std::log(2.0) + std::log1p(std::exp(-1.0)) + 0.5).margin(1e-14));
  }

  SECTION("non-negative, zero only near equality") {
    for (int trial = 0; trial < 25; ++trial) {
      DensityMatrix rho = random_density_matrix(3, rng, 0.2);
      DensityMatrix sigma = random_density_matrix(3, rng, 0.2);
      double s = relative_entropy(rho, sigma);
      CHECK(s >= -1e-12);
      if (s < 1e-10) CHECK(trace_distance(rho, sigma) < 1e-4);
    }
  }
}

TEST_CASE("mutual information", "[states]") {
  Rng rng(13);

  SECTION("product states carry none") {
    DensityMatrix joint = tensor(random_density_matrix(2, rng), random_density_matrix(3, rng));
    CHECK(mutual_information(joint, {2, 3}) == Approx(0.0).margin(1e-10));
  }

  SECTION("maximally entangled pair carries two bits") {
    Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(4);
    omega(0) = omega(3) = 1.0 / std::sqrt(2.0);
    CHECK(mutual_information(pure_state(omega), {2, 2}) ==
          Approx(2.0 * std::log(2.0)).epsilon(1e-10));
  }

  SECTION("local entropy changes equal the correlations built by a unitary") {
    // For a product input, dS_A + dS_B = I(A':B') exactly.
    for (int trial = 0; trial < 15; ++trial) {
      DensityMatrix a = random_density_matrix(2, rng);
      DensityMatrix b = random_density_matrix(3, rng);
      DensityMatrix joint = tensor(a, b);
      Matrix u = random_unitary(6, rng);
      Matrix evolved = u * joint.matrix() * u.adjoint();
      evolved = 0.5 * (evolved + evolved.adjoint().eval());
      DensityMatrix out(evolved);
      double ds_a = entropy(partial_trace(out, {2, 3}, {0})) - entropy(a);
      double ds_b = entropy(partial_trace(out, {2, 3}, {1})) - entropy(b);
      CAPTURE(trial);
      CHECK(std::abs(ds_a + ds_b - mutual_information(out, {2, 3})) < 1e-10);
    }
  }
}

TEST_CASE("thermal expectation of the charge", "[states]") {
  // <Z> under exp(-mu Z)/Z equals -tanh(mu).
  for (double mu : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
    ChargeSet cs({HermitianOperator(pauli_z())}, {mu});
    CHECK(expectation(gge_state(cs), HermitianOperator(pauli_z())) ==
          Approx(-std::tanh(mu)).margin(1e-12));
  }
}
