#include "gge_thermo/bloch_map.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gge_thermo/random.hpp"

using namespace gge_thermo;
using Catch::Approx;

TEST_CASE("Choi matrix of the identity map", "[bloch-map]") {
  ChoiMatrix c = choi(BlochMapSpec::identity());
  Eigen::VectorXd ev = c.eigenvalues();  // ascending
  CHECK(ev(0) == Approx(0.0).margin(1e-14));
  CHECK(ev(1) == Approx(0.0).margin(1e-14));
  CHECK(ev(2) == Approx(0.0).margin(1e-14));
  CHECK(ev(3) == Approx(1.0).margin(1e-14));
  CHECK(c.trace_preservation_residual < 1e-14);
}

TEST_CASE("Choi matrix of the exact equatorial projection", "[bloch-map]") {
  ChoiMatrix c = choi(BlochMapSpec::pancake());
  Eigen::VectorXd ev = c.eigenvalues();
  CHECK(ev(0) == Approx(-0.25).margin(1e-12));
  CHECK(ev(1) == Approx(0.25).margin(1e-12));
  CHECK(ev(2) == Approx(0.25).margin(1e-12));
  CHECK(ev(3) == Approx(0.75).margin(1e-12));
  CHECK(c.min_eigenvalue == Approx(-0.25).margin(1e-12));
  CHECK(c.trace_preservation_residual < 1e-14);
}

TEST_CASE("Choi matrix of the fully depolarising map", "[bloch-map]") {
  BlochMapSpec depolarising{Eigen::Matrix3d::Zero(), Eigen::Vector3d::Zero()};
  ChoiMatrix c = choi(depolarising);
  CHECK(c.entries.isApprox(0.25 * identity_matrix(4), 1e-14));
  CHECK(c.min_eigenvalue == Approx(0.25).margin(1e-14));
}

TEST_CASE("complete positivity verdicts", "[bloch-map]") {
  CpVerdict exact = is_completely_positive(BlochMapSpec::pancake());
  CHECK_FALSE(exact.completely_positive);
  CHECK(exact.min_eigenvalue == Approx(-0.25).margin(1e-12));

  // r = 0.4 obeys the necessary bound r <= (1+eps)/2 and is in fact CP.
  CpVerdict shrunk = is_completely_positive(BlochMapSpec::pancake(0.4, 0.0));
  CHECK(shrunk.completely_positive);
  CHECK(0.4 <= 0.5);

  CpVerdict too_wide = is_completely_positive(BlochMapSpec::pancake(0.6, 0.0));
  CHECK_FALSE(too_wide.completely_positive);
}

TEST_CASE("exact projection is positive but not completely positive", "[bloch-map]") {
  BlochMapSpec pancake = BlochMapSpec::pancake();
  // Positivity: every Bloch-ball point lands inside the ball.
  for (int i = 0; i < 200; ++i) {
    double theta = std::acos(1.0 - 2.0 * (i + 0.5) / 200.0);
    double phi = 2.0 * M_PI * ((i * 37) % 200) / 200.0;
    Eigen::Vector3d v(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                      std::cos(theta));
    CHECK(pancake.apply_bloch(v).norm() <= 1.0 + 1e-12);
  }
  CHECK_FALSE(is_completely_positive(pancake).completely_positive);
}

TEST_CASE("boundary scan stays under the necessary bound", "[bloch-map]") {
  for (double eps : {0.0, 0.2, 0.5, 1.0}) {
    CpBoundary b = cp_boundary_scan(eps, 500);
    CAPTURE(eps, b.r_star);
    CHECK(b.r_star <= (1.0 + eps) / 2.0 + b.grid_step);
    // Observed boundary for this family: r detaches from the Choi spectrum at
    // sqrt(1 - eps^2)/2; the scan may sit one grid step below.
    double expected = 0.5 * std::sqrt(std::max(0.0, 1.0 - eps * eps));
    CHECK(b.r_star >= expected - 2.0 * b.grid_step);
    CHECK(b.r_star <= expected + 2.0 * b.grid_step);
  }
}

TEST_CASE("Bloch action matches the matrix action", "[bloch-map]") {
  Rng rng(31);
  BlochMapSpec map{Eigen::Matrix3d::Zero(), Eigen::Vector3d(0.1, -0.2, 0.3)};
  map.linear << 0.5, 0.1, 0.0, -0.1, 0.4, 0.2, 0.0, 0.0, 0.3;
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix rho = random_density_matrix(2, rng);
    Eigen::Vector3d v((rho.matrix() * pauli_x()).trace().real(),
                      (rho.matrix() * pauli_y()).trace().real(),
                      (rho.matrix() * pauli_z()).trace().real());
    Matrix image = map.apply(rho.matrix());
    Eigen::Vector3d w = map.apply_bloch(v);
    CHECK((image * pauli_x()).trace().real() == Approx(w(0)).margin(1e-12));
    CHECK((image * pauli_y()).trace().real() == Approx(w(1)).margin(1e-12));
    CHECK((image * pauli_z()).trace().real() == Approx(w(2)).margin(1e-12));
    CHECK(image.trace().real() == Approx(1.0).margin(1e-12));
  }
}
