#include "gge_thermo/passivity.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gge_thermo/random.hpp"
#include "gge_thermo/states.hpp"

using namespace gge_thermo;
using Catch::Approx;

namespace {

// Brute-force oracle: minimise sum_i p_i c_{pi(i)} over all pairings.
double brute_force_minimum(const Eigen::VectorXd& populations, const Eigen::VectorXd& levels) {
  std::vector<int> perm(levels.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double value = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) value += populations(i) * levels(perm[i]);
    best = std::min(best, value);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double brute_force_ergotropy(const DensityMatrix& rho, const HermitianOperator& c) {
  return expectation(rho, c) - brute_force_minimum(rho.spectrum(), c.spectrum());
}

HermitianOperator zero_operator(int d) { return HermitianOperator(Matrix::Zero(d, d)); }

}  // namespace

TEST_CASE("ergotropy basics", "[passivity]") {
  SECTION("thermal states yield nothing") {
    ChargeSet cs({diagonal_operator({0.0, 0.7, 1.3})}, {1.2});
    ErgotropyResult r = ergotropy(gge_state(cs), cs.hamiltonian());
    CHECK(r.value == Approx(0.0).margin(1e-12));
    CHECK(r.passive);
  }

  SECTION("population inversion stores extractable work") {
    DensityMatrix rho = diagonal_state({0.3, 0.7});
    HermitianOperator c = diagonal_operator({0.0, 1.0});
    ErgotropyResult r = ergotropy(rho, c);
    CHECK(r.value == Approx(0.4).margin(1e-12));
    CHECK(r.value == Approx(brute_force_ergotropy(rho, c)).margin(1e-12));
    CHECK(r.optimal_final_expectation == Approx(0.3).margin(1e-12));
    CHECK_FALSE(r.passive);
  }

  SECTION("flat spectrum is inert for any charge") {
    Rng rng(41);
    HermitianOperator c = random_hermitian(4, rng);
    CHECK(ergotropy(maximally_mixed(4), c).value == Approx(0.0).margin(1e-12));
  }

  SECTION("matches brute force on random instances") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
      DensityMatrix rho = random_density_matrix(4, rng);
      HermitianOperator c = random_hermitian(4, rng);
      CHECK(ergotropy(rho, c).value ==
            Approx(brute_force_ergotropy(rho, c)).margin(1e-11));
    }
  }

  SECTION("dimension mismatch is rejected") {
    CHECK_THROWS_AS(ergotropy(maximally_mixed(2), zero_operator(3)),
                    dimension_mismatch_error);
  }
}

TEST_CASE("ergotropy is unitarily covariant", "[passivity]") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix rho = random_density_matrix(3, rng);
    HermitianOperator c = random_hermitian(3, rng);
    Matrix u = random_unitary(3, rng);
    Matrix rotated_state = u * rho.matrix() * u.adjoint();
    rotated_state = 0.5 * (rotated_state + rotated_state.adjoint().eval());
    Matrix rotated_charge = u * c.matrix() * u.adjoint();
    rotated_charge = 0.5 * (rotated_charge + rotated_charge.adjoint().eval());
    double a = ergotropy(rho, c).value;
    double b = ergotropy(DensityMatrix(rotated_state), HermitianOperator(rotated_charge)).value;
    CHECK(a == Approx(b).margin(1e-10));
  }
}

TEST_CASE("structural passivity criterion agrees with ergotropy", "[passivity]") {
  SECTION("thermal alignment passes") {
    ChargeSet cs({HermitianOperator(spin_z())}, {1.3});
    DensityMatrix rho = gge_state(cs);
    PassivityReport report = is_passive(rho, HermitianOperator(spin_z()));
    CHECK(report.passive);
    CHECK(report.commutes);
    CHECK(report.populations_ordered);
    CHECK(report.criteria_agree);
  }

  SECTION("rotated charge fails through the commutator") {
    ChargeSet cs({HermitianOperator(spin_z())}, {1.3});
    DensityMatrix rho = gge_state(cs);
    PassivityReport report = is_passive(rho, HermitianOperator(spin_x()));
    CHECK_FALSE(report.passive);
    CHECK(report.commutator > 0.1);
    CHECK(report.criteria_agree);
  }

  SECTION("commuting product weights invert populations") {
    // exp(-H - C1) with H = diag(0,1), C1 = diag(3,0): the level at energy 0
    // carries weight e^-3 < e^-1, an inversion in energy.
    Matrix w = Matrix::Zero(2, 2);
    w(0, 0) = std::exp(-3.0);
    w(1, 1) = std::exp(-1.0);
    DensityMatrix rho(w / w.trace().real());
    PassivityReport report = is_passive(rho, diagonal_operator({0.0, 1.0}));
    CHECK_FALSE(report.passive);
    CHECK(report.commutes);
    CHECK_FALSE(report.populations_ordered);
    CHECK(report.criteria_agree);
    CHECK(report.ergotropy_value > 0.01);
  }

  SECTION("randomized agreement") {
    Rng rng(44);
    for (int trial = 0; trial < 20; ++trial) {
      DensityMatrix rho = random_density_matrix(3, rng);
      HermitianOperator c = random_hermitian(3, rng);
      CHECK(is_passive(rho, c).criteria_agree);
      // Aligned case: thermal state of the same charge.
      DensityMatrix aligned = gge_state(ChargeSet({c}, {rng.uniform(0.2, 1.5)}));
      CHECK(is_passive(aligned, c).criteria_agree);
    }
  }
}

TEST_CASE("commuting charge pair splits single- and combined-charge passivity",
          "[passivity]") {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 0) = std::exp(-3.0);
  w(1, 1) = std::exp(-1.0);
  DensityMatrix rho(w / w.trace().real());
  HermitianOperator h = diagonal_operator({0.0, 1.0});
  HermitianOperator combined = diagonal_operator({3.0, 1.0});  // H + C1

  CHECK(ergotropy(rho, h).value == Approx(brute_force_ergotropy(rho, h)).margin(1e-12));
  CHECK(ergotropy(rho, h).value > 0.01);
  CHECK(ergotropy(rho, combined).value <= 1e-10);
}

TEST_CASE("anisotropic spin state is passive only along its axis", "[passivity]") {
  double mu_z = 1.0;
  ChargeSet cs({zero_operator(2), HermitianOperator(spin_x()), HermitianOperator(spin_y()),
                HermitianOperator(spin_z())},
               {1.0, 0.0, 0.0, mu_z});
  DensityMatrix rho = gge_state(cs);

  CHECK(ergotropy(rho, HermitianOperator(spin_x())).value > 1e-3);
  CHECK(ergotropy(rho, HermitianOperator(spin_y())).value > 1e-3);
  CHECK(ergotropy(rho, HermitianOperator(spin_z())).value <= 1e-10);
  CHECK(ergotropy(rho, cs.combined()).value <= 1e-10);
}

TEST_CASE("multi-copy passivity", "[passivity]") {
  SECTION("thermal states stay passive for several copies") {
    ChargeSet cs({diagonal_operator({0.0, 1.0, 2.0})}, {0.9});
    DensityMatrix rho = gge_state(cs);
    for (int n = 1; n <= 3; ++n) CHECK(is_n_copy_passive(rho, cs.hamiltonian(), n));
  }

  SECTION("a passive state can activate at two copies") {
    DensityMatrix rho = diagonal_state({0.5, 0.3, 0.2});
    HermitianOperator c = diagonal_operator({0.0, 1.0, 2.5});
    CHECK(is_n_copy_passive(rho, c, 1));
    double two_copy = n_copy_ergotropy(rho, c, 2);
    CHECK(two_copy == Approx(0.005).margin(1e-12));
    CHECK_FALSE(is_n_copy_passive(rho, c, 2));

    // Oracle: same number from the 9-dimensional spectra paired by brute force.
    Eigen::VectorXd p(9), levels(9);
    int k = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j, ++k) {
        p(k) = rho.matrix()(i, i).real() * rho.matrix()(j, j).real();
        levels(k) = c.matrix()(i, i).real() + c.matrix()(j, j).real();
      }
    double oracle = 2.0 * expectation(rho, c) - brute_force_minimum(p, levels);
    CHECK(two_copy == Approx(oracle).margin(1e-12));
  }

  SECTION("projector sum collapses to a thermal form in one projector") {
    // C1 = |+><+|, C2 = |0><0|, C3 = |1><1| with equal multipliers: the GGE
    // exponent is mu(1 + C1), so the state is completely passive for C1 even
    // though C1 fails to commute with C2 and C3.
    Eigen::VectorXcd plus(2);
    plus << 1.0, 1.0;
    HermitianOperator c1(projector(plus));
    HermitianOperator c2(projector(basis_ket(2, 0)));
    HermitianOperator c3(projector(basis_ket(2, 1)));
    CHECK(commutator_norm(c1, c2) > 0.1);
    CHECK(commutator_norm(c1, c3) > 0.1);

    double mu = 0.8;
    ChargeSet cs({c1, c2, c3}, {mu, mu, mu});
    DensityMatrix rho = gge_state(cs);
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(n_copy_ergotropy(rho, c1, n) <= 1e-10);
    }
  }

  SECTION("dimension guard") {
    DensityMatrix rho = maximally_mixed(4);
    HermitianOperator c = diagonal_operator({0.0, 1.0, 2.0, 3.0});
    CHECK_NOTHROW(n_copy_ergotropy(rho, c, 6));  // 4^6 = 4096, at the cap
    CHECK_THROWS_AS(n_copy_ergotropy(rho, c, 7), dimension_guard_error);
  }
}

TEST_CASE("free energy functional", "[passivity]") {
  Rng rng(45);

  SECTION("single charge reduces to the standard combination") {
    HermitianOperator h = random_hermitian(3, rng);
    ChargeSet cs({h}, {1.7});
    DensityMatrix rho = random_density_matrix(3, rng);
    CHECK(free_energy(rho, cs) ==
          Approx(1.7 * expectation(rho, h) - entropy(rho)).margin(1e-12));
  }

  SECTION("gap to the generalised Gibbs state is the relative entropy") {
    for (int trial = 0; trial < 20; ++trial) {
      ChargeSet cs({random_hermitian(3, rng), random_hermitian(3, rng)},
                   {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
      DensityMatrix rho = random_density_matrix(3, rng, 0.1);
      DensityMatrix gge = gge_state(cs);
      double gap = free_energy(rho, cs) - free_energy(gge, cs);
      CHECK(std::abs(relative_entropy(rho, gge) - gap) < 1e-9);
      CHECK(gap >= -1e-10);  // the GGE state minimises the free energy
    }
  }
}

TEST_CASE("combined-charge complete passivity of the GGE state", "[passivity]") {
  Rng rng(46);

  SECTION("spin-1/2 with every angular momentum component conserved") {
    for (int trial = 0; trial < 5; ++trial) {
      ChargeSet cs({zero_operator(2), HermitianOperator(spin_x()), HermitianOperator(spin_y()),
                    HermitianOperator(spin_z())},
                   {rng.uniform(0.2, 1.5), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                    rng.uniform(-1.0, 1.0)});
      CmuPassivityReport report = check_cmu_complete_passivity(cs, 3);
      CAPTURE(trial, report.ergotropy_per_copy);
      CHECK(report.passive_for_all_tested);
    }
  }

  SECTION("single charge reduces to thermal complete passivity") {
    ChargeSet cs({diagonal_operator({0.0, 0.4, 1.1})}, {1.0});
    CHECK(check_cmu_complete_passivity(cs, 3).passive_for_all_tested);
  }

  SECTION("random qubit charge sets, two copies, against brute force") {
    for (int trial = 0; trial < 10; ++trial) {
      ChargeSet cs({random_hermitian(2, rng), random_hermitian(2, rng)},
                   {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
      DensityMatrix rho = gge_state(cs);
      HermitianOperator combined = cs.combined();
      CmuPassivityReport report = check_cmu_complete_passivity(cs, 2);
      CHECK(report.passive_for_all_tested);

      Eigen::VectorXd p1 = rho.spectrum(), c1 = combined.spectrum();
      Eigen::VectorXd p(4), levels(4);
      int k = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j, ++k) {
          p(k) = p1(i) * p1(j);
          levels(k) = c1(i) + c1(j);
        }
      double oracle = 2.0 * expectation(rho, combined) - brute_force_minimum(p, levels);
      CHECK(report.ergotropy_per_copy[1] == Approx(oracle).margin(1e-10));
    }
  }
}

TEST_CASE("commutant intersection", "[passivity]") {
  SECTION("two anticommuting qubit charges leave only the identity") {
    auto basis = commutant_intersection(
        {HermitianOperator(pauli_x()), HermitianOperator(pauli_y())});
    REQUIRE(basis.size() == 1);
    // The single element spans the identity, so the only free state is 1/2.
    Matrix op = basis[0].matrix();
    CHECK((op - op.trace() / 2.0 * identity_matrix(2)).cwiseAbs().maxCoeff() < 1e-10);
  }

  SECTION("a single non-degenerate charge leaves its diagonal algebra") {
    auto basis = commutant_intersection({HermitianOperator(pauli_z())});
    REQUIRE(basis.size() == 2);
    for (const auto& op : basis) {
      CHECK(commutator_norm(op.matrix(), pauli_z()) < 1e-10);
      CHECK(std::abs(op.matrix()(0, 1)) < 1e-10);  // diagonal
    }
  }

  SECTION("three-qubit non-commuting conserved set") {
    Matrix zzz = kron(kron(pauli_z(), pauli_z()), pauli_z());
    Matrix xxi = kron(kron(pauli_x(), pauli_x()), identity_matrix(2));
    Matrix iyy = kron(identity_matrix(2), kron(pauli_y(), pauli_y()));
    std::vector<HermitianOperator> charges = {HermitianOperator(zzz), HermitianOperator(xxi),
                                              HermitianOperator(iyy)};
    auto basis = commutant_intersection(charges);

    // Independent oracle: nullspace dimension of the stacked commutator
    // superoperators over the full complex matrix space.
    const int d = 8;
    Eigen::MatrixXcd stacked(3 * d * d, d * d);
    int block = 0;
    for (const auto& c : charges) {
      Eigen::MatrixXcd super =
          kron(identity_matrix(d), c.matrix()) -
          kron(c.matrix().transpose(), identity_matrix(d));
      stacked.middleRows(block * d * d, d * d) = super;
      ++block;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
    Eigen::VectorXd sv = svd.singularValues();
    int null_dim = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) < 1e-10 * sv(0)) ++null_dim;

    CHECK(static_cast<int>(basis.size()) == null_dim);
    CHECK(basis.size() == 8);
  }

  SECTION("basis is Hilbert-Schmidt orthonormal, commutes, and spans the identity") {
    Rng rng(47);
    std::vector<HermitianOperator> charges = {random_hermitian(3, rng),
                                              random_hermitian(3, rng)};
    auto basis = commutant_intersection(charges);
    REQUIRE(!basis.empty());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (const auto& c : charges)
        CHECK(commutator_norm(basis[i], c) < 1e-9);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        double overlap = (basis[i].matrix() * basis[j].matrix()).trace().real();
        CHECK(overlap == Approx(i == j ? 1.0 : 0.0).margin(1e-10));
      }
    }
    // The identity lies in the span.
    Matrix reconstructed = Matrix::Zero(3, 3);
    for (const auto& b : basis)
      reconstructed += (b.matrix() * identity_matrix(3)).trace().real() * b.matrix();
    CHECK((reconstructed - identity_matrix(3)).cwiseAbs().maxCoeff() < 1e-9);
  }
}
