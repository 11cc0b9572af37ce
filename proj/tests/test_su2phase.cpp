#include "phasekit/su2phase.hpp"

#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace phasekit;
using namespace phasekit::su2phase;
using std::numbers::pi;

namespace {

// Independent construction of the exponential phase operator: superdiagonal
// of ones, corner phase bottom-left. Kept separate from the library path on
// purpose; the oracle for the polar-decomposition tests.
Matrix epsilon_literal(int n, double psi) {
  Matrix eps = Matrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) eps(k, k + 1) = 1.0;
  eps(n - 1, 0) = std::polar(1.0, psi);
  return eps;
}

}  // namespace

TEST_CASE("effective spin of the 2n+n system") {
  CHECK(spin_for_pairs(1).two_j() == 1);    // j = 1/2
  CHECK(spin_for_pairs(2).two_j() == 5);    // j = 5/2
  CHECK(spin_for_pairs(3).two_j() == 19);   // j = 19/2
  CHECK(spin_for_pairs(4).two_j() == 69);   // j = 69/2
  CHECK(spin_for_pairs(2).dimension() == 6);
  CHECK_THROWS_AS(spin_for_pairs(0), std::invalid_argument);
}

TEST_CASE("spin-1/2 generators are the Pauli matrices over 2") {
  const Generators g = generators(SpinSystem(1));
  Matrix jp(2, 2), jz(2, 2);
  jp << 0, 1, 0, 0;
  jz << 0.5, 0, 0, -0.5;
  CHECK(max_abs(g.plus.entries() - jp) == 0.0);
  CHECK(max_abs(g.z.entries() - jz) == 0.0);
}

TEST_CASE("spin-5/2 raising operator carries the superdiagonal sqrt(5), sqrt(8), 3, sqrt(8), sqrt(5)") {
  const Generators g = generators(SpinSystem(5));
  const double expected[] = {std::sqrt(5.0), std::sqrt(8.0), 3.0, std::sqrt(8.0), std::sqrt(5.0)};
  for (int k = 0; k < 5; ++k) {
    CHECK(g.plus.entries()(k, k + 1).real() == doctest::Approx(expected[k]).epsilon(1e-15));
  }
  CHECK(g.z.entries()(0, 0).real() == doctest::Approx(2.5));
  CHECK(g.z.entries()(5, 5).real() == doctest::Approx(-2.5));
}

TEST_CASE("spin-1 J_z is diag(1, 0, -1)") {
  const Generators g = generators(SpinSystem(2));
  Matrix jz = Matrix::Zero(3, 3);
  jz(0, 0) = 1;
  jz(2, 2) = -1;
  CHECK(max_abs(g.z.entries() - jz) == 0.0);
}

TEST_CASE("algebra identities hold across spins and reference phases") {
  for (int two_j : {1, 2, 3, 5, 19}) {
    const SpinSystem spin(two_j);
    const Generators g = generators(spin);
    const int n = spin.dimension();
    const double j = spin.j();
    CHECK(max_abs(g.plus.entries() * g.minus.entries() - g.minus.entries() * g.plus.entries() -
                  2.0 * g.z.entries()) < 1e-12);
    CHECK(max_abs(casimir(g) - j * (j + 1) * Matrix::Identity(n, n)) < 1e-12);
    for (double psi : {0.0, 1.3, pi}) {
      const Matrix eps = phase_operator(spin, psi).entries();
      const Matrix jr = radial_operator(spin, psi).entries();
      CHECK(max_abs(eps * eps.adjoint() - Matrix::Identity(n, n)) < 1e-12);
      CHECK(max_abs(g.plus.entries() - jr * eps) < 1e-12);
      CHECK(max_abs(jr - jr.adjoint()) < 1e-12);
    }
  }
}

TEST_CASE("two-dimensional phase operator matches the pair-exchange form") {
  const double psi = 0.9;
  const Matrix eps = phase_operator(SpinSystem(1), psi).entries();
  Matrix expected(2, 2);
  expected << 0.0, 1.0, std::polar(1.0, psi), 0.0;
  CHECK(max_abs(eps - expected) == 0.0);
}

TEST_CASE("phase operator at psi = 0 is a cyclic shift") {
  for (int n : {2, 3, 6}) {
    const Matrix eps = phase_operator(SpinSystem::from_dimension(n), 0.0).entries();
    Matrix power = Matrix::Identity(n, n);
    for (int k = 0; k < n; ++k) power = eps * power;
    CHECK(max_abs(power - Matrix::Identity(n, n)) < 1e-15);
  }
}

TEST_CASE("radial operator agrees with an independent multiplication oracle") {
  for (int two_j : {1, 5}) {
    for (double psi : {0.0, 1.3}) {
      const SpinSystem spin(two_j);
      const Matrix oracle =
          generators(spin).plus.entries() * epsilon_literal(spin.dimension(), psi).adjoint();
      CHECK(max_abs(radial_operator(spin, psi).entries() - oracle) == 0.0);
    }
  }
  // Frozen diagonals from the 2x2 and 6x6 multiplications.
  const Matrix jr_half = radial_operator(SpinSystem(1), 0.7).entries();
  CHECK(jr_half(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(jr_half(1, 1)) == 0.0);
  const Matrix jr_52 = radial_operator(SpinSystem(5), 0.0).entries();
  const double diag[] = {std::sqrt(5.0), std::sqrt(8.0), 3.0, std::sqrt(8.0), std::sqrt(5.0), 0.0};
  for (int k = 0; k < 6; ++k) CHECK(jr_52(k, k).real() == doctest::Approx(diag[k]).epsilon(1e-15));
}

TEST_CASE("phase states at N = 2 reproduce the symmetric/antisymmetric pair") {
  const PhaseBasis pb = phase_states(SpinSystem(1), 0.0);
  const double inv = 1.0 / std::sqrt(2.0);
  // k = 0 is the +, k = 1 the - combination; eigenphases psi/2 and psi/2 + pi.
  CHECK(std::abs(pb.states[0].amplitude(0) - inv) < 1e-15);
  CHECK(std::abs(pb.states[0].amplitude(1) - inv) < 1e-15);
  CHECK(std::abs(pb.states[1].amplitude(0) - inv) < 1e-15);
  CHECK(std::abs(pb.states[1].amplitude(1) + inv) < 1e-15);
  CHECK(pb.eigenphases[0] == doctest::Approx(0.0));
  CHECK(pb.eigenphases[1] == doctest::Approx(pi));

  const PhaseBasis shifted = phase_states(SpinSystem(1), 1.0);
  CHECK(shifted.eigenphases[0] == doctest::Approx(0.5));
  CHECK(shifted.eigenphases[1] == doctest::Approx(0.5 + pi));
}

TEST_CASE("phase states at N = 3 carry the cube-root phases") {
  const PhaseBasis pb = phase_states(SpinSystem(2), 0.0);
  const double inv = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) {
    for (int kp = 0; kp < 3; ++kp) {
      const Complex expected = std::polar(inv, 2.0 * pi * k * kp / 3.0);
      CHECK(std::abs(pb.states[static_cast<std::size_t>(k)].amplitude(kp) - expected) < 1e-15);
    }
  }
}

TEST_CASE("six phase states have eigenphases psi/6 + k pi/3") {
  const double psi = 1.3;
  const PhaseBasis pb = phase_states(SpinSystem(5), psi);
  for (int k = 0; k < 6; ++k) {
    CHECK(pb.eigenphases[static_cast<std::size_t>(k)] ==
          doctest::Approx(psi / 6.0 + k * pi / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("phase states are eigenstates of the phase operator") {
  for (int n : {2, 3, 6, 20}) {
    for (double psi : {0.0, 1.3, pi}) {
      const SpinSystem spin = SpinSystem::from_dimension(n);
      const Matrix eps = phase_operator(spin, psi).entries();
      const PhaseBasis pb = phase_states(spin, psi);
      for (int k = 0; k < n; ++k) {
        const Vector& phi = pb.states[static_cast<std::size_t>(k)].amplitudes();
        const Complex lambda = std::polar(1.0, pb.eigenphases[static_cast<std::size_t>(k)]);
        CHECK((eps * phi - lambda * phi).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("dual basis resolves the identity and is mutually unbiased") {
  for (int n : {2, 6, 20}) {
    const PhaseBasis pb = phase_states(SpinSystem::from_dimension(n), 0.4);
    Matrix completeness = Matrix::Zero(n, n);
    for (const StateVector& s : pb.states) {
      completeness += s.amplitudes() * s.amplitudes().adjoint();
      for (int kp = 0; kp < n; ++kp) {
        CHECK(std::abs(std::abs(s.amplitude(kp)) - 1.0 / std::sqrt(double(n))) < 1e-12);
      }
    }
    CHECK(max_abs(completeness - Matrix::Identity(n, n)) < 1e-12);
  }
}

TEST_CASE("cosine operator: symmetric 2x2 form and the N = 6 spectrum") {
  const Matrix c2 = cosine_operator(SpinSystem(1), 0.0).entries();
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  CHECK(max_abs(c2 - sx) == 0.0);

  // Independent eigensolve oracle for N = 6: eigenvalues are cos(k pi / 3).
  const Matrix literal = epsilon_literal(6, 0.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (literal + literal.adjoint()));
  std::vector<double> oracle(es.eigenvalues().data(), es.eigenvalues().data() + 6);

  std::vector<double> expected;
  for (int k = 0; k < 6; ++k) expected.push_back(std::cos(k * pi / 3.0));
  std::sort(expected.begin(), expected.end());

  Eigen::SelfAdjointEigenSolver<Matrix> lib(cosine_operator(SpinSystem(5), 0.0).entries());
  for (int k = 0; k < 6; ++k) {
    CHECK(oracle[static_cast<std::size_t>(k)] ==
          doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
    CHECK(lib.eigenvalues()(k) ==
          doctest::Approx(expected[static_cast<std::size_t>(k)]).epsilon(1e-12));
  }

  // Phase states diagonalize C with eigenvalue cos(phi_k).
  const PhaseBasis pb = phase_states(SpinSystem(5), 0.9);
  const Matrix c6 = cosine_operator(SpinSystem(5), 0.9).entries();
  for (int k = 0; k < 6; ++k) {
    const Vector& phi = pb.states[static_cast<std::size_t>(k)].amplitudes();
    CHECK((c6 * phi - std::cos(pb.eigenphases[static_cast<std::size_t>(k)]) * phi).norm() < 1e-12);
  }
}

TEST_CASE("relabeling keeps amplitudes and validates the label count") {
  const PhaseBasis pb = phase_states(SpinSystem(1), 0.0);
  const Basis atoms({BasisLabel::atoms("eg"), BasisLabel::atoms("ge")});
  const PhaseBasis embedded = pb.relabeled(atoms);
  CHECK(embedded.states[0].basis().label(0) == BasisLabel::atoms("eg"));
  CHECK(embedded.states[0].amplitude(0) == pb.states[0].amplitude(0));
  const Basis wrong({BasisLabel::atoms("egg"), BasisLabel::atoms("geg"),
                     BasisLabel::atoms("gge")});
  CHECK_THROWS_AS(pb.relabeled(wrong), std::invalid_argument);
}
