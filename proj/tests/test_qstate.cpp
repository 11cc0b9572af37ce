#include "phasekit/qstate.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

using namespace phasekit;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector single_atom(Complex e_amp, Complex g_amp) {
  Basis b({BasisLabel(atom_excited()), BasisLabel(atom_ground())});
  Vector v(2);
  v << e_amp, g_amp;
  return StateVector::normalized(b, v);
}

StateVector fock(int n, int cutoff) {
  std::vector<BasisLabel> labels;
  for (int k = 0; k <= cutoff; ++k) labels.emplace_back(photon_count(k));
  return StateVector::basis_state(Basis(std::move(labels)), n);
}

}  // namespace

TEST_CASE("tensor product of basis kets concentrates on the composite label") {
  const StateVector eg = tensor_product(single_atom(1, 0), single_atom(0, 1));
  CHECK(eg.dimension() == 4);
  CHECK(eg.amplitude(BasisLabel::atoms("eg")) == Complex{1.0, 0.0});
  CHECK(eg.amplitude(BasisLabel::atoms("ge")) == Complex{0.0, 0.0});
  // Factor order: first argument outermost.
  CHECK(eg.basis().label(0) == BasisLabel::atoms("ee"));
}

TEST_CASE("tensor product with a photon factor keeps equal superpositions") {
  const StateVector s = tensor_product(single_atom(1, 1), fock(0, 1));
  CHECK(std::abs(s.amplitude(BasisLabel({atom_excited(), photon_count(0)})) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s.amplitude(BasisLabel({atom_ground(), photon_count(0)})) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s.norm() - 1.0) < 1e-15);
}

TEST_CASE("tensor product builds the two-atom one-photon initial ket") {
  const StateVector gg =
      tensor_product(single_atom(0, 1), single_atom(0, 1));
  const StateVector s = tensor_product(gg, fock(1, 1));
  CHECK(s.amplitude(BasisLabel::atoms_photon("gg", 1)) == Complex{1.0, 0.0});
}

TEST_CASE("tensor product rejects dimension overflow") {
  std::vector<BasisLabel> labels;
  for (int k = 0; k < 1 << 11; ++k) labels.emplace_back(photon_count(k));
  const StateVector big = StateVector::basis_state(Basis(labels), 0);
  CHECK_THROWS_AS(tensor_product(big, big), std::invalid_argument);  // 2^22 > cap
}

TEST_CASE("state vector constructor enforces normalization and distinct labels") {
  Basis b({BasisLabel(photon_count(0)), BasisLabel(photon_count(1))});
  Vector v(2);
  v << 0.5, 0.5;
  CHECK_THROWS_AS(StateVector(b, v), std::invalid_argument);
  CHECK(StateVector::normalized(b, v).norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(Basis({BasisLabel(photon_count(0)), BasisLabel(photon_count(0))}),
                  std::invalid_argument);
}

TEST_CASE("expectation of sigma3 on eigenstates, with basis-mismatch error") {
  Basis b({BasisLabel(atom_excited()), BasisLabel(atom_ground())});
  Matrix sz(2, 2);
  sz << 1, 0, 0, -1;
  const Operator op = Operator::hermitian_unitary(b, sz);
  CHECK(expectation(op, single_atom(1, 0)).real() == doctest::Approx(1.0));
  CHECK(expectation(op, single_atom(0, 1)).real() == doctest::Approx(-1.0));
  CHECK(std::abs(expectation(op, single_atom(kInvSqrt2, kInvSqrt2))) < 1e-15);
  CHECK_THROWS_AS(expectation(op, fock(0, 1)), std::invalid_argument);
}

TEST_CASE("hermitian expectation stays real on a generic state") {
  Basis b({BasisLabel(atom_excited()), BasisLabel(atom_ground())});
  Matrix m(2, 2);
  m << 0.3, Complex{0.1, -0.7}, Complex{0.1, 0.7}, -1.2;
  const Operator op = Operator::hermitian(b, m);
  const StateVector s = single_atom(Complex{0.6, 0.3}, Complex{-0.2, 0.71});
  CHECK(std::abs(expectation(op, s).imag()) < 1e-12);
}

TEST_CASE("operator flags are validated on construction") {
  Basis b({BasisLabel(photon_count(0)), BasisLabel(photon_count(1))});
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(Operator::hermitian(b, m), std::invalid_argument);
  CHECK_THROWS_AS(Operator::unitary(b, m), std::invalid_argument);
  CHECK_NOTHROW(Operator(b, m));
}

TEST_CASE("partial trace of a product ket is pure") {
  const StateVector eg = tensor_product(single_atom(1, 0), single_atom(0, 1));
  const std::size_t keep[] = {0};
  const DensityMatrix rho = partial_trace(eg, keep);
  CHECK(rho.dimension() == 2);
  // |e⟩⟨e| exactly
  CHECK(rho.entries()(0, 0) == Complex{1.0, 0.0});
  CHECK(max_abs(rho.entries() - (Matrix(2, 2) << 1, 0, 0, 0).finished()) == 0.0);
  CHECK(von_neumann_entropy(rho) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("partial trace of the symmetric Bell pair is maximally mixed") {
  // Hand-computed 2x2 reduction: diag(1/2, 1/2).
  Basis b({BasisLabel::atoms("eg"), BasisLabel::atoms("ge")});
  Vector v(2);
  v << kInvSqrt2, kInvSqrt2;
  const StateVector bell(b, v);
  const std::size_t keep[] = {0};
  const DensityMatrix rho = partial_trace(bell, keep);
  Matrix half = Matrix::Identity(2, 2) * 0.5;
  CHECK(max_abs(rho.entries() - half) < 1e-15);
  CHECK(von_neumann_entropy(rho) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
}

TEST_CASE("partial trace keeping everything reproduces the projector exactly") {
  Basis b({BasisLabel::atoms("eg"), BasisLabel::atoms("ge")});
  Vector v(2);
  v << Complex{0.6, 0.0}, Complex{0.0, 0.8};
  const StateVector s(b, v);
  const std::size_t keep[] = {0, 1};
  const DensityMatrix rho = partial_trace(s, keep);
  const Matrix projector = v * v.adjoint();
  CHECK(max_abs(rho.entries() - projector) == 0.0);
}

TEST_CASE("entropy is symmetric across any pure bipartition") {
  // Deterministic amplitudes over a 2x3 factor pair.
  std::vector<BasisLabel> labels;
  Vector v(6);
  int i = 0;
  for (int a = 0; a < 2; ++a) {
    for (int m = -1; m <= 1; ++m, ++i) {
      labels.push_back(BasisLabel({a == 0 ? atom_excited() : atom_ground(), level_tag(m)}));
      v(i) = Complex(0.3 + 0.1 * i, 0.2 - 0.15 * i);
    }
  }
  const StateVector s = StateVector::normalized(Basis(std::move(labels)), v);
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const double ha = von_neumann_entropy(partial_trace(s, keep_a));
  const double hb = von_neumann_entropy(partial_trace(s, keep_b));
  CHECK(std::abs(ha - hb) < 1e-10);
}

TEST_CASE("partial trace input validation") {
  Basis mixed({BasisLabel(atom_excited()), BasisLabel::atoms("eg")});
  Vector v(2);
  v << 1.0, 0.0;
  const StateVector bad(mixed, v);
  const std::size_t keep[] = {0};
  CHECK_THROWS_AS(partial_trace(bad, keep), std::invalid_argument);

  Basis b({BasisLabel::atoms("eg"), BasisLabel::atoms("ge")});
  Vector w(2);
  w << 1.0, 0.0;
  const StateVector s(b, w);
  const std::size_t out_of_range[] = {3};
  CHECK_THROWS_AS(partial_trace(s, out_of_range), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, std::span<const std::size_t>{}), std::invalid_argument);
}

TEST_CASE("density matrix invariants are enforced") {
  Basis b({BasisLabel(photon_count(0)), BasisLabel(photon_count(1))});
  Matrix not_unit_trace = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(b, not_unit_trace), std::invalid_argument);
  Matrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix(b, negative), std::invalid_argument);
  Matrix ok = Matrix::Identity(2, 2) * 0.5;
  CHECK_NOTHROW(DensityMatrix(b, ok));
}

TEST_CASE("maximally mixed qubit has entropy ln 2") {
  Basis b({BasisLabel(atom_excited()), BasisLabel(atom_ground())});
  const DensityMatrix rho(b, Matrix::Identity(2, 2) * 0.5);
  CHECK(von_neumann_entropy(rho) == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
}

TEST_CASE("binomial coefficients are exact") {
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("label display strings") {
  CHECK(BasisLabel::atoms("eegg").str() == "eegg");
  CHECK(BasisLabel::atoms_photon("eg", 2).str() == "eg|2ph");
  CHECK(BasisLabel(spin_index(3)).str() == "k3");
  CHECK(BasisLabel({level_tag(1), level_tag(-1)}).str() == "m+1|m-1");
}
