#include "phasekit/su2phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace phasekit::su2phase {

SpinSystem::SpinSystem(int two_j) : two_j_(two_j) {
  if (two_j < 1) throw std::invalid_argument("spin requires 2j ≥ 1");
}

SpinSystem SpinSystem::from_dimension(int n) {
  if (n < 2) throw std::invalid_argument("spin dimension must be ≥ 2");
  return SpinSystem(n - 1);
}

Basis SpinSystem::basis() const {
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<std::size_t>(dimension()));
  for (int k = 0; k < dimension(); ++k) labels.emplace_back(spin_index(k));
  return Basis(std::move(labels));
}

SpinSystem spin_for_pairs(int n_pairs) {
  if (n_pairs < 1) throw std::invalid_argument("spin_for_pairs requires n ≥ 1");
  const std::int64_t n = binomial(2 * n_pairs, n_pairs);
  if (n - 1 > std::numeric_limits<int>::max()) throw std::overflow_error("spin too large");
  return SpinSystem(static_cast<int>(n - 1));
}

Generators generators(const SpinSystem& spin) {
  const int n = spin.dimension();
  const double j = spin.j();
  Matrix plus = Matrix::Zero(n, n);
  Matrix z = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    z(k, k) = spin.m_at(k);
    if (k + 1 < n) {
      const double m = spin.m_at(k + 1);  // J₊ raises |m⟩ to |m+1⟩
      plus(k, k + 1) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
  }
  Basis b = spin.basis();
  return {Operator(b, plus), Operator(b, plus.adjoint()), Operator::hermitian(b, z)};
}

Matrix casimir(const Generators& g) {
  const Matrix& jp = g.plus.entries();
  const Matrix& jm = g.minus.entries();
  const Matrix& jz = g.z.entries();
  return jz * jz + 0.5 * (jp * jm + jm * jp);
}

Operator phase_operator(const SpinSystem& spin, double psi) {
  const int n = spin.dimension();
  Matrix eps = Matrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) eps(k, k + 1) = 1.0;
  eps(n - 1, 0) = std::polar(1.0, psi);
  return Operator::unitary(spin.basis(), std::move(eps));
}

Operator radial_operator(const SpinSystem& spin, double psi) {
  const Generators g = generators(spin);
  const Operator eps = phase_operator(spin, psi);
  Matrix jr = g.plus.entries() * eps.entries().adjoint();
  if (max_abs(jr - jr.adjoint()) >= kAlgebraTol) {
    throw std::logic_error("radial operator J₊ε† failed the hermiticity check");
  }
  return Operator::hermitian(spin.basis(), std::move(jr));
}

Operator cosine_operator(const SpinSystem& spin, double psi) {
  const Matrix eps = phase_operator(spin, psi).entries();
  return Operator::hermitian(spin.basis(), 0.5 * (eps + eps.adjoint()));
}

PhaseBasis PhaseBasis::relabeled(const Basis& basis) const {
  if (basis.dimension() != spin.dimension()) {
    throw std::invalid_argument("relabeled phase basis needs exactly N labels");
  }
  PhaseBasis out{spin, psi, eigenphases, {}};
  out.states.reserve(states.size());
  for (const StateVector& s : states) out.states.emplace_back(basis, s.amplitudes());
  return out;
}

PhaseBasis phase_states(const SpinSystem& spin, double psi) {
  const int n = spin.dimension();
  const Basis basis = spin.basis();
  PhaseBasis out{spin, psi, {}, {}};
  out.eigenphases.reserve(static_cast<std::size_t>(n));
  out.states.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = (psi + 2.0 * k * std::numbers::pi) / n;
    out.eigenphases.push_back(phi);
    Vector amps(n);
    for (int kp = 0; kp < n; ++kp) amps(kp) = std::polar(1.0 / std::sqrt(double(n)), kp * phi);
    out.states.emplace_back(basis, std::move(amps));
  }
  // Orthonormality of the dual basis, at the algebraic tolerance.
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const Complex ov = out.states[a].amplitudes().dot(out.states[b].amplitudes());
      const double expect = a == b ? 1.0 : 0.0;
      if (std::abs(ov - expect) >= kAlgebraTol) {
        throw std::logic_error("phase states failed the orthonormality check");
      }
    }
  }
  return out;
}

}  // namespace phasekit::su2phase
