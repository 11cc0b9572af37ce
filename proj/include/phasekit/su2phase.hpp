// SU(2) algebra of arbitrary spin, its polar decomposition into a radial
// part and an exponential phase operator, and the dual phase-state basis.
//
// Conventions (fixed throughout phasekit):
//   * the spin basis |ψ_k'⟩, k' = 0..N−1, is ordered by descending J_z
//     eigenvalue m = j − k';
//   * the phase operator ε has ones on the superdiagonal and e^{iψ} in the
//     bottom-left corner, so ε|ψ_k'⟩ = |ψ_{k'−1}⟩ and ε|ψ_0⟩ = e^{iψ}|ψ_{N−1}⟩;
//   * the radial part is extracted as J_r = J₊ ε†, making J₊ = J_r ε exact
//     by construction and hermiticity of J_r a checkable property;
//   * phase states |φ_k⟩ = N^{−1/2} Σ_k' exp(i k' φ_k)|ψ_k'⟩ with eigenphases
//     φ_k = (ψ + 2kπ)/N; for N = 2, ψ = 0 this gives k=0 ↦ |φ₊⟩, k=1 ↦ |φ₋⟩.

#pragma once

#include "phasekit/qstate.hpp"

namespace phasekit::su2phase {

// A spin-j system, j stored as the exact integer 2j (no floating-point
// spin bookkeeping). Dimension N = 2j + 1.
class SpinSystem {
 public:
  explicit SpinSystem(int two_j);
  static SpinSystem from_dimension(int n);

  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  int dimension() const { return two_j_ + 1; }
  /// J_z eigenvalue at basis position k'.
  double m_at(int k) const { return 0.5 * two_j_ - k; }
  /// Spin-index labels k' = 0..N−1 (descending m).
  Basis basis() const;

 private:
  int two_j_;
};

/// Effective spin of the 2n-atom/n-photon system: j = (C(2n,n) − 1)/2.
/// Exact integer arithmetic; n ≥ 1. The dimension C(2n,n) is always even.
SpinSystem spin_for_pairs(int n_pairs);

struct Generators {
  Operator plus;   // J₊, superdiagonal √(j(j+1) − m(m+1))
  Operator minus;  // J₋ = J₊†
  Operator z;      // J_z = diag(j, j−1, …, −j)
};

Generators generators(const SpinSystem& spin);

/// Casimir J² = J_z² + (J₊J₋ + J₋J₊)/2, for algebra checks.
Matrix casimir(const Generators& g);

/// Exponential phase operator ε with reference phase ψ (unitary).
Operator phase_operator(const SpinSystem& spin, double psi);

/// Radial part J_r = J₊ ε† of the polar decomposition (hermitian; throws
/// if the hermiticity check fails, which would indicate a bug).
Operator radial_operator(const SpinSystem& spin, double psi);

/// Hermitian cosine operator C = (ε + ε†)/2; phase states are eigenstates
/// with eigenvalues cos φ_k.
Operator cosine_operator(const SpinSystem& spin, double psi);

// The N dual phase states with their eigenphases. States are pairwise
// orthonormal eigenstates of ε; every overlap with the original basis has
// modulus N^{−1/2}.
struct PhaseBasis {
  SpinSystem spin;
  double psi;
  std::vector<double> eigenphases;   // φ_k = (ψ + 2kπ)/N
  std::vector<StateVector> states;   // |φ_k⟩, k = 0..N−1

  /// Same phase basis expressed over different labels (e.g. atomic
  /// configurations); the label count must equal N.
  PhaseBasis relabeled(const Basis& basis) const;
};

PhaseBasis phase_states(const SpinSystem& spin, double psi);

}  // namespace phasekit::su2phase
