// Atomic configuration bases for 2n-atom/n-photon systems, local Pauli
// operators, the all-local-expectations-vanish entanglement witness, the
// embedding of spin phase states into atomic labels, and a catalogue of
// named states (Bell pairs, GHZ triples, the χ pair states of the 4+2
// system, and a few maximally / non-maximally entangled reference sets).

#pragma once

#include "phasekit/su2phase.hpp"

#include <array>

namespace phasekit::atomlattice {

// Excitation pattern of 2n two-level atoms (atom 1 first), optionally
// together with a photon occupation.
struct AtomConfiguration {
  std::vector<bool> excited;
  std::optional<int> photon;

  /// Parse "eegg" or "eegg|2" (atoms, optional photon count).
  static AtomConfiguration parse(std::string_view text);

  int excitation_count() const;
  BasisLabel label() const;
  std::string str() const;
};

/// All C(2n, n) half-excited configurations of 2n atoms, lexicographic with
/// e before g. Position k' carries J_z eigenvalue j − k'. Guarded to 2n ≤ 12.
std::vector<AtomConfiguration> half_excited_basis(int n_pairs);

/// The same configurations as a labeled Basis.
Basis half_excited_atom_basis(int n_pairs);

/// Full 2^count product basis of `count` atoms, lexicographic, atom 1
/// outermost, e before g.
Basis full_atomic_basis(int count);

/// σ_i on atom ℓ (1-based), identity elsewhere, over full_atomic_basis(count).
/// i ∈ {1, 2, 3}; hermitian and unitary, squares to the identity.
Operator local_pauli(int atom, int component, int atom_count);

/// Embed a state whose labels are atoms-only (possibly a sector subset)
/// into the full 2^count product basis. Amplitudes are copied verbatim.
StateVector promote_to_full_atomic(const StateVector& state);

// Result of scanning every single-atom Pauli expectation on a state.
// expectations[ℓ−1][i−1] = ⟨σ_i^(ℓ)⟩ (these are real for any state).
struct WitnessReport {
  int atom_count = 0;
  std::vector<std::array<double, 3>> expectations;
  double max_abs_expectation = 0.0;
  double tolerance = 0.0;
  bool passes = false;                // max |⟨σ⟩| < tolerance
  std::vector<double> entropies;      // per-subsystem reduced entropy, nats
  double min_entropy = 0.0;
};

inline constexpr double kWitnessTol = 1e-10;

/// Evaluate the local-measurement witness on a state over atomic factors.
/// A photon factor is allowed if it is in one fixed Fock state across the
/// basis; it is stripped before scanning. For states over generic d-level
/// factors (e.g. the biphoton qutrit) there is no Pauli set here, so the
/// criterion falls back to every reduced entropy reaching ln d within the
/// tolerance; the expectation table is then empty.
WitnessReport witness_scan(const StateVector& state, double tolerance = kWitnessTol);

/// States printed in the source material, by tag:
///   bell+ bell-                      (|e₁g₂⟩ ± |g₁e₂⟩)/√2
///   ghz3+ ghz3-                      (|eee⟩ ± |ggg⟩)/√2
///   chiPK, P ∈ 1..3, K ∈ 0..5        pair states of the 4+2 system, ψ = 0
///   four-maximal-1..4                orthonormal maximally entangled 2-atom set
///   two-atom-two-photon-phase-0..3   the 4-state phase basis that fails to be
///                                    maximally entangled as a set
///   biphoton-qutrit-0..2             dual basis over two 3-level factors
StateVector named_state(std::string_view tag);

const std::vector<std::string>& named_state_tags();

/// Phase states of spin_for_pairs(n) carried over to half-excited atomic
/// labels. Every member passes the witness with per-atom entropy ln 2.
su2phase::PhaseBasis embed_phase_states(int n_pairs, double psi);

}  // namespace phasekit::atomlattice
