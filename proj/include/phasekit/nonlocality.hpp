// Violation-of-classical-realism machinery for the 4-atom pair states:
// Pauli-word eigenvalue identities, exhaustive refutation of ±1 classical
// value assignments, pairwise two-atom observables and CHSH scans.

#pragma once

#include "phasekit/qstate.hpp"

#include <array>
#include <cstdint>

namespace phasekit::nonlocality {

inline constexpr double kEigencheckTol = 1e-10;

enum class PauliLetter : std::uint8_t { Id = 0, S1 = 1, S2 = 2, S3 = 3 };

// A product of single-atom Paulis, one letter per atom.
struct PauliWord {
  std::vector<PauliLetter> letters;

  /// Parse digits, e.g. "1122"; '0' or 'i' is the identity letter.
  static PauliWord parse(std::string_view digits);
  std::string str() const;
  int atom_count() const { return static_cast<int>(letters.size()); }
};

/// Dense operator of the word over full_atomic_basis(letter count).
Operator word_operator(const PauliWord& word);

struct EigencheckResult {
  std::optional<int> eigenvalue;  // ±1 when ‖W|s⟩ ∓ |s⟩‖ < tol
  double residual;                // min over the two signs of that norm
};

/// Check whether a state (over atomic labels, possibly a sector subset of
/// the full product basis) is a ±1 eigenstate of the word.
EigencheckResult word_eigencheck(const StateVector& state, const PauliWord& word,
                                 double tol = kEigencheckTol);

// A parity requirement Π_ℓ m_{letter(ℓ)}^{(ℓ)} = required_sign on the
// classical values m₁^(ℓ), m₂^(ℓ) ∈ {±1}. Letters are restricted to σ₁/σ₂.
struct ClassicalConstraint {
  PauliWord word;
  int required_sign;  // ±1

  std::string str() const;
};

// Exhaustive-search outcome. Variables are ordered m₁^(1), m₂^(1), m₁^(2), …
// and assignments are enumerated lexicographically with +1 before −1, so the
// first satisfying assignment is deterministic.
struct SearchResult {
  bool satisfiable = false;
  std::vector<int> assignment;       // ±1 per variable when satisfiable
  std::uint64_t assignments_checked = 0;
};

/// Enumerate all 2^(2·atoms) classical assignments (guarded to 16 variables).
SearchResult classical_search(const std::vector<ClassicalConstraint>& constraints);

/// Evaluate one assignment against one constraint.
bool constraint_satisfied(const ClassicalConstraint& c, const std::vector<int>& assignment);

/// Scan every word with letters in {σ₁, σ₂} on the state and record each
/// ±1 eigenvalue as a classical constraint. (The uniform σ₃ word is also an
/// eigen-identity on the pair states but has no classical variable here.)
std::vector<ClassicalConstraint> derive_constraints(const StateVector& state,
                                                    double tol = kEigencheckTol);

enum class Side { AtomsOneTwo, AtomsThreeFour };

/// Pairwise observable of the 4-atom system:
/// cos θ(|ee⟩⟨ee| − |gg⟩⟨gg|) + sin θ(|ee⟩⟨gg| + |gg⟩⟨ee|) on the chosen
/// pair, identity on the other. Hermitian; squares to the projector onto
/// span{|ee⟩, |gg⟩} of the pair.
Operator pair_observable(double theta, Side side);

struct ChshSettings {
  double theta_a;
  double theta_a_prime;
  double theta_b;
  double theta_b_prime;
};

// All four CHSH sign placements with exactly one minus, in the order
// −⟨ab⟩, −⟨ab′⟩, −⟨a′b⟩, −⟨a′b′⟩. The third placement is the one that
// reproduces the |cos θ_b − sin θ_b| bound for the pair states.
struct ChshResult {
  std::array<double, 4> correlators;     // ⟨ab⟩, ⟨ab′⟩, ⟨a′b⟩, ⟨a′b′⟩
  std::array<double, 4> variant_values;  // |…| per sign placement
  double s_max;                          // max over the four placements
  int best_variant;                      // index of the maximum
};

extern const std::array<const char*, 4> kChshVariantNames;

/// Evaluate the four correlators and CHSH combinations on a 4-atom state.
ChshResult chsh_scan(const StateVector& state, const ChshSettings& settings);

}  // namespace phasekit::nonlocality
