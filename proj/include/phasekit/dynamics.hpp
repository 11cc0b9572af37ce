// Cavity-QED dynamics of 2n two-level atoms exchanging excitations with a
// single mode: Hamiltonian construction on atoms ⊗ Fock(cutoff), exact
// evolution by eigendecomposition, the closed-form amplitudes of the
// two-atom/one-photon system (with optional Kerr term), and trace/scan
// drivers that record phase-state overlap probabilities.

#pragma once

#include "phasekit/su2phase.hpp"

#include <Eigen/Eigenvalues>

namespace phasekit::dynamics {

enum class InitialKind {
  ExcitedAtoms,  // first n atoms excited, field in vacuum
  Photons,       // all atoms ground, n photons in the cavity
  Mixed,         // one excited atom plus n−1 photons
  PhaseMinus,    // |φ₋⟩ ⊗ |0⟩ (n = 1 only); stationary up to a phase
  Explicit,
};

struct InitialCondition {
  InitialKind kind = InitialKind::Photons;
  std::optional<StateVector> state;  // for Explicit: atoms ⊗ photon labels

  /// Tags: "excited-atom", "photon", "mixed", "phase-minus".
  static InitialCondition from_tag(std::string_view tag);
  static InitialCondition explicit_state(StateVector s);
};

// Physical parameters and run description.
//   H = Δ a†a + ω₀𝒩 + γ Σ_ℓ (R⁺_ℓ a + a†R_ℓ) + κ(a†a)²
// with 𝒩 = a†a + Σ_ℓ |e_ℓ⟩⟨e_ℓ| conserved.
struct SimConfig {
  double delta = 0.0;   // cavity detuning Δ
  double omega0 = 0.0;  // atomic transition frequency ω₀
  double gamma = 1.0;   // atom-field coupling γ (equal for all atoms)
  double kappa = 0.0;   // Kerr coefficient κ (0 = no Kerr medium)
  int n_pairs = 1;      // 2n atoms + n photons
  std::optional<int> fock_cutoff;  // default: total excitation of the initial state
  InitialCondition initial;
  std::vector<double> times;  // strictly increasing, starting ≥ 0
  bool restrict_to_sector = false;

  int atom_count() const { return 2 * n_pairs; }
  /// Uniform grid helper: count points over [0, t_max].
  static std::vector<double> uniform_times(double t_max, int count);
};

/// Atoms ⊗ Fock(0..cutoff) product basis (atoms lexicographic, photon last).
Basis composite_basis(int atom_count, int fock_cutoff);

/// Largest total excitation (photons + excited atoms) carried by a label
/// with nonzero amplitude.
int max_total_excitation(const StateVector& s);

/// Fock cutoff actually used by a run.
int resolved_cutoff(const SimConfig& cfg);

/// The configured initial state on the full composite basis.
StateVector initial_state(const SimConfig& cfg);

/// Full-space Hamiltonian. Hermitian; commutes with 𝒩 at 1e-12. Throws if
/// the Fock cutoff would truncate the sector reachable from the initial
/// state (excitation leakage).
Operator build_hamiltonian(const SimConfig& cfg);

/// Hamiltonian restricted to the total-excitation sector of the initial
/// state (which must be an 𝒩 eigenstate). Basis order is the full-space
/// order filtered to the sector.
Operator build_sector_hamiltonian(const SimConfig& cfg);

/// Excitation-number operator 𝒩 on the same basis as `h`.
Operator excitation_operator(const Basis& basis);

// One eigendecomposition, shared across evaluation times.
class Evolver {
 public:
  explicit Evolver(const Operator& h);

  /// e^{−iHt}|s0⟩; norm and ⟨𝒩⟩ are preserved.
  StateVector at(const StateVector& s0, double t) const;

 private:
  Basis basis_;
  Eigen::SelfAdjointEigenSolver<Matrix> es_;
};

/// Convenience wrapper around Evolver for a single time.
StateVector evolve(const Operator& h, const StateVector& s0, double t);

/// Kerr-renormalized Rabi frequency Ω_κ = √(2γ² + (Δ+κ)²/4).
double rabi_frequency(double gamma, double delta, double kappa = 0.0);

// Closed-form amplitudes of the two-atom/one-photon wave function
// |Ψ(t)⟩ = C₋|φ₋,0⟩ + C₊|φ₊,0⟩ + C|g₁g₂,1⟩ (reference phase ψ = 0).
struct AnalyticAmplitudes {
  Complex c_minus;
  Complex c_plus;
  Complex c_photon;
};

/// Requires n_pairs = 1 and a tagged (non-explicit) initial condition.
AnalyticAmplitudes analytic_two_plus_one(const SimConfig& cfg, double t);

struct TraceRecord {
  double t = 0.0;
  StateVector state;
  std::vector<double> phase_probs;  // |⟨φ_k, 0|Ψ⟩|², k = 0..N−1 (ψ = 0)
  double p_plus = 0.0;              // = phase_probs[0]
  double p_minus = 0.0;             // = phase_probs[1]
  double p_photon = 0.0;            // probability of ≥ 1 photon
  double norm = 0.0;
  double excitation = 0.0;          // ⟨𝒩⟩
  std::optional<AnalyticAmplitudes> analytic;
  double analytic_deviation = 0.0;  // max |numeric − analytic| amplitude gap
};

struct Trace {
  SimConfig config;
  std::vector<TraceRecord> records;
  /// Sup over times of the per-record deviation; NaN when no closed form.
  double max_analytic_deviation = 0.0;
};

Trace run_trace(const SimConfig& cfg);

// Per-time projection onto the maximally-excited-atoms ⊗ vacuum subspace
// and onto the individual phase states.
struct OverlapScan {
  std::vector<double> times;
  std::vector<double> subspace_prob;
  std::vector<std::vector<double>> phase_probs;  // [time][k]
  double max_subspace = 0.0;
  double argmax_time = 0.0;
  std::vector<double> max_phase;  // per k
};

OverlapScan phase_overlap_scan(const SimConfig& cfg);

}  // namespace phasekit::dynamics
