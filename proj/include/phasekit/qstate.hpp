// Labeled finite-dimensional quantum states and operators.
//
// Everything in phasekit is built on dense complex vectors/matrices whose
// rows and columns carry explicit basis labels. A label is a sequence of
// tensor factors (two-level atoms, a photon mode, abstract spin indices,
// generic d-level systems), which lets states live on a subspace of a
// product space (e.g. the half-excited atomic sector) while partial traces
// and local expectations still know the factor structure.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phasekit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerance policy: exact algebraic identities are checked at 1e-12,
// anything that passes through an eigensolver at 1e-9.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kSpectralTol = 1e-9;

// Hard cap on the dimension of any constructed product space.
inline constexpr std::int64_t kDimensionCap = std::int64_t{1} << 20;

enum class FactorKind : std::uint8_t { Atom, Photon, Spin, Level };

// One tensor factor of a basis label.
//   Atom:   value 0 = excited (e), 1 = ground (g)
//   Photon: value = Fock occupation number
//   Spin:   value = spin-basis index k' (0-based, descending J_z)
//   Level:  value = level tag of a generic d-level factor (may be negative)
struct FactorLabel {
  FactorKind kind;
  int value;

  friend auto operator<=>(const FactorLabel&, const FactorLabel&) = default;
};

inline FactorLabel atom_excited() { return {FactorKind::Atom, 0}; }
inline FactorLabel atom_ground() { return {FactorKind::Atom, 1}; }
inline FactorLabel photon_count(int n) { return {FactorKind::Photon, n}; }
inline FactorLabel spin_index(int k) { return {FactorKind::Spin, k}; }
inline FactorLabel level_tag(int m) { return {FactorKind::Level, m}; }

// A basis label: an ordered sequence of factor labels. Factor order is
// structural; two labels are equal iff they have the same factors in the
// same positions. Composite labels list atoms first (atom 1 outermost)
// and the photon factor last.
class BasisLabel {
 public:
  BasisLabel() = default;
  explicit BasisLabel(FactorLabel single) : factors_{single} {}
  explicit BasisLabel(std::vector<FactorLabel> factors)
      : factors_(std::move(factors)) {}

  /// Atoms-only label from a pattern like "eegg" (atom 1 first).
  static BasisLabel atoms(std::string_view pattern);
  /// Atoms plus a trailing photon factor.
  static BasisLabel atoms_photon(std::string_view pattern, int n);

  std::size_t factor_count() const { return factors_.size(); }
  const FactorLabel& factor(std::size_t i) const { return factors_[i]; }
  const std::vector<FactorLabel>& factors() const { return factors_; }
  bool composite() const { return factors_.size() > 1; }

  /// Label made of the factors at the given (increasing) positions.
  BasisLabel subset(std::span<const std::size_t> positions) const;
  /// Concatenation, preserving factor order (this first).
  BasisLabel concatenated(const BasisLabel& rhs) const;

  /// Compact display form, e.g. "eegg", "2ph", "eg|1ph", "k3", "m+1".
  std::string str() const;

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;

 private:
  std::vector<FactorLabel> factors_;
};

// Ordered collection of pairwise-distinct basis labels with index lookup.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<BasisLabel> labels);

  int dimension() const { return static_cast<int>(labels_.size()); }
  const BasisLabel& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  std::optional<int> index_of(const BasisLabel& l) const;

  /// True when every label has the same factor count and per-position kinds.
  bool uniform_factor_structure() const;
  std::size_t factor_count() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  std::vector<BasisLabel> labels_;
  std::map<BasisLabel, int> index_;
};

// Pure state: unit-norm complex amplitudes over a labeled basis.
class StateVector {
 public:
  /// Validates ‖amps‖ = 1 within 1e-12.
  StateVector(Basis basis, Vector amps);

  /// Basis ket |index⟩.
  static StateVector basis_state(Basis basis, int index);
  /// Rescales an unnormalized amplitude vector (rejects the zero vector).
  static StateVector normalized(Basis basis, Vector amps);

  const Basis& basis() const { return basis_; }
  int dimension() const { return basis_.dimension(); }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(int i) const { return amps_(i); }
  /// Amplitude on a label; 0 if the label is not in the basis.
  Complex amplitude(const BasisLabel& l) const;

  double norm() const { return amps_.norm(); }
  /// |⟨this|other⟩| (bases must match).
  double fidelity(const StateVector& other) const;

 private:
  Basis basis_;
  Vector amps_;
};

struct OperatorFlags {
  bool hermitian = false;
  bool unitary = false;
};

// Dense operator over a labeled basis. Flags are verified on construction:
// hermitian ⇒ ‖M − M†‖_max < 1e-12, unitary ⇒ ‖MM† − 1‖_max < 1e-12.
class Operator {
 public:
  Operator(Basis basis, Matrix entries, OperatorFlags flags = {});

  static Operator hermitian(Basis basis, Matrix entries);
  static Operator unitary(Basis basis, Matrix entries);
  static Operator hermitian_unitary(Basis basis, Matrix entries);
  static Operator identity(Basis basis);

  const Basis& basis() const { return basis_; }
  int dimension() const { return basis_.dimension(); }
  const Matrix& entries() const { return mat_; }
  bool is_hermitian_flagged() const { return flags_.hermitian; }
  bool is_unitary_flagged() const { return flags_.unitary; }

  Operator adjoint() const;

 private:
  Basis basis_;
  Matrix mat_;
  OperatorFlags flags_;
};

// Density matrix: hermitian, unit trace (1e-12), eigenvalues ≥ −1e-12.
class DensityMatrix {
 public:
  DensityMatrix(Basis basis, Matrix rho);

  const Basis& basis() const { return basis_; }
  int dimension() const { return basis_.dimension(); }
  const Matrix& entries() const { return rho_; }

 private:
  Basis basis_;
  Matrix rho_;
};

/// Kronecker product of amplitudes; composite basis is the lexicographic
/// product with `a` outermost, factor order preserved. Rejects results
/// larger than the dimension cap.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// ⟨s|op|s⟩. Bases must be identical label sequences.
Complex expectation(const Operator& op, const StateVector& s);

/// Reduced density matrix over the kept factor positions. Requires a
/// uniform factor structure across the basis; `keep` must be nonempty,
/// sorted and in range. Kept labels appear in first-occurrence order.
DensityMatrix partial_trace(const StateVector& s, std::span<const std::size_t> keep);

/// −Σ λ ln λ in nats (0·ln 0 := 0). Throws if an eigenvalue < −1e-9.
double von_neumann_entropy(const DensityMatrix& rho);

/// max |entry| of a matrix, the norm used by the 1e-12 identity checks.
double max_abs(const Matrix& m);

/// Exact binomial coefficient in 64-bit arithmetic (throws on overflow).
std::int64_t binomial(int n, int k);

}  // namespace phasekit
