#include "phasekit/atomlattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasekit::atomlattice {

namespace {

using std::numbers::pi;

constexpr int kMaxAtoms = 12;

// Atom ℓ (1-based) sits at bit (count − ℓ), so ascending integers are the
// lexicographic order with atom 1 outermost and e (bit 0) before g (bit 1).
bool bit_ground(unsigned v, int atom, int count) {
  return (v >> (count - atom)) & 1u;
}

std::vector<bool> excited_pattern(unsigned v, int count) {
  std::vector<bool> e(static_cast<std::size_t>(count));
  for (int a = 1; a <= count; ++a) e[static_cast<std::size_t>(a - 1)] = !bit_ground(v, a, count);
  return e;
}

StateVector state_over(std::vector<std::string_view> kets, std::vector<Complex> amps) {
  std::vector<BasisLabel> labels;
  labels.reserve(kets.size());
  for (auto k : kets) labels.push_back(BasisLabel::atoms(k));
  Vector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return StateVector::normalized(Basis(std::move(labels)), std::move(v));
}

// χ_{pk} pair states of the 4+2 system at reference phase ψ = 0.
StateVector chi_state(int p, int k) {
  if (p < 1 || p > 3 || k < 0 || k > 5) {
    throw std::invalid_argument("chi state needs p ∈ 1..3, k ∈ 0..5");
  }
  const double phi = k * pi / 3.0;
  switch (p) {
    case 1:
      return state_over({"eegg", "ggee"}, {1.0, std::polar(1.0, 5 * phi)});
    case 2:
      return state_over({"geeg", "egge"}, {1.0, std::polar(1.0, 3 * phi)});
    default:
      return state_over({"gege", "egeg"}, {1.0, std::polar(1.0, phi)});
  }
}

StateVector two_atom_two_photon_phase(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("phase index must be 0..3");
  const double phi = k * pi / 2.0;
  // Cyclic ordering of the 4-state atomic basis: ee, eg, gg, ge.
  return state_over({"ee", "eg", "gg", "ge"},
                    {1.0, std::polar(1.0, phi), std::polar(1.0, 2 * phi),
                     std::polar(1.0, 3 * phi)});
}

StateVector biphoton_qutrit(int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("qutrit phase index must be 0..2");
  const double phi = 2.0 * k * pi / 3.0;
  std::vector<BasisLabel> labels = {
      BasisLabel({level_tag(+1), level_tag(-1)}),
      BasisLabel({level_tag(0), level_tag(0)}),
      BasisLabel({level_tag(-1), level_tag(+1)}),
  };
  Vector v(3);
  v << 1.0, std::polar(1.0, phi), std::polar(1.0, 2 * phi);
  return StateVector::normalized(Basis(std::move(labels)), std::move(v));
}

StateVector four_maximal(int i) {
  const Complex im{0.0, 1.0};
  // Printed ordering: ee, gg, eg, ge.
  switch (i) {
    case 1:
      return state_over({"ee", "gg", "eg", "ge"}, {1.0, 1.0, im, im});
    case 2:
      return state_over({"ee", "gg", "eg", "ge"}, {1.0, -1.0, -im, im});
    case 3:
      return state_over({"ee", "gg", "eg", "ge"}, {im, im, 1.0, 1.0});
    case 4:
      return state_over({"ee", "gg", "eg", "ge"}, {-im, im, 1.0, -1.0});
    default:
      throw std::invalid_argument("four-maximal index must be 1..4");
  }
}

// Accepts "chi10" and "chi(1,0)".
bool parse_chi_tag(std::string_view tag, int& p, int& k) {
  if (!tag.starts_with("chi")) return false;
  std::string_view rest = tag.substr(3);
  if (rest.size() == 2 && std::isdigit(rest[0]) && std::isdigit(rest[1])) {
    p = rest[0] - '0';
    k = rest[1] - '0';
    return true;
  }
  if (rest.size() == 5 && rest[0] == '(' && rest[2] == ',' && rest[4] == ')' &&
      std::isdigit(rest[1]) && std::isdigit(rest[3])) {
    p = rest[1] - '0';
    k = rest[3] - '0';
    return true;
  }
  return false;
}

bool parse_indexed_tag(std::string_view tag, std::string_view prefix, int& idx) {
  if (!tag.starts_with(prefix)) return false;
  std::string_view rest = tag.substr(prefix.size());
  if (rest.empty() || rest.size() > 2) return false;
  int v = 0;
  for (char c : rest) {
    if (!std::isdigit(c)) return false;
    v = 10 * v + (c - '0');
  }
  idx = v;
  return true;
}

}  // namespace

AtomConfiguration AtomConfiguration::parse(std::string_view text) {
  AtomConfiguration cfg;
  const auto bar = text.find('|');
  std::string_view atoms = text.substr(0, bar);
  for (char c : atoms) {
    if (c == 'e') {
      cfg.excited.push_back(true);
    } else if (c == 'g') {
      cfg.excited.push_back(false);
    } else {
      throw std::invalid_argument("configuration must be e/g atoms, optional |photons");
    }
  }
  if (bar != std::string_view::npos) {
    const std::string ph(text.substr(bar + 1));
    std::size_t used = 0;
    const int n = std::stoi(ph, &used);
    if (used != ph.size() || n < 0) throw std::invalid_argument("bad photon count");
    cfg.photon = n;
  }
  return cfg;
}

int AtomConfiguration::excitation_count() const {
  return static_cast<int>(std::count(excited.begin(), excited.end(), true));
}

BasisLabel AtomConfiguration::label() const {
  std::vector<FactorLabel> fs;
  fs.reserve(excited.size() + (photon ? 1 : 0));
  for (bool e : excited) fs.push_back(e ? atom_excited() : atom_ground());
  if (photon) fs.push_back(photon_count(*photon));
  return BasisLabel(std::move(fs));
}

std::string AtomConfiguration::str() const {
  std::string out;
  for (bool e : excited) out += e ? 'e' : 'g';
  if (photon) out += "|" + std::to_string(*photon);
  return out;
}

std::vector<AtomConfiguration> half_excited_basis(int n_pairs) {
  if (n_pairs < 1) throw std::invalid_argument("half_excited_basis requires n ≥ 1");
  const int count = 2 * n_pairs;
  if (count > kMaxAtoms) throw std::invalid_argument("half_excited_basis limited to 12 atoms");
  std::vector<AtomConfiguration> out;
  out.reserve(static_cast<std::size_t>(binomial(count, n_pairs)));
  for (unsigned v = 0; v < (1u << count); ++v) {
    AtomConfiguration cfg{excited_pattern(v, count), std::nullopt};
    if (cfg.excitation_count() == n_pairs) out.push_back(std::move(cfg));
  }
  return out;
}

Basis half_excited_atom_basis(int n_pairs) {
  std::vector<BasisLabel> labels;
  for (const AtomConfiguration& c : half_excited_basis(n_pairs)) labels.push_back(c.label());
  return Basis(std::move(labels));
}

Basis full_atomic_basis(int count) {
  if (count < 1 || count > kMaxAtoms) {
    throw std::invalid_argument("atom count must be in 1..12");
  }
  std::vector<BasisLabel> labels;
  labels.reserve(1u << count);
  for (unsigned v = 0; v < (1u << count); ++v) {
    labels.push_back(AtomConfiguration{excited_pattern(v, count), std::nullopt}.label());
  }
  return Basis(std::move(labels));
}

Operator local_pauli(int atom, int component, int atom_count) {
  if (atom < 1 || atom > atom_count) throw std::invalid_argument("atom index out of range");
  if (component < 1 || component > 3) throw std::invalid_argument("Pauli component must be 1..3");
  if (atom_count > 11) throw std::invalid_argument("dense local_pauli limited to 11 atoms");
  const int d = 1 << atom_count;
  Matrix m = Matrix::Zero(d, d);
  const unsigned flip = 1u << (atom_count - atom);
  for (unsigned v = 0; v < static_cast<unsigned>(d); ++v) {
    const bool ground = bit_ground(v, atom, atom_count);
    switch (component) {
      case 1:
        m(v ^ flip, v) = 1.0;
        break;
      case 2:
        // σ₂ = −i|e⟩⟨g| + i|g⟩⟨e|
        m(v ^ flip, v) = ground ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
        break;
      case 3:
        m(v, v) = ground ? -1.0 : 1.0;
        break;
    }
  }
  return Operator::hermitian_unitary(full_atomic_basis(atom_count), std::move(m));
}

StateVector promote_to_full_atomic(const StateVector& state) {
  const Basis& basis = state.basis();
  if (!basis.uniform_factor_structure()) {
    throw std::invalid_argument("promotion requires a uniform factor structure");
  }
  const int count = static_cast<int>(basis.factor_count());
  for (int i = 0; i < basis.dimension(); ++i) {
    for (std::size_t f = 0; f < basis.factor_count(); ++f) {
      if (basis.label(i).factor(f).kind != FactorKind::Atom) {
        throw std::invalid_argument("promotion requires atoms-only labels");
      }
    }
  }
  Basis full = full_atomic_basis(count);
  Vector amps = Vector::Zero(full.dimension());
  for (int i = 0; i < basis.dimension(); ++i) {
    amps(*full.index_of(basis.label(i))) = state.amplitude(i);
  }
  return StateVector(std::move(full), std::move(amps));
}

namespace {

// Fallback for d-level factors without a Pauli set: maximal entanglement is
// certified by every single-factor reduction carrying the full ln d.
WitnessReport entropy_witness(const StateVector& state,
                              std::span<const std::size_t> positions, double tolerance) {
  WitnessReport report;
  report.atom_count = 0;
  report.tolerance = tolerance;
  bool all_maximal = true;
  for (std::size_t p : positions) {
    const std::size_t keep[] = {p};
    const DensityMatrix rho = partial_trace(state, keep);
    const double h = von_neumann_entropy(rho);
    report.entropies.push_back(h);
    all_maximal &= std::abs(h - std::log(double(rho.dimension()))) < tolerance;
  }
  report.passes = all_maximal;
  report.min_entropy = *std::min_element(report.entropies.begin(), report.entropies.end());
  return report;
}

}  // namespace

WitnessReport witness_scan(const StateVector& state, double tolerance) {
  const Basis& basis = state.basis();
  if (!basis.uniform_factor_structure()) {
    throw std::invalid_argument("witness_scan requires a uniform factor structure");
  }
  const std::size_t nf = basis.factor_count();
  std::vector<std::size_t> atom_pos;
  std::vector<std::size_t> level_pos;
  for (std::size_t i = 0; i < nf; ++i) {
    const FactorKind kind = basis.label(0).factor(i).kind;
    if (kind == FactorKind::Atom) {
      atom_pos.push_back(i);
    } else if (kind == FactorKind::Level) {
      level_pos.push_back(i);
    } else {
      // Photon/spin factors must sit in one fixed configuration.
      for (int r = 1; r < basis.dimension(); ++r) {
        if (basis.label(r).factor(i) != basis.label(0).factor(i)) {
          throw std::invalid_argument(
              "witness_scan: non-atomic factor is not in a fixed state");
        }
      }
    }
  }
  if (atom_pos.empty() && !level_pos.empty()) {
    return entropy_witness(state, level_pos, tolerance);
  }
  if (!level_pos.empty()) {
    throw std::invalid_argument("witness_scan: cannot mix atoms with d-level factors");
  }
  if (atom_pos.empty()) throw std::invalid_argument("witness_scan: no atomic factors");

  // Strip fixed non-atomic factors.
  StateVector atoms = [&] {
    if (atom_pos.size() == nf) return state;
    std::vector<BasisLabel> labels;
    labels.reserve(static_cast<std::size_t>(basis.dimension()));
    for (int i = 0; i < basis.dimension(); ++i) labels.push_back(basis.label(i).subset(atom_pos));
    return StateVector(Basis(std::move(labels)), state.amplitudes());
  }();

  const int count = static_cast<int>(atom_pos.size());
  WitnessReport report;
  report.atom_count = count;
  report.tolerance = tolerance;
  report.expectations.assign(static_cast<std::size_t>(count), {0.0, 0.0, 0.0});

  for (int a = 0; a < count; ++a) {
    Complex s1{}, s2{};
    double s3 = 0.0;
    for (int i = 0; i < atoms.dimension(); ++i) {
      const BasisLabel& l = atoms.basis().label(i);
      const bool exc = l.factor(static_cast<std::size_t>(a)) == atom_excited();
      std::vector<FactorLabel> flipped = l.factors();
      flipped[static_cast<std::size_t>(a)] = exc ? atom_ground() : atom_excited();
      const Complex partner = std::conj(atoms.amplitude(BasisLabel(std::move(flipped))));
      const Complex amp = atoms.amplitude(i);
      s1 += partner * amp;
      s2 += partner * (exc ? Complex{0.0, 1.0} : Complex{0.0, -1.0}) * amp;
      s3 += (exc ? 1.0 : -1.0) * std::norm(amp);
    }
    report.expectations[static_cast<std::size_t>(a)] = {s1.real(), s2.real(), s3};

    const std::size_t keep[] = {static_cast<std::size_t>(a)};
    report.entropies.push_back(von_neumann_entropy(partial_trace(atoms, keep)));
  }

  report.max_abs_expectation = 0.0;
  for (const auto& row : report.expectations) {
    for (double v : row) report.max_abs_expectation = std::max(report.max_abs_expectation, std::abs(v));
  }
  report.passes = report.max_abs_expectation < tolerance;
  report.min_entropy = *std::min_element(report.entropies.begin(), report.entropies.end());
  return report;
}

StateVector named_state(std::string_view tag) {
  if (tag == "bell+") return state_over({"eg", "ge"}, {1.0, 1.0});
  if (tag == "bell-") return state_over({"eg", "ge"}, {1.0, -1.0});
  if (tag == "ghz3+") return state_over({"eee", "ggg"}, {1.0, 1.0});
  if (tag == "ghz3-") return state_over({"eee", "ggg"}, {1.0, -1.0});
  int p = 0, k = 0;
  if (parse_chi_tag(tag, p, k)) return chi_state(p, k);
  int idx = 0;
  if (parse_indexed_tag(tag, "four-maximal-", idx)) return four_maximal(idx);
  if (parse_indexed_tag(tag, "two-atom-two-photon-phase-", idx)) {
    return two_atom_two_photon_phase(idx);
  }
  if (parse_indexed_tag(tag, "biphoton-qutrit-", idx)) return biphoton_qutrit(idx);
  throw std::invalid_argument("unknown state tag: " + std::string(tag));
}

const std::vector<std::string>& named_state_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t = {"bell+", "bell-", "ghz3+", "ghz3-"};
    for (int p = 1; p <= 3; ++p) {
      for (int k = 0; k <= 5; ++k) t.push_back("chi" + std::to_string(p) + std::to_string(k));
    }
    for (int i = 1; i <= 4; ++i) t.push_back("four-maximal-" + std::to_string(i));
    for (int k = 0; k <= 3; ++k) t.push_back("two-atom-two-photon-phase-" + std::to_string(k));
    for (int k = 0; k <= 2; ++k) t.push_back("biphoton-qutrit-" + std::to_string(k));
    return t;
  }();
  return tags;
}

su2phase::PhaseBasis embed_phase_states(int n_pairs, double psi) {
  const su2phase::SpinSystem spin = su2phase::spin_for_pairs(n_pairs);
  return su2phase::phase_states(spin, psi).relabeled(half_excited_atom_basis(n_pairs));
}

}  // namespace phasekit::atomlattice
