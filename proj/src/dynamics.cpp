#include "phasekit/dynamics.hpp"

#include "phasekit/atomlattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace phasekit::dynamics {

namespace {

int label_excitation(const BasisLabel& l) {
  int total = 0;
  for (const FactorLabel& f : l.factors()) {
    if (f.kind == FactorKind::Atom) {
      total += f.value == 0 ? 1 : 0;
    } else if (f.kind == FactorKind::Photon) {
      total += f.value;
    } else {
      throw std::invalid_argument("dynamics labels must be atoms and a photon factor");
    }
  }
  return total;
}

int label_photon(const BasisLabel& l) {
  return l.factor(l.factor_count() - 1).value;
}

void validate_times(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("time grid is empty");
  if (times.front() < 0.0) throw std::invalid_argument("times must start at t ≥ 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) {
      throw std::invalid_argument("times must be strictly increasing");
    }
  }
}

// H entries generated label-by-label; used for both the full composite
// basis and a sector restriction of it.
Matrix hamiltonian_entries(const SimConfig& cfg, const Basis& basis) {
  const int atoms = cfg.atom_count();
  Matrix h = Matrix::Zero(basis.dimension(), basis.dimension());
  for (int col = 0; col < basis.dimension(); ++col) {
    const BasisLabel& l = basis.label(col);
    const int n_ph = label_photon(l);
    const int n_exc = label_excitation(l) - n_ph;
    h(col, col) = cfg.delta * n_ph + cfg.omega0 * (n_ph + n_exc) +
                  cfg.kappa * double(n_ph) * double(n_ph);
    // γ R⁺_ℓ a absorbs a photon and excites atom ℓ; each such pair appears
    // exactly once from its higher-photon side, so the emission entry is
    // written together with it.
    if (n_ph >= 1) {
      for (int a = 0; a < atoms; ++a) {
        if (l.factor(static_cast<std::size_t>(a)) != atom_ground()) continue;
        std::vector<FactorLabel> fs = l.factors();
        fs[static_cast<std::size_t>(a)] = atom_excited();
        fs.back() = photon_count(n_ph - 1);
        const auto row = basis.index_of(BasisLabel(std::move(fs)));
        if (row) {
          const double coupling = cfg.gamma * std::sqrt(double(n_ph));
          h(*row, col) += coupling;
          h(col, *row) += coupling;
        }
      }
    }
  }
  return h;
}

su2phase::PhaseBasis reporting_phase_basis(int n_pairs) {
  return atomlattice::embed_phase_states(n_pairs, 0.0);
}

// |⟨φ_k ⊗ vacuum|Ψ⟩| style overlaps computed by label lookup.
Complex vacuum_overlap(const StateVector& phase_state, const StateVector& psi) {
  Complex out = 0.0;
  for (int i = 0; i < phase_state.dimension(); ++i) {
    const BasisLabel with_vacuum =
        phase_state.basis().label(i).concatenated(BasisLabel(photon_count(0)));
    out += std::conj(phase_state.amplitude(i)) * psi.amplitude(with_vacuum);
  }
  return out;
}

}  // namespace

InitialCondition InitialCondition::from_tag(std::string_view tag) {
  if (tag == "excited-atom") return {InitialKind::ExcitedAtoms, std::nullopt};
  if (tag == "photon") return {InitialKind::Photons, std::nullopt};
  if (tag == "mixed") return {InitialKind::Mixed, std::nullopt};
  if (tag == "phase-minus") return {InitialKind::PhaseMinus, std::nullopt};
  throw std::invalid_argument("unknown initial-condition tag: " + std::string(tag));
}

InitialCondition InitialCondition::explicit_state(StateVector s) {
  return {InitialKind::Explicit, std::move(s)};
}

std::vector<double> SimConfig::uniform_times(double t_max, int count) {
  if (count < 2 || t_max <= 0.0) throw std::invalid_argument("bad time grid request");
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (count - 1);
  return t;
}

Basis composite_basis(int atom_count, int fock_cutoff) {
  if (fock_cutoff < 0) throw std::invalid_argument("negative Fock cutoff");
  const Basis atoms = atomlattice::full_atomic_basis(atom_count);
  const std::int64_t dim = std::int64_t{atoms.dimension()} * (fock_cutoff + 1);
  if (dim > kDimensionCap) throw std::invalid_argument("composite basis exceeds dimension cap");
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < atoms.dimension(); ++i) {
    for (int n = 0; n <= fock_cutoff; ++n) {
      labels.push_back(atoms.label(i).concatenated(BasisLabel(photon_count(n))));
    }
  }
  return Basis(std::move(labels));
}

int max_total_excitation(const StateVector& s) {
  int best = 0;
  for (int i = 0; i < s.dimension(); ++i) {
    if (std::abs(s.amplitude(i)) == 0.0) continue;
    best = std::max(best, label_excitation(s.basis().label(i)));
  }
  return best;
}

int resolved_cutoff(const SimConfig& cfg) {
  int needed = cfg.n_pairs;
  if (cfg.initial.kind == InitialKind::Explicit) {
    if (!cfg.initial.state) throw std::invalid_argument("explicit initial state missing");
    needed = max_total_excitation(*cfg.initial.state);
  }
  if (cfg.fock_cutoff) {
    if (*cfg.fock_cutoff < needed) {
      throw std::invalid_argument("fock_cutoff below the initial excitation number");
    }
    return *cfg.fock_cutoff;
  }
  return needed;
}

StateVector initial_state(const SimConfig& cfg) {
  if (cfg.n_pairs < 1) throw std::invalid_argument("n_pairs must be ≥ 1");
  const int cutoff = resolved_cutoff(cfg);
  Basis basis = composite_basis(cfg.atom_count(), cutoff);
  const int atoms = cfg.atom_count();

  const auto ket = [&](const std::string& pattern, int photons) {
    return StateVector::basis_state(
        basis, *basis.index_of(BasisLabel::atoms_photon(pattern, photons)));
  };

  switch (cfg.initial.kind) {
    case InitialKind::ExcitedAtoms: {
      std::string pattern(static_cast<std::size_t>(atoms), 'g');
      for (int i = 0; i < cfg.n_pairs; ++i) pattern[static_cast<std::size_t>(i)] = 'e';
      return ket(pattern, 0);
    }
    case InitialKind::Photons:
      return ket(std::string(static_cast<std::size_t>(atoms), 'g'), cfg.n_pairs);
    case InitialKind::Mixed: {
      std::string pattern(static_cast<std::size_t>(atoms), 'g');
      pattern[0] = 'e';
      return ket(pattern, cfg.n_pairs - 1);
    }
    case InitialKind::PhaseMinus: {
      if (cfg.n_pairs != 1) {
        throw std::invalid_argument("phase-minus initial state is defined for n = 1");
      }
      Vector amps = Vector::Zero(basis.dimension());
      amps(*basis.index_of(BasisLabel::atoms_photon("eg", 0))) = 1.0 / std::sqrt(2.0);
      amps(*basis.index_of(BasisLabel::atoms_photon("ge", 0))) = -1.0 / std::sqrt(2.0);
      return StateVector(std::move(basis), std::move(amps));
    }
    case InitialKind::Explicit: {
      const StateVector& s = *cfg.initial.state;
      Vector amps = Vector::Zero(basis.dimension());
      for (int i = 0; i < s.dimension(); ++i) {
        const auto idx = basis.index_of(s.basis().label(i));
        if (!idx) {
          throw std::invalid_argument("explicit initial label outside atoms⊗Fock basis: " +
                                      s.basis().label(i).str());
        }
        amps(*idx) = s.amplitude(i);
      }
      return StateVector(std::move(basis), std::move(amps));
    }
  }
  throw std::logic_error("unhandled initial kind");
}

Operator build_hamiltonian(const SimConfig& cfg) {
  const StateVector s0 = initial_state(cfg);
  const int cutoff = resolved_cutoff(cfg);
  if (cutoff < max_total_excitation(s0)) {
    throw std::invalid_argument("excitation leakage: Fock cutoff too small");
  }
  const Basis basis = composite_basis(cfg.atom_count(), cutoff);
  return Operator::hermitian(basis, hamiltonian_entries(cfg, basis));
}

Operator build_sector_hamiltonian(const SimConfig& cfg) {
  const StateVector s0 = initial_state(cfg);
  int sector = -1;
  for (int i = 0; i < s0.dimension(); ++i) {
    if (std::abs(s0.amplitude(i)) == 0.0) continue;
    const int e = label_excitation(s0.basis().label(i));
    if (sector < 0) sector = e;
    if (e != sector) {
      throw std::invalid_argument("initial state spans several excitation sectors");
    }
  }
  std::vector<BasisLabel> labels;
  for (int i = 0; i < s0.dimension(); ++i) {
    if (label_excitation(s0.basis().label(i)) == sector) labels.push_back(s0.basis().label(i));
  }
  const Basis basis(std::move(labels));
  return Operator::hermitian(basis, hamiltonian_entries(cfg, basis));
}

Operator excitation_operator(const Basis& basis) {
  Matrix n = Matrix::Zero(basis.dimension(), basis.dimension());
  for (int i = 0; i < basis.dimension(); ++i) n(i, i) = label_excitation(basis.label(i));
  return Operator::hermitian(basis, std::move(n));
}

Evolver::Evolver(const Operator& h) : basis_(h.basis()), es_(h.entries()) {
  if (!h.is_hermitian_flagged()) {
    throw std::invalid_argument("evolution requires a hermitian-flagged Hamiltonian");
  }
  if (es_.info() != Eigen::Success) throw std::runtime_error("Hamiltonian eigensolve failed");
}

StateVector Evolver::at(const StateVector& s0, double t) const {
  if (s0.basis() != basis_) throw std::invalid_argument("evolve: basis mismatch");
  const Vector coeffs = es_.eigenvectors().adjoint() * s0.amplitudes();
  Vector phased(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    phased(i) = std::polar(1.0, -es_.eigenvalues()(i) * t) * coeffs(i);
  }
  Vector out = es_.eigenvectors() * phased;
  // No renormalization here: traces report the raw norm.
  return StateVector(basis_, std::move(out));
}

StateVector evolve(const Operator& h, const StateVector& s0, double t) {
  return Evolver(h).at(s0, t);
}

double rabi_frequency(double gamma, double delta, double kappa) {
  const double d = delta + kappa;
  return std::sqrt(2.0 * gamma * gamma + 0.25 * d * d);
}

AnalyticAmplitudes analytic_two_plus_one(const SimConfig& cfg, double t) {
  if (cfg.n_pairs != 1) {
    throw std::invalid_argument("closed forms cover the two-atom/one-photon system");
  }
  const double d = cfg.delta + cfg.kappa;  // effective detuning with Kerr term
  const double omega = rabi_frequency(cfg.gamma, cfg.delta, cfg.kappa);
  const double c = std::cos(omega * t);
  // sin(Ωt)/Ω, finite as Ω → 0.
  const double s_over = omega > 0.0 ? std::sin(omega * t) / omega : t;
  const Complex mean_phase = std::polar(1.0, -(cfg.omega0 + 0.5 * d) * t);
  const Complex i{0.0, 1.0};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  switch (cfg.initial.kind) {
    case InitialKind::ExcitedAtoms:
      return {
          inv_sqrt2 * std::polar(1.0, -cfg.omega0 * t),
          inv_sqrt2 * (c + i * 0.5 * d * s_over) * mean_phase,
          -i * cfg.gamma * s_over * mean_phase,
      };
    case InitialKind::Photons:
      return {
          0.0,
          -i * std::sqrt(2.0) * cfg.gamma * s_over * mean_phase,
          (c - i * 0.5 * d * s_over) * mean_phase,
      };
    case InitialKind::PhaseMinus:
      return {std::polar(1.0, -cfg.omega0 * t), 0.0, 0.0};
    default:
      throw std::invalid_argument("no closed form for an explicit initial state");
  }
}

Trace run_trace(const SimConfig& cfg) {
  validate_times(cfg.times);
  const Operator h = cfg.restrict_to_sector ? build_sector_hamiltonian(cfg)
                                            : build_hamiltonian(cfg);
  StateVector full0 = initial_state(cfg);
  StateVector s0 = [&] {
    if (!cfg.restrict_to_sector) return full0;
    Vector amps(h.basis().dimension());
    for (int i = 0; i < h.basis().dimension(); ++i) {
      amps(i) = full0.amplitude(h.basis().label(i));
    }
    return StateVector(h.basis(), std::move(amps));
  }();

  const su2phase::PhaseBasis phases = reporting_phase_basis(cfg.n_pairs);
  const bool has_analytic =
      cfg.n_pairs == 1 && cfg.initial.kind != InitialKind::Explicit &&
      cfg.initial.kind != InitialKind::Mixed;
  const BasisLabel photon_ket = BasisLabel::atoms_photon(
      std::string(static_cast<std::size_t>(cfg.atom_count()), 'g'), 1);

  Trace trace{cfg, {}, has_analytic ? 0.0 : std::numeric_limits<double>::quiet_NaN()};
  const Evolver evolver(h);
  trace.records.reserve(cfg.times.size());
  for (double t : cfg.times) {
    TraceRecord rec{t, evolver.at(s0, t), {}, 0, 0, 0, 0, 0, std::nullopt, 0.0};
    rec.norm = rec.state.norm();
    for (const StateVector& phi : phases.states) {
      rec.phase_probs.push_back(std::norm(vacuum_overlap(phi, rec.state)));
    }
    rec.p_plus = rec.phase_probs[0];
    rec.p_minus = rec.phase_probs[1];
    double p_ph = 0.0, n_expect = 0.0;
    for (int i = 0; i < rec.state.dimension(); ++i) {
      const double w = std::norm(rec.state.amplitude(i));
      const BasisLabel& l = rec.state.basis().label(i);
      if (label_photon(l) >= 1) p_ph += w;
      n_expect += w * label_excitation(l);
    }
    rec.p_photon = p_ph;
    rec.excitation = n_expect;

    if (has_analytic) {
      const AnalyticAmplitudes an = analytic_two_plus_one(cfg, t);
      rec.analytic = an;
      const Complex num_minus = vacuum_overlap(phases.states[1], rec.state);
      const Complex num_plus = vacuum_overlap(phases.states[0], rec.state);
      const Complex num_photon = rec.state.amplitude(photon_ket);
      rec.analytic_deviation =
          std::max({std::abs(num_minus - an.c_minus), std::abs(num_plus - an.c_plus),
                    std::abs(num_photon - an.c_photon)});
      trace.max_analytic_deviation =
          std::max(trace.max_analytic_deviation, rec.analytic_deviation);
    }
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

OverlapScan phase_overlap_scan(const SimConfig& cfg) {
  if (cfg.n_pairs < 1 || cfg.n_pairs > 2) {
    throw std::invalid_argument("phase_overlap_scan covers n_pairs ∈ {1, 2}");
  }
  validate_times(cfg.times);
  const Operator h = build_hamiltonian(cfg);
  const StateVector s0 = initial_state(cfg);
  const su2phase::PhaseBasis phases = reporting_phase_basis(cfg.n_pairs);
  const Evolver evolver(h);

  OverlapScan scan;
  scan.times = cfg.times;
  scan.max_phase.assign(phases.states.size(), 0.0);
  for (double t : cfg.times) {
    const StateVector psi = evolver.at(s0, t);
    double subspace = 0.0;
    std::vector<double> probs;
    probs.reserve(phases.states.size());
    for (std::size_t k = 0; k < phases.states.size(); ++k) {
      const double p = std::norm(vacuum_overlap(phases.states[k], psi));
      probs.push_back(p);
      subspace += p;
      scan.max_phase[k] = std::max(scan.max_phase[k], p);
    }
    if (subspace > scan.max_subspace) {
      scan.max_subspace = subspace;
      scan.argmax_time = t;
    }
    scan.subspace_prob.push_back(subspace);
    scan.phase_probs.push_back(std::move(probs));
  }
  return scan;
}

}  // namespace phasekit::dynamics
