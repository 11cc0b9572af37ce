#include "phasekit/nonlocality.hpp"

#include "phasekit/atomlattice.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace phasekit::nonlocality {

namespace {

// Per-atom action of a Pauli letter on a label: |x⟩ → coef · |maybe-flipped x⟩.
struct LetterAction {
  bool flips;
  Complex coef_on_excited;
  Complex coef_on_ground;
};

LetterAction action_of(PauliLetter l) {
  switch (l) {
    case PauliLetter::Id:
      return {false, 1.0, 1.0};
    case PauliLetter::S1:
      return {true, 1.0, 1.0};
    case PauliLetter::S2:
      return {true, {0.0, 1.0}, {0.0, -1.0}};  // σ₂|e⟩ = i|g⟩, σ₂|g⟩ = −i|e⟩
    case PauliLetter::S3:
      return {false, 1.0, -1.0};
  }
  throw std::logic_error("bad Pauli letter");
}

void require_atomic_state(const StateVector& state, int atom_count) {
  const Basis& b = state.basis();
  if (!b.uniform_factor_structure() ||
      static_cast<int>(b.factor_count()) != atom_count) {
    throw std::invalid_argument("word length does not match the state's atom count");
  }
  for (std::size_t i = 0; i < b.factor_count(); ++i) {
    if (b.label(0).factor(i).kind != FactorKind::Atom) {
      throw std::invalid_argument("state has a non-atomic factor");
    }
  }
}

// W|x⟩ for a basis label: the image label and accumulated coefficient.
std::pair<BasisLabel, Complex> apply_word(const PauliWord& word, const BasisLabel& l) {
  std::vector<FactorLabel> out = l.factors();
  Complex coef = 1.0;
  for (std::size_t a = 0; a < out.size(); ++a) {
    const LetterAction act = action_of(word.letters[a]);
    const bool excited = out[a] == atom_excited();
    coef *= excited ? act.coef_on_excited : act.coef_on_ground;
    if (act.flips) out[a] = excited ? atom_ground() : atom_excited();
  }
  return {BasisLabel(std::move(out)), coef};
}

int variable_index(int atom /*1-based*/, PauliLetter letter) {
  return 2 * (atom - 1) + (letter == PauliLetter::S1 ? 0 : 1);
}

Matrix pair_block(double theta) {
  // 2-atom basis in lexicographic order: ee, eg, ge, gg.
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = std::cos(theta);
  m(3, 3) = -std::cos(theta);
  m(0, 3) = std::sin(theta);
  m(3, 0) = std::sin(theta);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

PauliWord PauliWord::parse(std::string_view digits) {
  PauliWord w;
  w.letters.reserve(digits.size());
  for (char c : digits) {
    switch (c) {
      case '0':
      case 'i':
        w.letters.push_back(PauliLetter::Id);
        break;
      case '1':
        w.letters.push_back(PauliLetter::S1);
        break;
      case '2':
        w.letters.push_back(PauliLetter::S2);
        break;
      case '3':
        w.letters.push_back(PauliLetter::S3);
        break;
      default:
        throw std::invalid_argument("Pauli word digits must be 0/1/2/3 or i");
    }
  }
  return w;
}

std::string PauliWord::str() const {
  std::string out;
  for (PauliLetter l : letters) {
    out += l == PauliLetter::Id ? 'i' : static_cast<char>('0' + static_cast<int>(l));
  }
  return out;
}

Operator word_operator(const PauliWord& word) {
  const int count = word.atom_count();
  const Basis basis = atomlattice::full_atomic_basis(count);
  Matrix m = Matrix::Zero(basis.dimension(), basis.dimension());
  for (int v = 0; v < basis.dimension(); ++v) {
    auto [image, coef] = apply_word(word, basis.label(v));
    m(*basis.index_of(image), v) = coef;
  }
  return Operator::hermitian_unitary(basis, std::move(m));
}

EigencheckResult word_eigencheck(const StateVector& state, const PauliWord& word,
                                 double tol) {
  require_atomic_state(state, word.atom_count());
  // Accumulate W|s⟩ − (±1)|s⟩ over the union of touched labels.
  std::map<BasisLabel, Complex> image;
  for (int i = 0; i < state.dimension(); ++i) {
    auto [l, coef] = apply_word(word, state.basis().label(i));
    image[std::move(l)] += coef * state.amplitude(i);
  }
  double plus_sq = 0.0, minus_sq = 0.0;
  for (const auto& [l, v] : image) {
    const Complex here = state.amplitude(l);
    plus_sq += std::norm(v - here);
    minus_sq += std::norm(v + here);
  }
  for (int i = 0; i < state.dimension(); ++i) {
    if (!image.contains(state.basis().label(i))) {
      plus_sq += std::norm(state.amplitude(i));
      minus_sq += std::norm(state.amplitude(i));
    }
  }
  const double plus = std::sqrt(plus_sq), minus = std::sqrt(minus_sq);
  if (plus < tol) return {+1, plus};
  if (minus < tol) return {-1, minus};
  return {std::nullopt, std::min(plus, minus)};
}

std::string ClassicalConstraint::str() const {
  return word.str() + (required_sign > 0 ? " = +1" : " = -1");
}

bool constraint_satisfied(const ClassicalConstraint& c, const std::vector<int>& assignment) {
  int prod = 1;
  for (int a = 0; a < c.word.atom_count(); ++a) {
    const PauliLetter l = c.word.letters[static_cast<std::size_t>(a)];
    if (l != PauliLetter::S1 && l != PauliLetter::S2) {
      throw std::invalid_argument("classical constraints take letters 1/2 only");
    }
    prod *= assignment[static_cast<std::size_t>(variable_index(a + 1, l))];
  }
  return prod == c.required_sign;
}

SearchResult classical_search(const std::vector<ClassicalConstraint>& constraints) {
  if (constraints.empty()) return {true, {}, 0};
  const int atoms = constraints.front().word.atom_count();
  for (const ClassicalConstraint& c : constraints) {
    if (c.word.atom_count() != atoms) {
      throw std::invalid_argument("constraints must share one atom count");
    }
    if (c.required_sign != 1 && c.required_sign != -1) {
      throw std::invalid_argument("constraint sign must be ±1");
    }
  }
  const int vars = 2 * atoms;
  if (vars > 16) throw std::invalid_argument("classical_search limited to 16 variables");

  SearchResult result;
  std::vector<int> assignment(static_cast<std::size_t>(vars));
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << vars); ++x) {
    for (int i = 0; i < vars; ++i) {
      assignment[static_cast<std::size_t>(i)] = ((x >> (vars - 1 - i)) & 1u) ? -1 : +1;
    }
    ++result.assignments_checked;
    bool ok = true;
    for (const ClassicalConstraint& c : constraints) {
      if (!constraint_satisfied(c, assignment)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      result.satisfiable = true;
      result.assignment = assignment;
      return result;
    }
  }
  return result;
}

std::vector<ClassicalConstraint> derive_constraints(const StateVector& state, double tol) {
  const int atoms = static_cast<int>(state.basis().factor_count());
  require_atomic_state(state, atoms);
  if (atoms > 16) throw std::invalid_argument("derive_constraints limited to 16 atoms");
  std::vector<ClassicalConstraint> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << atoms); ++w) {
    PauliWord word;
    word.letters.resize(static_cast<std::size_t>(atoms));
    for (int a = 0; a < atoms; ++a) {
      word.letters[static_cast<std::size_t>(a)] =
          ((w >> (atoms - 1 - a)) & 1u) ? PauliLetter::S2 : PauliLetter::S1;
    }
    const EigencheckResult ec = word_eigencheck(state, word, tol);
    if (ec.eigenvalue) out.push_back({std::move(word), *ec.eigenvalue});
  }
  return out;
}

Operator pair_observable(double theta, Side side) {
  const Matrix block = pair_block(theta);
  const Matrix eye = Matrix::Identity(4, 4);
  Matrix m = side == Side::AtomsOneTwo ? kron(block, eye) : kron(eye, block);
  return Operator::hermitian(atomlattice::full_atomic_basis(4), std::move(m));
}

const std::array<const char*, 4> kChshVariantNames = {"-ab", "-ab'", "-a'b", "-a'b'"};

ChshResult chsh_scan(const StateVector& state, const ChshSettings& settings) {
  require_atomic_state(state, 4);
  const StateVector full = atomlattice::promote_to_full_atomic(state);

  const Matrix a = kron(pair_block(settings.theta_a), Matrix::Identity(4, 4));
  const Matrix ap = kron(pair_block(settings.theta_a_prime), Matrix::Identity(4, 4));
  const Matrix b = kron(Matrix::Identity(4, 4), pair_block(settings.theta_b));
  const Matrix bp = kron(Matrix::Identity(4, 4), pair_block(settings.theta_b_prime));

  const Vector& s = full.amplitudes();
  const auto corr = [&s](const Matrix& x, const Matrix& y) {
    return s.dot(x * (y * s)).real();
  };

  ChshResult r{};
  r.correlators = {corr(a, b), corr(a, bp), corr(ap, b), corr(ap, bp)};
  for (int v = 0; v < 4; ++v) {
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) sum += (j == v ? -1.0 : 1.0) * r.correlators[static_cast<std::size_t>(j)];
    r.variant_values[static_cast<std::size_t>(v)] = std::abs(sum);
  }
  r.best_variant = 0;
  r.s_max = r.variant_values[0];
  for (int v = 1; v < 4; ++v) {
    if (r.variant_values[static_cast<std::size_t>(v)] > r.s_max) {
      r.s_max = r.variant_values[static_cast<std::size_t>(v)];
      r.best_variant = v;
    }
  }
  return r;
}

}  // namespace phasekit::nonlocality
