#include "phasekit/qstate.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace phasekit {

namespace {

std::string factor_str(const FactorLabel& f) {
  switch (f.kind) {
    case FactorKind::Atom:
      return f.value == 0 ? "e" : "g";
    case FactorKind::Photon:
      return std::to_string(f.value) + "ph";
    case FactorKind::Spin:
      return "k" + std::to_string(f.value);
    case FactorKind::Level:
      return f.value > 0 ? "m+" + std::to_string(f.value) : "m" + std::to_string(f.value);
  }
  return "?";
}

}  // namespace

BasisLabel BasisLabel::atoms(std::string_view pattern) {
  std::vector<FactorLabel> fs;
  fs.reserve(pattern.size());
  for (char c : pattern) {
    if (c == 'e') {
      fs.push_back(atom_excited());
    } else if (c == 'g') {
      fs.push_back(atom_ground());
    } else {
      throw std::invalid_argument("atom pattern must contain only 'e'/'g'");
    }
  }
  return BasisLabel(std::move(fs));
}

BasisLabel BasisLabel::atoms_photon(std::string_view pattern, int n) {
  BasisLabel l = atoms(pattern);
  l.factors_.push_back(photon_count(n));
  return l;
}

BasisLabel BasisLabel::subset(std::span<const std::size_t> positions) const {
  std::vector<FactorLabel> fs;
  fs.reserve(positions.size());
  for (std::size_t p : positions) fs.push_back(factors_.at(p));
  return BasisLabel(std::move(fs));
}

BasisLabel BasisLabel::concatenated(const BasisLabel& rhs) const {
  std::vector<FactorLabel> fs = factors_;
  fs.insert(fs.end(), rhs.factors_.begin(), rhs.factors_.end());
  return BasisLabel(std::move(fs));
}

std::string BasisLabel::str() const {
  std::string out;
  bool prev_atom = false;
  for (const FactorLabel& f : factors_) {
    const bool is_atom = f.kind == FactorKind::Atom;
    if (!out.empty() && !(prev_atom && is_atom)) out += '|';
    out += factor_str(f);
    prev_atom = is_atom;
  }
  return out;
}

Basis::Basis(std::vector<BasisLabel> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument("basis labels must be pairwise distinct: " + labels_[i].str());
    }
  }
}

std::optional<int> Basis::index_of(const BasisLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Basis::uniform_factor_structure() const {
  if (labels_.empty()) return true;
  const std::size_t n = labels_.front().factor_count();
  for (const BasisLabel& l : labels_) {
    if (l.factor_count() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (l.factor(i).kind != labels_.front().factor(i).kind) return false;
    }
  }
  return true;
}

std::size_t Basis::factor_count() const {
  return labels_.empty() ? 0 : labels_.front().factor_count();
}

StateVector::StateVector(Basis basis, Vector amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
  if (amps_.size() != basis_.dimension()) {
    throw std::invalid_argument("amplitude count does not match basis dimension");
  }
  if (std::abs(amps_.norm() - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::basis_state(Basis basis, int index) {
  if (index < 0 || index >= basis.dimension()) {
    throw std::invalid_argument("basis-state index out of range");
  }
  Vector v = Vector::Zero(basis.dimension());
  v(index) = 1.0;
  return StateVector(std::move(basis), std::move(v));
}

StateVector StateVector::normalized(Basis basis, Vector amps) {
  const double n = amps.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return StateVector(std::move(basis), amps / n);
}

Complex StateVector::amplitude(const BasisLabel& l) const {
  const auto idx = basis_.index_of(l);
  return idx ? amps_(*idx) : Complex{0.0, 0.0};
}

double StateVector::fidelity(const StateVector& other) const {
  if (basis_ != other.basis_) throw std::invalid_argument("fidelity: basis mismatch");
  return std::abs(amps_.dot(other.amps_));
}

Operator::Operator(Basis basis, Matrix entries, OperatorFlags flags)
    : basis_(std::move(basis)), mat_(std::move(entries)), flags_(flags) {
  const int d = basis_.dimension();
  if (mat_.rows() != d || mat_.cols() != d) {
    throw std::invalid_argument("operator matrix does not match basis dimension");
  }
  if (flags_.hermitian && max_abs(mat_ - mat_.adjoint()) >= kAlgebraTol) {
    throw std::invalid_argument("operator flagged hermitian fails ‖M − M†‖ < 1e-12");
  }
  if (flags_.unitary &&
      max_abs(mat_ * mat_.adjoint() - Matrix::Identity(d, d)) >= kAlgebraTol) {
    throw std::invalid_argument("operator flagged unitary fails ‖MM† − 1‖ < 1e-12");
  }
}

Operator Operator::hermitian(Basis basis, Matrix entries) {
  return Operator(std::move(basis), std::move(entries), {.hermitian = true});
}

Operator Operator::unitary(Basis basis, Matrix entries) {
  return Operator(std::move(basis), std::move(entries), {.unitary = true});
}

Operator Operator::hermitian_unitary(Basis basis, Matrix entries) {
  return Operator(std::move(basis), std::move(entries), {.hermitian = true, .unitary = true});
}

Operator Operator::identity(Basis basis) {
  const int d = basis.dimension();
  return Operator(std::move(basis), Matrix::Identity(d, d),
                  {.hermitian = true, .unitary = true});
}

Operator Operator::adjoint() const {
  return Operator(basis_, mat_.adjoint(), flags_);
}

DensityMatrix::DensityMatrix(Basis basis, Matrix rho)
    : basis_(std::move(basis)), rho_(std::move(rho)) {
  const int d = basis_.dimension();
  if (rho_.rows() != d || rho_.cols() != d) {
    throw std::invalid_argument("density matrix does not match basis dimension");
  }
  if (max_abs(rho_ - rho_.adjoint()) >= kAlgebraTol) {
    throw std::invalid_argument("density matrix is not hermitian");
  }
  if (std::abs(rho_.trace().real() - 1.0) > kAlgebraTol ||
      std::abs(rho_.trace().imag()) > kAlgebraTol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("density eigensolve failed");
  if (es.eigenvalues().minCoeff() < -kAlgebraTol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const std::int64_t dim =
      std::int64_t{1} * a.dimension() * b.dimension();
  if (dim > kDimensionCap) {
    throw std::invalid_argument("tensor product exceeds the dimension cap");
  }
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<std::size_t>(dim));
  Vector amps(dim);
  std::int64_t idx = 0;
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < b.dimension(); ++j, ++idx) {
      labels.push_back(a.basis().label(i).concatenated(b.basis().label(j)));
      amps(idx) = a.amplitude(i) * b.amplitude(j);
    }
  }
  return StateVector(Basis(std::move(labels)), std::move(amps));
}

Complex expectation(const Operator& op, const StateVector& s) {
  if (op.basis() != s.basis()) throw std::invalid_argument("expectation: basis mismatch");
  return s.amplitudes().dot(op.entries() * s.amplitudes());
}

DensityMatrix partial_trace(const StateVector& s, std::span<const std::size_t> keep) {
  const Basis& basis = s.basis();
  if (!basis.uniform_factor_structure()) {
    throw std::invalid_argument("partial trace requires a uniform factor structure");
  }
  const std::size_t nf = basis.factor_count();
  if (keep.empty()) throw std::invalid_argument("partial trace: empty keep set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= nf) throw std::invalid_argument("partial trace: factor index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw std::invalid_argument("partial trace: keep indices must be strictly increasing");
    }
  }
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < nf; ++i) {
    bool kept = false;
    for (std::size_t k : keep) kept |= (k == i);
    if (!kept) traced.push_back(i);
  }

  // Reduced basis: kept sublabels in first-occurrence order.
  std::vector<BasisLabel> kept_labels;
  std::map<BasisLabel, int> kept_index;
  std::vector<int> kept_of(static_cast<std::size_t>(basis.dimension()));
  for (int i = 0; i < basis.dimension(); ++i) {
    BasisLabel sub = basis.label(i).subset(keep);
    auto [it, inserted] = kept_index.emplace(sub, static_cast<int>(kept_labels.size()));
    if (inserted) kept_labels.push_back(std::move(sub));
    kept_of[static_cast<std::size_t>(i)] = it->second;
  }

  // Group basis entries by their traced-out sublabel; within a group the
  // contribution is an exact outer product.
  std::map<BasisLabel, std::vector<int>> groups;
  for (int i = 0; i < basis.dimension(); ++i) {
    groups[basis.label(i).subset(traced)].push_back(i);
  }

  const int dk = static_cast<int>(kept_labels.size());
  Matrix rho = Matrix::Zero(dk, dk);
  for (const auto& [sub, members] : groups) {
    for (int i : members) {
      for (int j : members) {
        rho(kept_of[static_cast<std::size_t>(i)], kept_of[static_cast<std::size_t>(j)]) +=
            s.amplitude(i) * std::conj(s.amplitude(j));
      }
    }
  }
  return DensityMatrix(Basis(std::move(kept_labels)), std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("entropy eigensolve failed");
  double h = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda < -kSpectralTol) {
      throw std::invalid_argument("invalid density: eigenvalue below −1e-9");
    }
    if (lambda > 0.0) h -= lambda * std::log(lambda);
  }
  return h;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t num = n - k + i;
    if (out > (std::int64_t{1} << 62) / num) throw std::overflow_error("binomial overflow");
    out = out * num / i;  // exact: out is always an integer binomial prefix
  }
  return out;
}

}  // namespace phasekit
