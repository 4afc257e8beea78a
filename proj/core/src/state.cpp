#include "qseal/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qseal {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("state dimension must be positive");
  int n = 0;
  while ((Eigen::Index(1) << n) < dim) ++n;
  if ((Eigen::Index(1) << n) != dim) {
    throw std::invalid_argument("state dimension must be a power of two");
  }
  if (n > kMaxQubits) throw std::invalid_argument("state exceeds the 12-qubit cap");
  return n;
}

// bit position (from LSB) of qubit q in an n-qubit basis index
inline int shift_of(int n, int q) { return n - 1 - q; }

// insert bit b for qubit q into an index over (n-1) qubits, giving n qubits
inline std::uint64_t insert_bit(std::uint64_t idx, int n, int q, int b) {
  const int s = shift_of(n, q);
  const std::uint64_t low = idx & ((std::uint64_t(1) << s) - 1);
  const std::uint64_t high = idx >> s;
  return (high << (s + 1)) | (std::uint64_t(b) << s) | low;
}

void check_targets(int n, std::span<const int> targets, Eigen::Index gate_dim) {
  if ((Eigen::Index(1) << targets.size()) != gate_dim) {
    throw std::invalid_argument("gate dimension does not match target count");
  }
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) throw std::invalid_argument("target qubit out of range");
    if (seen & (std::uint64_t(1) << t)) throw std::invalid_argument("duplicate target qubit");
    seen |= std::uint64_t(1) << t;
  }
}

}  // namespace

QuantumState QuantumState::from_vector(Vector v) {
  const int n = qubits_for_dim(v.size());
  if (std::abs(v.squaredNorm() - 1.0) > kStateTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
  return QuantumState(n, std::move(v));
}

QuantumState QuantumState::from_vector_unchecked(Vector v) {
  const int n = qubits_for_dim(v.size());
  return QuantumState(n, std::move(v));
}

QuantumState QuantumState::from_density(Matrix rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubits_for_dim(rho.rows());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - cdouble(1.0)) > kStateTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStateTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  return QuantumState(n, std::move(rho));
}

QuantumState QuantumState::from_density_unchecked(Matrix rho) {
  const int n = qubits_for_dim(rho.rows());
  return QuantumState(n, std::move(rho));
}

QuantumState QuantumState::basis_state(int n_qubits, std::uint64_t bits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) throw std::invalid_argument("bad qubit count");
  Vector v = Vector::Zero(Eigen::Index(1) << n_qubits);
  v(static_cast<Eigen::Index>(bits)) = 1.0;
  return QuantumState(n_qubits, std::move(v));
}

QuantumState QuantumState::zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

QuantumState QuantumState::plus_state() {
  Vector v(2);
  const double r = 1.0 / std::sqrt(2.0);
  v << r, r;
  return QuantumState(1, std::move(v));
}

QuantumState QuantumState::bell_phi_plus() {
  Vector v = Vector::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  v(0) = r;
  v(3) = r;
  return QuantumState(2, std::move(v));
}

QuantumState QuantumState::maximally_mixed(int n_qubits) {
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  return QuantumState(n_qubits, Matrix(Matrix::Identity(d, d) / double(d)));
}

QuantumState QuantumState::haar_random(int n_qubits, Rng& rng) {
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = cdouble(rng.gaussian(), rng.gaussian());
  v /= v.norm();
  return QuantumState(n_qubits, std::move(v));
}

QuantumState QuantumState::qubit(double theta, double phi) {
  Vector v(2);
  v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return QuantumState(1, std::move(v));
}

const Vector& QuantumState::vector() const {
  if (form_ != Form::Vector) throw std::logic_error("state is not in vector form");
  return vec_;
}

const Matrix& QuantumState::density() const {
  if (form_ != Form::Density) throw std::logic_error("state is not in density form");
  return mat_;
}

Matrix QuantumState::to_density() const {
  if (form_ == Form::Density) return mat_;
  return vec_ * vec_.adjoint();
}

QuantumState QuantumState::as_density() const {
  if (form_ == Form::Density) return *this;
  return QuantumState(n_, Matrix(vec_ * vec_.adjoint()));
}

Vector apply_matrix_vec(const Vector& v, const Matrix& m, std::span<const int> targets,
                        int n_qubits) {
  const int k = static_cast<int>(targets.size());
  const Eigen::Index gd = Eigen::Index(1) << k;
  const Eigen::Index dim = v.size();
  // scatter offsets for the gate-local index (gate qubit j = targets[j], MSB first)
  std::vector<std::uint64_t> offs(gd, 0);
  std::uint64_t tmask = 0;
  for (int j = 0; j < k; ++j) tmask |= std::uint64_t(1) << shift_of(n_qubits, targets[j]);
  for (Eigen::Index g = 0; g < gd; ++g) {
    std::uint64_t o = 0;
    for (int j = 0; j < k; ++j) {
      if ((g >> (k - 1 - j)) & 1) o |= std::uint64_t(1) << shift_of(n_qubits, targets[j]);
    }
    offs[g] = o;
  }
  Vector out(dim);
  Vector sub(gd), res(gd);
  for (std::uint64_t base = 0; base < std::uint64_t(dim); ++base) {
    if (base & tmask) continue;
    for (Eigen::Index g = 0; g < gd; ++g) sub(g) = v(base | offs[g]);
    res.noalias() = m * sub;
    for (Eigen::Index g = 0; g < gd; ++g) out(base | offs[g]) = res(g);
  }
  return out;
}

Matrix apply_matrix_density(const Matrix& rho, const Matrix& m, std::span<const int> targets,
                            int n_qubits) {
  // m rho m^dag, column pass then adjoint trick
  Matrix a(rho.rows(), rho.cols());
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    a.col(c) = apply_matrix_vec(rho.col(c), m, targets, n_qubits);
  }
  Matrix b = a.adjoint();
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    b.col(c) = apply_matrix_vec(b.col(c), m, targets, n_qubits);
  }
  return b.adjoint();
}

QuantumState apply_gate(const QuantumState& state, const Matrix& gate,
                        std::span<const int> targets) {
  if (gate.rows() != gate.cols()) throw std::invalid_argument("gate must be square");
  check_targets(state.n_qubits(), targets, gate.rows());
  if (!is_unitary(gate)) throw std::invalid_argument("gate is not unitary");
  if (state.is_vector()) {
    return QuantumState::from_vector_unchecked(
        apply_matrix_vec(state.vector(), gate, targets, state.n_qubits()));
  }
  return QuantumState::from_density_unchecked(
      apply_matrix_density(state.density(), gate, targets, state.n_qubits()));
}

QuantumState apply_gate(const QuantumState& state, const Matrix& gate,
                        std::initializer_list<int> targets) {
  std::vector<int> t(targets);
  return apply_gate(state, gate, std::span<const int>(t));
}

QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep_in) {
  const int n = state.n_qubits();
  std::vector<int> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int q : keep) {
    if (q < 0 || q >= n) throw std::invalid_argument("partial_trace: keep index out of range");
  }
  const Matrix rho = state.to_density();
  const int k = static_cast<int>(keep.size());
  std::vector<int> env;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) env.push_back(q);
  }
  const Eigen::Index kd = Eigen::Index(1) << k;
  const Eigen::Index ed = Eigen::Index(1) << (n - k);
  // scatter tables
  std::vector<std::uint64_t> kpos(kd, 0), epos(ed, 0);
  for (Eigen::Index i = 0; i < kd; ++i) {
    std::uint64_t o = 0;
    for (int j = 0; j < k; ++j) {
      if ((i >> (k - 1 - j)) & 1) o |= std::uint64_t(1) << shift_of(n, keep[j]);
    }
    kpos[i] = o;
  }
  for (Eigen::Index e = 0; e < ed; ++e) {
    std::uint64_t o = 0;
    for (std::size_t j = 0; j < env.size(); ++j) {
      if ((e >> (env.size() - 1 - j)) & 1) o |= std::uint64_t(1) << shift_of(n, env[j]);
    }
    epos[e] = o;
  }
  Matrix out = Matrix::Zero(kd, kd);
  for (Eigen::Index i = 0; i < kd; ++i) {
    for (Eigen::Index j = 0; j < kd; ++j) {
      cdouble s = 0;
      for (Eigen::Index e = 0; e < ed; ++e) {
        s += rho(kpos[i] | epos[e], kpos[j] | epos[e]);
      }
      out(i, j) = s;
    }
  }
  return QuantumState::from_density_unchecked(std::move(out));
}

MeasureResult measure_projective(const QuantumState& state,
                                 const std::vector<Matrix>& projectors, Rng& rng) {
  if (projectors.empty()) throw std::invalid_argument("no projectors given");
  const Eigen::Index d = state.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& p : projectors) {
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("projector dimension mismatch");
    }
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
      throw std::invalid_argument("projector is not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > kStateTol) {
      throw std::invalid_argument("projector is not idempotent");
    }
    sum += p;
  }
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > kStateTol) {
    throw std::invalid_argument("projectors do not resolve the identity");
  }
  std::vector<double> probs(projectors.size());
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    double p;
    if (state.is_vector()) {
      p = (state.vector().adjoint() * projectors[i] * state.vector())(0).real();
    } else {
      p = (projectors[i] * state.density()).trace().real();
    }
    probs[i] = std::max(0.0, p);
  }
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t pick = projectors.size() - 1;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) { pick = i; break; }
  }
  MeasureResult r{static_cast<int>(pick), state, probs[pick]};
  if (probs[pick] <= 0.0) throw std::runtime_error("sampled a zero-probability outcome");
  if (state.is_vector()) {
    Vector post = projectors[pick] * state.vector();
    post /= post.norm();
    r.post = QuantumState::from_vector_unchecked(std::move(post));
  } else {
    Matrix post = projectors[pick] * state.density() * projectors[pick];
    post /= post.trace().real();
    r.post = QuantumState::from_density_unchecked(std::move(post));
  }
  return r;
}

double qubit_outcome_probability(const QuantumState& state, int qubit, int bit) {
  const int n = state.n_qubits();
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("qubit out of range");
  const int s = shift_of(n, qubit);
  double p = 0.0;
  if (state.is_vector()) {
    const Vector& v = state.vector();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (((i >> s) & 1) == bit) p += std::norm(v(i));
    }
  } else {
    const Matrix& rho = state.density();
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      if (((i >> s) & 1) == bit) p += rho(i, i).real();
    }
  }
  return p;
}

std::pair<QuantumState, double> project_and_remove_qubit(const QuantumState& state,
                                                         int qubit, int bit) {
  const int n = state.n_qubits();
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("qubit out of range");
  const double p = qubit_outcome_probability(state, qubit, bit);
  const Eigen::Index rd = Eigen::Index(1) << (n - 1);
  if (state.is_vector()) {
    const Vector& v = state.vector();
    Vector out(rd);
    for (Eigen::Index r = 0; r < rd; ++r) out(r) = v(insert_bit(r, n, qubit, bit));
    if (p > 0.0) out /= std::sqrt(p);
    return {QuantumState::from_vector_unchecked(std::move(out)), p};
  }
  const Matrix& rho = state.density();
  Matrix out(rd, rd);
  for (Eigen::Index r = 0; r < rd; ++r) {
    for (Eigen::Index c = 0; c < rd; ++c) {
      out(r, c) = rho(insert_bit(r, n, qubit, bit), insert_bit(c, n, qubit, bit));
    }
  }
  if (p > 0.0) out /= p;
  return {QuantumState::from_density_unchecked(std::move(out)), p};
}

QubitMeasure measure_and_remove_qubit(const QuantumState& state, int qubit, Rng& rng) {
  const double p1 = qubit_outcome_probability(state, qubit, 1);
  const int bit = rng.uniform() < p1 ? 1 : 0;
  auto [post, p] = project_and_remove_qubit(state, qubit, bit);
  return QubitMeasure{bit, p, std::move(post)};
}

double fidelity(const QuantumState& pure, const QuantumState& candidate) {
  if (!pure.is_vector()) {
    throw std::invalid_argument("fidelity: first argument must be a pure state vector");
  }
  if (pure.dim() != candidate.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const Vector& psi = pure.vector();
  double f;
  if (candidate.is_vector()) {
    const Vector& phi = candidate.vector();
    f = std::norm((psi.adjoint() * phi)(0)) / (psi.squaredNorm() * phi.squaredNorm());
  } else {
    const Matrix& rho = candidate.density();
    f = (psi.adjoint() * rho * psi)(0).real() / (psi.squaredNorm() * rho.trace().real());
  }
  return std::clamp(f, 0.0, 1.0);
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  if (a.n_qubits() + b.n_qubits() > kMaxQubits) {
    throw std::invalid_argument("tensor: exceeds the 12-qubit cap");
  }
  if (a.is_vector() && b.is_vector()) {
    const Vector& u = a.vector();
    const Vector& v = b.vector();
    Vector out(u.size() * v.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      out.segment(i * v.size(), v.size()) = u(i) * v;
    }
    return QuantumState::from_vector_unchecked(std::move(out));
  }
  return QuantumState::from_density_unchecked(kron(a.to_density(), b.to_density()));
}

QuantumState insert_qubit(const QuantumState& state, int position, const Vector& ket) {
  const int n = state.n_qubits() + 1;
  if (position < 0 || position >= n) throw std::invalid_argument("insert position out of range");
  if (ket.size() != 2) throw std::invalid_argument("inserted qubit must be a 2-vector");
  if (n > kMaxQubits) throw std::invalid_argument("insert_qubit: exceeds the 12-qubit cap");
  if (state.is_vector()) {
    const Vector& v = state.vector();
    Vector out = Vector::Zero(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      for (int b = 0; b < 2; ++b) out(insert_bit(i, n, position, b)) = v(i) * ket(b);
    }
    return QuantumState::from_vector_unchecked(std::move(out));
  }
  const Matrix& rho = state.density();
  Matrix out = Matrix::Zero(rho.rows() * 2, rho.cols() * 2);
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) {
          out(insert_bit(r, n, position, b), insert_bit(c, n, position, bp)) =
              rho(r, c) * ket(b) * std::conj(ket(bp));
        }
      }
    }
  }
  return QuantumState::from_density_unchecked(std::move(out));
}

}  // namespace qseal
