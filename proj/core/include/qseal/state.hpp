#ifndef QSEAL_STATE_HPP
#define QSEAL_STATE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qseal/linalg.hpp"
#include "qseal/rng.hpp"

namespace qseal {

// Dense n-qubit state, either an amplitude vector of length 2^n or a density
// matrix of shape 2^n x 2^n. Qubit 0 is the leftmost tensor factor (big
// endian): basis index bit (n-1-q) carries qubit q. Values are immutable
// after construction; all operations return new states. n = 0 (scalar) is
// legal and acts as the identity for tensor composition.
class QuantumState {
 public:
  enum class Form { Vector, Density };

  // Validating constructors: norm / hermiticity / trace / positivity within
  // kStateTol, dimension a power of two <= 2^kMaxQubits.
  static QuantumState from_vector(Vector v);
  static QuantumState from_density(Matrix rho);
  // Trusted fast paths for internal loops that preserve validity.
  static QuantumState from_vector_unchecked(Vector v);
  static QuantumState from_density_unchecked(Matrix rho);

  static QuantumState basis_state(int n_qubits, std::uint64_t bits);
  static QuantumState zero_state(int n_qubits);
  static QuantumState plus_state();                     // H|0>
  static QuantumState bell_phi_plus();                  // (|00>+|11>)/sqrt(2)
  static QuantumState maximally_mixed(int n_qubits);
  static QuantumState haar_random(int n_qubits, Rng& rng);
  // Single qubit from bloch angles, |psi> = cos(t/2)|0> + e^{ip} sin(t/2)|1>.
  static QuantumState qubit(double theta, double phi);

  Form form() const { return form_; }
  bool is_vector() const { return form_ == Form::Vector; }
  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index(1) << n_; }

  const Vector& vector() const;  // throws unless vector form
  const Matrix& density() const; // throws unless density form
  Matrix to_density() const;     // either form
  QuantumState as_density() const;

 private:
  QuantumState(int n, Vector v) : n_(n), form_(Form::Vector), vec_(std::move(v)) {}
  QuantumState(int n, Matrix m) : n_(n), form_(Form::Density), mat_(std::move(m)) {}

  int n_ = 0;
  Form form_ = Form::Vector;
  Vector vec_;
  Matrix mat_;
};

// gate on the ordered target qubits (gate qubit k = targets[k]), identity
// elsewhere. Gate must be unitary of dimension 2^{|targets|}; targets
// distinct and in range.
QuantumState apply_gate(const QuantumState& state, const Matrix& gate,
                        std::span<const int> targets);
QuantumState apply_gate(const QuantumState& state, const Matrix& gate,
                        std::initializer_list<int> targets);

// Internal kernel without the unitarity check, used by channel code that
// applies Kraus operators. Preserves nothing; caller knows what it is doing.
Vector apply_matrix_vec(const Vector& v, const Matrix& m, std::span<const int> targets,
                        int n_qubits);
Matrix apply_matrix_density(const Matrix& rho, const Matrix& m, std::span<const int> targets,
                            int n_qubits);

// Reduced density matrix over `keep` (ascending result order follows the
// ascending order of kept qubit indices).
QuantumState partial_trace(const QuantumState& rho, const std::vector<int>& keep);

struct MeasureResult {
  int outcome = 0;
  QuantumState post;
  double probability = 0.0;  // exact Born probability of `outcome`
};

// Projective measurement: projectors must be Hermitian, idempotent and
// resolve the identity within kStateTol. Outcome sampled with Born
// probabilities from rng; post-state renormalized.
MeasureResult measure_projective(const QuantumState& state,
                                 const std::vector<Matrix>& projectors, Rng& rng);

// Computational-basis measurement of a single qubit; the measured qubit is
// removed from the register. Returns (bit, exact probability, reduced state).
struct QubitMeasure {
  int bit = 0;
  double probability = 0.0;
  QuantumState post;
};
QubitMeasure measure_and_remove_qubit(const QuantumState& state, int qubit, Rng& rng);

// Exact probability that computational measurement of `qubit` yields `bit`.
double qubit_outcome_probability(const QuantumState& state, int qubit, int bit);

// Project `qubit` onto computational |bit> and drop it (no sampling).
// Returns the renormalized reduced state and the branch probability.
std::pair<QuantumState, double> project_and_remove_qubit(const QuantumState& state,
                                                         int qubit, int bit);

// <psi|rho|psi> for pure `pure` (vector form), clamped to [0,1]; tiny norm
// drift in either argument is divided out.
double fidelity(const QuantumState& pure, const QuantumState& candidate);

QuantumState tensor(const QuantumState& a, const QuantumState& b);

// Insert a fresh qubit in state `ket` (2-vector) so that it becomes qubit
// `position` of the result.
QuantumState insert_qubit(const QuantumState& state, int position, const Vector& ket);

}  // namespace qseal

#endif
