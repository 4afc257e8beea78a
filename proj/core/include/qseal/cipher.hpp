#ifndef QSEAL_CIPHER_HPP
#define QSEAL_CIPHER_HPP

#include <optional>

#include "qseal/keys.hpp"
#include "qseal/state.hpp"

namespace qseal {

// A transmitted 2n-qubit state in the interleaved layout
// [Q1, S1, Q2, S2, ..., Qn, Sn]: pair k lives on qubits (2k, 2k+1).
// Move-only: a ciphertext is a physical payload, never duplicated.
struct Ciphertext {
  QuantumState state;

  explicit Ciphertext(QuantumState s);
  Ciphertext(const Ciphertext&) = delete;
  Ciphertext& operator=(const Ciphertext&) = delete;
  Ciphertext(Ciphertext&&) = default;
  Ciphertext& operator=(Ciphertext&&) = default;

  int n_pairs() const { return state.n_qubits() / 2; }
};

// qubit k -> sigma_{i_k} (self-inverse up to global phase; the inverse flag
// exists for interface symmetry).
QuantumState apply_pauli_mask(const QuantumState& state, const PauliKey& key,
                              bool inverse = false);

// (1/4^n) sum_j U_j rho U_j^dag by explicit summation; n <= 3.
QuantumState average_over_pauli_masks(const QuantumState& rho);

// Full two-stage encryption: Pauli mask, attach the signature qubit beside
// each payload qubit, CNOT (control Q_k, target S_k), then the per-qubit
// basis mask L_{k,1} on Q_k and L_{k,2} on S_k.
Ciphertext encrypt(const QuantumState& psi, const PauliKey& key, const Signature& sig,
                   const BasisMask& mask);

// Bob's step 4 head: L^dag on every qubit, then the pair CNOTs. After this
// the S qubits factor out as |a_k (+) error>.
QuantumState decrypt_unmask(Ciphertext c, const BasisMask& mask);

struct VerifyResult {
  bool pass = false;
  Signature measured;
  QuantumState q_state;  // marginal over the Q qubits, in payload order
};

// Measure the S qubits in the computational basis; pass iff every bit equals
// the expected signature.
VerifyResult verify_signature(const QuantumState& unmasked, const Signature& sig, Rng& rng);

// Bob's step 6: inverse Pauli mask on the Q register.
QuantumState decrypt_final(const QuantumState& q_state, const PauliKey& key);

}  // namespace qseal

#endif
