#include "qseal/cipher.hpp"

#include <stdexcept>

namespace qseal {

Ciphertext::Ciphertext(QuantumState s) : state(std::move(s)) {
  if (state.n_qubits() % 2 != 0) {
    throw std::invalid_argument("ciphertext qubit count must be even");
  }
}

QuantumState apply_pauli_mask(const QuantumState& state, const PauliKey& key, bool inverse) {
  (void)inverse;  // every sigma is self-inverse up to global phase
  if (key.size() != state.n_qubits()) {
    throw std::invalid_argument("pauli key length does not match state");
  }
  QuantumState out = state;
  for (int k = 0; k < key.size(); ++k) {
    if (key.symbols[k] == PauliAxis::I) continue;
    out = apply_gate(out, key.op(k), {k});
  }
  return out;
}

QuantumState average_over_pauli_masks(const QuantumState& state) {
  const int n = state.n_qubits();
  if (n > 3) throw std::invalid_argument("average_over_pauli_masks: n must be <= 3");
  const Matrix rho = state.to_density();
  Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
  const int count = 1 << (2 * n);
  for (int j = 0; j < count; ++j) {
    PauliKey key;
    for (int q = 0; q < n; ++q) {
      key.symbols.push_back(static_cast<PauliAxis>((j >> (2 * (n - 1 - q))) & 3));
    }
    acc += apply_pauli_mask(QuantumState::from_density_unchecked(rho), key).to_density();
  }
  return QuantumState::from_density_unchecked(acc / double(count));
}

Ciphertext encrypt(const QuantumState& psi, const PauliKey& key, const Signature& sig,
                   const BasisMask& mask) {
  const int n = psi.n_qubits();
  if (n < 1) throw std::invalid_argument("encrypt: payload must have at least 1 qubit");
  if (key.size() != n || sig.size() != n || mask.n_pairs() != n) {
    throw std::invalid_argument("encrypt: password/signature lengths do not match payload");
  }
  QuantumState s = apply_pauli_mask(psi, key);
  // interleave the signature qubits: S_k becomes qubit 2k+1
  for (int k = 0; k < n; ++k) {
    Vector a(2);
    a << (sig.bits[k] ? 0.0 : 1.0), (sig.bits[k] ? 1.0 : 0.0);
    s = insert_qubit(s, 2 * k + 1, a);
  }
  for (int k = 0; k < n; ++k) {
    s = apply_gate(s, cnot_gate(), {2 * k, 2 * k + 1});
  }
  for (int k = 0; k < n; ++k) {
    if (mask.q_op(k) != MaskOp::I) s = apply_gate(s, mask_matrix(mask.q_op(k)), {2 * k});
    if (mask.s_op(k) != MaskOp::I) s = apply_gate(s, mask_matrix(mask.s_op(k)), {2 * k + 1});
  }
  return Ciphertext(std::move(s));
}

QuantumState decrypt_unmask(Ciphertext c, const BasisMask& mask) {
  const int n = c.n_pairs();
  if (mask.n_pairs() != n) throw std::invalid_argument("decrypt_unmask: mask length mismatch");
  QuantumState s = std::move(c.state);
  for (int k = 0; k < n; ++k) {
    if (mask.q_op(k) != MaskOp::I) {
      s = apply_gate(s, dagger(mask_matrix(mask.q_op(k))), {2 * k});
    }
    if (mask.s_op(k) != MaskOp::I) {
      s = apply_gate(s, dagger(mask_matrix(mask.s_op(k))), {2 * k + 1});
    }
  }
  for (int k = 0; k < n; ++k) {
    s = apply_gate(s, cnot_gate(), {2 * k, 2 * k + 1});
  }
  return s;
}

VerifyResult verify_signature(const QuantumState& unmasked, const Signature& sig, Rng& rng) {
  const int n = unmasked.n_qubits() / 2;
  if (sig.size() != n) throw std::invalid_argument("verify_signature: signature length mismatch");
  VerifyResult r{true, Signature{}, unmasked};
  // S qubits sit at odd positions; each removal shifts the ones after it
  for (int k = 0; k < n; ++k) {
    const int pos = 2 * k + 1 - k;  // position of S_k after k removals
    QubitMeasure m = measure_and_remove_qubit(r.q_state, pos, rng);
    r.measured.bits.push_back(static_cast<std::uint8_t>(m.bit));
    r.q_state = std::move(m.post);
    if (m.bit != sig.bits[k]) r.pass = false;
  }
  return r;
}

QuantumState decrypt_final(const QuantumState& q_state, const PauliKey& key) {
  return apply_pauli_mask(q_state, key, /*inverse=*/true);
}

}  // namespace qseal
