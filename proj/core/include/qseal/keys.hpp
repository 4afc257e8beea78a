#ifndef QSEAL_KEYS_HPP
#define QSEAL_KEYS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qseal/linalg.hpp"
#include "qseal/rng.hpp"

namespace qseal {

// First password: one Pauli index per payload qubit. Serializes to exactly
// 2n bits (0<->00, x<->01, y<->10, z<->11), big-endian within the string.
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliKey {
  std::vector<PauliAxis> symbols;

  static PauliKey sample(int n, Rng& rng);
  static PauliKey identity(int n);
  static PauliKey from_bits(const std::vector<int>& bits);
  static PauliKey from_hex(int n, const std::string& hex);

  int size() const { return static_cast<int>(symbols.size()); }
  std::vector<int> to_bits() const;
  std::string to_hex() const;
  const Matrix& op(int k) const;  // sigma_{i_k}

  bool operator==(const PauliKey&) const = default;
};

struct Signature {
  std::vector<std::uint8_t> bits;

  static Signature sample(int n, Rng& rng);
  static Signature zeros(int n);
  static Signature from_string(const std::string& s);  // e.g. "010"

  int size() const { return static_cast<int>(bits.size()); }
  std::string to_string() const;

  bool operator==(const Signature&) const = default;
};

// Second password: one element of {I, H, X, HX} per transmitted qubit,
// ordered (L_{1,1}, L_{1,2}, ..., L_{n,1}, L_{n,2}): a (Q-op, S-op) pair per
// payload qubit. Serializes to exactly 4n bits (I<->00, H<->01, X<->10,
// HX<->11), big-endian within the string.
enum class MaskOp : std::uint8_t { I = 0, H = 1, X = 2, HX = 3 };

const Matrix& mask_matrix(MaskOp op);

struct BasisMask {
  std::vector<MaskOp> ops;  // length 2n

  static BasisMask sample(int n_pairs, Rng& rng);
  static BasisMask identity(int n_pairs);
  static BasisMask from_bits(const std::vector<int>& bits);
  static BasisMask from_hex(int n_pairs, const std::string& hex);

  int n_pairs() const { return static_cast<int>(ops.size()) / 2; }
  MaskOp q_op(int pair) const { return ops[2 * pair]; }
  MaskOp s_op(int pair) const { return ops[2 * pair + 1]; }
  std::vector<int> to_bits() const;
  std::string to_hex() const;

  bool operator==(const BasisMask&) const = default;
};

// Shared bit packing: MSB-first, zero-padded on the right to whole nibbles.
std::string bits_to_hex(const std::vector<int>& bits);
std::vector<int> hex_to_bits(const std::string& hex, int n_bits);

}  // namespace qseal

#endif
