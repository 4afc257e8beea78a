#include "qseal/keys.hpp"

#include <stdexcept>

namespace qseal {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("invalid hex digit");
}

std::vector<int> symbols_to_bits(const std::vector<std::uint8_t>& syms) {
  std::vector<int> bits;
  bits.reserve(syms.size() * 2);
  for (std::uint8_t s : syms) {
    bits.push_back((s >> 1) & 1);
    bits.push_back(s & 1);
  }
  return bits;
}

}  // namespace

std::string bits_to_hex(const std::vector<int>& bits) {
  std::string out;
  const std::size_t nibbles = (bits.size() + 3) / 4;
  out.reserve(nibbles);
  for (std::size_t i = 0; i < nibbles; ++i) {
    int v = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t k = 4 * i + j;
      v = (v << 1) | (k < bits.size() ? (bits[k] & 1) : 0);
    }
    out.push_back(kHexDigits[v]);
  }
  return out;
}

std::vector<int> hex_to_bits(const std::string& hex, int n_bits) {
  const std::size_t nibbles = (static_cast<std::size_t>(n_bits) + 3) / 4;
  if (hex.size() != nibbles) throw std::invalid_argument("hex string has wrong length");
  std::vector<int> bits(n_bits);
  for (std::size_t i = 0; i < nibbles; ++i) {
    const int v = hex_value(hex[i]);
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t k = 4 * i + j;
      const int b = (v >> (3 - j)) & 1;
      if (k < bits.size()) {
        bits[k] = b;
      } else if (b != 0) {
        throw std::invalid_argument("nonzero padding bits in hex string");
      }
    }
  }
  return bits;
}

PauliKey PauliKey::sample(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("key length must be at least 1");
  PauliKey k;
  k.symbols.reserve(n);
  for (int i = 0; i < n; ++i) k.symbols.push_back(static_cast<PauliAxis>(rng.uniform_int(4)));
  return k;
}

PauliKey PauliKey::identity(int n) {
  PauliKey k;
  k.symbols.assign(n, PauliAxis::I);
  return k;
}

PauliKey PauliKey::from_bits(const std::vector<int>& bits) {
  if (bits.size() % 2 != 0) throw std::invalid_argument("pauli key bit count must be even");
  PauliKey k;
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    k.symbols.push_back(static_cast<PauliAxis>((bits[i] << 1) | bits[i + 1]));
  }
  return k;
}

PauliKey PauliKey::from_hex(int n, const std::string& hex) {
  return from_bits(hex_to_bits(hex, 2 * n));
}

std::vector<int> PauliKey::to_bits() const {
  std::vector<std::uint8_t> raw(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) raw[i] = static_cast<std::uint8_t>(symbols[i]);
  return symbols_to_bits(raw);
}

std::string PauliKey::to_hex() const { return bits_to_hex(to_bits()); }

const Matrix& PauliKey::op(int k) const { return pauli(static_cast<int>(symbols.at(k))); }

Signature Signature::sample(int n, Rng& rng) {
  Signature s;
  s.bits.reserve(n);
  for (int i = 0; i < n; ++i) s.bits.push_back(static_cast<std::uint8_t>(rng.bit()));
  return s;
}

Signature Signature::zeros(int n) {
  Signature s;
  s.bits.assign(n, 0);
  return s;
}

Signature Signature::from_string(const std::string& str) {
  Signature s;
  for (char c : str) {
    if (c != '0' && c != '1') throw std::invalid_argument("signature string must be binary");
    s.bits.push_back(c == '1');
  }
  return s;
}

std::string Signature::to_string() const {
  std::string out;
  for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

const Matrix& mask_matrix(MaskOp op) {
  static const Matrix hx = hadamard() * pauli_x();
  switch (op) {
    case MaskOp::I: return pauli_i();
    case MaskOp::H: return hadamard();
    case MaskOp::X: return pauli_x();
    case MaskOp::HX: return hx;
  }
  throw std::invalid_argument("bad mask op");
}

BasisMask BasisMask::sample(int n_pairs, Rng& rng) {
  if (n_pairs < 1) throw std::invalid_argument("mask length must be at least 1 pair");
  BasisMask m;
  m.ops.reserve(2 * n_pairs);
  for (int i = 0; i < 2 * n_pairs; ++i) m.ops.push_back(static_cast<MaskOp>(rng.uniform_int(4)));
  return m;
}

BasisMask BasisMask::identity(int n_pairs) {
  BasisMask m;
  m.ops.assign(2 * n_pairs, MaskOp::I);
  return m;
}

BasisMask BasisMask::from_bits(const std::vector<int>& bits) {
  if (bits.size() % 4 != 0) throw std::invalid_argument("mask bit count must be a multiple of 4");
  BasisMask m;
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    m.ops.push_back(static_cast<MaskOp>((bits[i] << 1) | bits[i + 1]));
  }
  return m;
}

BasisMask BasisMask::from_hex(int n_pairs, const std::string& hex) {
  return from_bits(hex_to_bits(hex, 4 * n_pairs));
}

std::vector<int> BasisMask::to_bits() const {
  std::vector<std::uint8_t> raw(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) raw[i] = static_cast<std::uint8_t>(ops[i]);
  return symbols_to_bits(raw);
}

std::string BasisMask::to_hex() const { return bits_to_hex(to_bits()); }

}  // namespace qseal
