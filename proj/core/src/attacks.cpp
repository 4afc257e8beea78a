#include "qseal/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qseal {

namespace {

const Matrix& breidbart_unitary() {
  static const Matrix u = [] {
    Matrix m(2, 2);
    const double c = std::cos(std::numbers::pi / 8);
    const double s = std::sin(std::numbers::pi / 8);
    m << c, s, s, -c;
    return m;
  }();
  return u;
}

void check_pairs(const std::vector<int>& pairs, int n_pairs) {
  if (pairs.empty()) throw std::invalid_argument("attack targets no pairs");
  std::vector<int> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate pair index");
  }
  if (sorted.front() < 0 || sorted.back() >= n_pairs) {
    throw std::invalid_argument("pair index out of range");
  }
}

// Sample the intercept/resend trajectory on one qubit of the register:
// rotate the measurement basis onto the computational one, measure and drop
// the qubit, insert the matching resend state.
QuantumState ir_sample_qubit(const QuantumState& state, int qubit,
                             const InterceptResendMap& map, Rng& rng, EveMemory* memory) {
  Matrix basis(2, 2);
  basis.col(0) = bloch_ket(map.measure, 0);
  basis.col(1) = bloch_ket(map.measure, 1);
  QuantumState rotated = apply_gate(state, dagger(basis), {qubit});
  QubitMeasure m = measure_and_remove_qubit(rotated, qubit, rng);
  if (memory) memory->outcomes.push_back(m.bit);
  return insert_qubit(m.post, qubit, bloch_ket(map.resend, m.bit));
}

}  // namespace

Matrix InterceptResendMap::kraus(int outcome) const {
  return bloch_ket(resend, outcome) * bloch_ket(measure, outcome).adjoint();
}

AttackSpec AttackSpec::none() { return AttackSpec{}; }

AttackSpec AttackSpec::ir_single(PairSide side, const BlochVector& measure,
                                 const BlochVector& resend, std::vector<int> pairs) {
  AttackSpec s;
  s.variant = AttackVariant::IrSingle;
  s.side = side;
  s.ir = InterceptResendMap{measure, resend};
  s.pairs = std::move(pairs);
  return s;
}

AttackSpec AttackSpec::ir_pair(const BlochVector& x1, const BlochVector& x2,
                               const BlochVector& x3, const BlochVector& x4,
                               std::vector<int> pairs) {
  AttackSpec s;
  s.variant = AttackVariant::IrPair;
  s.ir_q = InterceptResendMap{x1, x3};
  s.ir_s = InterceptResendMap{x2, x4};
  s.pairs = std::move(pairs);
  return s;
}

AttackSpec AttackSpec::replace_random(std::vector<int> pairs) {
  AttackSpec s;
  s.variant = AttackVariant::ReplaceRandom;
  s.pairs = std::move(pairs);
  return s;
}

AttackSpec AttackSpec::probe_circuit(ProbeCircuit circuit, std::vector<int> pairs) {
  AttackSpec s;
  s.variant = AttackVariant::ProbeCircuit;
  s.probe = std::move(circuit);
  s.pairs = std::move(pairs);
  return s;
}

AttackSpec breidbart_spec(BreidbartTarget target) {
  const BlochVector b = breidbart_vector();
  switch (target) {
    case BreidbartTarget::Q: return AttackSpec::ir_single(PairSide::Q, b, b);
    case BreidbartTarget::S: return AttackSpec::ir_single(PairSide::S, b, b);
    case BreidbartTarget::Pair: return AttackSpec::ir_pair(b, b, b, b);
  }
  throw std::invalid_argument("bad breidbart target");
}

QuantumState ir_map_apply(const QuantumState& rho, const InterceptResendMap& map) {
  if (rho.n_qubits() != 1) throw std::invalid_argument("ir_map_apply expects a single qubit");
  const Matrix r = rho.to_density();
  Matrix out = Matrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    out += (r * map.measure_projector(i)).trace().real() * map.resend_density(i);
  }
  return QuantumState::from_density_unchecked(std::move(out));
}

Ciphertext apply_attack(Ciphertext c, const AttackSpec& spec, Rng& rng, EveMemory* memory) {
  if (spec.variant == AttackVariant::None) return c;
  check_pairs(spec.pairs, c.n_pairs());
  QuantumState state = std::move(c.state);
  const int n_pairs = state.n_qubits() / 2;

  switch (spec.variant) {
    case AttackVariant::IrSingle:
      for (int k : spec.pairs) {
        const int qubit = 2 * k + (spec.side == PairSide::S ? 1 : 0);
        state = ir_sample_qubit(state, qubit, spec.ir, rng, memory);
      }
      break;
    case AttackVariant::IrPair:
      for (int k : spec.pairs) {
        state = ir_sample_qubit(state, 2 * k, spec.ir_q, rng, memory);
        state = ir_sample_qubit(state, 2 * k + 1, spec.ir_s, rng, memory);
      }
      break;
    case AttackVariant::ReplaceRandom: {
      std::vector<int> stolen;
      for (int k : spec.pairs) {
        stolen.push_back(2 * k);
        stolen.push_back(2 * k + 1);
      }
      std::sort(stolen.begin(), stolen.end());
      if (memory) {
        if (static_cast<int>(spec.pairs.size()) == n_pairs) {
          memory->held_state = state;  // she keeps the genuine qubits, all of them
          memory->note = "full ciphertext";
        } else {
          memory->held_state = partial_trace(state, stolen);
          memory->note = "stolen pair marginal";
        }
      }
      std::vector<int> rest;
      for (int q = 0; q < 2 * n_pairs; ++q) {
        if (!std::binary_search(stolen.begin(), stolen.end(), q)) rest.push_back(q);
      }
      QuantumState out = rest.empty()
                             ? QuantumState::from_vector_unchecked(Vector::Ones(1))
                             : (static_cast<int>(rest.size()) == 2 * n_pairs
                                    ? state
                                    : partial_trace(state, rest));
      for (int q : stolen) {
        const QuantumState fresh = QuantumState::haar_random(1, rng);
        out = insert_qubit(out, q, fresh.vector());
      }
      state = std::move(out);
      break;
    }
    case AttackVariant::ProbeCircuit: {
      for (int k : spec.pairs) {
        const int base = state.n_qubits();
        const int n_anc = spec.probe.n_ancillas;
        QuantumState work = n_anc > 0 ? tensor(state, QuantumState::zero_state(n_anc)) : state;
        for (const ProbeGate& g : spec.probe.gates) {
          std::vector<int> targets;
          for (int w : g.wires) {
            if (w == 0) targets.push_back(2 * k);
            else if (w == 1) targets.push_back(2 * k + 1);
            else if (w - 2 < n_anc) targets.push_back(base + w - 2);
            else throw std::invalid_argument("probe gate wire out of range");
          }
          work = apply_gate(work, g.matrix, std::span<const int>(targets));
        }
        if (n_anc > 0) {
          std::vector<int> anc, orig;
          for (int q = 0; q < base; ++q) orig.push_back(q);
          for (int q = 0; q < n_anc; ++q) anc.push_back(base + q);
          if (memory) {
            memory->held_state = partial_trace(work, anc);
            memory->note = "probe ancillas";
          }
          state = partial_trace(work, orig);
        } else {
          state = std::move(work);
        }
      }
      break;
    }
    default:
      break;
  }
  return Ciphertext(std::move(state));
}

std::vector<Matrix> pair_kraus(const AttackSpec& spec) {
  std::vector<Matrix> ks;
  const Matrix id2 = Matrix::Identity(2, 2);
  switch (spec.variant) {
    case AttackVariant::None:
      ks.push_back(Matrix::Identity(4, 4));
      break;
    case AttackVariant::IrSingle:
      for (int i = 0; i < 2; ++i) {
        const Matrix k = spec.ir.kraus(i);
        ks.push_back(spec.side == PairSide::Q ? kron(k, id2) : kron(id2, k));
      }
      break;
    case AttackVariant::IrPair:
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          ks.push_back(kron(spec.ir_q.kraus(i), spec.ir_s.kraus(j)));
        }
      }
      break;
    case AttackVariant::ReplaceRandom:
      // constant map onto I/4
      for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
          Matrix k = Matrix::Zero(4, 4);
          k(p, q) = 0.5;
          ks.push_back(std::move(k));
        }
      }
      break;
    case AttackVariant::ProbeCircuit:
      throw std::invalid_argument("probe circuits use the dilation path, not Kraus form");
  }
  return ks;
}

// ---- probe machinery -----------------------------------------------------

ProbeFamilyOptions::ProbeFamilyOptions() : rotation(breidbart_unitary()) {}

double probe_circuit_pb(const ProbeCircuit& circuit) {
  const int n = 2 + circuit.n_ancillas;
  double total = 0.0;
  int count = 0;
  for (int l1 = 0; l1 < 4; ++l1) {
    for (int l2 = 0; l2 < 4; ++l2) {
      const Matrix& m1 = mask_matrix(static_cast<MaskOp>(l1));
      const Matrix& m2 = mask_matrix(static_cast<MaskOp>(l2));
      for (int a = 0; a < 2; ++a) {
        for (int w = 0; w < 2; ++w) {
          QuantumState s = QuantumState::basis_state(
              n, (std::uint64_t(w) << (n - 1)) | (std::uint64_t(a ^ w) << (n - 2)));
          s = apply_gate(s, m1, {0});
          s = apply_gate(s, m2, {1});
          for (const ProbeGate& g : circuit.gates) {
            s = apply_gate(s, g.matrix, std::span<const int>(g.wires));
          }
          // pass projector on (Q,S): sum_x L1|x><x|L1^+ (x) L2|a^x><a^x|L2^+
          Matrix pi = Matrix::Zero(4, 4);
          for (int x = 0; x < 2; ++x) {
            pi += kron(m1.col(x) * m1.col(x).adjoint(),
                       m2.col(a ^ x) * m2.col(a ^ x).adjoint());
          }
          const std::vector<int> qs{0, 1};
          const Vector pv = apply_matrix_vec(s.vector(), pi, qs, n);
          total += (s.vector().adjoint() * pv)(0).real();
          ++count;
        }
      }
    }
  }
  return total / count;
}

namespace {

struct ProbeAlphabet {
  std::vector<std::string> labels;
  std::vector<Matrix> full;  // dim x dim embedded matrices
};

ProbeAlphabet build_alphabet(int n_wires, const Matrix& rotation) {
  ProbeAlphabet a;
  const Eigen::Index dim = Eigen::Index(1) << n_wires;
  for (int w = 0; w < n_wires; ++w) {
    Matrix m = Matrix::Identity(1, 1);
    for (int q = 0; q < n_wires; ++q) {
      m = kron(m, q == w ? rotation : Matrix(Matrix::Identity(2, 2)));
    }
    a.labels.push_back("U" + std::to_string(w));
    a.full.push_back(std::move(m));
  }
  for (int c = 0; c < n_wires; ++c) {
    for (int t = 0; t < n_wires; ++t) {
      if (c == t) continue;
      Matrix m = Matrix::Zero(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        const int cb = (i >> (n_wires - 1 - c)) & 1;
        m(i ^ (Eigen::Index(cb) << (n_wires - 1 - t)), i) = 1;
      }
      a.labels.push_back("CX" + std::to_string(c) + std::to_string(t));
      a.full.push_back(std::move(m));
    }
  }
  return a;
}

struct ProbeSearcher {
  const ProbeAlphabet& alphabet;
  int max_gates;
  std::uint64_t max_circuits;
  bool collapse;
  std::uint64_t evaluated = 0;
  std::vector<Matrix> batch;        // per depth: dim x 64 config states
  std::vector<Matrix> projectors;   // 64 config projectors, dim x dim
  std::map<long long, ProbeSearchRow> rows;
  std::vector<ProbeSearchRow> flat;
  std::vector<int> seq;

  std::string label_of_seq() const {
    std::string label;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) label += '.';
      label += alphabet.labels[seq[i]];
    }
    return label;
  }

  void dfs(int depth) {
    for (std::size_t g = 0; g < alphabet.full.size(); ++g) {
      if (!seq.empty() && seq.back() == static_cast<int>(g)) continue;  // X X = I
      if (++evaluated > max_circuits) {
        throw std::length_error("probe family exceeds the configured circuit cap");
      }
      batch[depth + 1].noalias() = alphabet.full[g] * batch[depth];
      seq.push_back(static_cast<int>(g));
      score(depth + 1);
      if (depth + 1 < max_gates) dfs(depth + 1);
      seq.pop_back();
    }
  }

  void score(int depth) {
    double total = 0.0;
    for (int k = 0; k < 64; ++k) {
      total += (batch[depth].col(k).adjoint() * projectors[k] * batch[depth].col(k))(0).real();
    }
    const double pb = total / 64.0;
    if (!collapse) {
      flat.push_back(ProbeSearchRow{label_of_seq(), depth, pb, 1});
      return;
    }
    const long long key = std::llround(pb * 1e9);
    auto it = rows.find(key);
    if (it == rows.end()) {
      rows.emplace(key, ProbeSearchRow{label_of_seq(), depth, pb, 1});
    } else {
      ++it->second.count;
      if (depth < it->second.n_gates) {
        it->second.n_gates = depth;
        it->second.pb = pb;
        it->second.label = label_of_seq();
      }
    }
  }
};

}  // namespace

ProbeSearchResult probe_attack_search(const ProbeFamilyOptions& options,
                                      bool collapse_equal_values) {
  if (options.n_ancillas < 0 || options.n_ancillas > 2) {
    throw std::invalid_argument("probe family supports 0..2 ancillas");
  }
  if (!is_unitary(options.rotation) || options.rotation.rows() != 2) {
    throw std::invalid_argument("probe rotation must be a 1-qubit unitary");
  }
  const int n_wires = 2 + options.n_ancillas;
  const Eigen::Index dim = Eigen::Index(1) << n_wires;
  ProbeAlphabet alphabet = build_alphabet(n_wires, options.rotation);

  ProbeSearchResult result;
  if (options.max_gates <= 0) return result;

  // 64 configurations: 16 (L1,L2) masks x signature bit x payload bit
  ProbeSearcher searcher{alphabet, options.max_gates, options.max_circuits,
                         collapse_equal_values};
  searcher.batch.assign(options.max_gates + 1, Matrix::Zero(dim, 64));
  searcher.projectors.reserve(64);
  int col = 0;
  Matrix init(dim, 64);
  const Eigen::Index anc_dim = dim / 4;
  for (int l1 = 0; l1 < 4; ++l1) {
    for (int l2 = 0; l2 < 4; ++l2) {
      const Matrix& m1 = mask_matrix(static_cast<MaskOp>(l1));
      const Matrix& m2 = mask_matrix(static_cast<MaskOp>(l2));
      for (int a = 0; a < 2; ++a) {
        for (int w = 0; w < 2; ++w) {
          // qubits (Q, S) in L1|w>, L2|a^w>; ancillas |0...0>
          Vector qs = kron(m1.col(w), m2.col(a ^ w)).col(0);
          Vector full = Vector::Zero(dim);
          for (int i = 0; i < 4; ++i) full(i * anc_dim) = qs(i);
          init.col(col) = full;
          Matrix pi2 = Matrix::Zero(4, 4);
          for (int x = 0; x < 2; ++x) {
            pi2 += kron(m1.col(x) * m1.col(x).adjoint(),
                        m2.col(a ^ x) * m2.col(a ^ x).adjoint());
          }
          searcher.projectors.push_back(kron(pi2, Matrix(Matrix::Identity(anc_dim, anc_dim))));
          ++col;
        }
      }
    }
  }
  searcher.batch[0] = std::move(init);
  searcher.dfs(0);

  result.circuits_evaluated = searcher.evaluated;
  if (collapse_equal_values) {
    for (auto& [key, row] : searcher.rows) result.rows.push_back(std::move(row));
    std::sort(result.rows.begin(), result.rows.end(),
              [](const ProbeSearchRow& a, const ProbeSearchRow& b) { return a.pb > b.pb; });
  } else {
    result.rows = std::move(searcher.flat);
  }
  return result;
}

ProbeCircuit probe_circuit_from_label(const std::string& label, int n_ancillas,
                                      const Matrix& rotation) {
  ProbeCircuit c;
  c.label = label;
  c.n_ancillas = n_ancillas;
  const int n_wires = 2 + n_ancillas;
  std::size_t pos = 0;
  while (pos < label.size()) {
    std::size_t dot = label.find('.', pos);
    if (dot == std::string::npos) dot = label.size();
    const std::string tok = label.substr(pos, dot - pos);
    ProbeGate g;
    g.name = tok;
    if (tok.size() == 2 && tok[0] == 'U') {
      g.matrix = rotation;
      g.wires = {tok[1] - '0'};
    } else if (tok.size() == 4 && tok.substr(0, 2) == "CX") {
      g.matrix = cnot_gate();
      g.wires = {tok[2] - '0', tok[3] - '0'};
    } else {
      throw std::invalid_argument("bad probe gate token: " + tok);
    }
    for (int w : g.wires) {
      if (w < 0 || w >= n_wires) throw std::invalid_argument("probe wire out of range");
    }
    c.gates.push_back(std::move(g));
    pos = dot + 1;
  }
  return c;
}

}  // namespace qseal
