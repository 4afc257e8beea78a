#ifndef QSEAL_ATTACKS_HPP
#define QSEAL_ATTACKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qseal/cipher.hpp"

namespace qseal {

enum class AttackVariant { None, IrSingle, IrPair, ReplaceRandom, ProbeCircuit };
enum class PairSide { Q, S };

// Measure-and-resend map on one qubit: measure in the basis of `measure`
// (projectors 1/2[I +- measure.sigma]), resend the `resend`-basis state
// matching the outcome.
struct InterceptResendMap {
  BlochVector measure;
  BlochVector resend;

  Matrix measure_projector(int outcome) const { return bloch_projector(measure, outcome); }
  Matrix resend_density(int outcome) const { return bloch_projector(resend, outcome); }
  // rank-1 Kraus |resend_outcome><measure_outcome|
  Matrix kraus(int outcome) const;
};

// A gate in an eavesdropping probe circuit. Wire 0 is the pair's Q qubit,
// wire 1 its S qubit, wires 2.. are Eve's ancillas (prepared |0>).
struct ProbeGate {
  std::string name;           // informational label
  Matrix matrix;              // unitary, dim 2^{wires}
  std::vector<int> wires;
};

struct ProbeCircuit {
  std::string label;
  int n_ancillas = 0;
  std::vector<ProbeGate> gates;
};

struct AttackSpec {
  AttackVariant variant = AttackVariant::None;
  std::vector<int> pairs;  // targeted pair indices

  // ir_single
  PairSide side = PairSide::S;
  InterceptResendMap ir;

  // ir_pair: X1 = measure on Q, X2 = measure on S, X3 = resend on Q,
  // X4 = resend on S (independent maps on the two qubits of each pair)
  InterceptResendMap ir_q;
  InterceptResendMap ir_s;

  // probe_circuit
  ProbeCircuit probe;

  static AttackSpec none();
  static AttackSpec ir_single(PairSide side, const BlochVector& measure,
                              const BlochVector& resend, std::vector<int> pairs = {0});
  static AttackSpec ir_pair(const BlochVector& x1, const BlochVector& x2, const BlochVector& x3,
                            const BlochVector& x4, std::vector<int> pairs = {0});
  static AttackSpec replace_random(std::vector<int> pairs = {0});
  static AttackSpec probe_circuit(ProbeCircuit circuit, std::vector<int> pairs = {0});
};

enum class BreidbartTarget { Q, S, Pair };

inline BlochVector breidbart_vector() {
  const double r = 1.0 / std::sqrt(2.0);
  return BlochVector{r, 0.0, r};
}

// The reflection [[cos pi/8, sin pi/8], [sin pi/8, -cos pi/8]]; measuring
// after it and resending through it is Breidbart-basis intercept/resend.
const Matrix& breidbart_unitary();

// Intercept/resend preset with measure = resend = the basis bisecting the
// two conjugate bases.
AttackSpec breidbart_spec(BreidbartTarget target);

// Exact channel action $(rho) = sum_i Tr(rho m_i) r_i on one qubit.
QuantumState ir_map_apply(const QuantumState& rho, const InterceptResendMap& map);

struct EveMemory {
  std::vector<int> outcomes;                  // sampled measurement results
  std::optional<QuantumState> held_state;     // what Eve kept (her marginal)
  std::string note;
};

// Trajectory-mode application: sampling where the physics samples. The exact
// channel counterpart lives in analysis (exact_pass_probability).
Ciphertext apply_attack(Ciphertext c, const AttackSpec& spec, Rng& rng,
                        EveMemory* memory = nullptr);

// 4x4 Kraus operators of the per-pair channel, for the exact engines.
// Probe circuits are handled by unitary dilation instead.
std::vector<Matrix> pair_kraus(const AttackSpec& spec);

// ---- probe search ------------------------------------------------------

struct ProbeFamilyOptions {
  int n_ancillas = 1;           // wires = Q, S + ancillas
  int max_gates = 6;
  Matrix rotation;              // defaults to the Breidbart reflection
  std::uint64_t max_circuits = 2'000'000;

  ProbeFamilyOptions();
};

struct ProbeSearchRow {
  std::string label;  // dotted gate list, e.g. "U2.CX02.U2.CX21.U2.CX02"
  int n_gates = 0;
  double pb = 0.0;
  std::uint64_t count = 1;  // circuits in the family sharing this value (when collapsed)
};

struct ProbeSearchResult {
  std::vector<ProbeSearchRow> rows;
  std::uint64_t circuits_evaluated = 0;
};

// Exact P_B for one probe circuit on classical payloads: averaged over the
// 16 (L1,L2) masks, the signature bit, and the payload bit.
double probe_circuit_pb(const ProbeCircuit& circuit);

// Enumerate every gate sequence up to max_gates over the alphabet
// {rotation on any wire, CNOT on any ordered wire pair} (immediate
// self-inverse repeats pruned) and tabulate exact P_B. With collapse on,
// one row per distinct value carrying a shortest exemplar and a count.
ProbeSearchResult probe_attack_search(const ProbeFamilyOptions& options,
                                      bool collapse_equal_values = true);

// Expand a search label back into a circuit (for re-checking exemplars).
ProbeCircuit probe_circuit_from_label(const std::string& label, int n_ancillas,
                                      const Matrix& rotation);

}  // namespace qseal

#endif
