#pragma once

#include <functional>

#include "anyonkit/gates.hpp"

namespace anyonkit {

// ---- standalone measurements on fusion-tree states -------------------------

struct MeasurementSpec {
  enum class Kind { PairChargeA, Subspace, ComputationalZero } kind;
  // Subspace: orthonormal vectors spanning S
  std::vector<StateVector> subspace;
  // ComputationalZero: the encoding whose |0> is projected onto
  const Encoding* encoding = nullptr;

  static MeasurementSpec pair_charge_a();
  static MeasurementSpec in_subspace(std::vector<StateVector> s);
  static MeasurementSpec computational_zero(const Encoding& e);
};

struct MeasureOutcome {
  std::string outcome;
  Cyc probability;     // exact Born probability
  StateVector post;    // renormalized when the norm has a square root in the
                       // field, otherwise unnormalized
  bool normalized = false;
};

std::vector<MeasureOutcome> measure(const StateVector& state, const MeasurementSpec& spec);

// ---- adaptive programs ------------------------------------------------------

// Amplitude vector in whatever space a protocol runs on (4-anyon fiber,
// 8-anyon ambient, or abstract qudit registers). Unnormalized throughout;
// probabilities are norm ratios.
using QVec = std::vector<Cyc>;

struct ProtoGate {
  std::string name;
  std::function<QVec(const QVec&)> apply;
};

struct ProtoMeas {
  std::string name;
  std::vector<std::string> outcomes;
  std::function<QVec(const QVec&, int)> project;  // unnormalized projection
};

struct ProtoNode {
  enum class Kind { Apply, Measure, Counter, Terminal } kind;
  int ref = -1;            // gate / measurement / counter id
  int next = -1;           // Apply
  std::vector<int> arms;   // Measure, per outcome
  int limit = 0;           // Counter: max value
  int on_continue = -1, on_exhaust = -1;
  std::string label;       // Terminal
};

struct Protocol {
  std::string name;
  std::vector<ProtoGate> gates;
  std::vector<ProtoMeas> meas;
  std::vector<ProtoNode> nodes;
  int entry = 0;
  int n_counters = 0;
  QVec initial;
  // label -> closed-form probability, when the paper states one
  std::map<std::string, Cyc> closed_forms;

  int add(ProtoNode n) {
    nodes.push_back(std::move(n));
    return int(nodes.size()) - 1;
  }
  int gate(const std::string& nm, std::function<QVec(const QVec&)> f) {
    gates.push_back({nm, std::move(f)});
    return int(gates.size()) - 1;
  }
  int measurement(const std::string& nm, std::vector<std::string> outs,
                  std::function<QVec(const QVec&, int)> f) {
    meas.push_back({nm, std::move(outs), std::move(f)});
    return int(meas.size()) - 1;
  }
};

struct BranchLeaf {
  std::string label;
  Cyc probability;
  QVec state;  // unnormalized
};

struct BranchTree {
  std::map<std::string, Cyc> terminal;  // exact terminal distribution
  std::vector<BranchLeaf> leaves;
  long branches_visited = 0;
  // sampling skeleton: measure nodes with per-branch probabilities
  struct SNode {
    bool is_leaf = false;
    std::string label;
    std::vector<std::pair<double, int>> kids;  // probability, child index
  };
  std::vector<SNode> skeleton;
  int skeleton_root = -1;

  Cyc prob_of(const std::string& label) const {
    auto it = terminal.find(label);
    return it == terminal.end() ? Cyc::zero() : it->second;
  }
};

BranchTree run_exact(const Protocol& p);

// Monte Carlo over the exact tree's branch probabilities (converted to
// float); deterministic per (seed, trial) via splitmix64 substreams.
std::map<std::string, long> run_sampled(const Protocol& p, uint64_t seed, long trials);
std::map<std::string, long> run_sampled(const BranchTree& tree, uint64_t seed, long trials);

// ---- the named protocols of the paper --------------------------------------

// Single procedures (one round) and repeat-until-success chains.
Protocol make_P(int j = 0);                 // |j>_U: h / identity / gamma
Protocol make_Q(int j = 0);                 // |j>_V after gamma
Protocol make_R_proc(int j = 0);            // gamma / identity
Protocol make_P_chain(int max_iter, int j = 0);
Protocol make_R_chain(int max_iter, int j = 0);
Protocol make_S(int i = 0);                 // |H>_A |i>_W -> beta
Protocol make_T_proc(int i = 0);            // |H>_B |i>_U -> beta^-1
Protocol make_S_chain(int max_iter, int i = 0);
Protocol make_O(const Rational& alpha2, int max_iter);  // sigma_x measurement
Protocol make_flip2_round(const QVec& qutrit);          // one sign-flip round
Protocol make_flip2_chain(const QVec& qutrit, int max_iter);
Protocol make_psi_prep();
Protocol make_toffoli(const QVec& three_qubits, int max_rounds);

// named access for the CLI: P, Q, R, S, T, O, flip2, toffoli, psi
Protocol protocol_by_name(const std::string& name, int max_iter);

// Lemma 2 composite: the four sign-flip gates assembled from SUM and FLIP2;
// returns the 27x27 composite and the expected (-1)^{ijk} diagonal target
// restricted to qubit labels.
std::pair<Mat, Mat> lambda2_sigma_z();

// Eq. 2.4 iteration vs the closed forms, exact rationals.
struct AlphaRecursionReport {
  bool ok = true;
  std::vector<Rational> alpha2;  // |alpha_k|^2 for k = 0..n
  std::vector<Rational> b_prod;  // prod_{i<=k} b_i
};
AlphaRecursionReport verify_alpha_recursion(const Rational& alpha2, int n);

// splitmix64 substream; documented RNG for reproducible sampling
uint64_t splitmix64_next(uint64_t& state);
double rng_uniform(uint64_t& state);

}  // namespace anyonkit
