#include "anyonkit/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace anyonkit {

// ---- standalone measurements ------------------------------------------------

MeasurementSpec MeasurementSpec::pair_charge_a() {
  return {Kind::PairChargeA, {}, nullptr};
}
MeasurementSpec MeasurementSpec::in_subspace(std::vector<StateVector> s) {
  return {Kind::Subspace, std::move(s), nullptr};
}
MeasurementSpec MeasurementSpec::computational_zero(const Encoding& e) {
  return {Kind::ComputationalZero, {}, &e};
}

namespace {

StateVector renormalize(StateVector v, const Cyc& norm2, bool& normalized) {
  normalized = false;
  if (norm2.is_rational()) {
    if (auto root = sqrt_in_field(norm2.as_rational())) {
      if (!root->is_zero()) {
        Cyc inv = root->inverse();
        for (auto& a : v.amp)
          if (!a.is_zero()) a = a * inv;
        normalized = true;
      }
    }
  }
  return v;
}

}  // namespace

std::vector<MeasureOutcome> measure(const StateVector& state, const MeasurementSpec& spec) {
  Cyc total = state.norm2();
  if (total.is_zero()) throw std::domain_error("measure: zero state");
  Cyc total_inv = total.inverse();
  std::vector<std::pair<std::string, StateVector>> parts;
  switch (spec.kind) {
    case MeasurementSpec::Kind::PairChargeA: {
      // total charge of the first pair: A versus anything else
      StateVector yes = StateVector::zero(*state.basis), no = yes;
      auto slots = state.basis->shape.label_slots();
      int slot = -1;
      for (size_t s = 0; s < slots.size(); ++s)
        if (slots[s] == std::make_pair(1, 2)) slot = int(s);
      if (slot < 0) throw std::domain_error("measure: no (1,2) pair vertex on this shape");
      for (size_t k = 0; k < state.amp.size(); ++k) {
        if (state.amp[k].is_zero()) continue;
        (state.basis->elems[k][slot] == Label::A ? yes : no).amp[k] = state.amp[k];
      }
      parts.push_back({"A", std::move(yes)});
      parts.push_back({"not_A", std::move(no)});
      break;
    }
    case MeasurementSpec::Kind::Subspace: {
      StateVector in = StateVector::zero(*state.basis);
      for (const auto& s : spec.subspace) {
        Cyc c = inner_product(s, state);
        if (c.is_zero()) continue;
        for (size_t k = 0; k < in.amp.size(); ++k)
          if (!s.amp[k].is_zero()) in.amp[k] += c * s.amp[k];
      }
      StateVector out = state;
      for (size_t k = 0; k < out.amp.size(); ++k) out.amp[k] -= in.amp[k];
      parts.push_back({"S", std::move(in)});
      parts.push_back({"S_perp", std::move(out)});
      break;
    }
    case MeasurementSpec::Kind::ComputationalZero: {
      const StateVector& zero_ket = spec.encoding->kets[0];
      Cyc c = inner_product(zero_ket, state);
      StateVector in = StateVector::zero(*state.basis);
      for (size_t k = 0; k < in.amp.size(); ++k)
        if (!zero_ket.amp[k].is_zero()) in.amp[k] = c * zero_ket.amp[k];
      StateVector out = state;
      for (size_t k = 0; k < out.amp.size(); ++k) out.amp[k] -= in.amp[k];
      parts.push_back({"zero", std::move(in)});
      parts.push_back({"zero_perp", std::move(out)});
      break;
    }
  }
  std::vector<MeasureOutcome> outcomes;
  for (auto& [label, post] : parts) {
    Cyc n2 = post.norm2();
    if (n2.is_zero()) continue;
    MeasureOutcome o;
    o.outcome = label;
    o.probability = n2 * total_inv;
    o.post = renormalize(std::move(post), n2, o.normalized);
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

// ---- exact evaluation ---------------------------------------------------------

namespace {

Cyc vec_norm2(const QVec& v) {
  Cyc s;
  for (const auto& a : v)
    if (!a.is_zero()) s += a * a.conjugate();
  return s;
}

struct Walker {
  const Protocol& p;
  BranchTree& tree;

  int run(int node, QVec state, Cyc prob, std::vector<int>& counters) {
    ++tree.branches_visited;
    const ProtoNode& n = p.nodes[node];
    switch (n.kind) {
      case ProtoNode::Kind::Apply: {
        QVec next = p.gates[n.ref].apply(state);
        return run(n.next, std::move(next), std::move(prob), counters);
      }
      case ProtoNode::Kind::Counter: {
        if (counters[n.ref] >= n.limit) return run(n.on_exhaust, std::move(state), std::move(prob), counters);
        ++counters[n.ref];
        int idx = run(n.on_continue, std::move(state), std::move(prob), counters);
        --counters[n.ref];
        return idx;
      }
      case ProtoNode::Kind::Terminal: {
        tree.terminal[n.label] += prob;
        tree.leaves.push_back({n.label, prob, std::move(state)});
        BranchTree::SNode leaf;
        leaf.is_leaf = true;
        leaf.label = n.label;
        tree.skeleton.push_back(std::move(leaf));
        return int(tree.skeleton.size()) - 1;
      }
      case ProtoNode::Kind::Measure: {
        const ProtoMeas& ms = p.meas[n.ref];
        Cyc total = vec_norm2(state);
        if (total.is_zero()) throw std::domain_error("measure on zero state in protocol");
        Cyc tinv = total.inverse();
        BranchTree::SNode sn;
        for (size_t oc = 0; oc < ms.outcomes.size(); ++oc) {
          QVec proj = ms.project(state, int(oc));
          Cyc n2 = vec_norm2(proj);
          if (n2.is_zero()) continue;
          Cyc pb = n2 * tinv;
          int child = run(n.arms[oc], std::move(proj), prob * pb, counters);
          sn.kids.push_back({pb.to_complex().real(), child});
        }
        tree.skeleton.push_back(std::move(sn));
        return int(tree.skeleton.size()) - 1;
      }
    }
    throw std::logic_error("unreachable protocol node kind");
  }
};

}  // namespace

BranchTree run_exact(const Protocol& p) {
  BranchTree tree;
  std::vector<int> counters(std::max(1, p.n_counters), 0);
  Walker w{p, tree};
  tree.skeleton_root = w.run(p.entry, p.initial, Cyc::one(), counters);
  return tree;
}

uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double rng_uniform(uint64_t& state) {
  return double(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

std::map<std::string, long> run_sampled(const BranchTree& tree, uint64_t seed, long trials) {
  if (trials < 1) throw std::invalid_argument("run_sampled: need at least one trial");
  std::map<std::string, long> counts;
  for (long t = 0; t < trials; ++t) {
    uint64_t stream = seed ^ (0x9E3779B97F4A7C15ull * uint64_t(t + 1));
    int at = tree.skeleton_root;
    while (!tree.skeleton[at].is_leaf) {
      const auto& kids = tree.skeleton[at].kids;
      double u = rng_uniform(stream);
      double acc = 0.0;
      int chosen = kids.back().second;
      for (const auto& [pb, child] : kids) {
        acc += pb;
        if (u < acc) {
          chosen = child;
          break;
        }
      }
      at = chosen;
    }
    ++counts[tree.skeleton[at].label];
  }
  return counts;
}

std::map<std::string, long> run_sampled(const Protocol& p, uint64_t seed, long trials) {
  BranchTree tree = run_exact(p);
  return run_sampled(tree, seed, trials);
}

// ---- helpers for the protocol factories --------------------------------------

namespace {

Rational frac(long n, long d) { return Rational(n, d); }

// published-form (D,G) gates on the 9-dim fiber
struct FiberGates {
  Mat hprime, hprime_inv, p2q2p2;
  std::vector<int> u_indices{0, 1, 2};  // GG, AG, GA lead the published order
};

const FiberGates& fiber_gates() {
  static const FiberGates fg = [] {
    const auto& sig = dg_published_sigmas();
    Mat p = sig[0] * sig[1] * sig[0];
    Mat q = sig[2] * sig[1] * sig[2];
    Mat p2 = p * p, q2 = q * q;
    FiberGates f;
    f.hprime = q2 * p * q2;
    f.hprime_inv = f.hprime.dagger();
    f.p2q2p2 = p2 * q2 * p2;
    return f;
  }();
  return fg;
}

int add_gate(Protocol& p, const std::string& nm, const Mat& m) {
  return p.gate(nm, [m](const QVec& v) { return m.apply(v); });
}

// projector onto listed coordinates (diagonal measurement)
int add_coord_meas(Protocol& p, const std::string& nm, std::vector<std::string> outcome_names,
                   std::function<int(int)> classify) {
  return p.measurement(nm, std::move(outcome_names), [classify](const QVec& v, int oc) {
    QVec out(v.size());
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero() && classify(int(k)) == oc) out[k] = v[k];
    return out;
  });
}

int meas_U(Protocol& p) {
  return add_coord_meas(p, "M_U", {"U", "U_perp"}, [](int k) { return k < 3 ? 0 : 1; });
}

Cyc pow_rational(const Rational& r, int n) {
  Rational acc(1);
  for (int i = 0; i < n; ++i) acc *= r;
  return Cyc(acc);
}

// 3^k and 2^k register helpers
Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          if (!b.at(r, c).is_zero())
            out.at(i * b.rows() + r, j * b.cols() + c) = a.at(i, j) * b.at(r, c);
    }
  return out;
}

// gate g on the listed wires of a radix^n register (wire 1 = most significant)
Mat embed_gate(int radix, int nwires, const std::vector<int>& wires, const Mat& g) {
  long dim = 1;
  for (int i = 0; i < nwires; ++i) dim *= radix;
  Mat out(static_cast<int>(dim), static_cast<int>(dim));
  std::vector<int> digits(nwires);
  for (long src = 0; src < dim; ++src) {
    long rem = src;
    for (int w = nwires - 1; w >= 0; --w) {
      digits[w] = int(rem % radix);
      rem /= radix;
    }
    int gsrc = 0;
    for (int w : wires) gsrc = gsrc * radix + digits[w - 1];
    for (int grow = 0; grow < g.rows(); ++grow) {
      if (g.at(grow, gsrc).is_zero()) continue;
      auto nd = digits;
      int tmp = grow;
      for (int wi = int(wires.size()) - 1; wi >= 0; --wi) {
        nd[wires[wi] - 1] = tmp % radix;
        tmp /= radix;
      }
      long dst = 0;
      for (int w = 0; w < nwires; ++w) dst = dst * radix + nd[w];
      out.at(int(dst), int(src)) += g.at(grow, gsrc);
    }
  }
  return out;
}

}  // namespace

// ---- single-qutrit procedures on V_G^{DDDD} -----------------------------------

Protocol make_P(int j) {
  Protocol p;
  p.name = "P";
  const auto& fg = fiber_gates();
  p.initial = QVec(9);
  p.initial[j] = Cyc::one();
  int g_h = add_gate(p, "h'", fg.hprime);
  int g_c = add_gate(p, "p2q2p2", fg.p2q2p2);
  int mu = meas_U(p);
  int t_h = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "h"});
  int t_id = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "identity"});
  int t_g = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "gamma"});
  int corr = p.add({ProtoNode::Kind::Apply, g_c, t_id, {}, 0, -1, -1, ""});
  int m2 = p.add({ProtoNode::Kind::Measure, mu, -1, {corr, t_g}, 0, -1, -1, ""});
  int a2 = p.add({ProtoNode::Kind::Apply, g_h, m2, {}, 0, -1, -1, ""});
  int m1 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_h, a2}, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Apply, g_h, m1, {}, 0, -1, -1, ""});
  p.closed_forms["h"] = Cyc(frac(1, 3));
  p.closed_forms["identity"] = Cyc(frac(4, 9));
  p.closed_forms["gamma"] = Cyc(frac(2, 9));
  return p;
}

Protocol make_Q(int j) {
  Protocol p;
  p.name = "Q";
  const auto& fg = fiber_gates();
  p.initial = encoding_basis("V").kets[j].amp;
  int g_hi = add_gate(p, "h'^-1", fg.hprime_inv);
  int g_c = add_gate(p, "p2q2p2", fg.p2q2p2);
  int mu = meas_U(p);
  int t_h = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "h"});
  int t_u = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "identity_U"});
  int t_v = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "stay_V"});
  int corr = p.add({ProtoNode::Kind::Apply, g_c, t_v, {}, 0, -1, -1, ""});
  int m2 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_u, corr}, 0, -1, -1, ""});
  int a2 = p.add({ProtoNode::Kind::Apply, g_hi, m2, {}, 0, -1, -1, ""});
  int m1 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_h, a2}, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Apply, g_hi, m1, {}, 0, -1, -1, ""});
  p.closed_forms["h"] = Cyc(frac(2, 3));
  p.closed_forms["identity_U"] = Cyc(frac(2, 9));
  p.closed_forms["stay_V"] = Cyc(frac(1, 9));
  return p;
}

Protocol make_R_proc(int j) {
  Protocol p;
  p.name = "R";
  const auto& fg = fiber_gates();
  p.initial = QVec(9);
  p.initial[j] = Cyc::one();
  int g_h = add_gate(p, "h'", fg.hprime);
  int g_hi = add_gate(p, "h'^-1", fg.hprime_inv);
  int g_c = add_gate(p, "p2q2p2", fg.p2q2p2);
  int mu = meas_U(p);
  int t_id = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "identity"});
  int t_ga = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "gamma"});
  int corr_b = p.add({ProtoNode::Kind::Apply, g_c, t_ga, {}, 0, -1, -1, ""});
  int m2 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_id, corr_b}, 0, -1, -1, ""});
  int b1 = p.add({ProtoNode::Kind::Apply, g_hi, m2, {}, 0, -1, -1, ""});
  int corr_c = p.add({ProtoNode::Kind::Apply, g_c, t_ga, {}, 0, -1, -1, ""});
  int m3 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_id, corr_c}, 0, -1, -1, ""});
  int c1 = p.add({ProtoNode::Kind::Apply, g_hi, m3, {}, 0, -1, -1, ""});
  int m1 = p.add({ProtoNode::Kind::Measure, mu, -1, {b1, c1}, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Apply, g_h, m1, {}, 0, -1, -1, ""});
  p.closed_forms["gamma"] = Cyc(frac(4, 9));
  p.closed_forms["identity"] = Cyc(frac(5, 9));
  return p;
}

Protocol make_P_chain(int max_iter, int j) {
  Protocol p;
  p.name = "P_chain";
  const auto& fg = fiber_gates();
  p.initial = QVec(9);
  p.initial[j] = Cyc::one();
  p.n_counters = 1;
  int g_h = add_gate(p, "h'", fg.hprime);
  int g_hi = add_gate(p, "h'^-1", fg.hprime_inv);
  int g_c = add_gate(p, "p2q2p2", fg.p2q2p2);
  int mu = meas_U(p);
  int t_h = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "h"});
  int t_fail = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "fail"});
  // forward-declared loop heads
  int pu_entry = p.add({ProtoNode::Kind::Counter, 0, -1, {}, max_iter, -1, t_fail, ""});
  int qv_entry = p.add({ProtoNode::Kind::Counter, 0, -1, {}, max_iter, -1, t_fail, ""});
  // P from U
  int pu_corr = p.add({ProtoNode::Kind::Apply, g_c, pu_entry, {}, 0, -1, -1, ""});
  int pu_m2 = p.add({ProtoNode::Kind::Measure, mu, -1, {pu_corr, qv_entry}, 0, -1, -1, ""});
  int pu_a2 = p.add({ProtoNode::Kind::Apply, g_h, pu_m2, {}, 0, -1, -1, ""});
  int pu_m1 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_h, pu_a2}, 0, -1, -1, ""});
  int pu_a1 = p.add({ProtoNode::Kind::Apply, g_h, pu_m1, {}, 0, -1, -1, ""});
  p.nodes[pu_entry].on_continue = pu_a1;
  // Q from V
  int qv_corr = p.add({ProtoNode::Kind::Apply, g_c, qv_entry, {}, 0, -1, -1, ""});
  int qv_m2 = p.add({ProtoNode::Kind::Measure, mu, -1, {pu_entry, qv_corr}, 0, -1, -1, ""});
  int qv_a2 = p.add({ProtoNode::Kind::Apply, g_hi, qv_m2, {}, 0, -1, -1, ""});
  int qv_m1 = p.add({ProtoNode::Kind::Measure, mu, -1, {t_h, qv_a2}, 0, -1, -1, ""});
  int qv_a1 = p.add({ProtoNode::Kind::Apply, g_hi, qv_m1, {}, 0, -1, -1, ""});
  p.nodes[qv_entry].on_continue = qv_a1;
  p.entry = pu_entry;
  // success within n procedures: 1 - (2/3)(5/9)^{n-1}
  Cyc fail_prob = Cyc(frac(2, 3)) * pow_rational(frac(5, 9), max_iter - 1);
  p.closed_forms["h"] = Cyc::one() - fail_prob;
  p.closed_forms["fail"] = fail_prob;
  return p;
}

Protocol make_R_chain(int max_iter, int j) {
  Protocol p = make_R_proc(j);
  p.name = "R_chain";
  p.closed_forms.clear();
  // rebuild with loop: identity terminal becomes a retry
  Protocol q;
  q.name = "R_chain";
  const auto& fg = fiber_gates();
  q.initial = p.initial;
  q.n_counters = 1;
  int g_h = add_gate(q, "h'", fg.hprime);
  int g_hi = add_gate(q, "h'^-1", fg.hprime_inv);
  int g_c = add_gate(q, "p2q2p2", fg.p2q2p2);
  int mu = meas_U(q);
  int t_fail = q.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "fail"});
  int t_ga = q.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "gamma"});
  int entry = q.add({ProtoNode::Kind::Counter, 0, -1, {}, max_iter, -1, t_fail, ""});
  int corr_b = q.add({ProtoNode::Kind::Apply, g_c, t_ga, {}, 0, -1, -1, ""});
  int m2 = q.add({ProtoNode::Kind::Measure, mu, -1, {entry, corr_b}, 0, -1, -1, ""});
  int b1 = q.add({ProtoNode::Kind::Apply, g_hi, m2, {}, 0, -1, -1, ""});
  int corr_c = q.add({ProtoNode::Kind::Apply, g_c, t_ga, {}, 0, -1, -1, ""});
  int m3 = q.add({ProtoNode::Kind::Measure, mu, -1, {entry, corr_c}, 0, -1, -1, ""});
  int c1 = q.add({ProtoNode::Kind::Apply, g_hi, m3, {}, 0, -1, -1, ""});
  int m1 = q.add({ProtoNode::Kind::Measure, mu, -1, {b1, c1}, 0, -1, -1, ""});
  int a1 = q.add({ProtoNode::Kind::Apply, g_h, m1, {}, 0, -1, -1, ""});
  q.nodes[entry].on_continue = a1;
  q.entry = entry;
  Cyc fail_prob = pow_rational(frac(5, 9), max_iter);
  q.closed_forms["gamma"] = Cyc::one() - fail_prob;
  q.closed_forms["fail"] = fail_prob;
  return q;
}

// ---- two-qutrit procedures ----------------------------------------------------

namespace {

Mat gamma_swap_matrix() {
  // unitary on the 9-dim fiber: U <-> V, identity on W
  const Encoding& U = encoding_basis("U");
  const Encoding& V = encoding_basis("V");
  const Encoding& W = encoding_basis("W");
  Mat g(9, 9);
  auto add_outer = [&g](const StateVector& a, const StateVector& b) {
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        if (!a.amp[i].is_zero() && !b.amp[j].is_zero())
          g.at(i, j) += a.amp[i] * b.amp[j].conjugate();
  };
  for (int t = 0; t < 3; ++t) {
    add_outer(V.kets[t], U.kets[t]);
    add_outer(U.kets[t], V.kets[t]);
    add_outer(W.kets[t], W.kets[t]);
  }
  return g;
}

struct AmbientGates {
  const TwoQutritSpace* sp;
  std::vector<int> r_word, corr_word;
  Mat gamma;
};

const AmbientGates& ambient_gates() {
  static const AmbientGates ag = [] {
    AmbientGates a;
    a.sp = &two_qutrit_space();
    a.r_word = braid_R_word();
    a.corr_word = branch2_p2q2p2_word();
    a.gamma = gamma_swap_matrix();
    return a;
  }();
  return ag;
}

int add_ambient_measures(Protocol& p) {
  const TwoQutritSpace* sp = ambient_gates().sp;
  int m1 = p.measurement("M1_ancilla_charge", {"A", "not_A"}, [sp](const QVec& v, int oc) {
    return sp->project_branch1_charge(v, Label::A, oc == 0);
  });
  p.measurement("M2_in_U", {"U", "U_perp"}, [sp](const QVec& v, int oc) {
    return sp->project_branch2_in_U(v, oc == 0);
  });
  return m1;  // m2 == m1 + 1
}

}  // namespace

Protocol make_S(int i) {
  Protocol p;
  p.name = "S";
  const auto& ag = ambient_gates();
  const TwoQutritSpace* sp = ag.sp;
  p.initial = sp->product_state(TwoQutritSpace::ancilla_terms(Label::A),
                                TwoQutritSpace::encoding_terms(encoding_basis("W"), i));
  int g_r = p.gate("R", [sp, w = ag.r_word](const QVec& v) { return sp->apply_word(w, v); });
  int g_c = p.gate("Id*p2q2p2",
                   [sp, w = ag.corr_word](const QVec& v) { return sp->apply_word(w, v); });
  int g_g =
      p.gate("Id*gamma^-1", [sp, g = ag.gamma](const QVec& v) { return sp->apply_branch2_gate(g, v); });
  int m1 = add_ambient_measures(p);
  int m2 = m1 + 1;
  int t_un = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "unchanged"});
  int t_ok = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "success"});
  int a_c = p.add({ProtoNode::Kind::Apply, g_c, t_ok, {}, 0, -1, -1, ""});
  int a_g = p.add({ProtoNode::Kind::Apply, g_g, t_ok, {}, 0, -1, -1, ""});
  int n_m2 = p.add({ProtoNode::Kind::Measure, m2, -1, {a_c, a_g}, 0, -1, -1, ""});
  int n_m1 = p.add({ProtoNode::Kind::Measure, m1, -1, {t_un, n_m2}, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Apply, g_r, n_m1, {}, 0, -1, -1, ""});
  p.closed_forms["unchanged"] = Cyc(frac(1, 4));
  p.closed_forms["success"] = Cyc(frac(3, 4));
  return p;
}

Protocol make_S_chain(int max_iter, int i) {
  Protocol p;
  p.name = "S_chain";
  const auto& ag = ambient_gates();
  const TwoQutritSpace* sp = ag.sp;
  p.initial = sp->product_state(TwoQutritSpace::ancilla_terms(Label::A),
                                TwoQutritSpace::encoding_terms(encoding_basis("W"), i));
  p.n_counters = 1;
  int g_r = p.gate("R", [sp, w = ag.r_word](const QVec& v) { return sp->apply_word(w, v); });
  int g_c = p.gate("Id*p2q2p2",
                   [sp, w = ag.corr_word](const QVec& v) { return sp->apply_word(w, v); });
  int g_g =
      p.gate("Id*gamma^-1", [sp, g = ag.gamma](const QVec& v) { return sp->apply_branch2_gate(g, v); });
  int m1 = add_ambient_measures(p);
  int m2 = m1 + 1;
  int t_fail = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "fail"});
  int t_ok = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "success"});
  int entry = p.add({ProtoNode::Kind::Counter, 0, -1, {}, max_iter, -1, t_fail, ""});
  int a_c = p.add({ProtoNode::Kind::Apply, g_c, t_ok, {}, 0, -1, -1, ""});
  int a_g = p.add({ProtoNode::Kind::Apply, g_g, t_ok, {}, 0, -1, -1, ""});
  int n_m2 = p.add({ProtoNode::Kind::Measure, m2, -1, {a_c, a_g}, 0, -1, -1, ""});
  int n_m1 = p.add({ProtoNode::Kind::Measure, m1, -1, {entry, n_m2}, 0, -1, -1, ""});
  int a_r = p.add({ProtoNode::Kind::Apply, g_r, n_m1, {}, 0, -1, -1, ""});
  p.nodes[entry].on_continue = a_r;
  p.entry = entry;
  Cyc fail_prob = pow_rational(frac(1, 4), max_iter);
  p.closed_forms["success"] = Cyc::one() - fail_prob;
  p.closed_forms["fail"] = fail_prob;
  return p;
}

Protocol make_T_proc(int i) {
  Protocol p;
  p.name = "T";
  const auto& ag = ambient_gates();
  const TwoQutritSpace* sp = ag.sp;
  p.initial = sp->product_state(TwoQutritSpace::ancilla_terms(Label::B),
                                TwoQutritSpace::encoding_terms(encoding_basis("U"), i));
  int g_r = p.gate("R", [sp, w = ag.r_word](const QVec& v) { return sp->apply_word(w, v); });
  int g_c = p.gate("Id*p2q2p2",
                   [sp, w = ag.corr_word](const QVec& v) { return sp->apply_word(w, v); });
  int g_g =
      p.gate("Id*gamma^-1", [sp, g = ag.gamma](const QVec& v) { return sp->apply_branch2_gate(g, v); });
  int m1 = add_ambient_measures(p);
  int t_ok = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "success"});
  int t_back = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "back"});
  int a_w = p.add({ProtoNode::Kind::Apply, g_c, t_ok, {}, 0, -1, -1, ""});
  int a_g = p.add({ProtoNode::Kind::Apply, g_g, t_back, {}, 0, -1, -1, ""});
  int a_v = p.add({ProtoNode::Kind::Apply, g_c, a_g, {}, 0, -1, -1, ""});
  int n_m1 = p.add({ProtoNode::Kind::Measure, m1, -1, {a_w, a_v}, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Apply, g_r, n_m1, {}, 0, -1, -1, ""});
  p.closed_forms["success"] = Cyc(frac(1, 2));
  p.closed_forms["back"] = Cyc(frac(1, 2));
  return p;
}

// ---- Lemma 3: sigma_x measurement ---------------------------------------------

Protocol make_O(const Rational& alpha2, int max_iter) {
  Rational beta2 = Rational(1) - alpha2;
  auto alpha = sqrt_in_field(alpha2);
  auto beta = sqrt_in_field(beta2);
  if (!alpha || !beta)
    throw std::invalid_argument("make_O: amplitudes must have square roots in the field");
  Protocol p;
  p.name = "O";
  Cyc inv_r2 = Cyc::sqrt2().inverse();
  // |+> = (|0>+|1>)/sqrt2, |-> = (|0>-|1>)/sqrt2
  p.initial = QVec(3);
  p.initial[0] = (*alpha + *beta) * inv_r2;
  p.initial[1] = (*alpha - *beta) * inv_r2;
  p.n_counters = 1;
  Cyc third = Cyc(frac(1, 3));
  int m1 = p.measurement("M1_zerotilde", {"zt", "rest"}, [third](const QVec& v, int oc) {
    // projector onto h|0> = (1,1,1)/sqrt3
    Cyc overlap = (v[0] + v[1] + v[2]) * third;
    QVec in(3, overlap);
    if (oc == 0) return in;
    QVec out = v;
    for (int k = 0; k < 3; ++k) out[k] -= in[k];
    return out;
  });
  int m2 = p.measurement("M2_span01", {"two", "span01"}, [](const QVec& v, int oc) {
    QVec out(3);
    if (oc == 0)
      out[2] = v[2];
    else {
      out[0] = v[0];
      out[1] = v[1];
    }
    return out;
  });
  int t_plus = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "plus"});
  int t_res = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "no_plus"});
  int entry = p.add({ProtoNode::Kind::Counter, 0, -1, {}, max_iter, -1, t_res, ""});
  int n_m2 = p.add({ProtoNode::Kind::Measure, m2, -1, {t_plus, entry}, 0, -1, -1, ""});
  int n_m1 = p.add({ProtoNode::Kind::Measure, m1, -1, {t_plus, n_m2}, 0, -1, -1, ""});
  p.nodes[entry].on_continue = n_m1;
  p.entry = entry;
  // Eq. 2.5: prod b_i = beta^2 + alpha^2/9^n
  Rational nine_pow(1);
  for (int k = 0; k < max_iter; ++k) nine_pow *= 9;
  p.closed_forms["no_plus"] = Cyc(beta2 + alpha2 / nine_pow);
  p.closed_forms["plus"] = Cyc(Rational(1) - beta2 - alpha2 / nine_pow);
  return p;
}

// ---- Lemma 1: FLIP_2 ------------------------------------------------------------

namespace {

// |psi> = (|0> - |1> + |2>)/sqrt3 and a unitary completion used to reset the
// ancilla qutrit after each standard-basis measurement
Mat psi_reset_gate(int measured) {
  Cyc r3i = Cyc::sqrt3().inverse();
  Cyc r2i = Cyc::sqrt2().inverse();
  Cyc r6i = Cyc::sqrt6().inverse();
  Mat v(3, 3);
  // columns: |psi>, (1,1,0)/sqrt2, (-1,1,2)/sqrt6  (orthonormal)
  v.at(0, 0) = r3i;
  v.at(1, 0) = -r3i;
  v.at(2, 0) = r3i;
  v.at(0, 1) = r2i;
  v.at(1, 1) = r2i;
  v.at(0, 2) = -r6i;
  v.at(1, 2) = r6i;
  v.at(2, 2) = r6i + r6i;
  // map |measured> -> |psi>: v * cycle_shift so column `measured` is |psi>
  Mat perm(3, 3);
  for (int c = 0; c < 3; ++c) perm.at((c - measured + 3) % 3, c) = Cyc::one();
  return v * perm;
}

const Mat& sum12_qutrit() {
  static const Mat s = embed_gate(3, 2, {1, 2}, reference_gates().sum);
  return s;
}

int flip_class_mult(int outcome, int cls) {
  // classes: 0 = I, 1,2,3 = [f_0],[f_1],[f_2]; returns class of f_outcome * cls
  int f = outcome + 1;
  if (cls == 0) return f;
  if (cls == f) return 0;
  return 6 - f - cls;  // the remaining flip index (1+2+3 = 6)
}

}  // namespace

Protocol make_flip2_round(const QVec& qutrit) {
  if (qutrit.size() != 3) throw std::invalid_argument("flip2: expected a qutrit state");
  Protocol p;
  p.name = "flip2_round";
  Cyc r3i = Cyc::sqrt3().inverse();
  p.initial = QVec(9);
  for (int i = 0; i < 3; ++i) {
    p.initial[i * 3 + 0] = qutrit[i] * r3i;
    p.initial[i * 3 + 1] = -(qutrit[i] * r3i);
    p.initial[i * 3 + 2] = qutrit[i] * r3i;
  }
  int g_sum = add_gate(p, "SUM", sum12_qutrit());
  int mz = add_coord_meas(p, "Mz_q2", {"0", "1", "2"}, [](int k) { return k % 3; });
  std::vector<int> arms;
  for (int oc = 0; oc < 3; ++oc)
    arms.push_back(p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1,
                          std::string("flip") + char('0' + oc)}));
  int n_m = p.add({ProtoNode::Kind::Measure, mz, -1, arms, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Apply, g_sum, n_m, {}, 0, -1, -1, ""});
  for (int oc = 0; oc < 3; ++oc)
    p.closed_forms[std::string("flip") + char('0' + oc)] = Cyc(frac(1, 3));
  return p;
}

Protocol make_flip2_chain(const QVec& qutrit, int max_iter) {
  if (qutrit.size() != 3) throw std::invalid_argument("flip2: expected a qutrit state");
  Protocol p;
  p.name = "flip2";
  Cyc r3i = Cyc::sqrt3().inverse();
  p.initial = QVec(9);
  for (int i = 0; i < 3; ++i) {
    p.initial[i * 3 + 0] = qutrit[i] * r3i;
    p.initial[i * 3 + 1] = -(qutrit[i] * r3i);
    p.initial[i * 3 + 2] = qutrit[i] * r3i;
  }
  p.n_counters = 1;
  int g_sum = add_gate(p, "SUM", sum12_qutrit());
  std::vector<int> g_reset;
  for (int oc = 0; oc < 3; ++oc)
    g_reset.push_back(
        add_gate(p, "reset" + std::to_string(oc), embed_gate(3, 2, {2}, psi_reset_gate(oc))));
  int mz = add_coord_meas(p, "Mz_q2", {"0", "1", "2"}, [](int k) { return k % 3; });
  int t_done = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "flip2"});
  // per-class residual terminals and loop heads (classes 0=I, 2=[f1], 3=[f2])
  std::map<int, int> entries;
  std::map<int, int> t_res;
  for (int cls : {0, 2, 3}) {
    t_res[cls] = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1,
                        "residual_c" + std::to_string(cls)});
    entries[cls] = p.add({ProtoNode::Kind::Counter, 0, -1, {}, max_iter, -1, t_res[cls], ""});
  }
  for (int cls : {0, 2, 3}) {
    std::vector<int> arms;
    for (int oc = 0; oc < 3; ++oc) {
      int nxt_cls = flip_class_mult(oc, cls);
      int target = (nxt_cls == 1) ? t_done : entries[nxt_cls];
      arms.push_back(p.add({ProtoNode::Kind::Apply, g_reset[oc], target, {}, 0, -1, -1, ""}));
    }
    int n_m = p.add({ProtoNode::Kind::Measure, mz, -1, arms, 0, -1, -1, ""});
    int n_sum = p.add({ProtoNode::Kind::Apply, g_sum, n_m, {}, 0, -1, -1, ""});
    p.nodes[entries[cls]].on_continue = n_sum;
  }
  p.entry = entries[0];
  return p;
}

Protocol make_psi_prep() {
  Protocol p;
  p.name = "psi_prep";
  const ReferenceGates& ref = reference_gates();
  // |1~>|2~> = (h (x) h) |1,2>
  Mat hh = kron(ref.h, ref.h);
  p.initial = QVec(9);
  p.initial[1 * 3 + 2] = Cyc::one();
  p.initial = hh.apply(p.initial);
  int g_sum = add_gate(p, "SUM", sum12_qutrit());
  int m01_q1 = add_coord_meas(p, "M01_q1", {"in", "out"}, [](int k) { return k / 3 == 2 ? 1 : 0; });
  int m01_q2 = add_coord_meas(p, "M01_q2", {"in", "out"}, [](int k) { return k % 3 == 2 ? 1 : 0; });
  Cyc third = Cyc(frac(1, 3));
  int mzt = p.measurement("M_zerotilde_q1", {"zt", "rest"}, [third](const QVec& v, int oc) {
    QVec in(9);
    for (int j = 0; j < 3; ++j) {
      Cyc overlap = (v[j] + v[3 + j] + v[6 + j]) * third;
      in[j] = overlap;
      in[3 + j] = overlap;
      in[6 + j] = overlap;
    }
    if (oc == 0) return in;
    QVec out = v;
    for (int k = 0; k < 9; ++k) out[k] -= in[k];
    return out;
  });
  int t_psi = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "psi"});
  int t_retry = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "retry"});
  int n_zt = p.add({ProtoNode::Kind::Measure, mzt, -1, {t_psi, t_retry}, 0, -1, -1, ""});
  int n_sum = p.add({ProtoNode::Kind::Apply, g_sum, n_zt, {}, 0, -1, -1, ""});
  int n_q2 = p.add({ProtoNode::Kind::Measure, m01_q2, -1, {n_sum, t_retry}, 0, -1, -1, ""});
  p.entry = p.add({ProtoNode::Kind::Measure, m01_q1, -1, {n_q2, t_retry}, 0, -1, -1, ""});
  p.closed_forms["psi"] = Cyc(frac(1, 9));
  return p;
}

// ---- Lemma 6: Toffoli from controlled-Z -----------------------------------------

Protocol make_toffoli(const QVec& three_qubits, int max_rounds) {
  if (three_qubits.size() != 8) throw std::invalid_argument("toffoli: expected 3 qubits");
  Protocol p;
  p.name = "toffoli";
  // wire 4 starts as |+>
  p.initial = QVec(16);
  Cyc r2i = Cyc::sqrt2().inverse();
  for (int k = 0; k < 8; ++k) {
    p.initial[2 * k] = three_qubits[k] * r2i;
    p.initial[2 * k + 1] = three_qubits[k] * r2i;
  }
  p.n_counters = 1;

  Mat z1(2, 2);
  z1.at(0, 0) = Cyc::one();
  z1.at(1, 1) = -Cyc::one();
  Mat cz(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      cz.at(a * 2 + b, a * 2 + b) = (a & b) ? -Cyc::one() : Cyc::one();
  Mat ccz(8, 8);
  for (int k = 0; k < 8; ++k)
    ccz.at(k, k) = (k == 7) ? -Cyc::one() : Cyc::one();

  int g_cz34 = add_gate(p, "cz34", embed_gate(2, 4, {3, 4}, cz));
  int g_ccz124 = add_gate(p, "ccz124", embed_gate(2, 4, {1, 2, 4}, ccz));
  int g_z3 = add_gate(p, "z3", embed_gate(2, 4, {3}, z1));
  int g_z4 = add_gate(p, "z4", embed_gate(2, 4, {4}, z1));
  // correction after a -1 first outcome: (sz)_3 ctrlZ_{1,2}
  int g_corr = add_gate(p, "z3cz12",
                        embed_gate(2, 4, {3}, z1) * embed_gate(2, 4, {1, 2}, cz));

  auto sigx_meas = [&p](int wire) {
    Mat x(2, 2);
    x.at(0, 1) = Cyc::one();
    x.at(1, 0) = Cyc::one();
    Mat half = Mat::identity(2).scaled(Cyc(Rational(1, 2)));
    Mat plus = half + x.scaled(Cyc(Rational(1, 2)));
    Mat minus = half - x.scaled(Cyc(Rational(1, 2)));
    Mat pp = embed_gate(2, 4, {wire}, plus), pm = embed_gate(2, 4, {wire}, minus);
    return p.measurement("sigx_q" + std::to_string(wire), {"+1", "-1"},
                         [pp, pm](const QVec& v, int oc) { return (oc == 0 ? pp : pm).apply(v); });
  };
  int mx3 = sigx_meas(3);
  int mx4 = sigx_meas(4);

  int t_done = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "T_done"});
  // classical states: 0 = A0, 1 = A1, 2 = B
  std::map<int, int> entries, t_fail;
  for (int s : {0, 1, 2}) {
    t_fail[s] = p.add({ProtoNode::Kind::Terminal, -1, -1, {}, 0, -1, -1, "incomplete"});
    entries[s] = p.add({ProtoNode::Kind::Counter, 0, -1, {}, max_rounds, -1, t_fail[s], ""});
  }
  auto next_state = [&](int s, int b, bool& done) {
    done = false;
    if (s == 2) return b == 0 ? 1 : 0;  // B -> A_{1+b}
    if (b == s) {
      done = true;
      return -1;
    }
    return 2;  // phase A miss -> B
  };
  for (int s : {0, 1, 2}) {
    // after outcomes (o1, o2) and the z-corrections, branch classically
    std::vector<int> arms_o1;
    for (int o1 = 0; o1 < 2; ++o1) {
      std::vector<int> arms_o2;
      for (int o2 = 0; o2 < 2; ++o2) {
        bool done = false;
        int ns = next_state(s, o2, done);
        int target = done ? t_done : entries[ns];
        int at = target;
        if (o1 == 1) at = p.add({ProtoNode::Kind::Apply, g_corr, at, {}, 0, -1, -1, ""});
        if (o2 == 1) at = p.add({ProtoNode::Kind::Apply, g_z4, at, {}, 0, -1, -1, ""});
        arms_o2.push_back(at);
      }
      int n_mx4 = p.add({ProtoNode::Kind::Measure, mx4, -1, arms_o2, 0, -1, -1, ""});
      int n_cz43 = p.add({ProtoNode::Kind::Apply, g_cz34, n_mx4, {}, 0, -1, -1, ""});
      int n_ccz = p.add({ProtoNode::Kind::Apply, g_ccz124, n_cz43, {}, 0, -1, -1, ""});
      int at = n_ccz;
      if (o1 == 1) at = p.add({ProtoNode::Kind::Apply, g_z3, at, {}, 0, -1, -1, ""});
      arms_o1.push_back(at);
    }
    int n_mx3 = p.add({ProtoNode::Kind::Measure, mx3, -1, arms_o1, 0, -1, -1, ""});
    int n_cz34 = p.add({ProtoNode::Kind::Apply, g_cz34, n_mx3, {}, 0, -1, -1, ""});
    p.nodes[entries[s]].on_continue = n_cz34;
  }
  p.entry = entries[0];
  // success after r rounds: 1 - (1/2)^ceil(r/2)
  Rational res(1);
  for (int k = 0; k < (max_rounds + 1) / 2; ++k) res *= Rational(1, 2);
  p.closed_forms["T_done"] = Cyc(Rational(1) - res);
  return p;
}

std::pair<Mat, Mat> lambda2_sigma_z() {
  const ReferenceGates& ref = reference_gates();
  auto sum_on = [&](int a, int b) { return embed_gate(3, 3, {a, b}, ref.sum); };
  auto flip_on = [&](int w) { return embed_gate(3, 3, {w}, ref.flip2); };
  auto flip_if_sum2 = [&](int a, int b) {
    Mat s = sum_on(a, b);
    return s.dagger() * flip_on(b) * s;
  };
  Mat s12 = sum_on(1, 2), s23 = sum_on(2, 3);
  Mat g123 = s12.dagger() * s23.dagger() * flip_on(3) * s23 * s12;
  Mat composite = g123 * flip_if_sum2(1, 2) * flip_if_sum2(1, 3) * flip_if_sum2(2, 3);
  // target on the qubit sublattice: |i,j,k> -> (-1)^{ijk}, indices 9i+3j+k
  Mat target(27, 27);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int idx = 9 * i + 3 * j + k;
        bool qubit = i < 2 && j < 2 && k < 2;
        Cyc v = (qubit && i * j * k % 2 == 1) ? -Cyc::one() : Cyc::one();
        target.at(idx, idx) = v;
      }
  return {composite, target};
}

AlphaRecursionReport verify_alpha_recursion(const Rational& alpha2, int n) {
  AlphaRecursionReport rep;
  Rational a2 = alpha2, bprod(1);
  rep.alpha2.push_back(a2);
  rep.b_prod.push_back(bprod);
  Rational nine_pow(1);
  for (int k = 1; k <= n; ++k) {
    Rational b = Rational(1) - Rational(8) * a2 / 9;  // b_k = 1 - 8|a_{k-1}|^2/9
    a2 = a2 / (Rational(9) - Rational(8) * a2);       // Eq. 2.4 squared
    bprod *= b;
    nine_pow *= 9;
    // closed forms from Eq. 2.5
    Rational a2_closed = alpha2 / ((Rational(1) - alpha2) * nine_pow + alpha2);
    Rational bprod_closed = (Rational(1) - alpha2) + alpha2 / nine_pow;
    if (a2 != a2_closed || bprod != bprod_closed) rep.ok = false;
    rep.alpha2.push_back(a2);
    rep.b_prod.push_back(bprod);
  }
  return rep;
}

Protocol protocol_by_name(const std::string& name, int max_iter) {
  int n = max_iter > 0 ? max_iter : 5;
  if (name == "P") return make_P_chain(n);
  if (name == "Q") return make_Q();
  if (name == "R") return make_R_chain(n);
  if (name == "S") return make_S_chain(n);
  if (name == "T") return make_T_proc();
  if (name == "O") return make_O(Rational(9, 25), n);
  if (name == "psi") return make_psi_prep();
  if (name == "flip2") {
    QVec in(3);
    in[0] = Cyc(Rational(3, 5));
    in[1] = Cyc(Rational(4, 5));
    return make_flip2_chain(in, n);
  }
  if (name == "toffoli") {
    QVec in(8);
    Cyc r2i = Cyc::sqrt2().inverse();
    in[6] = r2i;  // |110>
    in[0] = r2i;  // |000>
    return make_toffoli(in, 2 * n - 1);
  }
  throw std::invalid_argument("unknown protocol " + name);
}

}  // namespace anyonkit
