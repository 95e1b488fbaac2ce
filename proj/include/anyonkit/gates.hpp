#pragma once

#include "anyonkit/braid.hpp"
#include "anyonkit/printed.hpp"

namespace anyonkit {

// One qutrit lives in V_G^{DDDD}; the three encodings pick orthonormal
// triples inside it. Vectors are over the published (D,G) basis order.
struct Encoding {
  std::string name;  // "U", "V" or "W"
  const FusionBasis* basis = nullptr;
  std::vector<StateVector> kets;  // |0>, |1>, |2>
};

const FusionBasis& qutrit_basis();  // (D,G) published order, shared instance
const Encoding& encoding_basis(const std::string& name);

// Reference qutrit gates, exact.
struct ReferenceGates {
  Mat h, h_inv;   // generalized Hadamard
  Mat sum;        // 9x9, |i,j> -> |i, i+j mod 3>
  Mat ctrl_z;     // 9x9, |i,j> -> w^{ij} |i,j>
  Mat zgate;      // diag(1, w, w^2)
  Mat pgate;      // diag(1, 1, w)
  Mat flip2;      // diag(1, 1, -1)
  Mat x_shift;    // |i> -> |i+1>
  Mat neg;        // |i> -> |-i>
};
const ReferenceGates& reference_gates();
Mat qutrit_permutation(int p0, int p1, int p2);  // classical gate |i> -> |p_i>

// Braid-synthesized gates on a sector, in the published (paper) form.
struct BraidGateSet {
  std::string sector;  // "UV" or "W"
  std::vector<Mat> sigma;
  Mat p, q, p2, q2, p2q2p2, hprime, hprime_inv;
};
const BraidGateSet& braid_gates(const std::string& sector);

// Full 9-dim published-form generators of rho(D,G).
const std::vector<Mat>& dg_published_sigmas();

// ---- two-qutrit sparse engine ------------------------------------------

struct SparseMat {
  int n = 0;
  std::vector<std::vector<std::pair<int, Cyc>>> cols;
  std::vector<Cyc> apply(const std::vector<Cyc>& v) const;
};

// The 8-anyon sparse encoding: two 4-leaf D-branches with total charge G.
// Holds the full ambient space (all branch-charge pairs), the raw 8-strand
// generators, and the computational embeddings.
class TwoQutritSpace {
 public:
  TwoQutritSpace();

  const FusionBasis& basis() const { return *basis_; }
  int dim() const { return basis_->dim(); }

  // raw sigma_i as sparse matrices, i = 1..7
  const SparseMat& sigma(int i, bool inverse = false) const;
  std::vector<Cyc> apply_word(const std::vector<int>& letters, std::vector<Cyc> v) const;

  // slot layout of a labeling: (x1, c1, y1, x2, c2, y2)
  int index_of(Label x1, Label y1, Label c1, Label x2, Label y2, Label c2) const;

  // product state of two branch states; each term fixes its branch charge
  using BranchTerm = std::tuple<Cyc, Label, Label, Label>;  // coeff, x, y, charge
  std::vector<Cyc> product_state(const std::vector<BranchTerm>& b1,
                                 const std::vector<BranchTerm>& b2) const;

  // encoded qutrit pair |i>_enc (x) |j>_enc, both branch charges G
  std::vector<Cyc> encoded_pair(const Encoding& enc, int i, int j) const;

  // branch terms of an encoded ket or an ancilla
  static std::vector<BranchTerm> encoding_terms(const Encoding& enc, int i);
  static std::vector<BranchTerm> ancilla_terms(Label total);  // |H>_total, labels (H,H)

  // diagonal projections
  std::vector<Cyc> project_branch1_charge(const std::vector<Cyc>& v, Label c, bool keep) const;
  std::vector<Cyc> project_branch2_in_U(const std::vector<Cyc>& v, bool keep) const;
  std::vector<Cyc> project_block_GG(const std::vector<Cyc>& v, bool keep) const;

  // apply a 9x9 gate on the second qutrit's c2 = G fiber; amplitudes with
  // c2 != G must vanish (asserted)
  std::vector<Cyc> apply_branch2_gate(const Mat& g, const std::vector<Cyc>& v) const;

  // component of v on branch charges (c1, c2) with the given second-branch
  // fiber state; returns the coefficient vector over branch1 labelings
  std::map<Labeling, Cyc> branch1_profile(const std::vector<Cyc>& v, Label c1, Label c2) const;

  static Cyc norm2(const std::vector<Cyc>& v);

 private:
  const FusionBasis* basis_;
  mutable std::vector<SparseMat> sig_, sig_inv_;
  std::vector<int> fiber_index_;  // (D,G) published basis index per (x2,y2), -1 otherwise
};

const TwoQutritSpace& two_qutrit_space();

// Braid words from the paper's two-qutrit section.
std::vector<int> crlz_word();
std::vector<int> braid_R_word();
std::vector<int> branch2_p2q2p2_word();

struct CrlzReport {
  bool block_diagonal = false;       // diagonal on the 81-dim (G,G) block
  bool equals_ctrl_z = false;        // restriction to U(x)U = ctrl-Z up to phase
  Cyc global_phase;                  // the single phase
  Cyc leakage;                       // exact max leakage out of U(x)U
  std::vector<Cyc> block_diag;       // diagonal entries over the (G,G) block
};
CrlzReport check_crlz();

// SUM = (Id (x) h) CrlZ^-1 (Id (x) h^-1) restricted to U(x)U equals the
// reference SUM up to the same global phase.
struct SumReport {
  bool equals_sum = false;
  Cyc global_phase;
};
SumReport check_sum_from_crlz();

// max over block basis vectors of the squared norm escaping the block
Cyc leakage_of_word(const std::vector<int>& letters, const Encoding& enc);

// |H>_B phase convention: fixed so the published R-transformation formulas
// hold exactly (see adaptive_sim); exposed for the tests.
const Cyc& hb_phase();

}  // namespace anyonkit
