#include "anyonkit/gates.hpp"

#include <mutex>

#include "anyonkit/scalar_expr.hpp"

namespace anyonkit {

const FusionBasis& qutrit_basis() {
  static const FusionBasis b = paper_matrix_basis(paper_rep(Label::D, Label::G));
  return b;
}

const Encoding& encoding_basis(const std::string& name) {
  static const std::map<std::string, Encoding> encs = [] {
    std::map<std::string, Encoding> out;
    const FusionBasis& basis = qutrit_basis();
    auto mk = [&](const std::string& nm, const char* vecs) {
      PaperSectorData def;
      def.rep_id = "enc";
      def.name = nm;
      // reuse the sector vector mini-format via printed.cpp would be nice,
      // but keep it local: terms '|' vectors, ',' terms, "coeff:XY"
      Encoding e;
      e.name = nm;
      e.basis = &basis;
      std::string s(vecs);
      size_t start = 0;
      for (size_t i = 0; i <= s.size(); ++i) {
        if (i != s.size() && s[i] != '|') continue;
        std::string vec = s.substr(start, i - start);
        start = i + 1;
        StateVector v = StateVector::zero(basis);
        size_t ts = 0;
        for (size_t j = 0; j <= vec.size(); ++j) {
          if (j != vec.size() && vec[j] != ',') continue;
          std::string term = vec.substr(ts, j - ts);
          ts = j + 1;
          auto colon = term.rfind(':');
          Cyc coef = parse_scalar(term.substr(0, colon));
          Labeling lab{label_from_char(term[colon + 1]), label_from_char(term[colon + 2])};
          v.amp[basis.find(lab)] += coef;
        }
        e.kets.push_back(std::move(v));
      }
      out[nm] = std::move(e);
    };
    mk("U", "1:GG|1:AG|1:GA");
    mk("V", "1/r2:FC,1/r2:CF|1/r2:FH,1/r2:CH|1/r2:HF,1/r2:HC");
    mk("W", "1/r2:FC,-1/r2:CF|1/r2:CH,-1/r2:FH|1/r2:HF,-1/r2:HC");
    return out;
  }();
  auto it = encs.find(name);
  if (it == encs.end()) throw std::invalid_argument("unknown encoding " + name);
  return it->second;
}

const ReferenceGates& reference_gates() {
  static const ReferenceGates g = [] {
    ReferenceGates r;
    r.h = parse_matrix("1,1,1;1,w,w2;1,w2,w", "1/r3");
    r.h_inv = r.h.dagger();
    r.zgate = parse_matrix("1,0,0;0,w,0;0,0,w2");
    r.pgate = parse_matrix("1,0,0;0,1,0;0,0,w");
    r.flip2 = parse_matrix("1,0,0;0,1,0;0,0,-1");
    r.x_shift = parse_matrix("0,0,1;1,0,0;0,1,0");
    r.neg = parse_matrix("1,0,0;0,0,1;0,1,0");
    r.sum = Mat(9, 9);
    r.ctrl_z = Mat(9, 9);
    Cyc w = Cyc::omega();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        r.sum.at(i * 3 + (i + j) % 3, i * 3 + j) = Cyc::one();
        r.ctrl_z.at(i * 3 + j, i * 3 + j) = Cyc::zeta_pow(24 * ((i * j) % 3));
      }
    (void)w;
    return r;
  }();
  return g;
}

Mat qutrit_permutation(int p0, int p1, int p2) {
  Mat m(3, 3);
  m.at(p0, 0) = Cyc::one();
  m.at(p1, 1) = Cyc::one();
  m.at(p2, 2) = Cyc::one();
  return m;
}

const std::vector<Mat>& dg_published_sigmas() {
  static const std::vector<Mat> sig = [] {
    const PaperRepData& rep = paper_rep(Label::D, Label::G);
    RepMatrixSet raw = build_rep(qutrit_basis());
    std::vector<Mat> out;
    for (const auto& s : raw.sigma) out.push_back(s.scaled(rep.lambda));
    return out;
  }();
  return sig;
}

const BraidGateSet& braid_gates(const std::string& sector) {
  static const std::map<std::string, BraidGateSet> sets = [] {
    std::map<std::string, BraidGateSet> out;
    for (const char* nm : {"UV", "W"}) {
      const PaperSectorData* def = nullptr;
      for (auto* s : sectors_of("B.2.4"))
        if (s->name == nm) def = s;
      Sector sec = build_sector(*def, qutrit_basis());
      BraidGateSet g;
      g.sector = nm;
      for (const auto& s : dg_published_sigmas()) g.sigma.push_back(restrict_to_sector(s, sec));
      g.p = g.sigma[0] * g.sigma[1] * g.sigma[0];
      g.q = g.sigma[2] * g.sigma[1] * g.sigma[2];
      g.p2 = g.p * g.p;
      g.q2 = g.q * g.q;
      g.p2q2p2 = g.p2 * g.q2 * g.p2;
      g.hprime = g.q2 * g.p * g.q2;
      g.hprime_inv = g.hprime.dagger();
      out[nm] = std::move(g);
    }
    return out;
  }();
  auto it = sets.find(sector);
  if (it == sets.end()) throw std::invalid_argument("unknown sector " + sector);
  return it->second;
}

// ---- two-qutrit engine ----------------------------------------------------

std::vector<Cyc> SparseMat::apply(const std::vector<Cyc>& v) const {
  std::vector<Cyc> out(n);
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, val] : cols[j]) out[i] += val * v[j];
  }
  return out;
}

namespace {
const FusionBasis& two_branch_basis() {
  static const FusionBasis b =
      enumerate_basis(ds3_model(), Label::D, Label::G, TreeShape::two_branch8());
  return b;
}
}  // namespace

TwoQutritSpace::TwoQutritSpace() : basis_(&two_branch_basis()) {
  sig_.resize(8);
  sig_inv_.resize(8);
  // fiber map: published (D,G) order index for each (x2, y2)
  const FusionBasis& fib = qutrit_basis();
  fiber_index_.assign(64, -1);
  for (int i = 0; i < fib.dim(); ++i) {
    const Labeling& l = fib.elems[i];
    fiber_index_[int(l[0]) * 8 + int(l[1])] = i;
  }
}

const SparseMat& TwoQutritSpace::sigma(int i, bool inverse) const {
  if (i < 1 || i > 7) throw std::invalid_argument("sigma index out of range");
  auto& slot = inverse ? sig_inv_[i] : sig_[i];
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  if (slot.n == 0) {
    SparseMat m;
    m.n = basis_->dim();
    m.cols.resize(m.n);
    for (int j = 0; j < m.n; ++j) m.cols[j] = sigma_column(*basis_, i, j, inverse);
    slot = std::move(m);
  }
  return slot;
}

std::vector<Cyc> TwoQutritSpace::apply_word(const std::vector<int>& letters,
                                            std::vector<Cyc> v) const {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    v = sigma(std::abs(*it), *it < 0).apply(v);
  return v;
}

int TwoQutritSpace::index_of(Label x1, Label y1, Label c1, Label x2, Label y2, Label c2) const {
  Labeling l{x1, c1, y1, x2, c2, y2};
  return basis_->find(l);
}

std::vector<Cyc> TwoQutritSpace::product_state(const std::vector<BranchTerm>& b1,
                                               const std::vector<BranchTerm>& b2) const {
  std::vector<Cyc> v(dim());
  for (const auto& [ca, x1, y1, c1] : b1)
    for (const auto& [cb, x2, y2, c2] : b2) {
      int k = index_of(x1, y1, c1, x2, y2, c2);
      if (k < 0)
        throw std::invalid_argument("product_state: branch charges do not fuse to the root");
      v[k] += ca * cb;
    }
  return v;
}

std::vector<TwoQutritSpace::BranchTerm> TwoQutritSpace::encoding_terms(const Encoding& enc,
                                                                       int i) {
  std::vector<BranchTerm> out;
  const StateVector& ket = enc.kets[i];
  for (size_t k = 0; k < ket.amp.size(); ++k) {
    if (ket.amp[k].is_zero()) continue;
    const Labeling& l = enc.basis->elems[k];
    out.push_back({ket.amp[k], l[0], l[1], Label::G});
  }
  return out;
}

std::vector<TwoQutritSpace::BranchTerm> TwoQutritSpace::ancilla_terms(Label total) {
  Cyc phase = total == Label::B ? hb_phase() : Cyc::one();
  return {{phase, Label::H, Label::H, total}};
}

std::vector<Cyc> TwoQutritSpace::encoded_pair(const Encoding& enc, int i, int j) const {
  return product_state(encoding_terms(enc, i), encoding_terms(enc, j));
}

std::vector<Cyc> TwoQutritSpace::project_branch1_charge(const std::vector<Cyc>& v, Label c,
                                                        bool keep) const {
  std::vector<Cyc> out(dim());
  for (int k = 0; k < dim(); ++k) {
    if (v[k].is_zero()) continue;
    bool match = basis_->elems[k][1] == c;
    if (match == keep) out[k] = v[k];
  }
  return out;
}

std::vector<Cyc> TwoQutritSpace::project_branch2_in_U(const std::vector<Cyc>& v, bool keep) const {
  std::vector<Cyc> out(dim());
  for (int k = 0; k < dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Labeling& l = basis_->elems[k];
    bool in_u = l[4] == Label::G &&
                ((l[3] == Label::G && l[5] == Label::G) ||
                 (l[3] == Label::A && l[5] == Label::G) ||
                 (l[3] == Label::G && l[5] == Label::A));
    if (in_u == keep) out[k] = v[k];
  }
  return out;
}

std::vector<Cyc> TwoQutritSpace::project_block_GG(const std::vector<Cyc>& v, bool keep) const {
  std::vector<Cyc> out(dim());
  for (int k = 0; k < dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Labeling& l = basis_->elems[k];
    bool in_block = l[1] == Label::G && l[4] == Label::G;
    if (in_block == keep) out[k] = v[k];
  }
  return out;
}

std::vector<Cyc> TwoQutritSpace::apply_branch2_gate(const Mat& g, const std::vector<Cyc>& v) const {
  const FusionBasis& fib = qutrit_basis();
  std::vector<Cyc> out(dim());
  for (int k = 0; k < dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Labeling& l = basis_->elems[k];
    if (l[4] != Label::G)
      throw std::domain_error("apply_branch2_gate: amplitude outside the charge-G fiber");
    int fp = fiber_index_[int(l[3]) * 8 + int(l[5])];
    for (int tp = 0; tp < g.rows(); ++tp) {
      const Cyc& coef = g.at(tp, fp);
      if (coef.is_zero()) continue;
      const Labeling& tl = fib.elems[tp];
      int idx = index_of(l[0], l[2], l[1], tl[0], tl[1], Label::G);
      if (idx < 0) throw std::logic_error("apply_branch2_gate: fiber target missing");
      out[idx] += coef * v[k];
    }
  }
  return out;
}

std::map<Labeling, Cyc> TwoQutritSpace::branch1_profile(const std::vector<Cyc>& v, Label c1,
                                                        Label c2) const {
  std::map<Labeling, Cyc> out;
  for (int k = 0; k < dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Labeling& l = basis_->elems[k];
    if (l[1] == c1 && l[4] == c2) out[{l[0], l[2]}] += v[k] * v[k].conjugate();
  }
  return out;
}

Cyc TwoQutritSpace::norm2(const std::vector<Cyc>& v) {
  Cyc s;
  for (const auto& a : v)
    if (!a.is_zero()) s += a * a.conjugate();
  return s;
}

const TwoQutritSpace& two_qutrit_space() {
  static const TwoQutritSpace space;
  return space;
}

namespace {
std::vector<int> inv_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}
std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}
}  // namespace

std::vector<int> crlz_word() {
  std::vector<int> s1{2, 1, 3, 2}, s2{4, 3, 5, 4}, s3{6, 5, 7, 6};
  return cat({inv_word(s1), s2, s2, s1, inv_word(s3), s2, s2, s3});
}

std::vector<int> braid_R_word() {
  // Q's two pair-monodromies carry opposite senses (the braiding figure
  // draws the left and right double-crossings mirrored); with this word the
  // first published R-transformation holds exactly.
  std::vector<int> P{6, 5, 4, 3, 7, 6, 5, 4}, Q{2, 1, 1, 2, -6, -7, -7, -6};
  return cat({inv_word(P), Q, P});
}

std::vector<int> branch2_p2q2p2_word() {
  std::vector<int> p{5, 6, 5}, q{7, 6, 7};
  return cat({p, p, q, q, p, p});
}

CrlzReport check_crlz() {
  const TwoQutritSpace& sp = two_qutrit_space();
  const Encoding& U = encoding_basis("U");
  auto word = crlz_word();
  CrlzReport rep;

  // diagonality over the 81-dim (G,G)-branch block
  rep.block_diagonal = true;
  for (int k = 0; k < sp.dim(); ++k) {
    const Labeling& l = sp.basis().elems[k];
    if (l[1] != Label::G || l[4] != Label::G) continue;
    std::vector<Cyc> e(sp.dim());
    e[k] = Cyc::one();
    std::vector<Cyc> img = sp.apply_word(word, e);
    Cyc diag = img[k];
    img[k] = Cyc::zero();
    if (!TwoQutritSpace::norm2(img).is_zero()) rep.block_diagonal = false;
    rep.block_diag.push_back(diag);
  }

  // restriction to U (x) U with leakage
  const Mat& cz = reference_gates().ctrl_z;
  rep.equals_ctrl_z = true;
  rep.leakage = Cyc::zero();
  bool have_phase = false;
  std::vector<std::vector<Cyc>> embedded;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) embedded.push_back(sp.encoded_pair(U, i, j));
  for (int col = 0; col < 9; ++col) {
    std::vector<Cyc> img = sp.apply_word(word, embedded[col]);
    // project onto the embedded block
    std::vector<Cyc> rem = img;
    for (int row = 0; row < 9; ++row) {
      Cyc coef;
      for (int k = 0; k < sp.dim(); ++k)
        if (!embedded[row][k].is_zero() && !img[k].is_zero())
          coef += embedded[row][k].conjugate() * img[k];
      if (coef.is_zero()) continue;
      for (int k = 0; k < sp.dim(); ++k)
        if (!embedded[row][k].is_zero()) rem[k] -= coef * embedded[row][k];
      // compare against phase * ctrl_z entry
      const Cyc& target = cz.at(row, col);
      if (target.is_zero()) {
        rep.equals_ctrl_z = false;
        continue;
      }
      Cyc phase = coef * target.inverse();
      if (!have_phase) {
        rep.global_phase = phase;
        have_phase = true;
      } else if (phase != rep.global_phase) {
        rep.equals_ctrl_z = false;
      }
    }
    Cyc leak = TwoQutritSpace::norm2(rem);
    if (!leak.is_zero()) rep.leakage = leak;  // exact; any nonzero is reported
  }
  if (!have_phase) rep.equals_ctrl_z = false;
  return rep;
}

SumReport check_sum_from_crlz() {
  const TwoQutritSpace& sp = two_qutrit_space();
  const Encoding& U = encoding_basis("U");
  const ReferenceGates& ref = reference_gates();
  auto word = crlz_word();

  // 9x9 matrix of CrlZ on the embedded U(x)U block
  std::vector<std::vector<Cyc>> embedded;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) embedded.push_back(sp.encoded_pair(U, i, j));
  Mat block(9, 9);
  for (int col = 0; col < 9; ++col) {
    std::vector<Cyc> img = sp.apply_word(word, embedded[col]);
    for (int row = 0; row < 9; ++row) {
      Cyc coef;
      for (int k = 0; k < sp.dim(); ++k)
        if (!embedded[row][k].is_zero() && !img[k].is_zero())
          coef += embedded[row][k].conjugate() * img[k];
      block.at(row, col) = coef;
    }
  }
  Mat id3 = Mat::identity(3);
  Mat idh(9, 9), idhinv(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        idh.at(i * 3 + r, i * 3 + c) = ref.h.at(r, c);
        idhinv.at(i * 3 + r, i * 3 + c) = ref.h_inv.at(r, c);
      }
  (void)id3;
  Mat composite = idh * block.dagger() * idhinv;
  SumReport out;
  if (auto s = common_scalar(ref.sum, composite)) {
    out.equals_sum = true;
    out.global_phase = *s;
  }
  return out;
}

Cyc leakage_of_word(const std::vector<int>& letters, const Encoding& enc) {
  const TwoQutritSpace& sp = two_qutrit_space();
  std::vector<std::vector<Cyc>> embedded;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) embedded.push_back(sp.encoded_pair(enc, i, j));
  Cyc worst;
  for (int col = 0; col < 9; ++col) {
    std::vector<Cyc> img = sp.apply_word(letters, embedded[col]);
    std::vector<Cyc> rem = img;
    for (int row = 0; row < 9; ++row) {
      Cyc coef;
      for (int k = 0; k < sp.dim(); ++k)
        if (!embedded[row][k].is_zero() && !img[k].is_zero())
          coef += embedded[row][k].conjugate() * img[k];
      if (coef.is_zero()) continue;
      for (int k = 0; k < sp.dim(); ++k)
        if (!embedded[row][k].is_zero()) rem[k] -= coef * embedded[row][k];
    }
    Cyc leak = TwoQutritSpace::norm2(rem);
    // keep the largest by float comparison (values are exact reals)
    if (leak.to_complex().real() > worst.to_complex().real()) worst = leak;
  }
  return worst;
}

const Cyc& hb_phase() {
  // Phase of |H>_B fixed so that the published R-braid amplitude formulas
  // hold exactly; verified by the adaptive-protocol tests.
  static const Cyc phase = Cyc::one();
  return phase;
}

}  // namespace anyonkit
