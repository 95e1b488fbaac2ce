#include "anyonkit/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>

namespace anyonkit {

namespace {

// builds split map from a parenthesis expression over '*' leaves
int parse_node(const std::string& s, size_t& pos, int& next_leaf, TreeShape& out, int& hi) {
  if (pos >= s.size()) throw std::invalid_argument("bad shape string: " + s);
  if (s[pos] == '*') {
    ++pos;
    hi = next_leaf;
    return next_leaf++;
  }
  if (s[pos] != '(') throw std::invalid_argument("bad shape string: " + s);
  ++pos;
  int lhi = 0, rhi = 0;
  int llo = parse_node(s, pos, next_leaf, out, lhi);
  int rlo = parse_node(s, pos, next_leaf, out, rhi);
  if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("bad shape string: " + s);
  ++pos;
  (void)rlo;
  out.split[{llo, rhi}] = lhi;
  hi = rhi;
  return llo;
}

void node_string(const TreeShape& s, int lo, int hi, std::ostream& os) {
  if (lo == hi) {
    os << '*';
    return;
  }
  int p = s.split.at({lo, hi});
  os << '(';
  node_string(s, lo, p, os);
  node_string(s, p + 1, hi, os);
  os << ')';
}

int label_rank(Label l) { return f_rank(l); }

struct LexLess {
  bool operator()(const Labeling& a, const Labeling& b) const {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int ra = label_rank(a[i]), rb = label_rank(b[i]);
      if (ra != rb) return ra < rb;
    }
    return a.size() < b.size();
  }
};

}  // namespace

TreeShape TreeShape::parse(const std::string& parens) {
  TreeShape s;
  size_t pos = 0;
  int next_leaf = 1, hi = 0;
  parse_node(parens, pos, next_leaf, s, hi);
  if (pos != parens.size()) throw std::invalid_argument("trailing input in shape: " + parens);
  s.nleaves = next_leaf - 1;
  return s;
}

TreeShape TreeShape::caterpillar(int n) {
  TreeShape s;
  s.nleaves = n;
  for (int hi = 2; hi <= n; ++hi) s.split[{1, hi}] = hi - 1;
  return s;
}

TreeShape TreeShape::paired4() { return parse("((**)(**))"); }

TreeShape TreeShape::two_branch8() { return parse("(((**)(**))((**)(**)))"); }

std::string TreeShape::to_string() const {
  std::ostringstream os;
  node_string(*this, 1, nleaves, os);
  return os.str();
}

std::vector<std::pair<int, int>> TreeShape::label_slots() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [rng, p] : split) {
    (void)p;
    if (rng.first == 1 && rng.second == nleaves) continue;  // root carries z
    out.push_back(rng);
  }
  return out;  // std::map iterates in sorted range order already
}

bool TreeShape::has_node(int lo, int hi) const {
  if (lo == hi) return lo >= 1 && hi <= nleaves;
  return split.count({lo, hi}) != 0;
}

int FusionBasis::find(const Labeling& l) const {
  auto it = index.find(l);
  return it == index.end() ? -1 : it->second;
}

std::string FusionBasis::element_name(int i) const {
  std::string s = "|";
  for (Label l : elems[i]) s += label_char(l);
  return s + ">";
}

long fusion_dim(const AnyonModel& m, Label anyon, Label total, int nleaves) {
  if (nleaves < 1) throw std::invalid_argument("fusion_dim: need at least one leaf");
  // paths A -> total multiplying by N_anyon n times
  std::vector<long> cur(m.num_labels, 0);
  cur[0] = 1;  // vacuum
  for (int step = 0; step < nleaves; ++step) {
    std::vector<long> nxt(m.num_labels, 0);
    for (int x = 0; x < m.num_labels; ++x) {
      if (cur[x] == 0) continue;
      for (int y = 0; y < m.num_labels; ++y)
        if (m.admissible(Label(x), anyon, Label(y))) nxt[y] += cur[x];
    }
    cur = std::move(nxt);
  }
  return cur[int(total)];
}

FusionBasis enumerate_basis(const AnyonModel& m, Label anyon, Label total,
                            const TreeShape& shape) {
  if (shape.nleaves < 1) throw std::invalid_argument("empty shape");
  FusionBasis b;
  b.model = &m;
  b.shape = shape;
  b.leaf = anyon;
  b.root = total;
  auto slots = shape.label_slots();
  std::map<std::pair<int, int>, int> slot_of;
  for (size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = int(i);

  auto label_of = [&](const Labeling& lab, int lo, int hi) -> Label {
    if (lo == hi) return anyon;
    if (lo == 1 && hi == shape.nleaves) return total;
    return lab[slot_of.at({lo, hi})];
  };
  // check the vertices whose children are fully assigned given slots 0..k
  std::vector<Labeling> out;
  Labeling lab(slots.size(), Label::A);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == slots.size()) {
      // verify all vertices (cheap; partial pruning below catches most)
      for (const auto& [rng, p] : shape.split) {
        Label lv = label_of(lab, rng.first, p);
        Label rv = label_of(lab, p + 1, rng.second);
        Label pv = label_of(lab, rng.first, rng.second);
        if (!m.admissible(lv, rv, pv)) return;
      }
      out.push_back(lab);
      return;
    }
    auto rng = slots[k];
    int p = shape.split.at(rng);
    for (Label cand : kFBasisOrder) {
      if (int(cand) >= m.num_labels) continue;
      lab[k] = cand;
      // prune: if children of this node are already assigned, check now
      bool ok = true;
      auto assigned = [&](int lo, int hi) {
        if (lo == hi) return true;
        if (lo == 1 && hi == shape.nleaves) return true;
        return slot_of.at({lo, hi}) <= int(k);
      };
      if (assigned(rng.first, p) && assigned(p + 1, rng.second))
        ok = m.admissible(label_of(lab, rng.first, p), label_of(lab, p + 1, rng.second), cand);
      if (ok) rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), LexLess{});
  b.elems = std::move(out);
  for (size_t i = 0; i < b.elems.size(); ++i) b.index[b.elems[i]] = int(i);
  return b;
}

FusionBasis reorder_basis(const FusionBasis& b, const std::vector<Labeling>& order) {
  if (order.size() != b.elems.size())
    throw std::invalid_argument("reorder_basis: order has wrong length");
  FusionBasis out = b;
  out.order = BasisOrder::Printed;
  out.elems = order;
  out.index.clear();
  for (size_t i = 0; i < order.size(); ++i) {
    if (b.index.find(order[i]) == b.index.end())
      throw std::invalid_argument("reorder_basis: element not in basis");
    out.index[order[i]] = int(i);
  }
  if (out.index.size() != order.size())
    throw std::invalid_argument("reorder_basis: duplicate element");
  return out;
}

StateVector StateVector::basis_state(const FusionBasis& b, int i) {
  StateVector v;
  v.basis = &b;
  v.amp.assign(b.dim(), Cyc());
  v.amp[i] = Cyc::one();
  return v;
}

StateVector StateVector::zero(const FusionBasis& b) {
  StateVector v;
  v.basis = &b;
  v.amp.assign(b.dim(), Cyc());
  return v;
}

Cyc StateVector::norm2() const {
  Cyc s;
  for (const auto& a : amp)
    if (!a.is_zero()) s += a * a.conjugate();
  return s;
}

bool StateVector::is_zero() const {
  for (const auto& a : amp)
    if (!a.is_zero()) return false;
  return true;
}

Cyc inner_product(const StateVector& u, const StateVector& v) {
  if (u.basis != v.basis) throw std::invalid_argument("inner_product: basis mismatch");
  Cyc s;
  for (size_t i = 0; i < u.amp.size(); ++i)
    if (!u.amp[i].is_zero() && !v.amp[i].is_zero()) s += u.amp[i].conjugate() * v.amp[i];
  return s;
}

std::vector<FMove> available_moves(const TreeShape& s) {
  std::vector<FMove> out;
  for (const auto& [rng, p] : s.split) {
    if (rng.first < p && s.split.count({rng.first, p}))  // left child internal
      out.push_back({rng, true});
    if (p + 1 < rng.second && s.split.count({p + 1, rng.second}))  // right child internal
      out.push_back({rng, false});
  }
  return out;
}

TreeShape apply_move_shape(const TreeShape& s, const FMove& mv) {
  TreeShape t = s;
  auto [lo, hi] = mv.parent;
  int p = t.split.at(mv.parent);
  if (mv.to_right) {
    // ((a b)_m c) -> (a (b c)_n): left child (lo,p) with split q
    int q = t.split.at({lo, p});
    t.split.erase({lo, p});
    t.split[{q + 1, hi}] = p;
    t.split[mv.parent] = q;
  } else {
    // (a (b c)_n) -> ((a b)_m c): right child (p+1,hi) with split q
    int q = t.split.at({p + 1, hi});
    t.split.erase({p + 1, hi});
    t.split[{lo, q}] = p;
    t.split[mv.parent] = q;
  }
  return t;
}

namespace {

// canonical bases and whole-move transition tables are memoized; braid words
// on the 8-leaf space hit the same handful of moves thousands of times
const FusionBasis& cached_basis(const AnyonModel& m, Label leaf, Label root,
                                const TreeShape& shape) {
  static std::map<std::string, std::unique_ptr<FusionBasis>> cache;
  static std::mutex mu;
  std::string key = shape.to_string() + "/" + label_name(leaf) + label_name(root) + "/" + m.name;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto b = std::make_unique<FusionBasis>(enumerate_basis(m, leaf, root, shape));
    it = cache.emplace(key, std::move(b)).first;
  }
  return *it->second;
}

struct MoveTable {
  const FusionBasis* src;
  const FusionBasis* tgt;
  FMove mv;
  std::vector<std::vector<std::pair<int, Cyc>>> cols;  // per source index
};

void build_move_table(const FusionBasis& src, const FMove& mv, const FusionBasis& tgt,
                      std::vector<std::vector<std::pair<int, Cyc>>>& cols);

const MoveTable& move_table(const FusionBasis& src, const FMove& mv) {
  static std::map<std::string, std::unique_ptr<MoveTable>> cache;
  static std::mutex mu;
  std::string key = src.shape.to_string() + "/" + label_name(src.leaf) + label_name(src.root) +
                    "/" + src.model->name + "#" + std::to_string(mv.parent.first) + "," +
                    std::to_string(mv.parent.second) + (mv.to_right ? "R" : "L");
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<MoveTable>();
  table->src = &src;
  table->mv = mv;
  TreeShape tgt_shape = apply_move_shape(src.shape, mv);
  table->tgt = &cached_basis(*src.model, src.leaf, src.root, tgt_shape);
  build_move_table(src, mv, *table->tgt, table->cols);
  std::lock_guard<std::mutex> lk(mu);
  return *cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

StateVector apply_move(const StateVector& v, const FMove& mv) {
  const FusionBasis& canon = cached_basis(*v.basis->model, v.basis->leaf, v.basis->root,
                                          v.basis->shape);
  const StateVector* in = &v;
  StateVector remapped;
  if (v.basis != &canon) {
    remapped = StateVector::zero(canon);
    for (size_t k = 0; k < v.amp.size(); ++k) {
      if (v.amp[k].is_zero()) continue;
      remapped.amp[canon.index.at(v.basis->elems[k])] = v.amp[k];
    }
    in = &remapped;
  }
  const MoveTable& t = move_table(canon, mv);
  StateVector out = StateVector::zero(*t.tgt);
  for (int j = 0; j < canon.dim(); ++j) {
    if (in->amp[j].is_zero()) continue;
    for (const auto& [r, coef] : t.cols[j]) out.amp[r] += coef * in->amp[j];
  }
  return out;
}

namespace {
void build_move_table(const FusionBasis& src, const FMove& mv, const FusionBasis& tgt,
                      std::vector<std::vector<std::pair<int, Cyc>>>& cols) {
  const AnyonModel& m = *src.model;
  auto src_slots = src.shape.label_slots();
  auto tgt_slots = tgt.shape.label_slots();
  std::map<std::pair<int, int>, int> src_slot, tgt_slot;
  for (size_t i = 0; i < src_slots.size(); ++i) src_slot[src_slots[i]] = int(i);
  for (size_t i = 0; i < tgt_slots.size(); ++i) tgt_slot[tgt_slots[i]] = int(i);

  auto [lo, hi] = mv.parent;
  int p = src.shape.split.at(mv.parent);
  bool parent_is_root = (lo == 1 && hi == src.shape.nleaves);

  cols.assign(src.dim(), {});
  for (int j = 0; j < src.dim(); ++j) {
    const Labeling& lab = src.elems[j];
    auto label_at = [&](int l, int h) -> Label {
      if (l == h) return src.leaf;
      if (l == 1 && h == src.shape.nleaves) return src.root;
      return lab[src_slot.at({l, h})];
    };
    Label d = parent_is_root ? src.root : lab[src_slot.at(mv.parent)];
    Labeling nl(tgt_slots.size(), Label::A);
    auto fill_common = [&](std::pair<int, int> fresh_rng, Label fresh) {
      for (size_t s2 = 0; s2 < tgt_slots.size(); ++s2) {
        auto rng = tgt_slots[s2];
        nl[s2] = (rng == fresh_rng) ? fresh : label_at(rng.first, rng.second);
      }
    };
    if (mv.to_right) {
      int q = src.shape.split.at({lo, p});
      Label a = label_at(lo, q), b = label_at(q + 1, p), c = label_at(p + 1, hi);
      Label mlab = label_at(lo, p);
      for (Label n : m.fuse(b, c)) {
        if (!m.admissible(a, n, d)) continue;
        const Cyc& coef = m.f_symbol(a, b, c, d, n, mlab);
        if (coef.is_zero()) continue;
        fill_common({q + 1, hi}, n);
        int r = tgt.find(nl);
        if (r < 0) throw std::logic_error("f-move produced an inadmissible labeling");
        cols[j].push_back({r, coef});
      }
    } else {
      int q = src.shape.split.at({p + 1, hi});
      Label a = label_at(lo, p), b = label_at(p + 1, q), c = label_at(q + 1, hi);
      Label nlab = label_at(p + 1, hi);
      for (Label mm : m.fuse(a, b)) {
        if (!m.admissible(mm, c, d)) continue;
        Cyc coef = m.f_symbol(a, b, c, d, nlab, mm).conjugate();
        if (coef.is_zero()) continue;
        fill_common({lo, q}, mm);
        int r = tgt.find(nl);
        if (r < 0) throw std::logic_error("f-move produced an inadmissible labeling");
        cols[j].push_back({r, coef});
      }
    }
  }
}
}  // namespace

StateVector f_move(const StateVector& v, std::pair<int, int> parent, bool to_right) {
  const TreeShape& s = v.basis->shape;
  if (!s.has_node(parent.first, parent.second) || parent.first == parent.second)
    throw std::invalid_argument("f_move: no such internal node");
  FMove mv{parent, to_right};
  int p = s.split.at(parent);
  if (to_right && !s.split.count({parent.first, p}))
    throw std::invalid_argument("f_move: left child is a leaf; nothing to reassociate");
  if (!to_right && !s.split.count({p + 1, parent.second}))
    throw std::invalid_argument("f_move: right child is a leaf; nothing to reassociate");
  return apply_move(v, mv);
}

namespace {

using SparseVec = std::vector<std::pair<int, Cyc>>;

SparseVec apply_table_sparse(const MoveTable& t, const SparseVec& v) {
  std::map<int, Cyc> acc;
  for (const auto& [j, a] : v)
    for (const auto& [r, c] : t.cols[j]) acc[r] += c * a;
  SparseVec out;
  for (auto& [k, val] : acc)
    if (!val.is_zero()) out.push_back({k, std::move(val)});
  return out;
}

}  // namespace

std::vector<std::pair<int, Cyc>> sigma_column(const FusionBasis& canon, int i, int col,
                                              bool inverse) {
  const AnyonModel& m = *canon.model;
  const auto& path = sibling_path(canon.shape, i);
  SparseVec cur{{col, Cyc::one()}};
  const FusionBasis* at = &canon;
  std::vector<const MoveTable*> used;
  for (const FMove& mv : path) {
    const MoveTable& t = move_table(*at, mv);
    cur = apply_table_sparse(t, cur);
    at = t.tgt;
    used.push_back(&t);
  }
  // R-twist at the sibling pair (i, i+1)
  {
    auto slots = at->shape.label_slots();
    int slot = -1;
    for (size_t s2 = 0; s2 < slots.size(); ++s2)
      if (slots[s2] == std::make_pair(i, i + 1)) slot = int(s2);
    for (auto& [k, val] : cur) {
      Label c = slot >= 0 ? at->elems[k][slot] : at->root;
      const Cyc& r = m.r_symbol(canon.leaf, canon.leaf, c);
      val = inverse ? val * r.conjugate() : val * r;
    }
  }
  for (auto it = used.rbegin(); it != used.rend(); ++it) {
    const MoveTable& back = move_table(*(*it)->tgt, FMove{(*it)->mv.parent, !(*it)->mv.to_right});
    cur = apply_table_sparse(back, cur);
  }
  std::sort(cur.begin(), cur.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return cur;
}

std::vector<FMove> shape_path(const TreeShape& from, const TreeShape& to) {
  if (from == to) return {};
  std::map<std::string, std::pair<std::string, FMove>> prev;
  std::deque<TreeShape> q{from};
  prev[from.to_string()] = {"", FMove{}};
  std::string goal = to.to_string();
  while (!q.empty()) {
    TreeShape cur = q.front();
    q.pop_front();
    for (const FMove& mv : available_moves(cur)) {
      TreeShape nxt = apply_move_shape(cur, mv);
      std::string key = nxt.to_string();
      if (prev.count(key)) continue;
      prev[key] = {cur.to_string(), mv};
      if (key == goal) {
        // reconstruct
        std::vector<FMove> path;
        std::string at = key;
        while (at != from.to_string()) {
          auto& [par, pm] = prev[at];
          path.push_back(pm);
          at = par;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(nxt);
    }
  }
  throw std::logic_error("no F-move path between shapes");
}

const std::vector<FMove>& sibling_path(const TreeShape& from, int i) {
  static std::map<std::string, std::vector<FMove>> cache;
  static std::mutex mu;
  std::string key = from.to_string() + "#" + std::to_string(i);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  if (i < 1 || i + 1 > from.nleaves) throw std::invalid_argument("sibling_path: bad strand index");
  // BFS to any shape containing node (i, i+1)
  std::map<std::string, std::pair<std::string, FMove>> prev;
  std::deque<TreeShape> q{from};
  prev[from.to_string()] = {"", FMove{}};
  std::vector<FMove> path;
  bool found = from.has_node(i, i + 1);
  std::string goal;
  while (!q.empty() && !found) {
    TreeShape cur = q.front();
    q.pop_front();
    for (const FMove& mv : available_moves(cur)) {
      TreeShape nxt = apply_move_shape(cur, mv);
      std::string key2 = nxt.to_string();
      if (prev.count(key2)) continue;
      prev[key2] = {cur.to_string(), mv};
      if (nxt.has_node(i, i + 1)) {
        goal = key2;
        found = true;
        break;
      }
      q.push_back(nxt);
    }
  }
  if (!goal.empty()) {
    std::string at = goal;
    while (at != from.to_string()) {
      auto& [par, pm] = prev[at];
      path.push_back(pm);
      at = par;
    }
    std::reverse(path.begin(), path.end());
  }
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, std::move(path)).first->second;
}

}  // namespace anyonkit
