#include "anyonkit/braid.hpp"

#include <algorithm>
#include <numeric>

namespace anyonkit {

namespace {

// R-multiplication at the sibling vertex (i, i+1) on the current shape.
// Exchanging the two identical leaves in channel c multiplies by R^{mm}_c.
void r_twist(StateVector& v, int i, bool inverse) {
  const FusionBasis& b = *v.basis;
  const AnyonModel& m = *b.model;
  auto slots = b.shape.label_slots();
  int slot = -1;
  for (size_t s = 0; s < slots.size(); ++s)
    if (slots[s] == std::make_pair(i, i + 1)) slot = int(s);
  // the pair may be the whole tree only when n = 2; then the channel is root
  for (size_t k = 0; k < v.amp.size(); ++k) {
    if (v.amp[k].is_zero()) continue;
    Label c = slot >= 0 ? b.elems[k][slot] : b.root;
    const Cyc& r = m.r_symbol(b.leaf, b.leaf, c);
    v.amp[k] = inverse ? v.amp[k] * r.conjugate() : v.amp[k] * r;
  }
}

StateVector transport(const StateVector& v, const std::vector<FMove>& path, bool forward) {
  StateVector cur = v;
  if (forward) {
    for (const FMove& mv : path) cur = apply_move(cur, mv);
  } else {
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      cur = apply_move(cur, FMove{it->parent, !it->to_right});
  }
  return cur;
}

}  // namespace

StateVector apply_sigma(const StateVector& v, int i, bool inverse) {
  const auto& path = sibling_path(v.basis->shape, i);
  StateVector cur = transport(v, path, true);
  r_twist(cur, i, inverse);
  cur = transport(cur, path, false);
  if (cur.basis->shape.to_string() != v.basis->shape.to_string())
    throw std::logic_error("sigma transport did not return to the source shape");
  // realign to the caller's basis object (orders can differ)
  if (cur.basis != v.basis) {
    StateVector out = StateVector::zero(*v.basis);
    for (size_t k = 0; k < cur.amp.size(); ++k) {
      if (cur.amp[k].is_zero()) continue;
      int j = v.basis->find(cur.basis->elems[k]);
      if (j < 0) throw std::logic_error("basis mismatch after sigma transport");
      out.amp[j] = cur.amp[k];
    }
    return out;
  }
  return cur;
}

StateVector apply_braid(const StateVector& v, const BraidWord& w) {
  // Matrix convention: the word as written is a left-to-right matrix
  // product, so the rightmost letter acts first.
  StateVector cur = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    if (i == 0 || std::abs(i) >= std::max(w.strands, cur.basis->shape.nleaves))
      throw std::invalid_argument("braid letter out of range");
    cur = apply_sigma(cur, std::abs(i), i < 0);
  }
  return cur;
}

Mat sigma_matrix(const FusionBasis& basis, int i) {
  if (i < 1 || i >= basis.shape.nleaves) throw std::invalid_argument("sigma index out of range");
  int d = basis.dim();
  Mat out(d, d);
  for (int j = 0; j < d; ++j) {
    StateVector col = apply_sigma(StateVector::basis_state(basis, j), i, false);
    for (int r = 0; r < d; ++r) out.at(r, j) = col.amp[r];
  }
  return out;
}

RepMatrixSet build_rep(const FusionBasis& basis) {
  RepMatrixSet rep;
  rep.basis = &basis;
  for (int i = 1; i < basis.shape.nleaves; ++i) rep.sigma.push_back(sigma_matrix(basis, i));
  return rep;
}

Mat evaluate(const BraidWord& w, const std::vector<Mat>& gens) {
  if (gens.empty()) throw std::invalid_argument("evaluate: no generators");
  int d = gens[0].rows();
  Mat acc = Mat::identity(d);
  for (int letter : w.letters) {
    int i = std::abs(letter);
    if (i < 1 || i > int(gens.size())) throw std::out_of_range("braid letter out of range");
    acc = acc * (letter > 0 ? gens[i - 1] : gens[i - 1].dagger());
  }
  return acc;
}

std::pair<std::vector<Mat>, Cyc> normalize_special(const std::vector<Mat>& gens) {
  if (gens.empty()) throw std::invalid_argument("normalize_special: no generators");
  int d = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("normalize_special: dimension mismatch");
  Cyc det = gens[0].det();
  auto t = det.as_root_of_unity();
  if (!t) throw std::domain_error("normalize_special: determinant is not a root of unity");
  // want s = zeta^u with d*u = -t (mod 72)
  std::vector<int> sols;
  for (int u = 0; u < Cyc::kOrder; ++u)
    if ((d * u + *t) % Cyc::kOrder == 0) sols.push_back(u);
  if (sols.empty())
    throw std::domain_error("normalize_special: no d-th root of det^-1 in Q(zeta_72)");
  auto order_of = [](int u) { return Cyc::kOrder / std::gcd(u == 0 ? Cyc::kOrder : u, Cyc::kOrder); };
  auto phase_of = [](int u) { return u > Cyc::kOrder / 2 ? u - Cyc::kOrder : u; };
  int best = sols[0];
  for (int u : sols) {
    int ou = order_of(u), ob = order_of(best);
    if (ou != ob) {
      if (ou < ob) best = u;
      continue;
    }
    int pu = phase_of(u), pb = phase_of(best);
    if (std::abs(pu) != std::abs(pb)) {
      if (std::abs(pu) < std::abs(pb)) best = u;
      continue;
    }
    if (pu > pb) best = u;
  }
  Cyc s = Cyc::zeta_pow(best);
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    Mat ng = g.scaled(s);
    if (!ng.det().is_one())
      throw std::domain_error("normalize_special: generators do not share a determinant");
    out.push_back(std::move(ng));
  }
  return {out, s};
}

ConsistencyReport verify_braid_relations(const std::vector<Mat>& gens) {
  ConsistencyReport rep;
  int n = int(gens.size());
  for (int i = 0; i + 1 < n; ++i) {
    ++rep.checked;
    if (gens[i] * gens[i + 1] * gens[i] != gens[i + 1] * gens[i] * gens[i + 1])
      rep.violations.push_back({"braid relation s" + std::to_string(i + 1) + " s" +
                                    std::to_string(i + 2),
                                "aba", "bab"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      ++rep.checked;
      if (gens[i] * gens[j] != gens[j] * gens[i])
        rep.violations.push_back({"far commutation s" + std::to_string(i + 1) + " s" +
                                      std::to_string(j + 1),
                                  "ab", "ba"});
    }
  for (const auto& g : gens) {
    ++rep.checked;
    if (!g.is_unitary())
      rep.violations.push_back({"generator unitarity", "g g^dagger", "I"});
  }
  return rep;
}

Mat restrict_to_sector(const Mat& g, const Sector& s) {
  int d = s.dim();
  Mat out(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<Cyc> img = g.apply(s.vecs[j].amp);
    for (int i = 0; i < d; ++i) {
      Cyc v;
      for (size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero() && !s.vecs[i].amp[k].is_zero())
          v += s.vecs[i].amp[k].conjugate() * img[k];
      out.at(i, j) = v;
    }
  }
  return out;
}

SectorCheck verify_sector(const Sector& s, const std::vector<Mat>& gens) {
  SectorCheck out;
  int d = s.dim();
  out.orthonormal = true;
  for (int i = 0; i < d && out.orthonormal; ++i)
    for (int j = 0; j < d; ++j) {
      Cyc ip = inner_product(s.vecs[i], s.vecs[j]);
      if (ip != (i == j ? Cyc::one() : Cyc::zero())) {
        out.orthonormal = false;
        break;
      }
    }
  if (!out.orthonormal) throw std::invalid_argument("verify_sector: candidate not orthonormal");

  // invariance: g v - sum_i <v_i|g v> v_i == 0 exactly
  out.invariant = true;
  std::vector<Mat> restricted;
  for (const auto& g : gens) restricted.push_back(restrict_to_sector(g, s));
  for (size_t gi = 0; gi < gens.size() && out.invariant; ++gi) {
    for (int j = 0; j < d; ++j) {
      std::vector<Cyc> img = gens[gi].apply(s.vecs[j].amp);
      for (int i = 0; i < d; ++i) {
        const Cyc& c = restricted[gi].at(i, j);
        if (c.is_zero()) continue;
        for (size_t k = 0; k < img.size(); ++k)
          if (!s.vecs[i].amp[k].is_zero()) img[k] -= c * s.vecs[i].amp[k];
      }
      for (const auto& rem : img)
        if (!rem.is_zero()) {
          out.invariant = false;
          break;
        }
      if (!out.invariant) break;
    }
  }
  if (!out.invariant) return out;

  // irreducibility: commutant {X : X M_g = M_g X} has dimension 1
  std::vector<std::vector<Cyc>> rows;
  for (const auto& M : restricted)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // (XM - MX)_{ij} = sum_k X_{ik} M_{kj} - M_{ik} X_{kj}
        std::vector<Cyc> row(size_t(d) * d);
        for (int k = 0; k < d; ++k) {
          row[size_t(i) * d + k] += M.at(k, j);
          row[size_t(k) * d + j] -= M.at(i, k);
        }
        rows.push_back(std::move(row));
      }
  out.irreducible = nullspace_dimension(std::move(rows), d * d) == 1;
  return out;
}

}  // namespace anyonkit
