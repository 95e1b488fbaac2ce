#include "anyonkit/group.hpp"

#include <deque>
#include <set>

namespace anyonkit {

MatrixGroup closure(const std::vector<Mat>& generators, long cap) {
  if (generators.empty()) throw std::invalid_argument("closure: no generators");
  int d = generators[0].rows();
  for (const auto& g : generators)
    if (g.rows() != d || g.cols() != d || !g.is_unitary())
      throw std::invalid_argument("closure: generators must be unitary and of equal dimension");
  MatrixGroup out;
  out.generators = generators;
  std::set<std::string> seen;
  std::deque<Mat> frontier;
  Mat id = Mat::identity(d);
  seen.insert(id.key());
  out.elements.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Mat cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Mat nxt = cur * g;
      auto [it, fresh] = seen.insert(nxt.key());
      (void)it;
      if (!fresh) continue;
      if (long(out.elements.size()) >= cap) {
        out.capped = true;
        throw std::domain_error("closure: cap of " + std::to_string(cap) +
                                " elements exceeded (group too large or not finite)");
      }
      out.elements.push_back(nxt);
      frontier.push_back(std::move(nxt));
    }
  }
  return out;
}

bool contains(const MatrixGroup& g, const Mat& m) {
  for (const auto& e : g.elements)
    if (e == m) return true;
  return false;
}

GroupReport report(const MatrixGroup& g) {
  GroupReport rep;
  rep.order = g.order();
  for (const auto& e : g.elements) {
    bool central = true;
    for (const auto& gen : g.generators)
      if (e * gen != gen * e) {
        central = false;
        break;
      }
    if (central) ++rep.center_order;
    if (auto s = e.as_scalar()) {
      ++rep.scalar_order;
      rep.scalars.push_back(*s);
    }
    auto ord = e.mult_order(int(rep.order) + 1);
    if (!ord) throw std::logic_error("group element order exceeded group order");
    ++rep.element_order_profile[*ord];
  }
  rep.projective_order = rep.order / rep.scalar_order;
  return rep;
}

bool check_presentation(const MatrixGroup& g, const std::vector<Mat>& gens,
                        const std::vector<RelationWord>& relations, long expected_order) {
  if (gens.empty()) return false;
  int d = gens[0].rows();
  for (const auto& rel : relations) {
    Mat acc = Mat::identity(d);
    for (auto [sym, expo] : rel) {
      if (sym < 0 || sym >= int(gens.size()))
        throw std::invalid_argument("check_presentation: unknown generator symbol");
      acc = acc * gens[sym].pow(expo);
    }
    if (!acc.is_identity()) return false;
  }
  return g.order() == expected_order;
}

std::vector<Mat> dseries_generators(int n, int a, int b, int d, int r, int s) {
  if (n <= 0 || 72 % n != 0 || d <= 0 || 72 % d != 0)
    throw std::invalid_argument("dseries_generators: n and d must divide 72");
  Mat E(3, 3);
  E.at(0, 1) = Cyc::one();
  E.at(1, 2) = Cyc::one();
  E.at(2, 0) = Cyc::one();
  Mat F(3, 3);
  F.at(0, 0) = Cyc::root_of_unity(n, a);
  F.at(1, 1) = Cyc::root_of_unity(n, b);
  F.at(2, 2) = Cyc::root_of_unity(n, -a - b);
  // monomial generator; the printed form in the source is typographically
  // incomplete, this is the placement that reproduces the claimed orders
  Mat G(3, 3);
  G.at(0, 0) = Cyc::root_of_unity(d, r);
  G.at(1, 2) = Cyc::root_of_unity(d, s);
  G.at(2, 1) = -Cyc::root_of_unity(d, -r - s);
  return {E, F, G};
}

bool check_conjugation_equivalence(const Mat& p, const MatrixGroup& a, const MatrixGroup& b) {
  if (!p.is_unitary()) throw std::invalid_argument("conjugation check: p must be unitary");
  if (a.elements.empty() || b.elements.empty())
    throw std::invalid_argument("conjugation check: groups must be closed first");
  if (a.generators[0].rows() != b.generators[0].rows())
    throw std::invalid_argument("conjugation check: dimension mismatch");
  if (a.order() != b.order()) return false;
  Mat pinv = p.dagger();
  for (const auto& g : a.generators)
    if (!contains(b, p * g * pinv)) return false;
  return true;
}

}  // namespace anyonkit
