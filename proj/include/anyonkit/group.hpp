#pragma once

#include <map>

#include "anyonkit/matrix.hpp"

namespace anyonkit {

struct MatrixGroup {
  std::vector<Mat> generators;
  std::vector<Mat> elements;  // BFS order from the identity
  bool capped = false;        // true when the cap was hit (likely infinite)
  long order() const { return long(elements.size()); }
};

struct GroupReport {
  long order = 0;
  long center_order = 0;
  long scalar_order = 0;      // elements that are scalar multiples of I
  long projective_order = 0;  // order / scalar_order
  std::map<int, long> element_order_profile;
  std::vector<Cyc> scalars;   // the scalar subgroup values
};

// Breadth-first closure under right multiplication by the generators.
// Throws when more than `cap` elements appear (runaway growth guard).
MatrixGroup closure(const std::vector<Mat>& generators, long cap = 20000);

GroupReport report(const MatrixGroup& g);

bool contains(const MatrixGroup& g, const Mat& m);

// A relation is a word over generator symbols with exponents, e.g.
// {{0,1},{1,1},{0,1},{1,-1},{0,-1},{1,-1}} encodes a b a b^-1 a^-1 b^-1.
using RelationWord = std::vector<std::pair<int, int>>;

// True iff every relation evaluates to the identity AND the closure order
// equals `expected_order` (the presented group's order, supplied by caller).
bool check_presentation(const MatrixGroup& g, const std::vector<Mat>& gens,
                        const std::vector<RelationWord>& relations, long expected_order);

// E, F(n,a,b), G(d,r,s) generators of the SU(3) subgroup family D(n,a,b;d,r,s).
// Requires n | 72 and d | 72 so the entries stay inside Q(zeta_72).
std::vector<Mat> dseries_generators(int n, int a, int b, int d, int r, int s);

// p g p^-1 lands in groupB for every generator g of groupA, and the two
// groups have equal order.
bool check_conjugation_equivalence(const Mat& p, const MatrixGroup& a, const MatrixGroup& b);

}  // namespace anyonkit
