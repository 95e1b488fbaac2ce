#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "anyonkit/model.hpp"

namespace anyonkit {

// A fusion-tree shape on n ordered leaves, stored as the laminar family of
// leaf ranges: every node covers a contiguous range [lo, hi] (1-based) and an
// internal node [lo, hi] splits at some p into [lo, p] and [p+1, hi]. This
// makes F-moves purely local: a move replaces one range by another and all
// other labels ride along.
struct TreeShape {
  int nleaves = 0;
  std::map<std::pair<int, int>, int> split;  // internal range -> split point

  static TreeShape parse(const std::string& parens);  // e.g. "((**)(**))"
  static TreeShape caterpillar(int n);                // (((12)3)...)
  static TreeShape paired4();                         // ((12)(34))
  static TreeShape two_branch8();                     // (((12)(34))((56)(78)))

  std::string to_string() const;
  bool operator<(const TreeShape& o) const { return to_string() < o.to_string(); }
  bool operator==(const TreeShape& o) const {
    return nleaves == o.nleaves && split == o.split;
  }

  // Internal non-root ranges in (lo, hi) order; these carry the basis labels.
  std::vector<std::pair<int, int>> label_slots() const;
  bool has_node(int lo, int hi) const;
};

// One admissible labeling: a label per label_slot of the shape.
using Labeling = std::vector<Label>;

enum class BasisOrder { Canonical, Printed };

// Orthonormal fusion-tree basis of V_z^{mm...m} on a given shape.
struct FusionBasis {
  const AnyonModel* model = nullptr;
  TreeShape shape;
  Label leaf = Label::A;  // all leaves carry this label
  Label root = Label::A;
  BasisOrder order = BasisOrder::Canonical;
  std::vector<Labeling> elems;
  std::map<Labeling, int> index;

  int dim() const { return int(elems.size()); }
  int find(const Labeling& l) const;
  std::string element_name(int i) const;  // e.g. "|GG>" for 4-leaf bases
};

// dim V_z^{m^n} by fusion-matrix powers (shape independent).
long fusion_dim(const AnyonModel& m, Label anyon, Label total, int nleaves);

// All admissible labelings in canonical order: slots sorted by range, tuples
// sorted lexicographically with each coordinate ranked A,B,G,D,E,F,C,H.
FusionBasis enumerate_basis(const AnyonModel& m, Label anyon, Label total, const TreeShape& shape);

// Same space, elements rearranged to a caller-supplied order (used for the
// orders printed in the paper). Unlisted elements are an error.
FusionBasis reorder_basis(const FusionBasis& b, const std::vector<Labeling>& order);

// Exact state on a fusion basis. Norm bookkeeping is left to callers; states
// are plain amplitude vectors.
struct StateVector {
  const FusionBasis* basis = nullptr;
  std::vector<Cyc> amp;

  static StateVector basis_state(const FusionBasis& b, int i);
  static StateVector zero(const FusionBasis& b);
  Cyc norm2() const;
  bool is_zero() const;
};

Cyc inner_product(const StateVector& u, const StateVector& v);

// A single F-move: reassociате the internal node covering `parent` range.
// `to_right` true rewrites ((ab)c) -> (a(bc)) at that node, false the inverse.
struct FMove {
  std::pair<int, int> parent;
  bool to_right = true;
};

// Moves applicable to a shape, and the result of applying one.
std::vector<FMove> available_moves(const TreeShape& s);
TreeShape apply_move_shape(const TreeShape& s, const FMove& mv);

// Applies an F-move to a state, producing a state on the moved shape.
StateVector apply_move(const StateVector& v, const FMove& mv);

// Public f_move per the module contract: vertex given as an internal node
// index into label_slots() extended by the root; throws on nodes that admit
// no reassociation in the requested direction.
StateVector f_move(const StateVector& v, std::pair<int, int> parent, bool to_right);

// Shortest F-move path from `from` to a shape containing the sibling pair
// (i, i+1); cached per (shape, i).
const std::vector<FMove>& sibling_path(const TreeShape& from, int i);

// Path between two arbitrary shapes (BFS over the associahedron).
std::vector<FMove> shape_path(const TreeShape& from, const TreeShape& to);

// Column `col` of sigma_i on a canonically-ordered basis, as a sparse vector;
// avoids dense intermediates when building large representations.
std::vector<std::pair<int, Cyc>> sigma_column(const FusionBasis& canon, int i, int col,
                                              bool inverse);

}  // namespace anyonkit
