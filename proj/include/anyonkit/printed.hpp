#pragma once

#include "anyonkit/braid.hpp"

namespace anyonkit {

// Reference data for the B_4 representations rho(m,z): the basis orders the
// paper prints (Table 3 and the per-subsection matrix bases), the published
// generator matrices, and the single scalar relating each published block to
// the raw F/R construction. The scalars are frozen here and asserted
// entry-for-entry by the test suites.
struct PaperRepData {
  std::string id;  // subsection tag, e.g. "B.2.4"
  Label m, z;
  std::vector<Labeling> table3_order;
  std::vector<Labeling> matrix_order;  // order the sigma matrices are printed in
  Cyc lambda;                          // printed = lambda * raw
  NormTag tag;                         // view of the printed matrices
  std::vector<Mat> sigmas;             // printed sigma_1..3; empty if not published
};

struct PaperSectorData {
  std::string rep_id;
  std::string name;
  // orthonormal vectors over the rep's matrix_order basis
  std::vector<std::vector<std::pair<Cyc, Labeling>>> vectors;
  Cyc lambda;              // published sector form = lambda * raw restriction
  std::vector<Mat> sigmas; // published sector matrices; empty if none
};

const std::vector<PaperRepData>& paper_reps();
const std::vector<PaperSectorData>& paper_sectors();
const PaperRepData& paper_rep(Label m, Label z);
std::vector<const PaperSectorData*> sectors_of(const std::string& rep_id);

// V_z^{mmmm} basis in the order the subsection's matrices use.
FusionBasis paper_matrix_basis(const PaperRepData& rep);
// Same space in the Table 3 printed order.
FusionBasis table3_basis(const PaperRepData& rep);

Sector build_sector(const PaperSectorData& def, const FusionBasis& basis);

// Parses "GG,AG,GA" into labelings of a 4-leaf paired basis.
std::vector<Labeling> parse_pair_order(const std::string& csv);

}  // namespace anyonkit
