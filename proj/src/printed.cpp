#include "anyonkit/printed.hpp"

#include <algorithm>

#include "anyonkit/scalar_expr.hpp"

namespace anyonkit {
namespace {

struct RepSpec {
  const char* id;
  char m, z;
  const char* table3;
  const char* morder;  // nullptr: same as table3
  const char* lambda;
  NormTag tag;
  const char* pre[3];
  const char* body[3];
};

// sigma_2 of B.1.3 is published with a 1/2 prefactor but a bare 1 in the
// (CC,CC) cell, which is not unitary; the cell must read 2 (the trivial
// sector containing |CC> is fixed pointwise). Encoded corrected.
const RepSpec kReps[] = {
    {"B.1.1", 'C', 'A', "AA,BB,CC", nullptr, "-1", NormTag::DetNormalized,
     {"1", "-1/2", "1"},
     {"-1,0,0;0,1,0;0,0,-1", "1,-1,r2;-1,1,r2;r2,r2,0", "-1,0,0;0,1,0;0,0,-1"}},
    {"B.1.2", 'C', 'B', "CC,AB,BA", nullptr, "-1", NormTag::DetNormalized,
     {"1", "-1/2", "1"},
     {"-1,0,0;0,-1,0;0,0,1", "0,-r2,-r2;-r2,1,-1;-r2,-1,1", "-1,0,0;0,1,0;0,0,-1"}},
    {"B.1.3", 'C', 'C', "CC,AC,CA,BC,CB", nullptr, "1", NormTag::Raw,
     {"1", "1/2", "1"},
     {"1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,-1,0;0,0,0,0,1",
      "2,0,0,0,0;0,1,1,1,-1;0,1,1,-1,1;0,1,-1,1,1;0,-1,1,1,1",
      "1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,-1"}},
    {"B.2.1", 'D', 'A', "AA,CC,FF,GG,HH", "AA,GG,FF,CC,HH", "-1", NormTag::DetNormalized,
     {"1", "1/6", "1"},
     {"1,0,0,0,0;0,w2,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,w",
      "2,-r2+r6 i,2r2,2r2,-r2-r6 i;"
      "-r2+r6 i,1+r3 i,1-r3 i,1-r3 i,4;"
      "2r2,1-r3 i,4,-2,1+r3 i;"
      "2r2,1-r3 i,-2,4,1+r3 i;"
      "-r2-r6 i,4,1+r3 i,1+r3 i,1-r3 i",
      "1,0,0,0,0;0,w2,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,w"}},
    {"B.2.2", 'D', 'B', "CC,FF,GG,HH", "GG,FF,CC,HH", "-1", NormTag::DetNormalized,
     {"1", "1/6", "1"},
     {"w2,0,0,0;0,1,0,0;0,0,1,0;0,0,0,w",
      "3-r3 i,3+r3 i,3+r3 i,0;"
      "3+r3 i,0,-2r3 i,-3+r3 i;"
      "3+r3 i,-2r3 i,0,3-r3 i;"
      "0,-3+r3 i,3-r3 i,3+r3 i",
      "w2,0,0,0;0,1,0,0;0,0,1,0;0,0,0,w"}},
    {"B.2.3", 'D', 'F', "FF,AF,FA,GC,CG,GH,HG,CH,HC", nullptr, "-1", NormTag::DetNormalized,
     {"1", "1/3", "1"},
     {"1,0,0,0,0,0,0,0,0;0,1,0,0,0,0,0,0,0;0,0,1,0,0,0,0,0,0;0,0,0,w2,0,0,0,0,0;"
      "0,0,0,0,1,0,0,0,0;0,0,0,0,0,w2,0,0,0;0,0,0,0,0,0,w,0,0;0,0,0,0,0,0,0,1,0;"
      "0,0,0,0,0,0,0,0,w",
      "1,1,1,w2,w2,1,1,w,w;"
      "1,1,1,w,1,w,w2,1,w2;"
      "1,1,1,1,w,w2,w,w2,1;"
      "w2,w,1,1,w2,w,1,1,1;"
      "w2,1,w,w2,1,1,w,1,1;"
      "1,w,w2,w,1,1,1,w2,1;"
      "1,w2,w,1,w,1,1,1,w2;"
      "w,1,w2,1,1,w2,1,1,w;"
      "w,w2,1,1,1,1,w2,w,1",
      "1,0,0,0,0,0,0,0,0;0,1,0,0,0,0,0,0,0;0,0,1,0,0,0,0,0,0;0,0,0,1,0,0,0,0,0;"
      "0,0,0,0,w2,0,0,0,0;0,0,0,0,0,w,0,0,0;0,0,0,0,0,0,w2,0,0;0,0,0,0,0,0,0,w,0;"
      "0,0,0,0,0,0,0,0,1"}},
    {"B.2.4", 'D', 'G', "GG,AG,GA,FC,CF,FH,HF,CH,HC", nullptr, "-1", NormTag::DetNormalized,
     {"1", "1/3", "1"},
     {"w2,0,0,0,0,0,0,0,0;0,1,0,0,0,0,0,0,0;0,0,w2,0,0,0,0,0,0;0,0,0,1,0,0,0,0,0;"
      "0,0,0,0,1,0,0,0,0;0,0,0,0,0,1,0,0,0;0,0,0,0,0,0,w,0,0;0,0,0,0,0,0,0,1,0;"
      "0,0,0,0,0,0,0,0,w",
      "1,w,w,w2,w2,1,1,1,1;"
      "w,1,w,1,1,1,w2,1,w2;"
      "w,w,1,1,1,w2,1,w2,1;"
      "w2,1,1,1,w2,1,w,w,1;"
      "w2,1,1,w2,1,w,1,1,w;"
      "1,1,w2,1,w,1,1,w2,w;"
      "1,w2,1,w,1,1,1,w,w2;"
      "1,1,w2,w,1,w2,w,1,1;"
      "1,w2,1,1,w,w,w2,1,1",
      "w2,0,0,0,0,0,0,0,0;0,w2,0,0,0,0,0,0,0;0,0,1,0,0,0,0,0,0;0,0,0,1,0,0,0,0,0;"
      "0,0,0,0,1,0,0,0,0;0,0,0,0,0,w,0,0,0;0,0,0,0,0,0,1,0,0;0,0,0,0,0,0,0,w,0;"
      "0,0,0,0,0,0,0,0,1"}},
    {"B.2.x-DC", 'D', 'C', "CC,AC,CA,GF,FG,GH,HG,FH,HF", nullptr, "-1", NormTag::DetNormalized,
     {nullptr, nullptr, nullptr},
     {nullptr, nullptr, nullptr}},
    {"B.2.x-DH", 'D', 'H', "HH,AH,HA,GF,FG,GC,CG,FC,CF", nullptr, "-1", NormTag::DetNormalized,
     {nullptr, nullptr, nullptr},
     {nullptr, nullptr, nullptr}},
    {"B.3.1", 'G', 'A', "AA,BB,GG", nullptr, "t", NormTag::DetNormalized,
     {"t", "t", "t"},
     {"w2,0,0;0,-w2,0;0,0,w",
      "w/2,-w/2,w2/r2;-w/2,w/2,w2/r2;w2/r2,w2/r2,0",
      "w2,0,0;0,-w2,0;0,0,w"}},
    {"B.3.2", 'G', 'B', "GG,AB,BA", nullptr, "t", NormTag::DetNormalized,
     {"t", "t", "t"},
     {"w,0,0;0,w2,0;0,0,-w2",
      "0,-w2/r2,-w2/r2;-w2/r2,w/2,-w/2;-w2/r2,-w/2,w/2",
      "w,0,0;0,-w2,0;0,0,w2"}},
    {"B.3.3", 'G', 'G', "GG,AG,GA,BG,GB", nullptr, "1", NormTag::Raw,
     {"1", "1", "1"},
     {"w,0,0,0,0;0,w2,0,0,0;0,0,w,0,0;0,0,0,-w2,0;0,0,0,0,w",
      "w,0,0,0,0;0,w/2,w2/2,w/2,-w2/2;0,w2/2,w/2,-w2/2,w/2;"
      "0,w/2,-w2/2,w/2,w2/2;0,-w2/2,w/2,w2/2,w/2",
      "w,0,0,0,0;0,w,0,0,0;0,0,w2,0,0;0,0,0,w,0;0,0,0,0,-w2"}},
};

struct SectorSpec {
  const char* rep_id;
  const char* name;
  const char* vecs;  // vectors '|', terms ',', term "coeff:XY"
  const char* lambda;
  const char* pre[3];
  const char* body[3];
};

const SectorSpec kSectors[] = {
    {"B.1.1", "S1", "r6/3:AA,r3/3:CC", "-1", {nullptr}, {nullptr}},
    {"B.1.1", "S2", "1:BB|-r3/3:AA,r6/3:CC", "-i",
     {"i", "i/2", "i"},
     {"1,0;0,-1", "-1,-r3;-r3,1", "1,0;0,-1"}},
    {"B.1.3", "V", "1/r2:AC,-1/r2:CA|1:BC|1:CB", "-1",
     {"1", "-1/2", "1"},
     {"-1,0,0;0,1,0;0,0,-1", "0,r2,-r2;r2,1,1;-r2,1,1", "-1,0,0;0,-1,0;0,0,1"}},
    {"B.1.3", "T1", "1:CC", "1", {nullptr}, {nullptr}},
    {"B.1.3", "T2", "1/r2:AC,1/r2:CA", "1", {nullptr}, {nullptr}},
    {"B.2.1", "S", "1:GG|1:HH|-r2/2:AA,1/2:CC,1/2:FF", "-1",
     {"1", "1/6", "1"},
     {"w2,0,0;0,w,0;0,0,1",
      "1+r3 i,4,2-2r3 i;4,1-r3 i,2+2r3 i;2-2r3 i,2+2r3 i,-2",
      "w2,0,0;0,w,0;0,0,1"}},
    {"B.2.1", "T1", "1/r2:CC,-1/r2:FF", "-1", {nullptr}, {nullptr}},
    {"B.2.1", "T2", "1/r2:AA,1/2:CC,1/2:FF", "-1", {nullptr}, {nullptr}},
    {"B.2.2", "S1", "1:GG|1/r2:CC,1/r2:FF", "-w2",
     {"1", "1", "1"},
     {"w,0;0,w2", "-1/2-r3 i/6,-r6 i/3;-r6 i/3,-1/2+r3 i/6", "w,0;0,w2"}},
    // S2 is published as "exactly the same as S1"; the single-scalar match
    // holds in the order below.
    {"B.2.2", "S2", "1/r2:FF,-1/r2:CC|1:HH", "-w",
     {"1", "1", "1"},
     {"w,0;0,w2", "-1/2-r3 i/6,-r6 i/3;-r6 i/3,-1/2+r3 i/6", "w,0;0,w2"}},
    {"B.2.3", "T", "1/r3:FF,1/r3:AF,1/r3:FA", "-1", {nullptr}, {nullptr}},
    {"B.2.3", "E8",
     "1/r2:FF,-1/r2:AF|1/r6:FF,1/r6:AF,-2/r6:FA|1:GC|1:CG|1:GH|1:HG|1:CH|1:HC", "-1",
     {nullptr}, {nullptr}},
    {"B.2.4", "W", "1/r2:FC,-1/r2:CF|1/r2:CH,-1/r2:FH|1/r2:HF,-1/r2:HC", "-1",
     {"1", "1", "1"},
     {"1,0,0;0,1,0;0,0,w",
      "1/2+r3 i/6,-1/2+r3 i/6,-1/2+r3 i/6;"
      "-1/2+r3 i/6,1/2+r3 i/6,-1/2+r3 i/6;"
      "-1/2+r3 i/6,-1/2+r3 i/6,1/2+r3 i/6",
      "1,0,0;0,w,0;0,0,1"}},
    {"B.2.4", "UV",
     "1:GG|1:AG|1:GA|1/r2:FC,1/r2:CF|1/r2:FH,1/r2:CH|1/r2:HF,1/r2:HC", "-1",
     {"1", "1/3", "1"},
     {"w2,0,0,0,0,0;0,1,0,0,0,0;0,0,w2,0,0,0;0,0,0,1,0,0;0,0,0,0,1,0;0,0,0,0,0,w",
      "1,w,w,r2 w2,r2,r2;"
      "w,1,w,r2,r2,r2 w2;"
      "w,w,1,r2,r2 w2,r2;"
      "r2 w2,r2,r2,-w,-w2,-w2;"
      "r2,r2,r2 w2,-w2,-w,-w2;"
      "r2,r2 w2,r2,-w2,-w2,-w",
      "w2,0,0,0,0,0;0,w2,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,0;0,0,0,0,w,0;0,0,0,0,0,1"}},
    {"B.2.x-DC", "T", "1/r3:CC,1/r3:AC,1/r3:CA", "-1", {nullptr}, {nullptr}},
    {"B.2.x-DC", "E8",
     "1/r2:CC,-1/r2:AC|1/r6:CC,1/r6:AC,-2/r6:CA|1:GF|1:FG|1:GH|1:HG|1:FH|1:HF", "-1",
     {nullptr}, {nullptr}},
    {"B.2.x-DH", "W", "1/r2:FC,-1/r2:CF|1/r2:CG,-1/r2:FG|1/r2:GF,-1/r2:GC", "-1",
     {nullptr}, {nullptr}},
    {"B.2.x-DH", "UV",
     "1:HH|1:AH|1:HA|1/r2:FC,1/r2:CF|1/r2:FG,1/r2:CG|1/r2:GF,1/r2:GC", "-1",
     {nullptr}, {nullptr}},
    {"B.3.3", "T", "1:GG", "1", {nullptr}, {nullptr}},
    {"B.3.3", "Q4", "1:AG|1:GA|1:BG|1:GB", "1", {nullptr}, {nullptr}},
};

std::vector<Mat> build_sigmas(const char* const pre[3], const char* const body[3]) {
  std::vector<Mat> out;
  if (!body[0]) return out;
  for (int i = 0; i < 3; ++i) out.push_back(parse_matrix(body[i], pre[i]));
  return out;
}

std::vector<std::vector<std::pair<Cyc, Labeling>>> parse_vectors(const std::string& s) {
  std::vector<std::vector<std::pair<Cyc, Labeling>>> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i != s.size() && s[i] != '|') continue;
    std::string vec = s.substr(start, i - start);
    start = i + 1;
    std::vector<std::pair<Cyc, Labeling>> terms;
    size_t ts = 0;
    for (size_t j = 0; j <= vec.size(); ++j) {
      if (j != vec.size() && vec[j] != ',') continue;
      std::string term = vec.substr(ts, j - ts);
      ts = j + 1;
      auto colon = term.rfind(':');
      Cyc coef = parse_scalar(term.substr(0, colon));
      std::string xy = term.substr(colon + 1);
      terms.push_back({coef, Labeling{label_from_char(xy[0]), label_from_char(xy[1])}});
    }
    out.push_back(std::move(terms));
  }
  return out;
}

}  // namespace

std::vector<Labeling> parse_pair_order(const std::string& csv) {
  std::vector<Labeling> out;
  size_t start = 0;
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i != csv.size() && csv[i] != ',') continue;
    std::string xy = csv.substr(start, i - start);
    start = i + 1;
    out.push_back(Labeling{label_from_char(xy[0]), label_from_char(xy[1])});
  }
  return out;
}

const std::vector<PaperRepData>& paper_reps() {
  static const std::vector<PaperRepData> reps = [] {
    std::vector<PaperRepData> out;
    for (const auto& r : kReps) {
      PaperRepData d;
      d.id = r.id;
      d.m = label_from_char(r.m);
      d.z = label_from_char(r.z);
      d.table3_order = parse_pair_order(r.table3);
      d.matrix_order = r.morder ? parse_pair_order(r.morder) : d.table3_order;
      d.lambda = parse_scalar(r.lambda);
      d.tag = r.tag;
      d.sigmas = build_sigmas(r.pre, r.body);
      out.push_back(std::move(d));
    }
    return out;
  }();
  return reps;
}

const std::vector<PaperSectorData>& paper_sectors() {
  static const std::vector<PaperSectorData> secs = [] {
    std::vector<PaperSectorData> out;
    for (const auto& s : kSectors) {
      PaperSectorData d;
      d.rep_id = s.rep_id;
      d.name = s.name;
      d.vectors = parse_vectors(s.vecs);
      d.lambda = parse_scalar(s.lambda);
      d.sigmas = build_sigmas(s.pre, s.body);
      out.push_back(std::move(d));
    }
    return out;
  }();
  return secs;
}

const PaperRepData& paper_rep(Label m, Label z) {
  for (const auto& r : paper_reps())
    if (r.m == m && r.z == z) return r;
  throw std::invalid_argument("no published representation for (" + label_name(m) + "," +
                              label_name(z) + ")");
}

std::vector<const PaperSectorData*> sectors_of(const std::string& rep_id) {
  std::vector<const PaperSectorData*> out;
  for (const auto& s : paper_sectors())
    if (s.rep_id == rep_id) out.push_back(&s);
  return out;
}

FusionBasis paper_matrix_basis(const PaperRepData& rep) {
  FusionBasis canon = enumerate_basis(ds3_model(), rep.m, rep.z, TreeShape::paired4());
  return reorder_basis(canon, rep.matrix_order);
}

FusionBasis table3_basis(const PaperRepData& rep) {
  FusionBasis canon = enumerate_basis(ds3_model(), rep.m, rep.z, TreeShape::paired4());
  return reorder_basis(canon, rep.table3_order);
}

Sector build_sector(const PaperSectorData& def, const FusionBasis& basis) {
  Sector s;
  s.name = def.rep_id + "/" + def.name;
  for (const auto& terms : def.vectors) {
    StateVector v = StateVector::zero(basis);
    for (const auto& [coef, lab] : terms) {
      int i = basis.find(lab);
      if (i < 0) throw std::invalid_argument("sector vector uses unknown basis element");
      v.amp[i] += coef;
    }
    s.vecs.push_back(std::move(v));
  }
  return s;
}

}  // namespace anyonkit
