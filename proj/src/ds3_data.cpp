#include "anyonkit/model.hpp"
#include "anyonkit/scalar_expr.hpp"

// Compiled-in D(S3) data. F-matrix rows/columns follow the index order
// A, B, G, D, E, F, C, H; admissible blocks that never appear below are
// 1x1 scalars equal to 1.

namespace anyonkit {
namespace {

// Fusion rules, one row per label A..H; '|' separates the channel lists of
// a x A, a x B, ..., a x H.
const char* kFusionRows[8] = {
    "A|B|C|D|E|F|G|H",
    "B|A|C|E|D|F|G|H",
    "C|C|ABC|DE|DE|GH|FH|FG",
    "D|E|DE|ACFGH|BCFGH|DE|DE|DE",
    "E|D|DE|BCFGH|ACFGH|DE|DE|DE",
    "F|F|GH|DE|DE|ABF|HC|GC",
    "G|G|FH|DE|DE|HC|ABG|FC",
    "H|H|FG|DE|DE|GC|FC|ABH",
};

const int kQdim[8] = {1, 1, 2, 3, 3, 2, 2, 2};

struct FEntry {
  const char* keys;  // comma-separated "abc:d"
  const char* pre;   // prefactor expression
  const char* rows;  // matrix body
};

// All F-blocks that are not identically 1. Multi-row literals are indexed by
// the admissible channel sets sorted in the A,B,G,D,E,F,C,H order.
const FEntry kFEntries[] = {
    // near-group subcategory {A,B,G}
    {"BGG:G,GBG:G,GGB:G,GGG:B", "1", "-1"},
    {"GGG:G", "1/2", "1,1,r2;1,1,-r2;r2,-r2,0"},

    // GG C2
    {"BDB:D,BEB:E", "1", "-1"},

    // G C1 C2
    {"BDG:E,BEG:D,GDB:E,GEB:D", "1", "-1"},

    // G C1 C3
    {"BGC:H,BGH:F,BGH:C,BFG:C,BCG:F,BCG:H,BHG:C,GBF:H,GBC:H,"
     "GBH:C,GFB:C,GCB:F,GCB:H,GHB:C,FBG:H,CBG:H,CGB:H,HBG:C,HGB:F,HGB:C",
     "1", "-1"},

    // G C2 C2
    {"BDD:F,BED:F,DBD:B,DBE:G,DBE:C,DBE:H,DDB:F,DEB:F,EBD:G,EBD:C,EBD:H,EBE:B", "1", "-1"},

    // G C2 C3
    {"BDC:E,BDH:E,BEC:D,BEH:D,BFD:D,BFD:E,DBF:D,DFB:D,DFB:E,"
     "EBF:D,FBD:D,FBE:D,CDB:E,CEB:D,HDB:E,HEB:D",
     "1", "-1"},

    // G C3 C3
    {"BFF:F,BFC:H,BFH:G,BCC:C,BCH:G,BHC:G,BHC:F,BHH:H,FBF:F,"
     "FBC:G,FBH:C,FFB:F,CBF:G,CBC:C,CBH:G,CFB:H,CCB:C,CHB:G,"
     "CHB:F,HBF:C,HBC:G,HBH:H,HFB:G,HCB:G,HHB:H",
     "1", "-1"},

    // C1 C1 C2
    {"GGD:D,GGE:E,DGG:D,EGG:E", "1/r2", "1,1;1,-1"},
    {"GGD:E,GGE:D", "1/r2", "1,-1;1,1"},
    {"DGG:E,EGG:D", "1/r2", "1,1;-1,1"},
    {"GDG:D", "1/2", "-1,-r3;-r3,1"},
    {"GDG:E,GEG:D", "1/2", "-r3,1;1,r3"},
    {"GEG:E", "1/2", "1,r3;r3,-1"},

    // C1 C1 C3
    {"GGF:F,GGC:C,GGH:H,FGG:F,CGG:C,HGG:H", "1/r2", "1,1;1,-1"},
    {"GFG:F,GCG:C,GHG:H", "1", "0,1;1,0"},

    // C1 C2 C2
    {"DGE:B,EGD:B", "1", "-1"},
    {"GDD:G,GDD:C,GDD:H,GEE:G,GEE:C,GEE:H,DDG:G,DDG:C,DDG:H,EEG:G,EEG:C,EEG:H",
     "1/r2", "1,1;1,-1"},
    {"GDD:F,GED:F,DEG:G,DEG:H,EDG:G,EDG:F,EDG:C,EEG:F", "1/r2", "1,-1;1,1"},
    {"GDE:G,GDE:F,GDE:C,GED:G,GED:H,GEE:F,DDG:F,DEG:F", "1/r2", "1,1;-1,1"},
    {"GDE:H,GED:C,DEG:C,EDG:H", "1/r2", "-1,-1;-1,1"},
    {"DGD:G,DGD:F", "1/2", "-1,-r3;-r3,1"},
    {"DGD:C", "1/2", "-1,r3;r3,1"},
    {"DGD:H", "1", "1,0;0,-1"},
    {"DGE:G,EGD:G", "1/2", "-r3,1;1,r3"},
    {"DGE:F", "1/2", "-r3,-1;1,-r3"},
    {"DGE:C,EGD:C", "1/2", "r3,1;1,-r3"},
    {"DGE:H,EGD:H", "1", "0,-1;-1,0"},
    {"EGD:F", "1/2", "-r3,1;-1,-r3"},
    {"EGE:G", "1/2", "1,r3;r3,-1"},
    {"EGE:F,EGE:C", "1/2", "1,-r3;-r3,-1"},
    {"EGE:H", "1", "-1,0;0,1"},

    // C1 C2 C3
    {"GDF:D,FDG:D", "1/2", "-1,-r3;-r3,1"},
    {"GDF:E,FEG:D", "1/2", "-r3,-1;1,-r3"},
    {"GDC:D,CDG:D", "1/2", "-1,r3;r3,1"},
    {"GDC:E,GEC:D,CDG:E,CEG:D", "1/2", "r3,1;1,-r3"},
    {"GDH:D,HDG:D", "1", "1,0;0,-1"},
    {"GDH:E,GEH:D,HDG:E,HEG:D", "1", "0,-1;-1,0"},
    {"GEF:D,FDG:E", "1/2", "-r3,1;-1,-r3"},
    {"GEF:E,GEC:E,FEG:E,CEG:E", "1/2", "1,-r3;-r3,-1"},
    {"GEH:E,HEG:E", "1", "-1,0;0,1"},
    {"GFD:D,GFD:E,DGF:E,DGC:E,DHG:E,EGF:E,EGH:D,EFG:D,EFG:E,ECG:D,FGD:D,FGE:D",
     "1/r2", "1,1;-1,1"},
    {"GFE:D,GFE:E,GCE:D,GHD:E,DGF:D,DFG:D,DFG:E,EGF:D,FGD:E,FGE:E,CGD:E,HGE:D",
     "1/r2", "1,-1;1,1"},
    {"GCD:D,GCE:E,GHD:D,GHE:E,DGC:D,DGH:D,DCG:D,DHG:D,EGC:E,EGH:E,ECG:E,EHG:E,"
     "CGD:D,CGE:E,HGD:D,HGE:E",
     "1/r2", "1,1;1,-1"},
    {"GCD:E,GHE:D,DGH:E,DCG:E,EGC:D,EHG:D,CGE:D,HGD:E", "1/r2", "-1,-1;-1,1"},

    // C1 C3 C3
    {"GFF:G,GCC:G,GHH:G,FFG:G,CCG:G,HHG:G", "1/r2", "1,1;1,-1"},
    {"GCH:B,GHF:B,GHC:B,FGC:B,FHG:B,CGF:B,CGH:B,CHG:B,HGC:B,HCG:B", "1", "-1"},
    {"FGF:G,CGC:G,HGH:G", "1", "0,1;1,0"},

    // C2 C2 C2
    {"DDD:D,EEE:E", "1/3",
     "1,r2,r2,r2,r2;r2,-1,-1,-1,2;r2,-1,2,-1,-1;r2,-1,-1,2,-1;r2,2,-1,-1,-1"},
    {"DDD:E,DDE:D,DED:D,EDD:D", "1/r3", "-1,-1,1,0;-1,0,-1,-1;1,-1,0,-1;0,-1,-1,1"},
    {"DDE:E,EED:D", "1/3",
     "1,-r2,r2,-r2,-r2;r2,1,-1,1,-2;r2,1,2,1,1;r2,1,-1,-2,1;r2,-2,-1,1,1"},
    {"DED:E,EDE:D", "1/3",
     "-1,r2,r2,r2,r2;r2,1,1,1,-2;r2,1,-2,1,1;r2,1,1,-2,1;r2,-2,1,1,1"},
    {"DEE:D,EDD:E", "1/3",
     "1,r2,r2,r2,r2;-r2,1,1,1,-2;r2,-1,2,-1,-1;-r2,1,1,-2,1;-r2,-2,1,1,1"},
    {"DEE:E,EDE:E,EED:E,EEE:D", "1/r3", "1,-1,-1,0;-1,0,-1,-1;-1,-1,0,1;0,-1,1,-1"},

    // C2 C2 C3
    {"DDF:B,DCE:B,DHE:B,EDF:B,ECD:B,EHD:B,FDD:B,FDE:B", "1", "-1"},
    {"DDF:G,DDF:H,DDC:H,DDH:F,DDH:C,DEH:F,EDF:G,EDF:H,EEC:H,EEH:C,FED:G,FED:H,"
     "FEE:G,FEE:F,FEE:H,CDE:C,CED:G,CED:C,HDE:G,HDE:F,HDE:H,HED:H,HEE:F",
     "1/r2", "1,1;-1,1"},
    {"DDF:F,DDF:C,DDC:G,DDC:F,DDC:C,DDH:G,DDH:H,DEC:F,EDF:C,EEC:G,EEC:C,EEH:G,"
     "EEH:H,FDD:F,FDD:C,FDE:C,CDD:G,CDD:F,CDD:C,CED:F,CEE:G,CEE:C,HDD:G,HDD:H,"
     "HEE:G,HEE:H",
     "1/r2", "1,1;1,-1"},
    {"DEF:G,DEF:H,DEC:G,DEC:C,DEH:H,EDC:C,EDH:G,EDH:F,EDH:H,EEF:G,EEF:F,EEF:H,"
     "EEH:F,FDD:G,FDD:H,FDE:G,FDE:H,CDD:H,CEE:H,HDD:F,HDD:C,HED:F,HEE:C",
     "1/r2", "1,-1;1,1"},
    {"DEF:F,DEC:H,EDF:F,EDH:C", "1/r2", "-1,-1;1,-1"},
    {"DEF:C,DEH:C,EDC:F,EDC:H,EEF:C,EEC:F,FED:C,FEE:C,CDE:F,CDE:H,CEE:F,HED:C",
     "1/r2", "-1,1;1,1"},
    {"DEH:G,EDC:G,CDE:G,HED:G", "1/r2", "-1,-1;-1,1"},
    {"DFD:G,DFD:C,DFD:H,DCD:F,DCD:H,DHD:F,DHD:C", "1/2", "-1,-r3;-r3,1"},
    {"DFD:F,DCD:C,DHD:G", "1", "1,0;0,-1"},
    {"DFE:G,DFE:C,DFE:H,ECD:F,EHD:F", "1/2", "-r3,1;-1,-r3"},
    {"DFE:F,EFD:F", "1", "0,1;1,0"},
    {"DCD:G,DHD:H", "1/2", "-1,r3;r3,1"},
    {"DCE:G,DHE:H,ECD:G,EHD:H", "1/2", "r3,1;1,-r3"},
    {"DCE:F,DHE:F,EFD:G,EFD:C,EFD:H", "1/2", "-r3,-1;1,-r3"},
    {"DCE:C,DHE:G,ECD:C,EHD:G", "1", "0,-1;-1,0"},
    {"DCE:H,DHE:C,ECD:H,EHD:C", "1/2", "-r3,1;1,r3"},
    {"EFE:G,EFE:C,EFE:H,ECE:G,ECE:F,EHE:F,EHE:H", "1/2", "1,-r3;-r3,-1"},
    {"EFE:F,ECE:C,EHE:G", "1", "-1,0;0,1"},
    {"ECE:H,EHE:C", "1/2", "1,r3;r3,-1"},
    {"FDE:F,FED:F,CED:H,HDE:C", "1/r2", "-1,1;-1,-1"},

    // C2 C3 C3
    {"DFF:D,DFC:D,DFC:E,DCF:D,DCC:D,DHH:D,ECF:D,ECC:E,EHH:E,FFD:D,FCD:D,FCE:D,"
     "CFD:D,CFD:E,CCD:D,CCE:E,HHD:D,HHE:E",
     "1/r2", "1,1;1,-1"},
    {"DFF:E,DHC:E,EFF:D,ECH:D", "1/r2", "-1,1;-1,-1"},
    {"DFH:D,DFH:E,DCH:D,DHF:D,DHC:D,ECH:E,EHF:D,EHC:E,FFE:E,FHD:E,FHE:E,CCD:E,"
     "CCE:D,HFE:D,HFE:E,HHD:E,HHE:D",
     "1/r2", "1,-1;1,1"},
    {"DCF:E,DCH:E,EFC:D,EFC:E,ECF:E,EHC:D,FCD:E,FCE:E,CFE:D,CFE:E,CHE:D,HCD:E",
     "1/r2", "-1,1;1,1"},
    {"DCC:E,DHF:E,DHH:E,EFF:E,EFH:D,EFH:E,ECC:D,EHF:E,EHH:D,FHD:D,FHE:D,CHD:D,"
     "CHE:E,HFD:D,HFD:E,HCD:D,HCE:E",
     "1/r2", "1,1;-1,1"},
    {"FDF:D,CDC:D", "1", "1,0;0,-1"},
    {"FDF:E,FEF:D", "1", "0,1;1,0"},
    {"FDC:D,FDH:D,CDF:D,CDH:D,HDF:D,HDC:D", "1/2", "-1,-r3;-r3,1"},
    {"FDC:E,FDH:E,CEF:D,HEF:D", "1/2", "-r3,1;-1,-r3"},
    {"FEF:E,CEC:E", "1", "-1,0;0,1"},
    {"FEC:D,FEH:D,CDF:E,HDF:E", "1/2", "-r3,-1;1,-r3"},
    {"FEC:E,FEH:E,CEF:E,HEF:E,HEH:E", "1/2", "1,-r3;-r3,-1"},
    {"FFD:E,FFE:D,CHD:E,HCE:D", "1/r2", "-1,-1;1,-1"},
    {"CDC:E,CEC:D", "1", "0,-1;-1,0"},
    {"CDH:E,CEH:D,HDC:E,HEC:D", "1/2", "-r3,1;1,r3"},
    {"CEH:E,HEC:E", "1/2", "1,r3;r3,-1"},
    {"HDH:D", "1/2", "-1,r3;r3,1"},
    {"HDH:E,HEH:D", "1/2", "r3,1;1,-r3"},

    // C3 C3 C3
    {"FFF:B,FCH:B,CCC:B,HCF:B,HHH:B", "1", "-1"},
    {"FFF:F,CCC:C,HHH:H", "1/2", "1,1,r2;1,1,-r2;r2,-r2,0"},
    {"FFC:C,CCF:F,CCH:H,HHC:C", "1/r2", "1,-1;1,1"},
    {"FFH:H,FHH:F,HFF:H,HHF:F", "1/r2", "1,1;1,-1"},
    {"FCF:C,FHF:H,CFC:F,CHC:H,HFH:F,HCH:C", "1", "0,1;1,0"},
    {"FCC:F,CFF:C,CHH:C,HCC:H", "1/r2", "1,1;-1,1"},
};

struct REntry {
  const char* triples;  // comma-separated "ab:c"
  const char* value;
};

// R^{ab}_c. Any admissible triple not listed is 1 (those all have an A leg).
const REntry kREntries[] = {
    {"AA:A,AB:B,BA:B,AG:G,GA:G", "1"},
    {"BB:A,GH:F,GH:C,DF:D,DC:D,EF:E,EC:E,FD:D,FE:E,FF:A,FF:F,"
     "CD:D,CE:E,CC:A,CC:C,HG:F,HG:C,EE:A,EE:F,EE:C",
     "1"},
    {"BG:G,GB:G,BF:F,BC:C,BH:H,FB:F,FF:B,CB:C,CC:B,HB:H,DD:A,DD:F,DD:C", "-1"},
    {"BD:E,DB:E,EF:D,EC:D,FE:D,CE:D,DE:B,ED:B", "i"},
    {"BE:D,DF:E,DC:E,EB:D,FD:E,CD:E,DE:F,DE:C,ED:F,ED:C", "-i"},
    {"GG:A,GF:H,GC:H,DH:D,EH:E,FG:H,FC:G,FH:C,CG:H,CF:G,CH:F,"
     "HD:D,HE:E,HF:C,HC:F,HH:H,EE:G",
     "w2"},
    {"GG:B,DD:G", "-w2"},
    {"GG:G,GD:D,GE:E,GF:C,GC:F,DG:D,EG:E,FG:C,FC:H,FH:G,CG:F,"
     "CF:H,CH:G,HF:G,HC:G,HH:A,EE:H",
     "w"},
    {"DD:H,HH:B", "-w"},
    {"GE:D,EG:D", "w*i"},
    {"GD:E,DG:E,DE:H,ED:H", "-w*i"},
    {"EH:D,HE:D", "w2*i"},
    {"DE:G,ED:G,DH:E,HD:E", "-w2*i"},
};

// S matrix numerators (prefactor 1/6) in alphabetical label order.
const int kS[8][8] = {
    {1, 1, 2, 3, 3, 2, 2, 2},   {1, 1, 2, -3, -3, 2, 2, 2}, {2, 2, 4, 0, 0, -2, -2, -2},
    {3, -3, 0, 3, -3, 0, 0, 0}, {3, -3, 0, -3, 3, 0, 0, 0}, {2, 2, -2, 0, 0, 4, -2, -2},
    {2, 2, -2, 0, 0, -2, -2, 4}, {2, 2, -2, 0, 0, -2, 4, -2},
};

const char* kT[8] = {"1", "1", "1", "-1", "1", "1", "w", "w2"};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ',') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

AnyonModel build_ds3() {
  AnyonModel m;
  m.name = "D(S3)";
  for (int a = 0; a < 8; ++a) {
    std::string row = kFusionRows[a];
    auto cells = split_list(row);
    // '|' separated in the table above
    cells.clear();
    size_t start = 0;
    for (size_t i = 0; i <= row.size(); ++i)
      if (i == row.size() || row[i] == '|') {
        cells.push_back(row.substr(start, i - start));
        start = i + 1;
      }
    for (int b = 0; b < 8; ++b)
      for (char ch : cells[b]) m.fusion[a][b][int(label_from_char(ch))] = 1;
  }
  for (int a = 0; a < 8; ++a) m.qdim[a] = kQdim[a];

  // R-symbols: explicit entries, then default 1 for the remaining admissible
  // triples (all of which involve the unit A).
  for (const auto& e : kREntries) {
    Cyc v = parse_scalar(e.value);
    for (const auto& t : split_list(e.triples)) {
      Label a = label_from_char(t[0]), b = label_from_char(t[1]), c = label_from_char(t[3]);
      if (!m.admissible(a, b, c))
        throw std::logic_error("inadmissible R entry " + t);
      m.r_symbols[{a, b, c}] = v;
    }
  }
  for (Label a : kAllLabels)
    for (Label b : kAllLabels)
      for (Label c : kAllLabels) {
        if (!m.admissible(a, b, c)) continue;
        if (m.r_symbols.count({a, b, c})) continue;
        if (a != Label::A && b != Label::A)
          throw std::logic_error("R-symbol default would apply to a non-unit triple");
        m.r_symbols[{a, b, c}] = Cyc::one();
      }

  // F-symbols: explicit blocks first.
  std::map<AnyonModel::FKey, Mat> given;
  for (const auto& e : kFEntries) {
    Mat block = parse_matrix(e.rows, e.pre);
    for (const auto& k : split_list(e.keys)) {
      if (k.size() != 5 || k[3] != ':') throw std::logic_error("bad F key " + k);
      AnyonModel::FKey key = {label_from_char(k[0]), label_from_char(k[1]),
                              label_from_char(k[2]), label_from_char(k[4])};
      if (given.count(key)) throw std::logic_error("duplicate F key " + k);
      given[key] = block;
    }
  }
  // Materialize every admissible block; unlisted blocks must be 1x1 scalars.
  for (Label a : kAllLabels)
    for (Label b : kAllLabels)
      for (Label c : kAllLabels)
        for (Label d : kAllLabels) {
          auto cols = m.f_cols(a, b, c, d);
          auto rows = m.f_rows(a, b, c, d);
          if (cols.empty() || rows.empty()) continue;
          if (cols.size() != rows.size())
            throw std::logic_error("non-square F block " + std::string{label_char(a)} +
                                   label_char(b) + label_char(c) + ":" + label_char(d));
          AnyonModel::FKey key = {a, b, c, d};
          auto it = given.find(key);
          if (it != given.end()) {
            if (it->second.rows() != int(rows.size()) || it->second.cols() != int(cols.size()))
              throw std::logic_error("F block size mismatch for " + std::string{label_char(a)} +
                                     label_char(b) + label_char(c) + ":" + label_char(d));
            m.f_blocks[key] = it->second;
            given.erase(it);
          } else {
            if (rows.size() != 1)
              throw std::logic_error("missing multi-dimensional F block " +
                                     std::string{label_char(a)} + label_char(b) + label_char(c) +
                                     ":" + label_char(d));
            Mat one(1, 1);
            one.at(0, 0) = Cyc::one();
            m.f_blocks[key] = one;
          }
        }
  if (!given.empty()) {
    auto k = given.begin()->first;
    throw std::logic_error("F entry for inadmissible tuple " + std::string{label_char(k[0])} +
                           label_char(k[1]) + label_char(k[2]) + ":" + label_char(k[3]));
  }

  m.s_matrix = Mat(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m.s_matrix.at(i, j) = Cyc(Rational(kS[i][j], 6));
  for (int i = 0; i < 8; ++i) m.t_diag.push_back(parse_scalar(kT[i]));
  return m;
}

}  // namespace

const AnyonModel& ds3_model() {
  static const AnyonModel model = build_ds3();
  return model;
}

AnyonModel trivial_model() {
  AnyonModel m;
  m.name = "trivial";
  m.num_labels = 1;
  m.fusion[0][0][0] = 1;
  m.qdim[0] = 1;
  Mat one(1, 1);
  one.at(0, 0) = Cyc::one();
  m.f_blocks[{Label::A, Label::A, Label::A, Label::A}] = one;
  m.r_symbols[{Label::A, Label::A, Label::A}] = Cyc::one();
  m.s_matrix = Mat(1, 1);
  m.s_matrix.at(0, 0) = Cyc::one();
  m.t_diag = {Cyc::one()};
  return m;
}

}  // namespace anyonkit
