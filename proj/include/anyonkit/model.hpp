#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "anyonkit/matrix.hpp"

namespace anyonkit {

// The 8 anyon types of D(S3). S/T rows use this alphabetical order; the
// F-matrix index order is the separate kFBasisOrder below.
enum class Label : uint8_t { A, B, C, D, E, F, G, H };
constexpr int kNumLabels = 8;

inline constexpr std::array<Label, 8> kAllLabels = {Label::A, Label::B, Label::C, Label::D,
                                                    Label::E, Label::F, Label::G, Label::H};

// Index order used for F-matrix rows/columns: A, B, G, D, E, F, C, H.
inline constexpr std::array<Label, 8> kFBasisOrder = {Label::A, Label::B, Label::G, Label::D,
                                                      Label::E, Label::F, Label::C, Label::H};

char label_char(Label l);
Label label_from_char(char c);
std::string label_name(Label l);
int f_rank(Label l);  // position of l in kFBasisOrder

struct ConsistencyViolation {
  std::string what;   // which identity, with the index tuple
  std::string lhs;    // exact values of both sides
  std::string rhs;
};

struct ConsistencyReport {
  long checked = 0;
  std::vector<ConsistencyViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Complete modular data of an anyon model: fusion rules, quantum dimensions,
// F- and R-symbols, S and T. Immutable once built; share freely.
class AnyonModel {
 public:
  using FKey = std::array<Label, 4>;  // (a, b, c, d)

  std::string name;
  // fusion indicator N[a][b][c] in {0,1}
  std::array<std::array<std::array<uint8_t, 8>, 8>, 8> fusion{};
  std::array<Rational, 8> qdim{};
  // F blocks keyed by (a,b,c,d); rows over bc-channels n, cols over
  // ab-channels m, both sorted by kFBasisOrder. Every admissible block is
  // materialized (absent-from-paper scalars become 1).
  std::map<FKey, Mat> f_blocks;
  std::map<std::array<Label, 3>, Cyc> r_symbols;  // (a,b,c) -> R^{ab}_c
  Mat s_matrix;          // 8x8, alphabetical label order
  std::vector<Cyc> t_diag;  // 8 entries

  int num_labels = 8;
  std::vector<Label> labels() const;

  bool admissible(Label a, Label b, Label c) const {
    return fusion[int(a)][int(b)][int(c)] != 0;
  }
  std::set<Label> fuse(Label a, Label b) const;
  // channels m of a x b with d in m x c, sorted by kFBasisOrder: the column
  // index set of F^{abc}_d (and, with the roles moved, its row set)
  std::vector<Label> f_cols(Label a, Label b, Label c, Label d) const;
  std::vector<Label> f_rows(Label a, Label b, Label c, Label d) const;

  // F^{abc}_{d;nm}; throws a domain error naming the failing vertex when the
  // index tuple is inadmissible.
  const Cyc& f_symbol(Label a, Label b, Label c, Label d, Label n, Label m) const;
  const Mat& f_block(Label a, Label b, Label c, Label d) const;
  const Cyc& r_symbol(Label a, Label b, Label c) const;

  // Text fingerprint of the full dataset (order-independent content hash).
  std::string fingerprint() const;

  // Debug mutation hooks used by the CLI sabotage flags.
  void mutate_f(Label a, Label b, Label c, Label d, Label n, Label m, const Cyc& v);
  void mutate_r(Label a, Label b, Label c, const Cyc& v);
};

// The compiled-in D(S3) model with every F/R symbol, S and T.
const AnyonModel& ds3_model();

// A one-label toy model (vacuum only); used to sanity-check the verifiers.
AnyonModel trivial_model();

// Consistency sweeps. `threads` <= 0 means use ANYONKIT_THREADS or the
// hardware count.
ConsistencyReport verify_pentagon(const AnyonModel& m, int threads = 0);
ConsistencyReport verify_hexagon(const AnyonModel& m, int threads = 0);
ConsistencyReport verify_unitarity(const AnyonModel& m);
ConsistencyReport verify_verlinde(const AnyonModel& m);
ConsistencyReport verify_modular(const AnyonModel& m);

int resolve_thread_count(int requested);

}  // namespace anyonkit
