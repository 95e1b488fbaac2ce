#pragma once

#include "anyonkit/tree.hpp"

namespace anyonkit {

// Signed generator sequence; index i stands for sigma_i, negative for the
// inverse. Words are applied right-to-left as matrix products, i.e. the word
// {1,2,1} is the matrix sigma_1 * sigma_2 * sigma_1 (all our words are
// palindromic or conjugations, so this matches the paper's usage).
struct BraidWord {
  std::vector<int> letters;
  int strands = 0;
};

enum class NormTag { Raw, DetNormalized };

struct RepMatrixSet {
  const FusionBasis* basis = nullptr;
  std::vector<Mat> sigma;  // sigma_1 .. sigma_{n-1}
  NormTag tag = NormTag::Raw;
  Cyc applied_scalar = Cyc::one();  // scalar applied relative to raw
};

// Matrix of sigma_i on the given basis: F-move to a shape where leaves
// i, i+1 are siblings, multiply each channel c by R^{mm}_c, move back.
Mat sigma_matrix(const FusionBasis& basis, int i);

// All generators for the basis.
RepMatrixSet build_rep(const FusionBasis& basis);

// Apply a braid word state-wise (sparse; used for the 8-strand spaces).
StateVector apply_braid(const StateVector& v, const BraidWord& w);
StateVector apply_sigma(const StateVector& v, int i, bool inverse);

// Ordered product of generators per the word; inverse letters use the
// conjugate transpose.
Mat evaluate(const BraidWord& w, const std::vector<Mat>& gens);

// Scales every generator by one common d-th root of det^-1 so all outputs
// have determinant exactly 1. The root is chosen canonically inside
// Q(zeta_72): minimal multiplicative order, then smallest |phase|, then the
// positive phase. Throws if det is not a root of unity or no root exists.
std::pair<std::vector<Mat>, Cyc> normalize_special(const std::vector<Mat>& gens);

// sigma_i sigma_{i+1} sigma_i relations plus far commutation, exact.
ConsistencyReport verify_braid_relations(const std::vector<Mat>& gens);

// An invariant-subspace candidate: orthonormal exact vectors.
struct Sector {
  std::string name;
  std::vector<StateVector> vecs;
  int dim() const { return int(vecs.size()); }
};

struct SectorCheck {
  bool orthonormal = false;
  bool invariant = false;
  bool irreducible = false;
};

// Restriction of a generator to the sector span (entries <b_i | g b_j>).
Mat restrict_to_sector(const Mat& g, const Sector& s);

// invariance: g b_j stays in the span for all generators, exactly;
// irreducibility: the commutant of the restricted generators is 1-dim.
SectorCheck verify_sector(const Sector& s, const std::vector<Mat>& gens);

}  // namespace anyonkit
