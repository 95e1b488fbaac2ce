#pragma once

#include <vector>

#include "anyonkit/cyclotomic.hpp"

namespace anyonkit {

// Dense matrix over Q(zeta_72). Everything in this project is <= 729x729 and
// most matrices are <= 9x9, so a flat vector is plenty.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Cyc& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Cyc& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Cyc& s) const;
  Mat dagger() const;  // conjugate transpose
  Mat pow(long e) const;

  std::vector<Cyc> apply(const std::vector<Cyc>& v) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_unitary() const { return (*this * dagger()).is_identity(); }
  // lambda such that *this == lambda * I, if any.
  std::optional<Cyc> as_scalar() const;

  Cyc trace() const;
  Cyc det() const;  // Gaussian elimination with exact field division

  // multiplicative order (smallest e >= 1 with M^e = I); cap guards data bugs
  std::optional<int> mult_order(int cap = 4096) const;

  std::string key() const;  // canonical serialization, usable as a hash key

 private:
  int r_ = 0, c_ = 0;
  std::vector<Cyc> a_;
};

// If b == s*a for a single scalar s (a nonzero), return s.
std::optional<Cyc> common_scalar(const Mat& a, const Mat& b);

// Exact nullspace dimension of an m x n system rows[i] . x = 0.
int nullspace_dimension(std::vector<std::vector<Cyc>> rows, int ncols);

}  // namespace anyonkit
