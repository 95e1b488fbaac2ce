#include "anyonkit/matrix.hpp"

#include <sstream>

namespace anyonkit {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyc::one();
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch in product");
  Mat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Cyc& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Cyc& w = o.at(k, j);
        if (w.is_zero()) continue;
        out.at(i, j) += v * w;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out = *this;
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  Mat out = *this;
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
  return out;
}

Mat Mat::scaled(const Cyc& s) const {
  Mat out(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) out.a_[k] = a_[k] * s;
  return out;
}

Mat Mat::dagger() const {
  Mat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!at(i, j).is_zero()) out.at(j, i) = at(i, j).conjugate();
  return out;
}

Mat Mat::pow(long e) const {
  if (r_ != c_) throw std::invalid_argument("pow needs a square matrix");
  if (e < 0) return dagger().pow(-e);  // callers only use this on unitaries
  Mat acc = identity(r_), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::vector<Cyc> Mat::apply(const std::vector<Cyc>& v) const {
  if (int(v.size()) != c_) throw std::invalid_argument("vector length mismatch");
  std::vector<Cyc> out(r_);
  for (int j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < r_; ++i) {
      const Cyc& w = at(i, j);
      if (!w.is_zero()) out[i] += w * v[j];
    }
  }
  return out;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Cyc> Mat::as_scalar() const {
  if (r_ != c_ || r_ == 0) return std::nullopt;
  const Cyc& s = at(0, 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if (i == j && at(i, j) != s) return std::nullopt;
      if (i != j && !at(i, j).is_zero()) return std::nullopt;
    }
  return s;
}

Cyc Mat::trace() const {
  Cyc t;
  for (int i = 0; i < r_ && i < c_; ++i) t += at(i, i);
  return t;
}

Cyc Mat::det() const {
  if (r_ != c_) throw std::invalid_argument("det needs a square matrix");
  Mat m = *this;
  int n = r_;
  Cyc det = Cyc::one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Cyc::zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Cyc inv = m.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyc f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::optional<int> Mat::mult_order(int cap) const {
  Mat p = *this;
  for (int e = 1; e <= cap; ++e) {
    if (p.is_identity()) return e;
    p = p * *this;
  }
  return std::nullopt;
}

std::string Mat::key() const {
  std::ostringstream os;
  os << r_ << "x" << c_ << ":";
  for (const auto& x : a_) os << x.to_string() << ";";
  return os.str();
}

std::optional<Cyc> common_scalar(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::optional<Cyc> s;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Cyc &x = a.at(i, j), &y = b.at(i, j);
      if (x.is_zero() != y.is_zero()) return std::nullopt;
      if (x.is_zero()) continue;
      Cyc r = y * x.inverse();
      if (!s)
        s = r;
      else if (*s != r)
        return std::nullopt;
    }
  return s;
}

int nullspace_dimension(std::vector<std::vector<Cyc>> rows, int ncols) {
  int rank = 0;
  size_t nrows = rows.size();
  for (int col = 0; col < ncols && rank < int(nrows); ++col) {
    int piv = -1;
    for (size_t i = rank; i < nrows; ++i)
      if (!rows[i][col].is_zero()) {
        piv = int(i);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Cyc inv = rows[rank][col].inverse();
    for (size_t i = 0; i < nrows; ++i) {
      if (int(i) == rank || rows[i][col].is_zero()) continue;
      Cyc f = rows[i][col] * inv;
      for (int j = col; j < ncols; ++j)
        if (!rows[rank][j].is_zero()) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return ncols - rank;
}

}  // namespace anyonkit
