#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

// Dense exact rational matrix. All elimination routines use a fixed,
// deterministic pivot order (smallest bit-length entry in the current
// column range, ties broken by row index).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Mat operator*(const Rat& c) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rat& y = o.at(k, j);
          if (y != 0) r.at(i, j) += x * y;
        }
      }
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat col(int j) const {
    Mat r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
  }

  static Mat hcat(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ || a.cols_ == 0 || b.cols_ == 0);
    int rows = a.cols_ ? a.rows_ : b.rows_;
    Mat r(rows, a.cols_ + b.cols_);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  static Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

  // Row-reduce in place; returns pivot columns. Reduced row echelon form.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int best = -1;
      size_t best_bits = 0;
      for (int i = r; i < rows_; ++i) {
        if (at(i, c) == 0) continue;
        size_t b = rat_bits(at(i, c));
        if (best < 0 || b < best_bits) {
          best = i;
          best_bits = b;
        }
      }
      if (best < 0) continue;
      if (best != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(r, j), at(best, j));
      Rat inv = 1 / at(r, c);
      for (int j = c; j < cols_; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c) == 0) continue;
        Rat f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return int(m.rref().size());
  }

  // Columns form a basis of the kernel.
  Mat nullspace() const {
    Mat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    int nfree = cols_ - int(pivots.size());
    Mat ker(cols_, nfree);
    int k = 0;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      ker.at(c, k) = 1;
      for (size_t pi = 0; pi < pivots.size(); ++pi)
        ker.at(pivots[pi], k) = -m.at(int(pi), c);
      ++k;
    }
    return ker;
  }

  // Solve A x = b (b may have several columns); any solution, or nullopt.
  std::optional<Mat> solve(const Mat& b) const {
    assert(rows_ == b.rows());
    Mat aug = hcat(*this, b);
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
      if (p >= cols_) return std::nullopt;  // inconsistent
    Mat x(cols_, b.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      for (int j = 0; j < b.cols(); ++j)
        x.at(pivots[pi], j) = aug.at(int(pi), cols_ + j);
    return x;
  }

  Mat inverse() const {
    assert(rows_ == cols_);
    auto x = solve(identity(rows_));
    if (!x || ((*this) * *x) != identity(rows_))
      throw std::runtime_error("matrix not invertible");
    return *x;
  }

  // Indices of a maximal set of columns that are linearly independent,
  // scanning left to right.
  std::vector<int> independent_cols() const {
    Mat m = *this;
    return m.rref();
  }

  // Characteristic polynomial coefficients c[0..n], p(x) = sum c[k] x^k,
  // monic. Faddeev-LeVerrier.
  std::vector<Rat> charpoly() const {
    assert(rows_ == cols_);
    int n = rows_;
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    Mat m = Mat::identity(n);  // M_1 = I
    for (int k = 1; k <= n; ++k) {
      Mat am = (*this) * m;
      Rat tr = 0;
      for (int i = 0; i < n; ++i) tr += am.at(i, i);
      c[n - k] = -tr / k;
      m = am;
      for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k];
    }
    return c;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Sparse matrix in row-major triplet form; used for chain differentials
// and generator matrices where dense products would be wasteful.
class SpMat {
 public:
  SpMat() : rows_(0), cols_(0) {}
  SpMat(int rows, int cols) : rows_(rows), cols_(cols), rows_data_(rows) {}

  static SpMat identity(int n) {
    SpMat m(n, n);
    for (int i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int i, int j, const Rat& v) {
    if (v == 0) return;
    auto& row = rows_data_[i];
    for (auto& [c, x] : row)
      if (c == j) {
        x += v;
        return;
      }
    row.emplace_back(j, v);
  }

  const std::vector<std::pair<int, Rat>>& row(int i) const {
    return rows_data_[i];
  }

  void compress() {
    for (auto& row : rows_data_) {
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      row.erase(std::remove_if(row.begin(), row.end(),
                               [](const auto& e) { return e.second == 0; }),
                row.end());
    }
  }

  bool is_zero() const {
    for (const auto& row : rows_data_)
      for (const auto& [c, x] : row)
        if (x != 0) return false;
    return true;
  }

  SpMat operator*(const SpMat& o) const {
    assert(cols_ == o.rows_);
    SpMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      std::map<int, Rat> acc;
      for (const auto& [k, x] : rows_data_[i])
        for (const auto& [j, y] : o.rows_data_[k]) acc[j] += x * y;
      for (const auto& [j, v] : acc)
        if (v != 0) r.rows_data_[i].emplace_back(j, v);
    }
    return r;
  }

  SpMat operator+(const SpMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SpMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
      std::map<int, Rat> acc;
      for (const auto& [j, x] : rows_data_[i]) acc[j] += x;
      for (const auto& [j, x] : o.rows_data_[i]) acc[j] += x;
      for (const auto& [j, v] : acc)
        if (v != 0) r.rows_data_[i].emplace_back(j, v);
    }
    return r;
  }

  SpMat operator-(const SpMat& o) const { return *this + (o * Rat(-1)); }

  SpMat operator*(const Rat& c) const {
    SpMat r(rows_, cols_);
    if (c == 0) return r;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, x] : rows_data_[i])
        r.rows_data_[i].emplace_back(j, x * c);
    return r;
  }

  Mat dense() const {
    Mat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, x] : rows_data_[i]) m.at(i, j) += x;
    return m;
  }

  static SpMat from_dense(const Mat& m) {
    SpMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0) r.rows_data_[i].emplace_back(j, m.at(i, j));
    return r;
  }

  static SpMat commutator(const SpMat& a, const SpMat& b) {
    return a * b - b * a;
  }

  // Kronecker product acting on the tensor basis (i1,i2) -> i1*dim2+i2.
  static SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i1 = 0; i1 < a.rows_; ++i1)
      for (const auto& [j1, x] : a.rows_data_[i1])
        for (int i2 = 0; i2 < b.rows_; ++i2)
          for (const auto& [j2, y] : b.rows_data_[i2])
            r.add(i1 * b.rows_ + i2, j1 * b.cols_ + j2, x * y);
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Rat>>> rows_data_;
};

// Polynomial helpers over Rat (dense coefficient vectors, c[k] x^k).

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat r = 0;
  for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

// Divide p by (x - c) as many times as possible; returns multiplicity.
inline int poly_strip_root(std::vector<Rat>& p, const Rat& c) {
  int mult = 0;
  while (p.size() > 1 && poly_eval(p, c) == 0) {
    std::vector<Rat> q(p.size() - 1);
    Rat carry = 0;
    for (size_t k = p.size(); k-- > 1;) {
      q[k - 1] = p[k] + carry;
      carry = q[k - 1] * c;
    }
    p = q;
    ++mult;
  }
  return mult;
}

}  // namespace liecoh
