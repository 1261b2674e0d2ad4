#pragma once

/* Dense rational matrices: just enough linear algebra for weight-space maps. */

#include "krlab/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace krlab {

class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Mat operator*(const Mat& o) const {
    require(cols_ == o.rows_, Errc::integrity, "matrix shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    require(v.size() == cols_, Errc::integrity, "matrix shape mismatch in apply");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (a_[i * cols_ + j] != 0) r[i] += a_[i * cols_ + j] * v[j];
    return r;
  }

  /* Gauss-Jordan; integrity error on a singular input. */
  Mat inverse() const {
    require(rows_ == cols_, Errc::integrity, "inverse of a non-square matrix");
    std::size_t n = rows_;
    Mat a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a.at(piv, col) == 0) ++piv;
      require(piv < n, Errc::integrity, "singular matrix");
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      Rat d = a.at(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(col, j) /= d;
        inv.at(col, j) /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a.at(i, col) == 0) continue;
        Rat f = a.at(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a.at(i, j) -= f * a.at(col, j);
          inv.at(i, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  /* Canonical content string; doubles as a hash/compare key for group elements. */
  std::string key() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_);
    for (const Rat& v : a_) {
      s += ';';
      s += rat_str(v);
    }
    return s;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

} /* namespace krlab */
