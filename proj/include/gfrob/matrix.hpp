// Dense matrices over Rat with exact elimination (rank, kernel, solve, inverse).
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gfrob/rational.hpp"

namespace gfrob {

class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  friend bool operator==(const RatMat& x, const RatMat& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const RatMat& x, const RatMat& y) { return !(x == y); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  RatMat operator*(const RatMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const Rat& v = at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < o.c_; ++j) {
          const Rat& w = o.at(k, j);
          if (!w.is_zero()) out.at(i, j) += v * w;
        }
      }
    return out;
  }

  RatMat operator+(const RatMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
    RatMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  RatMat operator-(const RatMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix diff shape mismatch");
    RatMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }

  RatMat scaled(const Rat& s) const {
    RatMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
  }

  RatMat transposed() const {
    RatMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  // Kronecker product; row (i1*o.rows + i2), col (j1*o.cols + j2).
  RatMat kron(const RatMat& o) const {
    RatMat out(r_ * o.r_, c_ * o.c_);
    for (int i1 = 0; i1 < r_; ++i1)
      for (int j1 = 0; j1 < c_; ++j1) {
        const Rat& v = at(i1, j1);
        if (v.is_zero()) continue;
        for (int i2 = 0; i2 < o.r_; ++i2)
          for (int j2 = 0; j2 < o.c_; ++j2)
            out.at(i1 * o.r_ + i2, j1 * o.c_ + j2) = v * o.at(i2, j2);
      }
    return out;
  }

  std::vector<Rat> apply(const std::vector<Rat>& x) const {
    if (int(x.size()) != c_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<Rat> y(r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i)
        if (!at(i, col).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < c_; ++j) std::swap(at(p, j), at(row, j));
      Rat inv = Rat(1) / at(row, col);
      for (int j = col; j < c_; ++j) at(row, j) *= inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        Rat f = at(i, col);
        for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    RatMat tmp = *this;
    return int(tmp.rref().size());
  }

  // Basis of the right kernel, one column vector per free column (RREF-canonical).
  std::vector<std::vector<Rat>> kernel_basis() const {
    RatMat tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < c_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rat> v(c_);
      v[free] = Rat(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp.at(int(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solves A x = b exactly; nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
    if (int(b.size()) != r_) throw std::invalid_argument("solve shape mismatch");
    RatMat aug(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
    std::vector<Rat> x(c_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), c_);
    return x;
  }

  std::optional<RatMat> inverse() const {
    if (r_ != c_) return std::nullopt;
    RatMat aug(r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_ + i) = Rat(1);
    }
    std::vector<int> pivots = aug.rref();
    if (int(pivots.size()) != r_ || (r_ > 0 && pivots[size_t(r_) - 1] >= c_))
      return std::nullopt;
    RatMat out(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out.at(i, j) = aug.at(i, c_ + j);
    return out;
  }

  Rat trace() const {
    if (r_ != c_) throw std::invalid_argument("trace of non-square matrix");
    Rat t;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

}  // namespace gfrob
