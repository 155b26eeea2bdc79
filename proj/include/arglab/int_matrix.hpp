#pragma once

#include <cstdint>
#include <vector>

namespace arglab {

// Dense row-major integer matrix.  Orders stay at desk scale (n <= ~500),
// so entries of every product formed here fit comfortably in 64 bits.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix ones(int rows, int cols) {
    IntMatrix m(rows, cols);
    for (auto& x : m.data_) x = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  long long at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  IntMatrix operator*(const IntMatrix& other) const {
    IntMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
      for (int m = 0; m < cols_; ++m) {
        const long long x = at(r, m);
        if (x == 0) continue;
        for (int c = 0; c < other.cols_; ++c) out.at(r, c) += x * other.at(m, c);
      }
    }
    return out;
  }

  IntMatrix operator+(const IntMatrix& other) const {
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
  }

  IntMatrix scaled(long long factor) const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x *= factor;
    return out;
  }

  bool operator==(const IntMatrix& other) const = default;

  bool is_zero_one() const {
    for (auto x : data_)
      if (x != 0 && x != 1) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = r + 1; c < cols_; ++c)
        if (at(r, c) != at(c, r)) return false;
    return true;
  }

  long long row_sum(int r) const {
    long long s = 0;
    for (int c = 0; c < cols_; ++c) s += at(r, c);
    return s;
  }

  long long col_sum(int c) const {
    long long s = 0;
    for (int r = 0; r < rows_; ++r) s += at(r, c);
    return s;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

}  // namespace arglab
