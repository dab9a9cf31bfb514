#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bow {

// Dense integer matrix. Arithmetic is exact: every operation checks for 64-bit
// overflow and throws std::overflow_error instead of wrapping. Zero-sized
// dimensions are legal and behave as the zero map between the corresponding
// spaces.
class Matrix {
 public:
  using Entry = std::int64_t;

  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols, 0) {}
  static Matrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Entry& operator()(int i, int j) { return e_[size_t(i) * c_ + j]; }
  Entry operator()(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool isZero() const;
  Matrix pow(int e) const;
  Matrix transpose() const;

  std::string toString() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Entry> e_;
};

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
// Row echelon form over the rationals with each row scaled to a primitive
// integer vector; zero rows are dropped, so the row count is the rank.
Matrix rowReduce(const Matrix& m);
int rank(const Matrix& m);

}  // namespace bow
