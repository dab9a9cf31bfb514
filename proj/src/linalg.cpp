#include "bow/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bow {

namespace {

using Entry = Matrix::Entry;

Entry mul(Entry a, Entry b) {
  Entry r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

Entry add(Entry a, Entry b) {
  Entry r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

Entry sub(Entry a, Entry b) {
  Entry r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::logic_error("matrix shape mismatch in product");
  Matrix r(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      Entry x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (o(k, j) != 0) r(i, j) = add(r(i, j), mul(x, o(k, j)));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("matrix shape mismatch in sum");
  Matrix r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = add(r.e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("matrix shape mismatch in difference");
  Matrix r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = sub(r.e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.e_) x = sub(0, x);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
}

bool Matrix::isZero() const {
  for (Entry x : e_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::pow(int e) const {
  Matrix r = identity(r_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::string Matrix::toString() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[";
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  if (b.rows() == 0 && b.cols() == 0) return a;
  if (a.cols() != b.cols()) throw std::logic_error("vstack shape mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 && a.rows() == 0) return b;
  if (b.cols() == 0 && b.rows() == 0) return a;
  if (a.rows() != b.rows()) throw std::logic_error("hstack shape mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix rowReduce(const Matrix& m) {
  int R = m.rows(), C = m.cols();
  std::vector<std::vector<Entry>> rows(R, std::vector<Entry>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) rows[i][j] = m(i, j);
  int top = 0;
  for (int col = 0; col < C && top < R; ++col) {
    int p = -1;
    for (int i = top; i < R; ++i)
      if (rows[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[top]);
    const auto& piv = rows[top];
    for (int i = top + 1; i < R; ++i) {
      Entry f = rows[i][col];
      if (f == 0) continue;
      Entry g = 0;
      for (int j = 0; j < C; ++j) {
        rows[i][j] = sub(mul(rows[i][j], piv[col]), mul(f, piv[j]));
        g = std::gcd(g, rows[i][j]);
      }
      if (g > 1)
        for (auto& x : rows[i]) x /= g;
    }
    ++top;
  }
  Matrix r(top, C);
  for (int i = 0; i < top; ++i)
    for (int j = 0; j < C; ++j) r(i, j) = rows[i][j];
  return r;
}

int rank(const Matrix& m) { return rowReduce(m).rows(); }

}  // namespace bow
