#ifndef MIXHOM_MATRIX_HPP
#define MIXHOM_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mixhom/field.hpp"

namespace mixhom {

// Dense row-major matrix over an exact field. Acts on column vectors;
// entry (i, j) is the coefficient of target basis vector i applied to
// source basis vector j. All entries share the Field context passed at
// construction.
template <class K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field<K>& fld)
      : rows_(rows), cols_(cols), fld_(fld), a_(rows * cols, fld.zero()) {}

  static Matrix identity(std::size_t n, const Field<K>& fld) {
    Matrix m(n, n, fld);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = fld.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field<K>& field() const { return fld_; }

  K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const K& x : a_)
      if (!fld_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!fld_.eq(a_[k], o.a_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o, "add");
    Matrix r(rows_, cols_, fld_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.add(a_[k], o.a_[k]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o, "subtract");
    Matrix r(rows_, cols_, fld_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.sub(a_[k], o.a_[k]);
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_, fld_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.neg(a_[k]);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw error("matrix product shape mismatch: " + shape_str() + " * " + o.shape_str());
    Matrix r(rows_, o.cols_, fld_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& aik = at(i, k);
        if (fld_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = fld_.add(r.at(i, j), fld_.mul(aik, o.at(k, j)));
      }
    return r;
  }

  Matrix scaled(const K& s) const {
    Matrix r(rows_, cols_, fld_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fld_.mul(s, a_[k]);
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, fld_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // [this | o], side by side.
  Matrix hconcat(const Matrix& o) const {
    if (rows_ != o.rows_)
      throw error("hconcat row mismatch: " + shape_str() + " | " + o.shape_str());
    Matrix r(rows_, cols_ + o.cols_, fld_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // [this; o], stacked.
  Matrix vconcat(const Matrix& o) const {
    if (cols_ != o.cols_)
      throw error("vconcat column mismatch: " + shape_str() + " ; " + o.shape_str());
    Matrix r(rows_ + o.rows_, cols_, fld_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix col(std::size_t j) const {
    Matrix r(rows_, 1, fld_);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
  }

  // Copies the block into this matrix with top-left corner at (i0, j0).
  void set_block(std::size_t i0, std::size_t j0, const Matrix& block) {
    if (i0 + block.rows_ > rows_ || j0 + block.cols_ > cols_)
      throw error("set_block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) at(i0 + i, j0 + j) = block.at(i, j);
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw error(std::string("cannot ") + op + " " + shape_str() + " and " + o.shape_str());
  }

  std::size_t rows_, cols_;
  Field<K> fld_;
  std::vector<K> a_;
};

// k-th power of a square matrix by repeated squaring.
template <class K>
Matrix<K> power(const Matrix<K>& m, std::size_t k) {
  if (m.rows() != m.cols())
    throw error("cannot take a power of a " + m.shape_str() + " matrix");
  Matrix<K> acc = Matrix<K>::identity(m.rows(), m.field());
  Matrix<K> base = m;
  for (; k > 0; k >>= 1) {
    if (k & 1) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

}  // namespace mixhom

#endif  // MIXHOM_MATRIX_HPP
