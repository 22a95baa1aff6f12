#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latt/numeric.hpp"

namespace latt {

// Dense matrix of arbitrary-precision integers. Vectors throughout the
// library are rows; a change of basis T acts on a Gram matrix as T*G*T^t.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat row_vector(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMat transposed() const;
  IntMat negated() const;
  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& v);
  IntMat take_rows(const std::vector<std::size_t>& idx) const;

  void swap_rows(std::size_t i, std::size_t j);
  // row i -= q * row j
  void submul_row(std::size_t i, std::size_t j, const Int& q);

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  // stack b below a (column counts must agree; empty operands allowed)
  static IntMat vstack(const IntMat& a, const IntMat& b);
  // place b to the right of a
  static IntMat hstack(const IntMat& a, const IntMat& b);

  bool is_zero() const;
  bool is_identity() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMat(const IntMat& m);
  RatMat(std::initializer_list<std::initializer_list<long>> rows);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatMat transposed() const;
  std::vector<Rat> row(std::size_t i) const;

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const Rat& s, const RatMat& a);
  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat& a, const RatMat& b) = default;

  bool is_integral() const;
  bool is_symmetric() const;
  // Requires is_integral().
  IntMat to_int() const;
  // Least common multiple of entry denominators (1 for empty).
  Int denominator_lcm() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

RatMat operator*(const IntMat& a, const RatMat& b);
RatMat operator*(const RatMat& a, const IntMat& b);

}  // namespace latt
