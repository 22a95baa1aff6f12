#include "latt/matrix.hpp"

#include <cassert>

namespace latt {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.resize(rows_ * cols_);
  std::size_t i = 0;
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    std::size_t j = 0;
    for (long v : r) data_[i * cols_ + j++] = v;
    ++i;
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::row_vector(const std::vector<Int>& v) {
  IntMat m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::negated() const {
  IntMat t(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) t.data_[i] = -data_[i];
  return t;
}

std::vector<Int> IntMat::row(std::size_t i) const {
  return std::vector<Int>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
}

void IntMat::set_row(std::size_t i, const std::vector<Int>& v) {
  assert(v.size() == cols_);
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

IntMat IntMat::take_rows(const std::vector<std::size_t>& idx) const {
  IntMat m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
}

void IntMat::submul_row(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < cols_; ++k)
    data_[i * cols_ + k] -= q * data_[j * cols_ + k];
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  assert(a.cols_ == b.rows_);
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  IntMat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  IntMat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

IntMat IntMat::vstack(const IntMat& a, const IntMat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  assert(a.cols() == b.cols());
  IntMat c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

IntMat IntMat::hstack(const IntMat& a, const IntMat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  assert(a.rows() == b.rows());
  IntMat c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

bool IntMat::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()) {
  data_.resize(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RatMat::RatMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.resize(rows_ * cols_);
  std::size_t i = 0;
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    std::size_t j = 0;
    for (long v : r) data_[i * cols_ + j++] = Rat(v);
    ++i;
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rat> RatMat::row(std::size_t i) const {
  return std::vector<Rat>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  assert(a.cols_ == b.rows_);
  RatMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMat operator*(const Rat& s, const RatMat& a) {
  RatMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  RatMat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  RatMat c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

bool RatMat::is_integral() const {
  for (const Rat& v : data_)
    if (v.get_den() != 1) return false;
  return true;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMat RatMat::to_int() const {
  assert(is_integral());
  IntMat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_num();
  return m;
}

Int RatMat::denominator_lcm() const {
  Int l = 1;
  for (const Rat& v : data_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

RatMat operator*(const IntMat& a, const RatMat& b) { return RatMat(a) * b; }
RatMat operator*(const RatMat& a, const IntMat& b) { return a * RatMat(b); }

}  // namespace latt
