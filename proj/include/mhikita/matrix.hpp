#pragma once

#include <cstddef>
#include <vector>

#include "mhikita/errors.hpp"

namespace mh {

// dense row-major matrix over any ring-like T; zero is passed in because
// coefficient contexts are runtime values
template <class T>
class Matrix {
 public:
  Matrix(std::size_t r, std::size_t c, const T& zero) : r_(r), c_(c), zero_(zero), a_(r * c, zero) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const T& zero() const { return zero_; }
  T& operator()(std::size_t i, std::size_t j) { return a_.at(i * c_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return a_.at(i * c_ + j); }

  Matrix operator+(const Matrix& o) const {
    shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw StructuralError("matrix product: inner dimensions differ");
    Matrix r(r_, o.c_, zero_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        for (std::size_t j = 0; j < o.c_; ++j) r(i, j) = r(i, j) + x * o(k, j);
      }
    return r;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(zero_));
    Matrix<U> r(r_, c_, f(zero_));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  void shape(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw StructuralError("matrix shapes differ");
  }
  std::size_t r_, c_;
  T zero_;
  std::vector<T> a_;
};

}  // namespace mh
