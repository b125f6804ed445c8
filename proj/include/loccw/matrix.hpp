#pragma once

#include <cstddef>
#include <vector>

#include "loccw/errors.hpp"
#include "loccw/rational.hpp"

namespace loccw {

using RationalVector = std::vector<Rational>;
using GaussianVector = std::vector<GaussianRational>;

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::vector<RationalVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  /// Appends a row; its length must equal cols() (sets cols() when empty).
  void append_row(const RationalVector& row);
  RationalVector row(std::size_t r) const;
  void swap_rows(std::size_t r1, std::size_t r2);

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  std::size_t rank = 0;
  RationalMatrix reduced;
};

/// Gauss-Jordan elimination, exact. Pivot = first nonzero entry in column
/// order; no magnitude heuristics.
RrefResult rref(const RationalMatrix& m);

/// Basis of {v : m v = 0}. Exactly cols - rank vectors, linearly independent.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Dense complex matrix over Gaussian rationals.
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  GaussianMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static GaussianMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const GaussianRational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_hermitian() const;
  bool is_zero() const;

  bool operator==(const GaussianMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

GaussianMatrix operator+(const GaussianMatrix& x, const GaussianMatrix& y);
GaussianMatrix operator-(const GaussianMatrix& x, const GaussianMatrix& y);
GaussianMatrix operator*(const Rational& s, const GaussianMatrix& x);

/// conj(u)^T v, exact.
GaussianRational inner(const GaussianVector& u, const GaussianVector& v);

/// conj(u)^T H v, exact. Conjugate-symmetric in (u, v) whenever H = H^dagger.
GaussianRational hermitian_inner_form(const GaussianVector& u,
                                      const GaussianMatrix& h,
                                      const GaussianVector& v);

Rational vector_norm2(const GaussianVector& v);

}  // namespace loccw
