#include "loccw/matrix.hpp"

#include <utility>

namespace loccw {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<RationalVector> rows) {
  RationalMatrix m;
  for (auto& r : rows) m.append_row(r);
  return m;
}

void RationalMatrix::append_row(const RationalVector& row) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = row.size();
  } else if (row.size() != cols_) {
    throw DimensionMismatch("appending row of length " +
                            std::to_string(row.size()) + " to matrix with " +
                            std::to_string(cols_) + " columns");
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + r * cols_,
                        entries_.begin() + (r + 1) * cols_);
}

void RationalMatrix::swap_rows(std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(entries_[r1 * cols_ + c], entries_[r2 * cols_ + c]);
  }
}

RrefResult rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && sgn(a.at(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, rank);
    const Rational scale = a.at(rank, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(rank, c) /= scale;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || sgn(a.at(r, col)) == 0) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a.at(r, c) -= factor * a.at(rank, c);
      }
    }
    ++rank;
  }
  return {rank, std::move(a)};
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  auto [rank, red] = rref(m);

  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (c < cols && sgn(red.at(r, c)) == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }

  std::vector<RationalVector> basis;
  basis.reserve(cols - rank);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[pivot_col[r]] = -red.at(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

GaussianMatrix GaussianMatrix::identity(std::size_t n) {
  GaussianMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool GaussianMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (at(i, j) != at(j, i).conjugate()) return false;
    }
  }
  return true;
}

bool GaussianMatrix::is_zero() const {
  for (const auto& z : entries_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

GaussianMatrix operator+(const GaussianMatrix& x, const GaussianMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("matrix addition shape mismatch");
  }
  GaussianMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) + y.at(i, j);
  }
  return out;
}

GaussianMatrix operator-(const GaussianMatrix& x, const GaussianMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionMismatch("matrix subtraction shape mismatch");
  }
  GaussianMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
  }
  return out;
}

GaussianMatrix operator*(const Rational& s, const GaussianMatrix& x) {
  GaussianMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) * s;
  }
  return out;
}

GaussianRational inner(const GaussianVector& u, const GaussianVector& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner product of vectors with lengths " +
                            std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  GaussianRational acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    acc += u[i].conjugate() * v[i];
  }
  return acc;
}

GaussianRational hermitian_inner_form(const GaussianVector& u,
                                      const GaussianMatrix& h,
                                      const GaussianVector& v) {
  if (u.size() != h.rows() || v.size() != h.cols()) {
    throw DimensionMismatch("hermitian form: vector lengths " +
                            std::to_string(u.size()) + ", " +
                            std::to_string(v.size()) + " vs matrix " +
                            std::to_string(h.rows()) + "x" +
                            std::to_string(h.cols()));
  }
  GaussianRational acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    GaussianRational rowsum;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero() || h.at(i, j).is_zero()) continue;
      rowsum += h.at(i, j) * v[j];
    }
    acc += u[i].conjugate() * rowsum;
  }
  return acc;
}

Rational vector_norm2(const GaussianVector& v) {
  Rational acc(0);
  for (const auto& z : v) {
    if (!z.is_zero()) acc += z.norm2();
  }
  return acc;
}

}  // namespace loccw
