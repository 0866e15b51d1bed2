#pragma once

// Square truncations of infinite integer matrices, indexed from (0,0).

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "prodtri/core.hpp"

namespace prodtri {

class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  // Rows may be ragged; missing entries are zero. Throws dim_mismatch if a row is too long.
  static SquareMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static SquareMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  SquareMatrix leading_block(std::size_t dim) const;
  std::vector<std::vector<BigInt>> rows() const;
  bool is_lower_triangular() const;

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

// Square matrix with zeros above the diagonal (checked on construction).
class LowerTriMatrix {
 public:
  LowerTriMatrix() = default;
  explicit LowerTriMatrix(SquareMatrix m);
  static LowerTriMatrix identity(std::size_t dim) { return LowerTriMatrix(SquareMatrix::identity(dim)); }
  static LowerTriMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    return LowerTriMatrix(SquareMatrix::from_rows(rows));
  }
  static LowerTriMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    return LowerTriMatrix(SquareMatrix::from_rows(rows));
  }

  std::size_t dim() const noexcept { return m_.dim(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const SquareMatrix& square() const noexcept { return m_; }
  operator const SquareMatrix&() const noexcept { return m_; }

  LowerTriMatrix leading_block(std::size_t dim) const { return LowerTriMatrix(m_.leading_block(dim)); }
  std::vector<BigInt> column(std::size_t k) const;
  // Row-major concatenation of the lower triangle, as OEIS lists triangles.
  std::vector<BigInt> flatten() const;
  bool is_unit() const;

  bool operator==(const LowerTriMatrix&) const = default;

 private:
  SquareMatrix m_;
};

// U: ones on the superdiagonal.
SquareMatrix shift_matrix(std::size_t dim);
// V: -(n-1) at (n, n-1), so the first nonzero entry is -1 at (2,1).
SquareMatrix v_matrix(std::size_t dim);
// W: a single 1 at (0,0).
SquareMatrix w_matrix(std::size_t dim);

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b);

// Forward substitution; requires a unit diagonal.
LowerTriMatrix lt_inverse(const LowerTriMatrix& m);

// Leading (N-1)x(N-1) block of M^{-1} U M for an N x N unit lower-triangular M.
// Every returned entry agrees with the infinite product.
SquareMatrix production_matrix(const LowerTriMatrix& m);

// Rows 0..rows-1 of the triangle whose production matrix is p: row 0 is (1,0,...),
// row n+1 is row n times p. p must be lower Hessenberg with unit superdiagonal;
// the superdiagonal entry just past the stored block is taken to be 1, so rows may
// be as large as p.dim() + 1.
LowerTriMatrix generate_from_production(const SquareMatrix& p, std::size_t rows);

}  // namespace prodtri
