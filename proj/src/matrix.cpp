#include "prodtri/matrix.hpp"

#include <string>

namespace prodtri {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() > rows.size())
      throw Error(ErrorCode::dim_mismatch, "row " + std::to_string(i) + " has more entries than the matrix has rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SquareMatrix SquareMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<BigInt>> v;
  for (const auto& r : rows) {
    auto& row = v.emplace_back();
    for (auto x : r) row.emplace_back(x);
  }
  return from_rows(v);
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::leading_block(std::size_t dim) const {
  if (dim > dim_)
    throw Error(ErrorCode::dim_mismatch,
                "leading block " + std::to_string(dim) + " exceeds matrix dim " + std::to_string(dim_));
  SquareMatrix b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = (*this)(i, j);
  return b;
}

std::vector<std::vector<BigInt>> SquareMatrix::rows() const {
  std::vector<std::vector<BigInt>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    out[i].assign(entries_.begin() + static_cast<long>(i * dim_), entries_.begin() + static_cast<long>((i + 1) * dim_));
  return out;
}

bool SquareMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

LowerTriMatrix::LowerTriMatrix(SquareMatrix m) : m_(std::move(m)) {
  if (!m_.is_lower_triangular()) throw Error(ErrorCode::not_triangular, "matrix has entries above the diagonal");
}

std::vector<BigInt> LowerTriMatrix::column(std::size_t k) const {
  std::vector<BigInt> c;
  for (std::size_t n = 0; n < dim(); ++n) c.push_back(m_(n, k));
  return c;
}

std::vector<BigInt> LowerTriMatrix::flatten() const {
  std::vector<BigInt> out;
  for (std::size_t n = 0; n < dim(); ++n)
    for (std::size_t k = 0; k <= n; ++k) out.push_back(m_(n, k));
  return out;
}

bool LowerTriMatrix::is_unit() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (m_(i, i) != 1) return false;
  return true;
}

SquareMatrix shift_matrix(std::size_t dim) {
  SquareMatrix u(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) u(i, i + 1) = 1;
  return u;
}

SquareMatrix v_matrix(std::size_t dim) {
  SquareMatrix v(dim);
  for (std::size_t n = 2; n < dim; ++n) v(n, n - 1) = -static_cast<long>(n - 1);
  return v;
}

SquareMatrix w_matrix(std::size_t dim) {
  SquareMatrix w(dim);
  if (dim > 0) w(0, 0) = 1;
  return w;
}

namespace {

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::dim_mismatch,
                std::string(op) + ": dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
}

}  // namespace

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const auto n = a.dim();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const auto& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "mat_add");
  SquareMatrix c = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) += b(i, j);
  return c;
}

SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "mat_sub");
  SquareMatrix c = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) -= b(i, j);
  return c;
}

LowerTriMatrix lt_inverse(const LowerTriMatrix& m) {
  if (!m.is_unit()) throw Error(ErrorCode::not_invertible, "integer inversion needs a unit diagonal");
  const auto n = m.dim();
  SquareMatrix x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x(k, k) = 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      BigInt acc = 0;
      for (std::size_t j = k; j < i; ++j) acc += m(i, j) * x(j, k);
      x(i, k) = -acc;
    }
  }
  return LowerTriMatrix(std::move(x));
}

SquareMatrix production_matrix(const LowerTriMatrix& m) {
  if (m.dim() < 2) throw Error(ErrorCode::dim_mismatch, "production matrix needs dim >= 2");
  const auto inv = lt_inverse(m);
  const auto n = m.dim() - 1;
  // P(i,j) = sum_{l <= i} inv(i,l) M(l+1,j); rows of M up to n are available.
  SquareMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t l = 0; l <= i; ++l) acc += inv(i, l) * m(l + 1, j);
      p(i, j) = acc;
    }
  return p;
}

LowerTriMatrix generate_from_production(const SquareMatrix& p, std::size_t rows) {
  const auto d = p.dim();
  if (rows > d + 1)
    throw Error(ErrorCode::dim_mismatch,
                std::to_string(rows) + " rows need a production matrix of dim >= " + std::to_string(rows - 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const bool ok = (j == i + 1) ? p(i, j) == 1 : p(i, j) == 0;
      if (!ok)
        throw Error(ErrorCode::not_production_matrix,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks the unit-superdiagonal Hessenberg form");
    }
  auto entry = [&](std::size_t i, std::size_t j) -> BigInt {
    if (i < d && j < d) return p(i, j);
    return j == i + 1 ? BigInt(1) : BigInt(0);
  };
  SquareMatrix t(rows);
  if (rows == 0) return LowerTriMatrix(std::move(t));
  t(0, 0) = 1;
  for (std::size_t n = 0; n + 1 < rows; ++n)
    for (std::size_t j = 0; j <= n + 1; ++j) {
      BigInt acc = 0;
      for (std::size_t l = (j == 0 ? 0 : j - 1); l <= n; ++l) acc += t(n, l) * entry(l, j);
      t(n + 1, j) = acc;
    }
  return LowerTriMatrix(std::move(t));
}

}  // namespace prodtri
