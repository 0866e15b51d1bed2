#include "prodtri/riordan.hpp"

#include <string>

#include "prodtri/polynomial.hpp"

namespace prodtri {

RiordanPair::RiordanPair(PowerSeries g, PowerSeries f, RiordanKind kind)
    : g_(std::move(g)), f_(std::move(f)), kind_(kind) {
  if (g_.order() != f_.order()) throw Error(ErrorCode::order_mismatch, "g and f must have the same order");
  if (f_.order() > 0 && f_[0] != 0) throw Error(ErrorCode::normalization, "f(0) must be 0");
  if (kind_ == RiordanKind::ordinary) {
    if (g_.order() > 0 && g_[0] != 1) throw Error(ErrorCode::normalization, "ordinary Riordan arrays need g(0) = 1");
    if (f_.order() > 1 && f_[1] != 1) throw Error(ErrorCode::normalization, "ordinary Riordan arrays need f'(0) = 1");
  }
}

namespace {

void require_order(const PowerSeries& s, std::size_t dim, const char* what) {
  if (s.order() < dim)
    throw Error(ErrorCode::order_mismatch, std::string(what) + " has order " + std::to_string(s.order()) +
                                               ", need at least " + std::to_string(dim));
}

// columns[k] = g f^k, all truncated to dim.
std::vector<PowerSeries> riordan_columns(const PowerSeries& g0, const PowerSeries& f0, std::size_t dim) {
  require_order(g0, dim, "g");
  require_order(f0, dim, "f");
  const auto g = g0.truncated(dim);
  const auto f = f0.truncated(dim);
  std::vector<PowerSeries> cols;
  cols.reserve(dim);
  if (dim == 0) return cols;
  cols.push_back(g);
  for (std::size_t k = 1; k < dim; ++k) cols.push_back(ps_mul(cols.back(), f));
  return cols;
}

}  // namespace

LowerTriMatrix ordinary_riordan(const RiordanPair& p, std::size_t dim) {
  if (p.kind() != RiordanKind::ordinary) throw Error(ErrorCode::invalid_argument, "pair is exponential");
  const auto cols = riordan_columns(p.g(), p.f(), dim);
  SquareMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t n = k; n < dim; ++n) {
      const auto& v = cols[k][n];
      if (!is_integer(v))
        throw Error(ErrorCode::integrality, "entry (" + std::to_string(n) + "," + std::to_string(k) + ") is " + to_decimal(v),
                    n);
      m(n, k) = numerator_of(v);
    }
  return LowerTriMatrix(std::move(m));
}

LowerTriMatrix sequence_array(const IntSequence& b, std::size_t dim) {
  if (b.size() < dim)
    throw Error(ErrorCode::length_mismatch,
                "sequence has " + std::to_string(b.size()) + " terms, need " + std::to_string(dim));
  if (dim > 0 && b[0] != 1) throw Error(ErrorCode::normalization, "sequence array needs b[0] = 1");
  SquareMatrix m(dim);
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t k = 0; k <= n; ++k) m(n, k) = b[n - k];
  return LowerTriMatrix(std::move(m));
}

LowerTriMatrix exponential_riordan(const PowerSeries& g, const PowerSeries& f, std::size_t dim) {
  if (f.order() > 0 && f[0] != 0) throw Error(ErrorCode::normalization, "f(0) must be 0");
  const auto cols = riordan_columns(g, f, dim);
  SquareMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    BigInt ratio = 1;  // n!/k!
    for (std::size_t n = k; n < dim; ++n) {
      if (n > k) ratio *= n;
      const Rational v = cols[k][n] * ratio;
      if (!is_integer(v))
        throw Error(ErrorCode::integrality, "entry (" + std::to_string(n) + "," + std::to_string(k) + ") is " + to_decimal(v),
                    n);
      m(n, k) = numerator_of(v);
    }
  }
  return LowerTriMatrix(std::move(m));
}

LowerTriMatrix exponential_riordan(const RiordanPair& p, std::size_t dim) {
  return exponential_riordan(p.g(), p.f(), dim);
}

namespace {

// Series in x with coefficients in Z[y], truncated to a fixed order.
using PolySeries = std::vector<IntPolynomial>;

// 1/(1 - w x t) where w is a polynomial in y; constant term is 1 so the
// reciprocal stays integral.
PolySeries reciprocal_of_one_minus(const IntPolynomial& w, const PolySeries& t) {
  const auto n = t.size();
  PolySeries d(n);  // d = 1 - w x t, d[0] = 1
  for (std::size_t i = 1; i < n; ++i) d[i] = -(w * t[i - 1]);
  PolySeries inv(n);
  if (n == 0) return inv;
  inv[0] = IntPolynomial{1};
  for (std::size_t i = 1; i < n; ++i) {
    IntPolynomial acc;
    for (std::size_t j = 1; j <= i; ++j) acc += d[j] * inv[i - j];
    inv[i] = -acc;
  }
  return inv;
}

}  // namespace

LowerTriMatrix deleham_delta(const IntSequence& r, const IntSequence& s, std::size_t dim) {
  if (r.size() < dim || s.size() < dim)
    throw Error(ErrorCode::length_mismatch, "deleham_delta needs at least " + std::to_string(dim) + " weights in each list");
  PolySeries t(dim);
  if (dim == 0) return LowerTriMatrix(SquareMatrix(0));
  t[0] = IntPolynomial{1};
  // Levels beyond dim-1 cannot reach x^{dim-1}.
  for (std::size_t level = dim; level-- > 0;) {
    const IntPolynomial w(std::vector<BigInt>{r[level], s[level]});
    t = reciprocal_of_one_minus(w, t);
  }
  SquareMatrix m(dim);
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t k = 0; k <= n; ++k) m(n, k) = t[n].coeff(k);
  return LowerTriMatrix(std::move(m));
}

}  // namespace prodtri
