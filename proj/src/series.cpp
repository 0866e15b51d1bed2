#include "prodtri/series.hpp"

#include <algorithm>
#include <string>

namespace prodtri {

PowerSeries PowerSeries::zero(std::size_t order) { return PowerSeries(std::vector<Rational>(order)); }

PowerSeries PowerSeries::one(std::size_t order) {
  std::vector<Rational> c(order);
  if (order > 0) c[0] = 1;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::x(std::size_t order) {
  std::vector<Rational> c(order);
  if (order > 1) c[1] = 1;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::from_integers(std::span<const BigInt> terms) {
  std::vector<Rational> c;
  c.reserve(terms.size());
  for (const auto& t : terms) c.emplace_back(t);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::geometric(const Rational& ratio, std::size_t order) {
  std::vector<Rational> c(order);
  Rational p = 1;
  for (auto& v : c) {
    v = p;
    p *= ratio;
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::exp(const Rational& rate, std::size_t order) {
  std::vector<Rational> c(order);
  Rational term = 1;
  for (std::size_t n = 0; n < order; ++n) {
    c[n] = term;
    term = term * rate / Rational(n + 1);
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size())
    throw Error(ErrorCode::order_mismatch, "cannot extend a series of order " + std::to_string(coeffs_.size()) +
                                               " to order " + std::to_string(order));
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

PowerSeries PowerSeries::shifted_up(std::size_t k) const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = k; i < c.size(); ++i) c[i] = coeffs_[i - k];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scaled(const Rational& s) const {
  auto c = coeffs_;
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.order() != b.order())
    throw Error(ErrorCode::order_mismatch, std::string(op) + ": orders " + std::to_string(a.order()) + " and " +
                                               std::to_string(b.order()) + " differ");
}

}  // namespace

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "ps_add");
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return PowerSeries(std::move(c));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "ps_sub");
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "ps_mul");
  const auto n = a.order();
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_inverse(const PowerSeries& a) {
  const auto n = a.order();
  if (n == 0) return a;
  if (a[0] == 0) throw Error(ErrorCode::not_invertible, "series with zero constant term has no reciprocal");
  std::vector<Rational> d(n);
  const Rational inv0 = 1 / a[0];
  d[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * d[k - j];
    d[k] = -acc * inv0;
  }
  return PowerSeries(std::move(d));
}

PowerSeries ps_compose(const PowerSeries& g, const PowerSeries& f) {
  require_same_order(g, f, "ps_compose");
  const auto n = g.order();
  if (n == 0) return g;
  if (f[0] != 0) throw Error(ErrorCode::composition_domain, "inner series must have zero constant term");
  // Horner: g0 + f (g1 + f (g2 + ...)).
  auto acc = PowerSeries::zero(n);
  for (std::size_t i = n; i-- > 0;) {
    acc = ps_mul(acc, f);
    auto c = acc.coeffs();
    c[0] += g[i];
    acc = PowerSeries(std::move(c));
  }
  return acc;
}

IntSequence make_sequence(std::initializer_list<long long> terms, std::size_t offset) {
  IntSequence s;
  s.offset = offset;
  for (auto t : terms) s.terms.emplace_back(t);
  return s;
}

IntSequence series_to_sequence(const PowerSeries& s) {
  IntSequence out;
  out.terms.reserve(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (!is_integer(s[i]))
      throw Error(ErrorCode::integrality, "coefficient " + std::to_string(i) + " is " + to_decimal(s[i]), i);
    out.terms.push_back(numerator_of(s[i]));
  }
  return out;
}

IntSequence egf_to_sequence(const PowerSeries& g) {
  IntSequence out;
  out.terms.reserve(g.order());
  BigInt fact = 1;
  for (std::size_t n = 0; n < g.order(); ++n) {
    if (n > 0) fact *= n;
    Rational v = g[n] * fact;
    if (!is_integer(v))
      throw Error(ErrorCode::integrality, "n! g[n] is not an integer at n = " + std::to_string(n), n);
    out.terms.push_back(numerator_of(v));
  }
  return out;
}

IntSequence binomial_transform_r(const IntSequence& a, const BigInt& r) {
  IntSequence out;
  out.offset = a.offset;
  out.terms.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    BigInt acc = 0;
    BigInt c = 1;  // C(n, k)
    for (std::size_t k = 0; k <= n; ++k) {
      acc += c * boost::multiprecision::pow(r, static_cast<unsigned>(n - k)) * a[k];
      c = c * (n - k) / (k + 1);
    }
    out.terms.push_back(acc);
  }
  return out;
}

IntSequence invert_transform(const IntSequence& a, const BigInt& y) {
  const auto A = PowerSeries::from_integers(a.terms);
  const auto denom = ps_sub(PowerSeries::one(A.order()), A.shifted_up(1).scaled(Rational(y)));
  auto out = series_to_sequence(ps_mul(A, ps_inverse(denom)));
  out.offset = a.offset;
  return out;
}

IntSequence shifted_factorials(std::size_t count) {
  IntSequence s;
  BigInt f = 1;
  for (std::size_t n = 0; n < count; ++n) {
    f *= n + 1;
    s.terms.push_back(f);
  }
  return s;
}

}  // namespace prodtri
