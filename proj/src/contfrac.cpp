#include "prodtri/contfrac.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace prodtri {

namespace {

constexpr auto unbounded = std::numeric_limits<std::size_t>::max();

std::vector<Rational> to_rationals(std::initializer_list<long long> v) {
  std::vector<Rational> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

std::size_t StieltjesCF::exact_terms() const { return finite ? unbounded : c.size() + 1; }

std::size_t JacobiCF::exact_terms() const {
  if (finite) return unbounded;
  if (a.empty()) return 1;
  return std::min(2 * a.size(), 2 * b.size() + 1) + 1;
}

StieltjesCF stieltjes(std::initializer_list<long long> c, bool finite) { return {to_rationals(c), finite}; }

JacobiCF jacobi(std::initializer_list<long long> a, std::initializer_list<long long> b, bool finite) {
  return {to_rationals(a), to_rationals(b), finite};
}

StieltjesCF interleave(const IntSequence& x, const IntSequence& y) {
  if (!(x.size() == y.size() || x.size() == y.size() + 1))
    throw Error(ErrorCode::length_mismatch, "interleave needs |x| = |y| or |x| = |y| + 1, got " +
                                                std::to_string(x.size()) + " and " + std::to_string(y.size()));
  StieltjesCF cf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cf.c.emplace_back(x[i]);
    if (i < y.size()) cf.c.emplace_back(y[i]);
  }
  return cf;
}

PowerSeries stieltjes_to_series(const StieltjesCF& cf, std::size_t terms) {
  if (terms > cf.exact_terms())
    throw Error(ErrorCode::insufficient_depth, std::to_string(terms) + " terms need an S-fraction of depth " +
                                                   std::to_string(terms - 1) + ", have " + std::to_string(cf.c.size()));
  auto t = PowerSeries::one(terms);
  if (terms == 0) return t;
  // Coefficients past c_{terms-1} cannot reach x^{terms-1}.
  const auto levels = std::min(cf.c.size(), terms - 1);
  const auto one = PowerSeries::one(terms);
  for (std::size_t i = levels; i-- > 0;) t = ps_inverse(ps_sub(one, t.shifted_up(1).scaled(cf.c[i])));
  return t;
}

PowerSeries jacobi_to_series(const JacobiCF& cf, std::size_t terms) {
  if (terms > cf.exact_terms())
    throw Error(ErrorCode::insufficient_depth,
                std::to_string(terms) + " terms need a J-fraction with " + std::to_string(terms / 2) + " a- and " +
                    std::to_string(terms > 0 ? (terms - 1) / 2 : 0) + " b-coefficients, have " +
                    std::to_string(cf.a.size()) + " and " + std::to_string(cf.b.size()));
  auto t = PowerSeries::one(terms);
  if (terms == 0) return t;
  const auto levels = std::min(std::max(cf.a.size(), cf.b.size() + 1), terms);
  const auto one = PowerSeries::one(terms);
  const Rational zero = 0;
  for (std::size_t i = levels; i-- > 0;) {
    const Rational& a = i < cf.a.size() ? cf.a[i] : zero;
    const Rational& b = i < cf.b.size() ? cf.b[i] : zero;  // b_{i+1}
    auto d = ps_sub(one, PowerSeries::x(terms).scaled(a));
    d = ps_sub(d, t.shifted_up(2).scaled(b));
    t = ps_inverse(d);
  }
  return t;
}

PowerSeries cf_to_series(const CFSpec& cf, std::size_t terms) {
  return std::visit(
      [terms](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, StieltjesCF>)
          return stieltjes_to_series(v, terms);
        else
          return jacobi_to_series(v, terms);
      },
      cf);
}

JacobiCF stieltjes_to_jacobi(const StieltjesCF& cf) {
  const auto& c = cf.c;
  const auto L = c.size();
  // 1-based access with zero padding.
  auto at = [&](std::size_t i) -> Rational { return i >= 1 && i <= L ? c[i - 1] : Rational(0); };
  JacobiCF j;
  j.finite = cf.finite;
  if (L == 0) return j;
  const std::size_t d = cf.finite ? L / 2 + 1 : (L - 1) / 2 + 1;
  const std::size_t nb = cf.finite ? L / 2 : d - 1;
  j.a.push_back(at(1));
  for (std::size_t n = 1; n < d; ++n) j.a.push_back(at(2 * n) + at(2 * n + 1));
  for (std::size_t n = 1; n <= nb; ++n) j.b.push_back(at(2 * n - 1) * at(2 * n));
  return j;
}

namespace {

void require_unit_constant(const PowerSeries& s) {
  if (s.order() == 0 || s[0] != 1)
    throw Error(ErrorCode::normalization, "continued-fraction fitting needs s[0] = 1");
}

bool all_zero_from(const PowerSeries& s, std::size_t from) {
  for (std::size_t i = from; i < s.order(); ++i)
    if (s[i] != 0) return false;
  return true;
}

}  // namespace

StieltjesCF series_to_stieltjes(const PowerSeries& s, std::size_t depth) {
  require_unit_constant(s);
  if (s.order() < depth + 1)
    throw Error(ErrorCode::insufficient_depth, "depth " + std::to_string(depth) + " needs " + std::to_string(depth + 1) +
                                                   " coefficients, have " + std::to_string(s.order()));
  StieltjesCF cf;
  auto f = s.truncated(depth + 1);
  for (std::size_t level = 0; level < depth; ++level) {
    // f = 1/(1 - c x g)  =>  1 - 1/f = c x g with g(0) = 1.
    const auto rem = ps_sub(PowerSeries::one(f.order()), ps_inverse(f));
    const Rational c = rem[1];
    if (c == 0) {
      if (all_zero_from(rem, 2)) {
        cf.finite = true;
        return cf;
      }
      throw Error(ErrorCode::degenerate_moments, "vanishing S-coefficient c" + std::to_string(level + 1) +
                                                     " with nonzero remainder",
                  level + 1);
    }
    cf.c.push_back(c);
    std::vector<Rational> g(f.order() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = rem[i + 1] / c;
    f = PowerSeries(std::move(g));
  }
  return cf;
}

JacobiCF series_to_jacobi(const PowerSeries& s, std::size_t depth) {
  require_unit_constant(s);
  if (depth == 0) throw Error(ErrorCode::invalid_argument, "J-fraction depth must be at least 1");
  if (s.order() < 2 * depth)
    throw Error(ErrorCode::insufficient_depth, "depth " + std::to_string(depth) + " needs " +
                                                   std::to_string(2 * depth) + " coefficients, have " +
                                                   std::to_string(s.order()));
  JacobiCF cf;
  auto f = s.truncated(2 * depth);
  for (std::size_t level = 0; level < depth; ++level) {
    // f = 1/(1 - a x - b x^2 g)  =>  1/f = 1 - a x - b x^2 g.
    const auto inv = ps_inverse(f);
    cf.a.push_back(-inv[1]);
    if (level + 1 == depth) break;
    const Rational b = -inv[2];
    if (b == 0) {
      if (all_zero_from(inv, 3)) {
        cf.finite = true;
        return cf;
      }
      throw Error(ErrorCode::degenerate_moments, "vanishing J-coefficient b" + std::to_string(level + 1) +
                                                     " with nonzero remainder",
                  level + 1);
    }
    cf.b.push_back(b);
    std::vector<Rational> g(f.order() - 2);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -inv[i + 2] / b;
    f = PowerSeries(std::move(g));
  }
  return cf;
}

}  // namespace prodtri
