#include "helpers.hpp"
#include "prodtri/sampling.hpp"
#include "prodtri/series.hpp"

using namespace prodtri;
using namespace prodtri::test;

namespace {

// Direct Cauchy product, kept independent of ps_mul.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i) c[n] += a[i] * b[n - i];
  return c;
}

PowerSeries random_rational_series(Rng& rng, std::size_t order) {
  std::vector<Rational> c(order);
  for (auto& v : c) v = Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5));
  if (c[0] == 0) c[0] = 1;
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("ps_mul") {
  CHECK(ps_mul(series({1, 1, 0, 0}), series({1, -1, 0, 0})) == series({1, 0, -1, 0}));
  // (n+1)! times 1 - x gf(A003319 shifted) gives A003319 shifted.
  CHECK(ps_mul(series({1, 2, 6, 24}), series({1, -1, -1, -3})) == series({1, 1, 3, 13}));
  const auto g = series({3, -1, 4, 1, -5});
  CHECK(ps_mul(g, PowerSeries::one(5)) == g);
  CHECK(error_code_of([] { ps_mul(series({1, 2}), series({1, 2, 3})); }) == ErrorCode::order_mismatch);
}

TEST_CASE("ps_mul agrees with direct convolution") {
  Rng rng(101);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_rational_series(rng, 12), b = random_rational_series(rng, 12);
    CHECK(ps_mul(a, b).coeffs() == convolve(a.coeffs(), b.coeffs()));
  }
}

TEST_CASE("ps_inverse") {
  CHECK(ps_inverse(series({1, -1, 0, 0, 0, 0})) == series({1, 1, 1, 1, 1, 1}));
  CHECK(ps_inverse(series({1, -2, 0, 0, 0, 0})) == series({1, 2, 4, 8, 16, 32}));
  // 1 - x f for f = 1 + x + 3x^2 + 13x^3 + 71x^4; d_n = sum_k f_k d_{n-1-k} gives n!.
  CHECK(ps_inverse(series({1, -1, -1, -3, -13, -71})) == series({1, 1, 2, 6, 24, 120}));
  CHECK(error_code_of([] { ps_inverse(series({0, 1})); }) == ErrorCode::not_invertible);
}

TEST_CASE("ps_inverse is a two-sided reciprocal for random rational series") {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_rational_series(rng, 32);
    REQUIRE(ps_mul(a, ps_inverse(a)) == PowerSeries::one(32));
  }
}

TEST_CASE("ps_compose") {
  // 1/(1 - x/(1-x)) = (1-x)/(1-2x).
  const auto g = PowerSeries::geometric(1, 6);
  const auto f = ps_mul(PowerSeries::x(6), PowerSeries::geometric(1, 6));
  CHECK(ps_compose(g, f) == series({1, 1, 2, 4, 8, 16}));
  const auto h = series({2, -3, 5, 7});
  CHECK(ps_compose(h, PowerSeries::x(4)) == h);
  CHECK(ps_compose(series({1, 0, 1, 0}), series({0, 2, 0, 0})) == series({1, 0, 4, 0}));
  CHECK(error_code_of([] { ps_compose(series({1, 1}), series({1, 1})); }) == ErrorCode::composition_domain);
}

TEST_CASE("egf_to_sequence") {
  const auto inv_sq = ps_inverse(ps_mul(series({1, -1, 0, 0, 0, 0}), series({1, -1, 0, 0, 0, 0})));
  CHECK(egf_to_sequence(ps_mul(PowerSeries::exp(1, 6), inv_sq)).terms == ints({1, 3, 11, 49, 261, 1631}));
  CHECK(egf_to_sequence(ps_mul(PowerSeries::exp(2, 6), inv_sq)).terms == ints({1, 4, 18, 92, 536, 3552}));
  CHECK(egf_to_sequence(PowerSeries::exp(1, 5)).terms == ints({1, 1, 1, 1, 1}));

  try {
    egf_to_sequence(PowerSeries({Rational(1), Rational(1), Rational(1, 4)}));
    FAIL("expected integrality error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::integrality);
    CHECK(e.index() == 2);
  }
}

TEST_CASE("binomial_transform_r") {
  const auto fact = shifted_factorials(5);
  CHECK(binomial_transform_r(fact, 1).terms == ints({1, 3, 11, 49, 261}));
  CHECK(binomial_transform_r(fact, 0) == fact);
  CHECK(binomial_transform_r(fact, 2).terms == ints({1, 4, 18, 92, 536}));
}

TEST_CASE("invert_transform") {
  CHECK(invert_transform(shifted_factorials(5), -1).terms == ints({1, 1, 3, 13, 71}));
  CHECK(invert_transform(make_sequence({1, 1, 3, 13, 71}), 1).terms == ints({1, 2, 6, 24, 120}));
  const auto a = make_sequence({4, -2, 7});
  CHECK(invert_transform(a, 0) == a);
  CHECK(invert_transform(make_sequence({1, 1, 2, 5, 14}), 1).terms == ints({1, 2, 5, 14, 42}));
}

TEST_CASE("transform involutions") {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_sequence(rng, 24, -20, 20);
    const long y = uniform_int(rng, -3, 3);
    REQUIRE(invert_transform(invert_transform(a, y), -y) == a);
    const long r = uniform_int(rng, -3, 3);
    REQUIRE(binomial_transform_r(binomial_transform_r(a, r), -r) == a);
  }
}

TEST_CASE("egf of e^{rx}/(1-x)^2 is the r-th binomial transform of (n+1)!") {
  const std::size_t n = 20;
  auto one_minus_x = PowerSeries::one(n);
  one_minus_x = ps_sub(one_minus_x, PowerSeries::x(n));
  const auto inv_sq = ps_inverse(ps_mul(one_minus_x, one_minus_x));
  for (long r = 0; r <= 5; ++r)
    CHECK(egf_to_sequence(ps_mul(PowerSeries::exp(r, n), inv_sq)).terms ==
          binomial_transform_r(shifted_factorials(n), r).terms);
}

TEST_CASE("binomial coefficient conventions") {
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(10, 3) == 120);
}
