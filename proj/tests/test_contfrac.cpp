#include "helpers.hpp"
#include "prodtri/contfrac.hpp"
#include "prodtri/sampling.hpp"

using namespace prodtri;
using namespace prodtri::test;

namespace {

// Moments as weighted path sums: Dyck paths where a down step from height h
// carries c_h (S-fraction), Motzkin paths with level steps a_h and down steps b_h.
std::vector<Rational> dyck_moments(const std::vector<Rational>& c, std::size_t terms) {
  std::vector<Rational> out;
  const std::size_t height = c.size() + 1;
  std::vector<Rational> cur(height), next(height);
  cur[0] = 1;
  for (std::size_t n = 0; n < terms; ++n) {
    out.push_back(cur[0]);
    // Two steps per moment: up then down, tracked as one "excursion" level table.
    for (int half = 0; half < 2; ++half) {
      std::fill(next.begin(), next.end(), Rational(0));
      for (std::size_t h = 0; h < height; ++h) {
        if (cur[h] == 0) continue;
        if (h + 1 < height) next[h + 1] += cur[h];
        if (h > 0) next[h - 1] += cur[h] * c[h - 1];
      }
      std::swap(cur, next);
    }
  }
  return out;
}

std::vector<Rational> motzkin_moments(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                      std::size_t terms) {
  std::vector<Rational> out;
  const std::size_t height = std::min(a.size(), b.size() + 1);
  std::vector<Rational> cur(height), next(height);
  cur[0] = 1;
  for (std::size_t n = 0; n < terms; ++n) {
    out.push_back(cur[0]);
    std::fill(next.begin(), next.end(), Rational(0));
    for (std::size_t h = 0; h < height; ++h) {
      if (cur[h] == 0) continue;
      next[h] += cur[h] * a[h];
      if (h + 1 < height) next[h + 1] += cur[h];
      if (h > 0) next[h - 1] += cur[h] * b[h - 1];
    }
    std::swap(cur, next);
  }
  return out;
}

std::vector<Rational> rats(std::initializer_list<long long> v) {
  std::vector<Rational> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

StieltjesCF a003319_cf(std::size_t depth) {
  StieltjesCF cf;
  for (std::size_t i = 0; i < depth; ++i) cf.c.emplace_back(static_cast<long>((i + 1) / 2 + 1));
  return cf;
}

}  // namespace

TEST_CASE("path oracles reproduce known moment sequences") {
  CHECK(dyck_moments(rats({1, 1, 1, 1, 1, 1}), 6) == rats({1, 1, 2, 5, 14, 42}));
  CHECK(motzkin_moments(rats({1, 1, 1, 1}), rats({1, 1, 1}), 6) == rats({1, 1, 2, 4, 9, 21}));
}

TEST_CASE("interleave") {
  CHECK(interleave(make_sequence({1, 2, 3}), make_sequence({2, 3, 4})).c == rats({1, 2, 2, 3, 3, 4}));
  CHECK(interleave(make_sequence({7}), make_sequence({})).c == rats({7}));
  CHECK(interleave(make_sequence({1, 2}), make_sequence({5, 6})).c == rats({1, 5, 2, 6}));
  CHECK(error_code_of([] { interleave(make_sequence({1, 2, 3}), make_sequence({1})); }) ==
        ErrorCode::length_mismatch);
  CHECK(error_code_of([] { interleave(make_sequence({1}), make_sequence({1, 2})); }) ==
        ErrorCode::length_mismatch);
}

TEST_CASE("stieltjes_to_series") {
  CHECK(stieltjes_to_series(stieltjes({1, 2, 2, 3, 3, 4}), 7) == series({1, 1, 3, 13, 71, 461, 3447}));
  CHECK(stieltjes_to_series(StieltjesCF{{}, true}, 5) == series({1, 0, 0, 0, 0}));
  CHECK(stieltjes_to_series(StieltjesCF{}, 1) == series({1}));
  const auto h2 = stieltjes({2, 2, 3, 3, 4, 4});
  CHECK(stieltjes_to_series(h2, 4) == series({1, 2, 8, 44}));
  CHECK(stieltjes_to_series(h2, 7).coeffs() == dyck_moments(h2.c, 7));

  try {
    stieltjes_to_series(stieltjes({1, 2}), 4);
    FAIL("expected depth error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::insufficient_depth);
    CHECK(std::string(e.what()).find("depth 3") != std::string::npos);
  }
}

TEST_CASE("jacobi_to_series") {
  const auto a001339 = jacobi({3, 5, 7}, {2, 6, 12});
  CHECK(jacobi_to_series(a001339, 6) == series({1, 3, 11, 49, 261, 1631}));
  CHECK(jacobi_to_series(JacobiCF{rats({5}), {}, true}, 5) == series({1, 5, 25, 125, 625}));
  CHECK(jacobi_to_series(jacobi({4, 6, 8}, {2, 6, 12}), 5) == series({1, 4, 18, 92, 536}));
  const auto j = jacobi({1, 2, 3, 4}, {5, 6, 7});
  CHECK(jacobi_to_series(j, 8).coeffs() == motzkin_moments(j.a, j.b, 8));
  CHECK(error_code_of([] { jacobi_to_series(jacobi({1, 2}, {1}), 5); }) == ErrorCode::insufficient_depth);
}

TEST_CASE("stieltjes_to_jacobi") {
  const auto j = stieltjes_to_jacobi(stieltjes({1, 2, 2, 3, 3, 4}));
  CHECK(j.a == rats({1, 4, 6}));
  CHECK(j.b == rats({2, 6}));
  const auto long_cf = a003319_cf(9);
  CHECK(jacobi_to_series(stieltjes_to_jacobi(long_cf), 8) == stieltjes_to_series(long_cf, 8));

  const auto single = stieltjes_to_jacobi(stieltjes({5}));
  CHECK(single.a == rats({5}));
  CHECK(single.b.empty());

  const auto cat = stieltjes_to_jacobi(stieltjes({1, 1, 1, 1, 1, 1, 1}));
  CHECK(cat.a == rats({1, 2, 2, 2}));
  CHECK(cat.b == rats({1, 1, 1}));
  CHECK(jacobi_to_series(cat, 8) == series({1, 1, 2, 5, 14, 42, 132, 429}));
}

TEST_CASE("contraction preserves the series") {
  Rng rng(314);
  for (int t = 0; t < 50; ++t) {
    const auto cf = random_positive_stieltjes(rng, 16, 6);
    REQUIRE(stieltjes_to_series(cf, 16) == jacobi_to_series(stieltjes_to_jacobi(cf), 16));
  }
  const StieltjesCF finite{rats({2, 3, 5}), true};
  CHECK(jacobi_to_series(stieltjes_to_jacobi(finite), 12) == stieltjes_to_series(finite, 12));
}

TEST_CASE("series_to_jacobi") {
  const auto fit = series_to_jacobi(series({1, 1, 3, 13, 71, 461, 3447}), 3);
  CHECK(fit.a == rats({1, 4, 6}));
  CHECK(fit.b == rats({2, 6}));
  const auto cat = series_to_jacobi(series({1, 1, 2, 5, 14, 42}), 3);
  CHECK(cat.a == rats({1, 2, 2}));
  CHECK(cat.b == rats({1, 1}));
  const auto geo = series_to_jacobi(series({1, 1, 1, 1}), 2);
  CHECK(geo.finite);
  CHECK(geo.a == rats({1}));
  CHECK(geo.b.empty());

  const auto a001339 = series_to_jacobi(series({1, 3, 11, 49, 261, 1631}), 3);
  CHECK(a001339.a == rats({3, 5, 7}));
  CHECK(a001339.b == rats({2, 6}));

  // 1 + x^3 + ...: a0 = 0 and b1 = 0 with a nonzero tail.
  CHECK(error_code_of([] { series_to_jacobi(series({1, 0, 0, 1, 0, 5}), 3); }) == ErrorCode::degenerate_moments);
  CHECK(error_code_of([] { series_to_jacobi(series({2, 1}), 1); }) == ErrorCode::normalization);
  CHECK(error_code_of([] { series_to_jacobi(series({1, 1, 2}), 2); }) == ErrorCode::insufficient_depth);
}

TEST_CASE("series_to_stieltjes") {
  CHECK(series_to_stieltjes(series({1, 1, 3, 13, 71, 461}), 5).c == rats({1, 2, 2, 3, 3}));
  CHECK(series_to_stieltjes(series({1, 1, 2, 5, 14, 42, 132}), 6).c == rats({1, 1, 1, 1, 1, 1}));
  const auto fact = series_to_stieltjes(series({1, 1, 2, 6, 24, 120, 720}), 6);
  CHECK(fact.c == rats({1, 1, 2, 2, 3, 3}));
  CHECK(stieltjes_to_series(fact, 7) == series({1, 1, 2, 6, 24, 120, 720}));

  const auto geo = series_to_stieltjes(series({1, 2, 4, 8, 16}), 4);
  CHECK(geo.finite);
  CHECK(geo.c == rats({2}));
  CHECK(error_code_of([] { series_to_stieltjes(series({1, 0, 1}), 2); }) == ErrorCode::degenerate_moments);
  CHECK(error_code_of([] { series_to_stieltjes(series({1, 1}), 2); }) == ErrorCode::insufficient_depth);
}

TEST_CASE("fit and expand round trips on positive S-fractions") {
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    const auto cf = random_positive_stieltjes(rng, 12, 5);
    const auto s = stieltjes_to_series(cf, 13);
    const auto j = series_to_jacobi(s, 6);
    REQUIRE(jacobi_to_series(j, 12) == s.truncated(12));
    REQUIRE(j == stieltjes_to_jacobi(StieltjesCF{{cf.c.begin(), cf.c.begin() + 11}, false}));

    const auto shallow = StieltjesCF{{cf.c.begin(), cf.c.begin() + 8}, false};
    REQUIRE(series_to_stieltjes(stieltjes_to_series(shallow, 9), 8) == shallow);
  }
}
