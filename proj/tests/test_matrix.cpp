#include "helpers.hpp"
#include "prodtri/matrix.hpp"
#include "prodtri/reference_data.hpp"
#include "prodtri/sampling.hpp"

using namespace prodtri;
using namespace prodtri::test;

namespace {

LowerTriMatrix pascal(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t n = 0; n < dim; ++n)
    for (std::size_t k = 0; k <= n; ++k) m(n, k) = binomial(static_cast<long>(n), static_cast<long>(k));
  return LowerTriMatrix(std::move(m));
}

// Ones on the diagonal and superdiagonal.
SquareMatrix pascal_stencil(std::size_t dim) {
  return mat_add(SquareMatrix::identity(dim), shift_matrix(dim));
}

}  // namespace

TEST_CASE("U, V, W builders") {
  CHECK(shift_matrix(3) == SquareMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(shift_matrix(1) == SquareMatrix(1));
  const auto uu = mat_mul(shift_matrix(5), shift_matrix(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(uu(i, j) == (j == i + 2 ? 1 : 0));

  CHECK(v_matrix(7) == SquareMatrix::from_rows({{0},
                                                {0, 0},
                                                {0, -1, 0},
                                                {0, 0, -2, 0},
                                                {0, 0, 0, -3, 0},
                                                {0, 0, 0, 0, -4, 0},
                                                {0, 0, 0, 0, 0, -5, 0}}));
  CHECK(v_matrix(2) == SquareMatrix(2));
  for (std::size_t n = 2; n < 12; ++n) {
    std::size_t nonzero = 0;
    const auto v = v_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) nonzero += v(i, j) != 0;
    CHECK(nonzero == n - 2);
  }

  CHECK(w_matrix(3) == SquareMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(mat_mul(w_matrix(4), w_matrix(4)) == w_matrix(4));
  const auto wu = mat_mul(w_matrix(4), shift_matrix(4));
  SquareMatrix single(4);
  single(0, 1) = 1;
  CHECK(wu == single);
}

TEST_CASE("commutator V U - U V = I - W on the leading block") {
  for (std::size_t n = 2; n <= 50; ++n) {
    const auto lhs = mat_sub(mat_mul(v_matrix(n), shift_matrix(n)), mat_mul(shift_matrix(n), v_matrix(n)));
    const auto rhs = mat_sub(SquareMatrix::identity(n), w_matrix(n));
    REQUIRE(lhs.leading_block(n - 1) == rhs.leading_block(n - 1));
  }
}

TEST_CASE("matrix arithmetic") {
  const auto a = SquareMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(mat_add(a, SquareMatrix(2)) == a);
  CHECK(mat_sub(a, a) == SquareMatrix(2));
  CHECK(mat_mul(a, SquareMatrix::identity(2)) == a);
  CHECK(error_code_of([&] { mat_mul(a, SquareMatrix(3)); }) == ErrorCode::dim_mismatch);
  CHECK(error_code_of([&] { mat_add(a, SquareMatrix(3)); }) == ErrorCode::dim_mismatch);
  CHECK(error_code_of([] { LowerTriMatrix(SquareMatrix::from_rows({{1, 1}, {0, 1}})); }) ==
        ErrorCode::not_triangular);
}

TEST_CASE("lt_inverse") {
  const LowerTriMatrix pre(reference::hanna1_pre_inverse());
  const auto m = lt_inverse(pre);
  CHECK(m == reference::hanna(1));
  CHECK(mat_mul(pre, m) == SquareMatrix::identity(7));
  CHECK(lt_inverse(LowerTriMatrix::identity(5)) == LowerTriMatrix::identity(5));

  SquareMatrix bidiag = SquareMatrix::identity(7);
  for (std::size_t n = 1; n < 7; ++n) bidiag(n, n - 1) = -static_cast<long>(n);
  CHECK(lt_inverse(LowerTriMatrix(bidiag)) == reference::hanna(0));

  CHECK(error_code_of([] { lt_inverse(LowerTriMatrix::from_rows({{2}, {1, 1}})); }) == ErrorCode::not_invertible);
}

TEST_CASE("lt_inverse is an involution") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_unit_lower(rng, 12, -9, 9);
    REQUIRE(lt_inverse(lt_inverse(m)) == m);
  }
}

TEST_CASE("production_matrix") {
  // 8x8 truncation of A104980 (row 7 extends the published block).
  const auto h = lt_inverse(LowerTriMatrix(SquareMatrix::from_rows({{1},
                                                                    {-1, 1},
                                                                    {-1, -2, 1},
                                                                    {-3, -1, -3, 1},
                                                                    {-13, -3, -1, -4, 1},
                                                                    {-71, -13, -3, -1, -5, 1},
                                                                    {-461, -71, -13, -3, -1, -6, 1},
                                                                    {-3447, -461, -71, -13, -3, -1, -7, 1}})));
  CHECK(h.leading_block(7) == reference::hanna(1));
  CHECK(production_matrix(h) == reference::hanna1_production());

  CHECK(production_matrix(LowerTriMatrix::identity(6)) == shift_matrix(5));
  CHECK(production_matrix(pascal(8)) == pascal_stencil(7));
  CHECK(error_code_of([] { production_matrix(LowerTriMatrix::identity(1)); }) == ErrorCode::dim_mismatch);
  CHECK(error_code_of([] { production_matrix(LowerTriMatrix::from_rows({{1}, {0, 2}})); }) ==
        ErrorCode::not_invertible);
}

TEST_CASE("generate_from_production") {
  const auto h = reference::hanna(1);
  CHECK(generate_from_production(reference::hanna1_production(), 7) == h);
  CHECK(generate_from_production(reference::hanna1_production(), 8).leading_block(7) == h);
  CHECK(generate_from_production(shift_matrix(6), 6) == LowerTriMatrix::identity(6));
  CHECK(generate_from_production(pascal_stencil(8), 8) == pascal(8));

  auto bad = pascal_stencil(4);
  bad(1, 2) = 2;
  CHECK(error_code_of([&] { generate_from_production(bad, 4); }) == ErrorCode::not_production_matrix);
  auto above = pascal_stencil(4);
  above(0, 3) = 1;
  CHECK(error_code_of([&] { generate_from_production(above, 4); }) == ErrorCode::not_production_matrix);
  CHECK(error_code_of([] { generate_from_production(shift_matrix(3), 5); }) == ErrorCode::dim_mismatch);
}

TEST_CASE("production matrix round trip and truncation stability") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_unit_lower(rng, 12, -9, 9);
    const auto p = production_matrix(m);
    REQUIRE(generate_from_production(p, 11) == m.leading_block(11));
    REQUIRE(generate_from_production(p, 12) == m);
    REQUIRE(production_matrix(m.leading_block(11)) == p.leading_block(10));
  }
}
