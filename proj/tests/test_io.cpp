#include "helpers.hpp"
#include "prodtri/io.hpp"
#include "prodtri/reference_data.hpp"
#include "prodtri/sampling.hpp"

using namespace prodtri;
using namespace prodtri::test;

TEST_CASE("matrix JSON round trip keeps big integers exact") {
  SquareMatrix m(3);
  m(0, 0) = 1;
  m(2, 1) = BigInt("-123456789012345678901234567890");
  m(1, 0) = 42;
  const auto j = to_json(m);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("rows")[2][1] == "-123456789012345678901234567890");
  CHECK(matrix_from_json(nlohmann::json::parse(j.dump())) == m);

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto r = random_unit_lower(rng, 6, -1000, 1000);
    REQUIRE(matrix_from_json(nlohmann::json::parse(render(r, Format::json))) == r.square());
  }
}

TEST_CASE("sequence, series and CF JSON") {
  auto s = make_sequence({1, -2, 3}, 1);
  CHECK(sequence_from_json(to_json(s)) == s);
  CHECK(to_json(s).dump() == R"({"offset":1,"terms":["1","-2","3"]})");

  const PowerSeries ps({Rational(1), Rational(-1, 3), Rational(5, 2)});
  CHECK(to_json(ps)[1].at("numerator") == "-1");
  CHECK(to_json(ps)[1].at("denominator") == "3");
  CHECK(series_from_json(to_json(ps)) == ps);

  const CFSpec sc = StieltjesCF{{Rational(1), Rational(2, 3)}, false};
  CHECK(cf_from_json(to_json(sc)) == sc);
  const CFSpec jc = JacobiCF{{Rational(3), Rational(5)}, {Rational(2)}, true};
  CHECK(cf_from_json(to_json(jc)) == jc);
  CHECK(to_json(jc).at("kind") == "jacobi");
  CHECK(error_code_of([] { cf_from_json(nlohmann::json{{"kind", "thron"}}); }) == ErrorCode::parse);
  CHECK(error_code_of([] { matrix_from_json(nlohmann::json{{"dim", 2}}); }) == ErrorCode::parse);
}

TEST_CASE("text renderings") {
  const auto m = SquareMatrix::from_rows({{1, 0}, {13, 1}});
  CHECK(render_plain(m) == " 1 0\n13 1\n");
  CHECK(render_csv(m) == "1,0\n13,1\n");
  CHECK(render_latex(m) == "\\left(\n\\begin{array}{cc}\n 1 & 0 \\\\\n 13 & 1 \\\\\n\\end{array}\n\\right)\n");
  CHECK(render(CFSpec{jacobi({3, 5, 7}, {2, 6})}, Format::plain) == "J: a=3,5,7 b=2,6\n");
  CHECK(render(CFSpec{stieltjes({1, 2})}, Format::latex) == "\\mathcal{S}(1,2,\\ldots)\n");
  CHECK(to_string(IntPolynomial{24, 34, 12, 1}) == "r^3 + 12r^2 + 34r + 24");
  CHECK(to_string(IntPolynomial{0, -1}) == "-r");
  CHECK(to_string(IntPolynomial{}) == "0");
}

TEST_CASE("parse_int_list") {
  CHECK(parse_int_list("1,2, -3") == ints({1, 2, -3}));
  CHECK(parse_int_list("1 2\n3\n") == ints({1, 2, 3}));
  CHECK(parse_int_list("  ").empty());
  CHECK(parse_int_list("+5") == ints({5}));
  CHECK(error_code_of([] { parse_int_list("1,,2"); }) == ErrorCode::parse);
  CHECK(error_code_of([] { parse_int_list("1,x"); }) == ErrorCode::parse);
  CHECK(error_code_of([] { parse_int_list("1,"); }) == ErrorCode::parse);
  CHECK(error_code_of([] { parse_format("yaml"); }) == ErrorCode::invalid_argument);
}
