#pragma once

// Text renderings and JSON schemas. Integers always travel as decimal strings.
//
//   matrix    {"dim": N, "rows": [["1", "0"], ["1", "1"]]}
//   sequence  {"offset": k, "terms": ["1", "1", "3"]}
//   series    [{"numerator": "1", "denominator": "2"}, ...]
//   cf        {"kind": "stieltjes", "c": [...], "finite": false}
//             {"kind": "jacobi", "a": [...], "b": [...], "finite": false}

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prodtri/contfrac.hpp"
#include "prodtri/matrix.hpp"
#include "prodtri/polynomial.hpp"
#include "prodtri/series.hpp"

namespace prodtri {

enum class Format { plain, json, csv, latex };

Format parse_format(std::string_view name);

nlohmann::json to_json(const SquareMatrix& m);
nlohmann::json to_json(const IntSequence& s);
nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const CFSpec& cf);

SquareMatrix matrix_from_json(const nlohmann::json& j);
IntSequence sequence_from_json(const nlohmann::json& j);
PowerSeries series_from_json(const nlohmann::json& j);
CFSpec cf_from_json(const nlohmann::json& j);

// Right-aligned columns, one row per line.
std::string render_plain(const SquareMatrix& m);
std::string render_csv(const SquareMatrix& m);
// \left( \begin{array}{ccc} ... \end{array} \right), one " a & b \\" line per row.
std::string render_latex(const SquareMatrix& m);
std::string render(const SquareMatrix& m, Format format);

std::string render(const IntSequence& s, Format format);
std::string render(const CFSpec& cf, Format format);

std::string join_decimal(const std::vector<BigInt>& v, std::string_view sep = ",");
std::string join_decimal(const std::vector<Rational>& v, std::string_view sep = ",");
std::string to_string(const IntPolynomial& p, char var = 'r');

// "1,2,-3" (spaces allowed) to integers; throws parse on malformed input.
std::vector<BigInt> parse_int_list(std::string_view text);

}  // namespace prodtri
