#include "prodtri/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prodtri {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw Error(ErrorCode::invalid_argument, "unknown format '" + std::string(name) + "'");
}

namespace {

json decimal_array(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

json decimal_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::parse, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::string as_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::parse, "expected a decimal string, got " + v.dump());
}

std::vector<Rational> rationals_from(const json& a) {
  if (!a.is_array()) throw Error(ErrorCode::parse, "expected a JSON array");
  std::vector<Rational> out;
  for (const auto& v : a) out.push_back(parse_rational(as_text(v)));
  return out;
}

}  // namespace

json to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) rows.push_back(decimal_array(r));
  return {{"dim", m.dim()}, {"rows", rows}};
}

json to_json(const IntSequence& s) { return {{"offset", s.offset}, {"terms", decimal_array(s.terms)}}; }

json to_json(const PowerSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs())
    a.push_back({{"numerator", numerator_of(c).str()}, {"denominator", denominator_of(c).str()}});
  return a;
}

json to_json(const CFSpec& cf) {
  if (const auto* s = std::get_if<StieltjesCF>(&cf))
    return {{"kind", "stieltjes"}, {"c", decimal_array(s->c)}, {"finite", s->finite}};
  const auto& j = std::get<JacobiCF>(cf);
  return {{"kind", "jacobi"}, {"a", decimal_array(j.a)}, {"b", decimal_array(j.b)}, {"finite", j.finite}};
}

SquareMatrix matrix_from_json(const json& j) {
  const auto dim = require(j, "dim").get<std::size_t>();
  const auto& rows = require(j, "rows");
  if (!rows.is_array() || rows.size() != dim) throw Error(ErrorCode::parse, "matrix JSON needs dim rows");
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw Error(ErrorCode::parse, "matrix row " + std::to_string(i) + " must have dim entries");
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = parse_bigint(as_text(rows[i][k]));
  }
  return m;
}

IntSequence sequence_from_json(const json& j) {
  IntSequence s;
  s.offset = j.contains("offset") ? j.at("offset").get<std::size_t>() : 0;
  const auto& terms = require(j, "terms");
  if (!terms.is_array()) throw Error(ErrorCode::parse, "terms must be an array");
  for (const auto& t : terms) s.terms.push_back(parse_bigint(as_text(t)));
  return s;
}

PowerSeries series_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse, "series JSON must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) {
    const BigInt num = parse_bigint(as_text(require(e, "numerator")));
    const BigInt den = parse_bigint(as_text(require(e, "denominator")));
    if (den == 0) throw Error(ErrorCode::parse, "zero denominator");
    c.emplace_back(num, den);
  }
  return PowerSeries(std::move(c));
}

CFSpec cf_from_json(const json& j) {
  const auto kind = require(j, "kind").get<std::string>();
  const bool finite = j.contains("finite") && j.at("finite").get<bool>();
  if (kind == "stieltjes") return StieltjesCF{rationals_from(require(j, "c")), finite};
  if (kind == "jacobi") return JacobiCF{rationals_from(require(j, "a")), rationals_from(require(j, "b")), finite};
  throw Error(ErrorCode::parse, "unknown continued-fraction kind '" + kind + "'");
}

std::string render_plain(const SquareMatrix& m) {
  const auto n = m.dim();
  std::vector<std::size_t> width(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) width[k] = std::max(width[k], m(i, k).str().size());
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto s = m(i, k).str();
      if (k > 0) os << ' ';
      os << std::string(width[k] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const SquareMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.rows()) os << join_decimal(row, ",") << '\n';
  return os.str();
}

std::string render_latex(const SquareMatrix& m) {
  std::ostringstream os;
  os << "\\left(\n\\begin{array}{" << std::string(m.dim(), 'c') << "}\n";
  for (const auto& row : m.rows()) os << ' ' << join_decimal(row, " & ") << " \\\\\n";
  os << "\\end{array}\n\\right)\n";
  return os.str();
}

std::string render(const SquareMatrix& m, Format format) {
  switch (format) {
    case Format::plain: return render_plain(m);
    case Format::json: return to_json(m).dump() + "\n";
    case Format::csv: return render_csv(m);
    case Format::latex: return render_latex(m);
  }
  return {};
}

std::string render(const IntSequence& s, Format format) {
  switch (format) {
    case Format::plain:
    case Format::csv: return join_decimal(s.terms, ",") + "\n";
    case Format::json: return to_json(s).dump() + "\n";
    case Format::latex: return join_decimal(s.terms, ", ") + ", \\ldots\n";
  }
  return {};
}

std::string render(const CFSpec& cf, Format format) {
  if (format == Format::json) return to_json(cf).dump() + "\n";
  const auto* s = std::get_if<StieltjesCF>(&cf);
  const auto* j = std::get_if<JacobiCF>(&cf);
  const bool finite = s ? s->finite : j->finite;
  switch (format) {
    case Format::plain: {
      std::string out = s ? "S: c=" + join_decimal(s->c) : "J: a=" + join_decimal(j->a) + " b=" + join_decimal(j->b);
      return out + (finite ? " (finite)\n" : "\n");
    }
    case Format::csv:
      if (s) return "c," + join_decimal(s->c) + "\n";
      return "a," + join_decimal(j->a) + "\nb," + join_decimal(j->b) + "\n";
    case Format::latex: {
      const std::string tail = finite ? "" : ",\\ldots";
      if (s) return "\\mathcal{S}(" + join_decimal(s->c) + tail + ")\n";
      return "\\mathcal{J}(" + join_decimal(j->a) + tail + ";" + join_decimal(j->b) + tail + ")\n";
    }
    case Format::json: break;
  }
  return {};
}

std::string join_decimal(const std::vector<BigInt>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(v[i]);
  }
  return out;
}

std::string join_decimal(const std::vector<Rational>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(v[i]);
  }
  return out;
}

std::string to_string(const IntPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<BigInt> parse_int_list(std::string_view text) {
  // Terms are separated by a comma, whitespace, or both; "1,,2" is malformed.
  std::vector<BigInt> out;
  std::string token;
  bool pending_comma = false;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(parse_bigint(token));
      token.clear();
      pending_comma = false;
    }
  };
  for (char c : text) {
    if (c == ',') {
      if (token.empty() && (pending_comma || out.empty()))
        throw Error(ErrorCode::parse, "empty entry in integer list '" + std::string(text) + "'");
      flush();
      pending_comma = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (pending_comma) throw Error(ErrorCode::parse, "trailing comma in integer list '" + std::string(text) + "'");
  return out;
}

}  // namespace prodtri
