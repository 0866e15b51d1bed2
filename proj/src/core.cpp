#include "prodtri/core.hpp"

#include <cctype>

namespace prodtri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::order_mismatch: return "order-mismatch";
    case ErrorCode::not_invertible: return "not-invertible";
    case ErrorCode::composition_domain: return "composition-domain";
    case ErrorCode::integrality: return "integrality";
    case ErrorCode::dim_mismatch: return "dim-mismatch";
    case ErrorCode::not_production_matrix: return "not-a-production-matrix";
    case ErrorCode::normalization: return "normalization";
    case ErrorCode::insufficient_depth: return "insufficient-depth";
    case ErrorCode::degenerate_moments: return "degenerate-moment-sequence";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::not_triangular: return "not-triangular";
    case ErrorCode::parse: return "parse";
    case ErrorCode::index_gap: return "index-gap";
    case ErrorCode::invalid_id: return "invalid-id";
    case ErrorCode::unavailable: return "unavailable";
    case ErrorCode::offline_miss: return "offline-miss";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long n, long k) {
  if (n == -1) return k == 0 ? BigInt(1) : BigInt(0);
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  auto s = trim(text);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw Error(ErrorCode::parse, "not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(ErrorCode::parse, "not an integer: '" + std::string(text) + "'");
  }
  BigInt v(std::string(s[0] == '+' ? s.substr(1) : s));
  return v;
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::parse, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

}  // namespace prodtri
