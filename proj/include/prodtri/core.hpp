#pragma once

// Exact scalar types and the error type shared by every module.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace prodtri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  order_mismatch,
  not_invertible,
  composition_domain,
  integrality,
  dim_mismatch,
  not_production_matrix,
  normalization,
  insufficient_depth,
  degenerate_moments,
  length_mismatch,
  not_triangular,
  parse,
  index_gap,
  invalid_id,
  unavailable,
  offline_miss,
  invalid_argument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  // Offending coefficient index or input line, when the error has one.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

BigInt factorial(unsigned n);

// C(n, k) with C(-1, 0) = 1 and zero whenever k < 0 or k > n >= 0.
BigInt binomial(long n, long k);

BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_decimal(const BigInt& v);
std::string to_decimal(const Rational& q);

}  // namespace prodtri
