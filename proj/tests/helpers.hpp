#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "prodtri/core.hpp"
#include "prodtri/io.hpp"
#include "prodtri/matrix.hpp"
#include "prodtri/series.hpp"

namespace prodtri::test {

inline std::vector<BigInt> ints(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline PowerSeries series(std::initializer_list<long long> v) {
  std::vector<Rational> c;
  for (auto x : v) c.emplace_back(x);
  return PowerSeries(std::move(c));
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected prodtri::Error");
  return ErrorCode::invalid_argument;
}

}  // namespace prodtri::test

namespace doctest {

template <>
struct StringMaker<prodtri::SquareMatrix> {
  static String convert(const prodtri::SquareMatrix& m) { return ("\n" + prodtri::render_plain(m)).c_str(); }
};
template <>
struct StringMaker<prodtri::LowerTriMatrix> {
  static String convert(const prodtri::LowerTriMatrix& m) { return ("\n" + prodtri::render_plain(m)).c_str(); }
};
template <>
struct StringMaker<prodtri::IntSequence> {
  static String convert(const prodtri::IntSequence& s) { return prodtri::join_decimal(s.terms).c_str(); }
};
template <>
struct StringMaker<prodtri::PowerSeries> {
  static String convert(const prodtri::PowerSeries& s) { return prodtri::join_decimal(s.coeffs()).c_str(); }
};
template <>
struct StringMaker<std::vector<prodtri::BigInt>> {
  static String convert(const std::vector<prodtri::BigInt>& v) { return prodtri::join_decimal(v).c_str(); }
};

}  // namespace doctest
