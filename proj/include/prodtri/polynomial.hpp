#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "prodtri/core.hpp"

namespace prodtri {

// Dense polynomial over Z in one indeterminate; coeffs[i] multiplies t^i.
// Stored without trailing zeros, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0; check is_zero() where it matters.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt evaluate(const BigInt& t) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p);
  IntPolynomial operator-() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace prodtri
