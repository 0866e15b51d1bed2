#pragma once

// Truncated formal power series over Q and integer sequence transforms.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "prodtri/core.hpp"

namespace prodtri {

// Coefficients c[0..order) of a series known modulo x^order.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  PowerSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static PowerSeries zero(std::size_t order);
  static PowerSeries one(std::size_t order);
  static PowerSeries x(std::size_t order);
  static PowerSeries from_integers(std::span<const BigInt> terms);
  // Returns sum_n (ratio^n) x^n.
  static PowerSeries geometric(const Rational& ratio, std::size_t order);
  // Returns e^{rate x}.
  static PowerSeries exp(const Rational& rate, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  PowerSeries truncated(std::size_t order) const;
  // x^k times this series, same order.
  PowerSeries shifted_up(std::size_t k) const;
  PowerSeries scaled(const Rational& s) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_inverse(const PowerSeries& a);
PowerSeries ps_compose(const PowerSeries& g, const PowerSeries& f);

struct IntSequence {
  std::vector<BigInt> terms;
  std::size_t offset = 0;

  std::size_t size() const noexcept { return terms.size(); }
  const BigInt& operator[](std::size_t i) const { return terms.at(i); }
  bool operator==(const IntSequence&) const = default;
};

IntSequence make_sequence(std::initializer_list<long long> terms, std::size_t offset = 0);

// Integer view of a series; throws integrality (with index) if a coefficient is not integral.
IntSequence series_to_sequence(const PowerSeries& s);

// terms[n] = n! * g[n].
IntSequence egf_to_sequence(const PowerSeries& g);

// result[n] = sum_k C(n,k) r^(n-k) a[k].
IntSequence binomial_transform_r(const IntSequence& a, const BigInt& r);

// Sequence with ordinary gf A/(1 - y x A).
IntSequence invert_transform(const IntSequence& a, const BigInt& y);

// (n+1)! for n = 0..count-1.
IntSequence shifted_factorials(std::size_t count);

}  // namespace prodtri
