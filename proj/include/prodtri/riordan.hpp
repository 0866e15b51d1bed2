#pragma once

#include <cstddef>

#include "prodtri/matrix.hpp"
#include "prodtri/series.hpp"

namespace prodtri {

enum class RiordanKind { ordinary, exponential };

// Pair (g, f) of a Riordan array. Ordinary pairs are normalized on
// construction: g(0) = 1, f(0) = 0, f'(0) = 1. Exponential pairs only need f(0) = 0.
class RiordanPair {
 public:
  RiordanPair(PowerSeries g, PowerSeries f, RiordanKind kind = RiordanKind::ordinary);

  const PowerSeries& g() const noexcept { return g_; }
  const PowerSeries& f() const noexcept { return f_; }
  RiordanKind kind() const noexcept { return kind_; }

 private:
  PowerSeries g_;
  PowerSeries f_;
  RiordanKind kind_;
};

// Entry (n,k) = [x^n] g f^k.
LowerTriMatrix ordinary_riordan(const RiordanPair& p, std::size_t dim);

// Entry (n,k) = b[n-k]; the Appell array (g(x), x) with g the gf of b.
LowerTriMatrix sequence_array(const IntSequence& b, std::size_t dim);

// Entry (n,k) = n!/k! [x^n] g f^k.
LowerTriMatrix exponential_riordan(const PowerSeries& g, const PowerSeries& f, std::size_t dim);
LowerTriMatrix exponential_riordan(const RiordanPair& p, std::size_t dim);

// Entry (n,k) = [x^n y^k] of 1/(1-(r0+s0 y)x/(1-(r1+s1 y)x/(1-...))).
LowerTriMatrix deleham_delta(const IntSequence& r, const IntSequence& s, std::size_t dim);

}  // namespace prodtri
