#pragma once

// Stieltjes and Jacobi continued fractions with exact rational coefficients.
//
//   S(c1, c2, ...)          = 1/(1 - c1 x/(1 - c2 x/(1 - ...)))
//   J(a0, a1, ...; b1, ...) = 1/(1 - a0 x - b1 x^2/(1 - a1 x - b2 x^2/(1 - ...)))
//
// A fraction is either a prefix of an infinite one (only the coefficients it
// determines are reported) or, with `finite` set, exact as written with every
// later coefficient zero.

#include <cstddef>
#include <variant>
#include <vector>

#include "prodtri/series.hpp"

namespace prodtri {

struct StieltjesCF {
  std::vector<Rational> c;
  bool finite = false;

  // Number of leading series coefficients this fraction determines.
  std::size_t exact_terms() const;
  bool operator==(const StieltjesCF&) const = default;
};

struct JacobiCF {
  std::vector<Rational> a;
  std::vector<Rational> b;
  bool finite = false;

  std::size_t exact_terms() const;
  bool operator==(const JacobiCF&) const = default;
};

using CFSpec = std::variant<StieltjesCF, JacobiCF>;

StieltjesCF stieltjes(std::initializer_list<long long> c, bool finite = false);
JacobiCF jacobi(std::initializer_list<long long> a, std::initializer_list<long long> b, bool finite = false);

// c = x0, y0, x1, y1, ...; the lengths may differ by at most one.
StieltjesCF interleave(const IntSequence& x, const IntSequence& y);

PowerSeries stieltjes_to_series(const StieltjesCF& cf, std::size_t terms);
PowerSeries jacobi_to_series(const JacobiCF& cf, std::size_t terms);
PowerSeries cf_to_series(const CFSpec& cf, std::size_t terms);

// Even contraction: a0 = c1, a_n = c_{2n} + c_{2n+1}, b_n = c_{2n-1} c_{2n}.
// Returns a0..a_{d-1}, b1..b_{d-1} where d counts the determined a_n.
JacobiCF stieltjes_to_jacobi(const StieltjesCF& cf);

// Fits a0..a_{depth-1}, b1..b_{depth-1} from the first 2*depth coefficients.
// A vanishing b with a vanishing remainder ends the fraction (finite result); a
// vanishing b with a nonzero remainder raises degenerate_moments.
JacobiCF series_to_jacobi(const PowerSeries& s, std::size_t depth);

// Fits c1..c_depth from the first depth+1 coefficients, same degeneracy rules.
StieltjesCF series_to_stieltjes(const PowerSeries& s, std::size_t depth);

}  // namespace prodtri
