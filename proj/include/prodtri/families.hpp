#pragma once

// Triangles that are almost their own production matrix, and the sequence
// families attached to them.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prodtri/contfrac.hpp"
#include "prodtri/matrix.hpp"
#include "prodtri/polynomial.hpp"
#include "prodtri/series.hpp"

namespace prodtri {

// M = ((1 - x f(x), x) + V)^{-1}, f the ordinary gf of a.
LowerTriMatrix almost_pm_triangle(const IntSequence& a, std::size_t dim);

// a0-1 at (0,0), a_i down column 0, ones on the superdiagonal.
SquareMatrix predicted_delta(const IntSequence& a, std::size_t dim);

struct DeltaReport {
  bool holds = false;
  SquareMatrix observed_delta;
  SquareMatrix expected_delta;
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

// Compares P_M - M with predicted_delta on the leading (dim-1) block.
DeltaReport verify_almost(const IntSequence& a, std::size_t dim);

// Builds M row by row: column 0 from the production column a_j + m_j - [j=0],
// other columns from the entries above them. T(0,0) = 1.
LowerTriMatrix self_build_triangle(const IntSequence& a, std::size_t dim);

// Defining sequence of H(r): the gf S(r, r+1, ...; 2, 3, ...).
IntSequence hanna_a_sequence(long r, std::size_t terms);
LowerTriMatrix hanna_triangle(long r, std::size_t dim);

// m_0 = 1, m_n = (n-r) m_{n-1} + r sum_{i<n} m_i m_{n-1-i}.
IntSequence hanna_first_column(long r, std::size_t terms);

// m_n = sum_k C(n-1,k) (n-k)! r^k, the first column for a_n = r^n.
BigInt appell_m_closed_form(const BigInt& r, std::size_t n);

// u_1 = 1, u_n = (alpha n + beta) u_{n-1} + gamma sum_{j=1}^{n-1} u_j u_{n-j}; offset 1.
IntSequence martin_kearney(long alpha, long beta, long gamma, std::size_t terms);

// S(2a+b+g, 3a+b+g, ...; a+g, 2a+g, ...) with `depth` coefficients.
StieltjesCF mk_posited_cf(long alpha, long beta, long gamma, std::size_t depth);

// The J-fraction printed next to the posited S-form, taken literally:
// a0 = 2a+b+g, a_n = (2n+2)a+b+2g, b1 = (a+g)(2a+b+g), b_n = (na+b)((n+1)a+b+g) for n >= 2.
JacobiCF mk_printed_jacobi(long alpha, long beta, long gamma, std::size_t depth);

// m_0(r) .. m_{count-1}(r) from the convolution recurrence over Z[r].
std::vector<IntPolynomial> hanna_m_polynomials(std::size_t count);

// m_0(r) .. m_{count-1}(r) from the closed form over Z[r].
std::vector<IntPolynomial> appell_m_polynomials(std::size_t count);

// Entry (n,k) = coefficient of r^k in polys[n].
LowerTriMatrix coefficient_array(const std::vector<IntPolynomial>& polys);

// The H(r) recurrence exactly as printed alongside the displayed triangles.
// Throws invalid_argument if the recursion refers to an entry not yet defined.
LowerTriMatrix hanna_printed_recurrence(long r, std::size_t dim);

}  // namespace prodtri
