#pragma once

// Published leading blocks of the triangles studied here, used as fixtures.

#include "prodtri/matrix.hpp"

namespace prodtri::reference {

// H(r) for r = 0..4, 7x7 (H(0) = n!/k!, H(1) = A104980).
LowerTriMatrix hanna(long r);

// P_M of H(1) and H(0), 7x7.
SquareMatrix hanna1_production();
SquareMatrix hanna0_production();

// M and P_M for a_n = rate^n, rate in {1, 2}, 7x7.
LowerTriMatrix geometric_triangle(long rate);
SquareMatrix geometric_production(long rate);

// The displayed P_M - M for H(1) and for a_n = rate^n, 7x7.
SquareMatrix hanna1_delta();
SquareMatrix geometric_delta(long rate);

// ((1 - x f, x) + V) for f the gf of A003319, 7x7.
SquareMatrix hanna1_pre_inverse();

// Coefficient arrays of the first-column polynomials: closed form (7 rows) and
// convolution recurrence (8 rows).
LowerTriMatrix appell_coefficients();
LowerTriMatrix hanna_coefficients();

}  // namespace prodtri::reference
