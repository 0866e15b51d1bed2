#include "prodtri/reference_data.hpp"

namespace prodtri::reference {

LowerTriMatrix hanna(long r) {
  switch (r) {
    case 0:
      return LowerTriMatrix::from_rows({{1},
                                        {1, 1},
                                        {2, 2, 1},
                                        {6, 6, 3, 1},
                                        {24, 24, 12, 4, 1},
                                        {120, 120, 60, 20, 5, 1},
                                        {720, 720, 360, 120, 30, 6, 1}});
    case 1:
      return LowerTriMatrix::from_rows({{1},
                                        {1, 1},
                                        {3, 2, 1},
                                        {13, 7, 3, 1},
                                        {71, 33, 13, 4, 1},
                                        {461, 191, 71, 21, 5, 1},
                                        {3447, 1297, 461, 133, 31, 6, 1}});
    case 2:
      return LowerTriMatrix::from_rows({{1},
                                        {1, 1},
                                        {4, 2, 1},
                                        {22, 8, 3, 1},
                                        {148, 44, 14, 4, 1},
                                        {1156, 296, 84, 22, 5, 1},
                                        {10192, 2312, 600, 148, 32, 6, 1}});
    case 3:
      return LowerTriMatrix::from_rows({{1},
                                        {1, 1},
                                        {5, 2, 1},
                                        {33, 9, 3, 1},
                                        {261, 57, 15, 4, 1},
                                        {2361, 441, 99, 23, 5, 1},
                                        {23805, 3933, 783, 165, 33, 6, 1}});
    case 4:
      return LowerTriMatrix::from_rows({{1},
                                        {1, 1},
                                        {6, 2, 1},
                                        {46, 10, 3, 1},
                                        {416, 72, 16, 4, 1},
                                        {4256, 632, 116, 24, 5, 1},
                                        {48096, 6352, 1016, 184, 34, 6, 1}});
    default:
      throw Error(ErrorCode::invalid_argument, "no published block for r = " + std::to_string(r));
  }
}

SquareMatrix hanna1_production() {
  return SquareMatrix::from_rows({{1, 1, 0, 0, 0, 0, 0},
                                  {2, 1, 1, 0, 0, 0, 0},
                                  {6, 2, 1, 1, 0, 0, 0},
                                  {26, 7, 3, 1, 1, 0, 0},
                                  {142, 33, 13, 4, 1, 1, 0},
                                  {922, 191, 71, 21, 5, 1, 1},
                                  {6894, 1297, 461, 133, 31, 6, 1}});
}

SquareMatrix hanna0_production() {
  return SquareMatrix::from_rows({{1, 1, 0, 0, 0, 0, 0},
                                  {1, 1, 1, 0, 0, 0, 0},
                                  {2, 2, 1, 1, 0, 0, 0},
                                  {6, 6, 3, 1, 1, 0, 0},
                                  {24, 24, 12, 4, 1, 1, 0},
                                  {120, 120, 60, 20, 5, 1, 1},
                                  {720, 720, 360, 120, 30, 6, 1}});
}

LowerTriMatrix geometric_triangle(long rate) {
  if (rate == 1)
    return LowerTriMatrix::from_rows({{1},
                                      {1, 1},
                                      {3, 2, 1},
                                      {11, 7, 3, 1},
                                      {49, 31, 13, 4, 1},
                                      {261, 165, 69, 21, 5, 1},
                                      {1631, 1031, 431, 131, 31, 6, 1}});
  if (rate == 2)
    return LowerTriMatrix::from_rows({{1},
                                      {1, 1},
                                      {4, 2, 1},
                                      {18, 8, 3, 1},
                                      {92, 40, 14, 4, 1},
                                      {536, 232, 80, 22, 5, 1},
                                      {3552, 1536, 528, 144, 32, 6, 1}});
  throw Error(ErrorCode::invalid_argument, "no published block for rate " + std::to_string(rate));
}

SquareMatrix geometric_production(long rate) {
  if (rate == 1)
    return SquareMatrix::from_rows({{1, 1, 0, 0, 0, 0, 0},
                                    {2, 1, 1, 0, 0, 0, 0},
                                    {4, 2, 1, 1, 0, 0, 0},
                                    {12, 7, 3, 1, 1, 0, 0},
                                    {50, 31, 13, 4, 1, 1, 0},
                                    {262, 165, 69, 21, 5, 1, 1},
                                    {1632, 1031, 431, 131, 31, 6, 1}});
  if (rate == 2)
    return SquareMatrix::from_rows({{1, 1, 0, 0, 0, 0, 0},
                                    {3, 1, 1, 0, 0, 0, 0},
                                    {8, 2, 1, 1, 0, 0, 0},
                                    {26, 8, 3, 1, 1, 0, 0},
                                    {108, 40, 14, 4, 1, 1, 0},
                                    {568, 232, 80, 22, 5, 1, 1},
                                    {3616, 1536, 528, 144, 32, 6, 1}});
  throw Error(ErrorCode::invalid_argument, "no published block for rate " + std::to_string(rate));
}

SquareMatrix hanna1_pre_inverse() {
  return SquareMatrix::from_rows({{1},
                                  {-1, 1},
                                  {-1, -2, 1},
                                  {-3, -1, -3, 1},
                                  {-13, -3, -1, -4, 1},
                                  {-71, -13, -3, -1, -5, 1},
                                  {-461, -71, -13, -3, -1, -6, 1}});
}

LowerTriMatrix appell_coefficients() {
  return LowerTriMatrix::from_rows({{1},
                                    {1},
                                    {2, 1},
                                    {6, 4, 1},
                                    {24, 18, 6, 1},
                                    {120, 96, 36, 8, 1},
                                    {720, 600, 240, 60, 10, 1}});
}

LowerTriMatrix hanna_coefficients() {
  return LowerTriMatrix::from_rows({{1},
                                    {1},
                                    {2, 1},
                                    {6, 6, 1},
                                    {24, 34, 12, 1},
                                    {120, 210, 110, 20, 1},
                                    {720, 1452, 974, 270, 30, 1},
                                    {5040, 11256, 8946, 3248, 560, 42, 1}});
}

SquareMatrix hanna1_delta() {
  return SquareMatrix::from_rows({{0, 1, 0, 0, 0, 0, 0},
                                  {1, 0, 1, 0, 0, 0, 0},
                                  {3, 0, 0, 1, 0, 0, 0},
                                  {13, 0, 0, 0, 1, 0, 0},
                                  {71, 0, 0, 0, 0, 1, 0},
                                  {461, 0, 0, 0, 0, 0, 1},
                                  {3447, 0, 0, 0, 0, 0, 0}});
}

SquareMatrix geometric_delta(long rate) {
  if (rate == 1)
    return SquareMatrix::from_rows({{0, 1, 0, 0, 0, 0, 0},
                                    {1, 0, 1, 0, 0, 0, 0},
                                    {1, 0, 0, 1, 0, 0, 0},
                                    {1, 0, 0, 0, 1, 0, 0},
                                    {1, 0, 0, 0, 0, 1, 0},
                                    {1, 0, 0, 0, 0, 0, 1},
                                    {1, 0, 0, 0, 0, 0, 0}});
  if (rate == 2)
    return SquareMatrix::from_rows({{0, 1, 0, 0, 0, 0, 0},
                                    {2, 0, 1, 0, 0, 0, 0},
                                    {4, 0, 0, 1, 0, 0, 0},
                                    {8, 0, 0, 0, 1, 0, 0},
                                    {16, 0, 0, 0, 0, 1, 0},
                                    {32, 0, 0, 0, 0, 0, 1},
                                    {64, 0, 0, 0, 0, 0, 0}});
  throw Error(ErrorCode::invalid_argument, "no published block for rate " + std::to_string(rate));
}

}  // namespace prodtri::reference
