#pragma once

// Seeded generators for the randomized checks.

#include <cstddef>
#include <cstdint>
#include <random>

#include "prodtri/contfrac.hpp"
#include "prodtri/matrix.hpp"
#include "prodtri/series.hpp"

namespace prodtri {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntSequence random_sequence(Rng& rng, std::size_t len, long lo, long hi) {
  IntSequence s;
  for (std::size_t i = 0; i < len; ++i) s.terms.emplace_back(uniform_int(rng, lo, hi));
  return s;
}

// Unit diagonal, entries below it uniform in [lo, hi].
inline LowerTriMatrix random_unit_lower(Rng& rng, std::size_t dim, long lo, long hi) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < i; ++k) m(i, k) = uniform_int(rng, lo, hi);
    m(i, i) = 1;
  }
  return LowerTriMatrix(std::move(m));
}

inline StieltjesCF random_positive_stieltjes(Rng& rng, std::size_t depth, long max_weight) {
  StieltjesCF cf;
  for (std::size_t i = 0; i < depth; ++i) cf.c.emplace_back(uniform_int(rng, 1, max_weight));
  return cf;
}

}  // namespace prodtri
