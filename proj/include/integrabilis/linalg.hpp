#ifndef INTEGRABILIS_LINALG_HPP
#define INTEGRABILIS_LINALG_HPP

#include <vector>

#include "integrabilis/rat.hpp"

namespace integrabilis {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Clears denominators row by row (row scaling preserves the column kernel).
IntMatrix clear_denominators(const RatMatrix& m);

// Fraction-free (Bareiss) row echelon form; returns the rank and, if
// pivot_cols is non-null, the pivot column indices in elimination order.
int bareiss_rank(IntMatrix m, std::vector<int>* pivot_cols = nullptr);

// Basis of the column nullspace {v : M v = 0} as primitive integer vectors
// (entries with gcd 1, leading nonzero entry positive). Elimination is
// fraction-free; the basis is deterministic: one vector per free column, in
// ascending column order.
std::vector<std::vector<Int>> integer_nullspace(const IntMatrix& m, int ncols);

} // namespace integrabilis

#endif
