#pragma once

#include <vector>

#include "makekex/matrix.hpp"
#include "makekex/polynomial.hpp"

namespace makekex {

// Monic characteristic polynomial det(XI - A), degree = size of A. Uses the
// Berkowitz recurrence, which is division-free and therefore valid over any
// Z_p, small primes included.
FieldPolynomial char_poly(const FieldMatrix& a);

// One solution t of A t = b (free variables zero); deterministic. Throws
// NoSolutionError when the system is inconsistent.
FieldVector solve_linear(const FieldMatrix& a, const FieldVector& b);

// Basis of the right null space { u : A u = 0 }. Empty iff A has full column
// rank. Deterministic: free columns in ascending order.
std::vector<FieldVector> kernel_basis(const FieldMatrix& a);

std::size_t rank(const FieldMatrix& a);

// poly(A) by Horner's rule.
FieldMatrix poly_eval_matrix(const FieldPolynomial& poly, const FieldMatrix& a);

} // namespace makekex
