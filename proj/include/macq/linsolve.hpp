#ifndef MACQ_LINSOLVE_HPP
#define MACQ_LINSOLVE_HPP

#include <vector>

#include "macq/field.hpp"

namespace macq {

using Matrix = std::vector<std::vector<FieldElement>>;
using Vector = std::vector<FieldElement>;

/// Exact solve of a square system A x = b. Symbolic entries are cleared to
/// polynomials row by row, then eliminated Bareiss-style; specialized
/// entries go through plain rational elimination. The solution is verified
/// by substitution before it is returned.
Vector solve_exact(const Matrix& A, const Vector& b);

/// Same elimination with several right-hand sides (columns of B).
std::vector<Vector> solve_exact_multi(const Matrix& A, const std::vector<Vector>& columns);

} // namespace macq

#endif
