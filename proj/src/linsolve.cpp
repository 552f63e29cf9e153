#include "macq/linsolve.hpp"

#include <string>

namespace macq {

namespace {

// Eliminate on the augmented matrix [A | B]. Rows are first scaled to a
// common (polynomial) denominator so the Bareiss steps stay fraction-free
// in symbolic mode; in specialized mode the scaling is a no-op and the
// division below is plain rational arithmetic.
std::vector<Vector> eliminate(Matrix M, size_t n, size_t rhs_cols) {
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n + rhs_cols; ++j) {
            const FieldElement& x = M[i][j];
            if (!x.is_specialized() && !x.sym().den.is_one()) {
                FieldElement d = FieldElement::from_sym(x.sym().den, QtPoly(Int(1)));
                for (size_t k = 0; k < n + rhs_cols; ++k) M[i][k] *= d;
                j = static_cast<size_t>(-1); // rescan the row
            }
        }
    }

    FieldElement prev_pivot(1L);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n)
                throw singular_system("zero pivot column at stage " + std::to_string(k));
            std::swap(M[k], M[swap_row]);
        }
        const FieldElement pivot = M[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n + rhs_cols; ++j)
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) / prev_pivot;
            M[i][k] = FieldElement(0L);
        }
        prev_pivot = pivot;
    }
    if (M[n - 1][n - 1].is_zero())
        throw singular_system("zero pivot at final stage " + std::to_string(n - 1));

    std::vector<Vector> solutions(rhs_cols, Vector(n, FieldElement(0L)));
    for (size_t col = 0; col < rhs_cols; ++col) {
        Vector& x = solutions[col];
        for (size_t i = n; i-- > 0;) {
            FieldElement sum = M[i][n + col];
            for (size_t j = i + 1; j < n; ++j) sum -= M[i][j] * x[j];
            x[i] = sum / M[i][i];
        }
    }
    return solutions;
}

} // namespace

std::vector<Vector> solve_exact_multi(const Matrix& A, const std::vector<Vector>& columns) {
    size_t n = A.size();
    if (n == 0) throw error("empty system");
    for (const auto& row : A)
        if (row.size() != n) throw error("solve_exact: matrix not square");
    size_t rhs = columns.size();
    Matrix M(n, Vector(n + rhs, FieldElement(0L)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
        for (size_t c = 0; c < rhs; ++c) M[i][n + c] = columns[c][i];
    }
    auto solutions = eliminate(std::move(M), n, rhs);
    for (size_t c = 0; c < rhs; ++c) {
        for (size_t i = 0; i < n; ++i) {
            FieldElement acc(0L);
            for (size_t j = 0; j < n; ++j) acc += A[i][j] * solutions[c][j];
            if (acc != columns[c][i])
                throw internal_error("solve_exact: back-substitution check failed at row " +
                                     std::to_string(i));
        }
    }
    return solutions;
}

Vector solve_exact(const Matrix& A, const Vector& b) {
    if (b.size() != A.size()) throw error("solve_exact: rhs size mismatch");
    return solve_exact_multi(A, {b})[0];
}

} // namespace macq
