#pragma once

#include <vector>

#include "conecert/eigen_support.hpp"

namespace conecert {

// Pivot choice inside a column. MaxNumeratorBits is the production rule
// (deterministic, keeps pivots away from tiny fractions); FirstNonzero is the
// independent order used to cross-check uniqueness of exact solves.
enum class PivotRule { MaxNumeratorBits, FirstNonzero };

struct EchelonResult {
    ExactMatrix rref;
    std::vector<int> pivot_columns;
    int rank() const { return static_cast<int>(pivot_columns.size()); }
};

// Exact Gauss-Jordan to reduced row echelon form. Scans columns left to
// right; within a column picks the pivot by `rule` (ties -> smallest row).
EchelonResult reduced_row_echelon(ExactMatrix m, PivotRule rule = PivotRule::MaxNumeratorBits);

int exact_rank(const ExactMatrix& m, PivotRule rule = PivotRule::MaxNumeratorBits);

// Canonical nullspace basis from the RREF: one column per free variable,
// identity pattern on the free coordinates. Columns ordered by free column.
ExactMatrix kernel_basis(const ExactMatrix& m, PivotRule rule = PivotRule::MaxNumeratorBits);

// Solves m x = b exactly. Throws std::domain_error when inconsistent; when
// the system is underdetermined returns the solution with free vars = 0.
ExactVector solve_exact(const ExactMatrix& m, const ExactVector& b,
                        PivotRule rule = PivotRule::MaxNumeratorBits);

// a * b skipping zero entries of a (operator matrices are very sparse, so
// repeated powers stay cheap).
ExactMatrix exact_product(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace conecert
