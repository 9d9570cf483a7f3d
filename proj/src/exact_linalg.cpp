#include "conecert/exact_linalg.hpp"

#include <stdexcept>

namespace conecert {

namespace {

int pick_pivot(const ExactMatrix& m, int col, int start_row, PivotRule rule) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int r = start_row; r < m.rows(); ++r) {
        if (m(r, col).is_zero()) continue;
        if (rule == PivotRule::FirstNonzero) return r;
        const std::size_t bits = numerator_bits(m(r, col));
        if (best < 0 || bits > best_bits) {
            best = r;
            best_bits = bits;
        }
    }
    return best;
}

}  // namespace

EchelonResult reduced_row_echelon(ExactMatrix m, PivotRule rule) {
    EchelonResult res;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        const int piv = pick_pivot(m, col, row, rule);
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        const ExactComplex inv = ExactComplex(1) / m(row, col);
        for (int c = col; c < cols; ++c) m(row, c) = m(row, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const ExactComplex factor = m(r, col);
            for (int c = col; c < cols; ++c) m(r, c) = m(r, c) - factor * m(row, c);
        }
        res.pivot_columns.push_back(col);
        ++row;
    }
    res.rref = std::move(m);
    return res;
}

int exact_rank(const ExactMatrix& m, PivotRule rule) {
    return reduced_row_echelon(m, rule).rank();
}

ExactMatrix kernel_basis(const ExactMatrix& m, PivotRule rule) {
    const int cols = static_cast<int>(m.cols());
    const EchelonResult ech = reduced_row_echelon(m, rule);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    ExactMatrix basis =
        ExactMatrix::Constant(cols, static_cast<int>(free_cols.size()), ExactComplex(0));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        const int fc = free_cols[static_cast<std::size_t>(j)];
        basis(fc, j) = ExactComplex(1);
        for (int i = 0; i < ech.rank(); ++i)
            basis(ech.pivot_columns[static_cast<std::size_t>(i)], j) = -ech.rref(i, fc);
    }
    return basis;
}

ExactMatrix exact_product(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("exact_product: shape mismatch");
    ExactMatrix out = ExactMatrix::Constant(a.rows(), b.cols(), ExactComplex(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    return out;
}

ExactVector solve_exact(const ExactMatrix& m, const ExactVector& b, PivotRule rule) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve_exact: shape mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    // Pivot scan must not enter the RHS column: run RREF on the augmented
    // matrix but detect inconsistency from pivots landing in the last column.
    const EchelonResult ech = reduced_row_echelon(std::move(aug), rule);
    ExactVector x = ExactVector::Constant(m.cols(), ExactComplex(0));
    for (int i = 0; i < ech.rank(); ++i) {
        const int pc = ech.pivot_columns[static_cast<std::size_t>(i)];
        if (pc == m.cols()) throw std::domain_error("solve_exact: inconsistent system");
        x(pc) = ech.rref(i, static_cast<int>(m.cols()));
    }
    return x;
}

}  // namespace conecert
