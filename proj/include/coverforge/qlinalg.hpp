#pragma once

#include <vector>

#include "coverforge/rational.hpp"

namespace coverforge {

/// Dense rational matrix with exact Gaussian elimination. Pivoting is
/// deterministic: leftmost column first, first usable row wins.
class QMatrix {
public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// Reduced row echelon form in place. Returns the pivot column of each
    /// pivot row, in row order.
    std::vector<int> rref();

    int rank() const; // on a copy

    /// Determinant (square only), by fraction-free elimination on a copy.
    Rational det() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace coverforge
