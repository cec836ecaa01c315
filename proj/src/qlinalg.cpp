#include "coverforge/qlinalg.hpp"

#include "coverforge/errors.hpp"

namespace coverforge {

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int c = col; c < cols_; ++c) std::swap(at(p, c), at(row, c));
        Rational inv = at(row, col).inverse();
        for (int c = col; c < cols_; ++c) at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            Rational f = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

Rational QMatrix::det() const {
    if (rows_ != cols_) throw shape_error("determinant of a non-square matrix");
    QMatrix m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != col) {
            for (int c = 0; c < cols_; ++c) std::swap(m.at(p, c), m.at(col, c));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) * inv;
            for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

} // namespace coverforge
