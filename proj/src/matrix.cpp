#include "coverforge/matrix.hpp"

#include <algorithm>

#include "coverforge/errors.hpp"

namespace coverforge {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Polynomial(ring_));
}

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != rows * cols)
        throw shape_error("matrix entry count does not match dimensions");
    for (const Polynomial& p : entries_)
        if (!p.is_zero()) common_ring(ring_, p.ring());
}

const Polynomial& PolyMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw shape_error("matrix index out of range");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

void PolyMatrix::set(int r, int c, Polynomial p) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw shape_error("matrix index out of range");
    if (!p.is_zero()) common_ring(ring_, p.ring());
    entries_[static_cast<std::size_t>(r) * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sum shape");
    PolyMatrix r(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix diff shape");
    PolyMatrix r(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const { return mat_mul(*this, o); }

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * f);
    return r;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& fn) const {
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    RingPtr target;
    for (const Polynomial& p : entries_) {
        out.push_back(fn(p));
        if (!target && out.back().ring()) target = out.back().ring();
    }
    return PolyMatrix(target ? target : ring_, rows_, cols_, std::move(out));
}

PolyMatrix PolyMatrix::substituted(const Substitution& s) const {
    return map([&](const Polynomial& p) { return s(p); });
}

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw shape_error("determinant of a non-square matrix");
    if (rows_ == 0) return Polynomial::constant(ring_, Rational(1));
    if (rows_ == 1) return at(0, 0);
    Polynomial acc(ring_);
    for (int j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        PolyMatrix minor(ring_, rows_ - 1, cols_ - 1);
        for (int r = 1; r < rows_; ++r) {
            int cc = 0;
            for (int c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, at(r, c));
            }
        }
        Polynomial cof = at(0, j) * minor.det();
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<int>& idx) const {
    PolyMatrix r(ring_, rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
    return r;
}

std::string PolyMatrix::str() const {
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            cells[static_cast<std::size_t>(i) * cols_ + j] = at(i, j).str();
            width[j] = std::max(width[j], cells[static_cast<std::size_t>(i) * cols_ + j].size());
        }
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[ ";
        for (int j = 0; j < cols_; ++j) {
            const std::string& cell = cells[static_cast<std::size_t>(i) * cols_ + j];
            out += cell;
            out.append(width[j] - cell.size(), ' ');
            if (j + 1 < cols_) out += "  ";
        }
        out += " ]\n";
    }
    return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw shape_error("matrix product shape mismatch");
    RingPtr ring = common_ring(a.ring(), b.ring());
    PolyMatrix r(ring, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Polynomial acc(ring);
            for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

Polynomial pfaffian4(const PolyMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw shape_error("pfaffian4 expects a 4x4 matrix");
    for (int i = 0; i < 4; ++i) {
        if (!m.at(i, i).is_zero()) throw shape_error("pfaffian4: nonzero diagonal");
        for (int j = i + 1; j < 4; ++j)
            if (m.at(i, j) != -m.at(j, i)) throw shape_error("pfaffian4: not skew-symmetric");
    }
    return m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) + m.at(0, 3) * m.at(1, 2);
}

} // namespace coverforge
