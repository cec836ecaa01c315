#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coverforge/polynomial.hpp"
#include "coverforge/substitution.hpp"

namespace coverforge {

/// Dense matrix of polynomials sharing one ring context. Row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, int rows, int cols);
    PolyMatrix(RingPtr ring, int rows, int cols, std::vector<Polynomial> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    const Polynomial& at(int r, int c) const;
    void set(int r, int c, Polynomial p);

    PolyMatrix transpose() const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const; // shape-checked
    PolyMatrix scaled(const Polynomial& f) const;

    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& fn) const;
    PolyMatrix substituted(const Substitution& s) const;

    /// Determinant by cofactor expansion; meant for the small matrices here.
    Polynomial det() const;

    /// Column selection (basis change on the column space).
    PolyMatrix select_columns(const std::vector<int>& idx) const;

    /// Text form: rows in brackets, aligned columns.
    std::string str() const;

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> entries_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Pfaffian of a 4x4 skew-symmetric matrix: m12*m34 - m13*m24 + m14*m23.
/// Checks shape and skew-symmetry; Pf(M)^2 = det(M).
Polynomial pfaffian4(const PolyMatrix& m);

} // namespace coverforge
