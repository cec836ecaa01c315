#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coverforge/rational.hpp"
#include "coverforge/ring.hpp"

namespace coverforge {

struct Term {
    Rational coef;
    Monomial mono;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept strictly descending under the ring's term order, with no
/// zero coefficients and no duplicate monomials. All operations are pure.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms); // normalizes

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial term(RingPtr ring, Rational c, Monomial m);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    const Term& leading_term() const; // throws on zero
    const Rational& leading_coef() const { return leading_term().coef; }
    const Monomial& leading_mono() const { return leading_term().mono; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Total degree counting only variables [0, prefix); -1 for zero.
    int degree_in_prefix(int prefix) const;
    bool is_homogeneous() const;
    /// True when no term uses any variable in [0, prefix).
    bool free_of_prefix(int prefix) const;
    bool uses_variable(int index) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial scaled(const Rational& c) const;
    /// this * (c * x^m), the workhorse of polynomial reduction.
    Polynomial times_term(const Rational& c, const Monomial& m) const;
    Polynomial pow(int e) const;

    /// Makes the leading coefficient 1 (zero stays zero).
    Polynomial monic() const;

    /// Coefficient of an exact monomial (zero if absent).
    Rational coefficient(const Monomial& m) const;

    /// Sum of the terms whose degree in variables [0, prefix) is maximal.
    Polynomial top_part_in_prefix(int prefix) const;

    /// Each term multiplied by var^(target_deg - term degree); requires
    /// target_deg >= degree(). Homogeneous of target_deg on return.
    Polynomial homogenized(int var_index, int target_deg) const;

    /// Total evaluation at rational values (one per ring variable).
    Rational evaluate(const std::vector<Rational>& values) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// True when o == c * this for some nonzero rational c (zero ~ zero).
    bool proportional_to(const Polynomial& o) const;

    /// Canonical text form, e.g. "z0^2 - 2/3*c32*z0 + 1". Parse round-trips.
    std::string str() const;

private:
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace coverforge
