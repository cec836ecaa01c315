#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace coverforge {

/// Exact rational number. Invariants: always reduced to lowest terms,
/// denominator > 0, canonical zero is 0/1. Arbitrary precision (GMP-backed).
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) { // NOLINT: implicit by design, rationals absorb ints
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "a" or "a/b" with decimal integers; throws parse_error on junk.
    static Rational parse(std::string_view text);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws on division by zero
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    Rational inverse() const;
    Rational abs() const;
    Rational pow(int e) const; // negative e inverts; 0^0 = 1

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }
    bool operator<=(const Rational& o) const { return mpq_cmp(q_, o.q_) <= 0; }
    bool operator>(const Rational& o) const { return mpq_cmp(q_, o.q_) > 0; }
    bool operator>=(const Rational& o) const { return mpq_cmp(q_, o.q_) >= 0; }

    std::string numerator_string() const;
    std::string denominator_string() const;
    bool is_integer() const;

    /// Prints "a" or "a/b", never decimals.
    std::string str() const;

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace coverforge
