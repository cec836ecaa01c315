#include "coverforge/rational.hpp"

#include <cctype>
#include <ostream>

#include "coverforge/errors.hpp"

namespace coverforge {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw context_error("rational with zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational Rational::parse(std::string_view text) {
    // "a" or "a/b", optional leading '-' on a only.
    std::string s(text);
    auto bad = [&] { throw parse_error("malformed rational '" + s + "'", 0, 0); };
    if (s.empty()) bad();
    std::string::size_type slash = s.find('/');
    std::string numer = slash == std::string::npos ? s : s.substr(0, slash);
    std::string denom = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check_int = [&](const std::string& t, bool allow_sign) {
        if (t.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    check_int(numer, true);
    check_int(denom, false);
    Rational r;
    mpz_t n, d;
    mpz_init(n);
    mpz_init(d);
    mpz_set_str(n, numer.c_str(), 10);
    mpz_set_str(d, denom.c_str(), 10);
    if (mpz_sgn(d) == 0) {
        mpz_clear(n);
        mpz_clear(d);
        bad();
    }
    mpq_set_num(r.q_, n);
    mpq_set_den(r.q_, d);
    mpq_canonicalize(r.q_);
    mpz_clear(n);
    mpz_clear(d);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw context_error("rational division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw context_error("rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw context_error("inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

Rational Rational::pow(int e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Rational::numerator_string() const {
    char* buf = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(buf);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(buf, s.size() + 1);
    return s;
}

std::string Rational::denominator_string() const {
    char* buf = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string s(buf);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(buf, s.size() + 1);
    return s;
}

bool Rational::is_integer() const {
    return mpz_cmp_si(mpq_denref(q_), 1) == 0;
}

std::string Rational::str() const {
    std::string s = numerator_string();
    if (!is_integer()) s += "/" + denominator_string();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace coverforge
