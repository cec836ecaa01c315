#include "coverforge/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "coverforge/errors.hpp"

namespace coverforge {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!ring_) throw context_error("polynomial without ring context");
    for (const Term& t : terms_)
        if (static_cast<int>(t.mono.size()) != ring_->arity())
            throw context_error("monomial arity does not match ring");
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ring_->compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(c), ring->unit_monomial()});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    Polynomial p(ring);
    p.terms_.push_back({Rational(1), ring->var_monomial(index)});
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Rational c, Monomial m) {
    if (static_cast<int>(m.size()) != ring->arity())
        throw context_error("monomial arity does not match ring");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

int Polynomial::degree_in_prefix(int prefix) const {
    int d = -1;
    for (const Term& t : terms_) {
        int s = 0;
        for (int i = 0; i < prefix; ++i) s += t.mono[i];
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.front().mono);
    for (const Term& t : terms_)
        if (total_degree(t.mono) != d) return false;
    return true;
}

bool Polynomial::free_of_prefix(int prefix) const {
    for (const Term& t : terms_)
        for (int i = 0; i < prefix; ++i)
            if (t.mono[i] != 0) return false;
    return true;
}

bool Polynomial::uses_variable(int index) const {
    for (const Term& t : terms_)
        if (t.mono[index] != 0) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RingPtr ring = common_ring(ring_, o.ring_);
    Polynomial r(ring);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring->compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    RingPtr ring = common_ring(ring_ ? ring_ : o.ring_, o.ring_ ? o.ring_ : ring_);
    Polynomial acc(ring);
    // Accumulate shifted copies; operands at this project's scale are small.
    for (const Term& t : o.terms_) acc = acc + times_term(t.coef, t.mono);
    return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({t.coef * c, mono_mul(t.mono, m)});
    return r; // order is preserved by multiplying with a fixed monomial
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw context_error("negative polynomial power");
    Polynomial acc = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coef().inverse());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coef;
    return Rational(0);
}

Polynomial Polynomial::top_part_in_prefix(int prefix) const {
    int d = degree_in_prefix(prefix);
    Polynomial r(ring_);
    for (const Term& t : terms_) {
        int s = 0;
        for (int i = 0; i < prefix; ++i) s += t.mono[i];
        if (s == d) r.terms_.push_back(t);
    }
    return r;
}

Polynomial Polynomial::homogenized(int var_index, int target_deg) const {
    if (degree() > target_deg)
        throw degree_error("homogenization degree below polynomial degree");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term u = t;
        if (u.mono[var_index] != 0)
            throw context_error("homogenization variable already used");
        u.mono[var_index] = target_deg - total_degree(t.mono);
        out.push_back(std::move(u));
    }
    return Polynomial(ring_, std::move(out));
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != (ring_ ? ring_->arity() : 0))
        throw context_error("evaluation point arity mismatch");
    Rational acc(0);
    for (const Term& t : terms_) {
        Rational v = t.coef;
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] != 0) v *= values[i].pow(t.mono[i]);
        acc += v;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (terms_.size() != o.terms_.size()) return false;
    common_ring(ring_, o.ring_);
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

bool Polynomial::proportional_to(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    Rational c = o.terms_.front().coef / terms_.front().coef;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef * c != o.terms_[i].coef)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational a = t.coef.abs();
        if (first) {
            if (t.coef.sign() < 0) out += "-";
            first = false;
        } else {
            out += t.coef.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->name(static_cast<int>(i));
            if (t.mono[i] != 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

} // namespace coverforge
