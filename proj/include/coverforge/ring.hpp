#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace coverforge {

/// Exponent vector; the ambient ring fixes its length.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (b[i] > r[i]) r[i] = b[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

enum class OrderKind { Degrevlex, Lex, Block };

/// Total order on monomials, compatible with multiplication.
/// Block(k) compares the first k exponents by degrevlex and breaks ties by
/// degrevlex on the rest: an elimination order for the first k variables.
struct TermOrder {
    OrderKind kind = OrderKind::Degrevlex;
    int block = 0; // only for Block

    static TermOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
    static TermOrder lex() { return {OrderKind::Lex, 0}; }
    static TermOrder block_order(int k) { return {OrderKind::Block, k}; }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    std::string str() const;
    static TermOrder parse(const std::string& text); // "degrevlex" | "lex" | "block:k"

    bool operator==(const TermOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || block == o.block);
    }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Named variable list plus the ambient term order. Immutable; polynomials
/// share it by pointer.
class Ring {
public:
    Ring(std::vector<std::string> names, TermOrder order);

    static RingPtr make(std::vector<std::string> names,
                        TermOrder order = TermOrder::degrevlex());

    int arity() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    const TermOrder& order() const { return order_; }

    /// -1 when the name is not a variable of this ring.
    int index_of(const std::string& name) const;

    bool same_as(const Ring& o) const;

    Monomial unit_monomial() const { return Monomial(names_.size(), 0); }
    Monomial var_monomial(int i) const;

    int compare(const Monomial& a, const Monomial& b) const {
        return order_.compare(a, b);
    }

private:
    std::vector<std::string> names_;
    TermOrder order_;
    std::unordered_map<std::string, int> index_;
};

/// Shared ring of two operands, or context_error if they differ.
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

} // namespace coverforge
