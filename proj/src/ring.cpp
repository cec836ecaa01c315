#include "coverforge/ring.hpp"

#include "coverforge/errors.hpp"

namespace coverforge {

namespace {

// degrevlex on the index range [lo, hi): higher total degree wins, ties go to
// the monomial whose last differing exponent is smaller.
int degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n)
        throw context_error("monomials from different rings");
    switch (kind) {
    case OrderKind::Degrevlex:
        return degrevlex_range(a, b, 0, n);
    case OrderKind::Lex:
        return lex_range(a, b, 0, n);
    case OrderKind::Block: {
        int k = block;
        if (k < 0 || k > n) throw context_error("block order split out of range");
        int c = degrevlex_range(a, b, 0, k);
        if (c != 0) return c;
        return degrevlex_range(a, b, k, n);
    }
    }
    return 0;
}

std::string TermOrder::str() const {
    switch (kind) {
    case OrderKind::Degrevlex:
        return "degrevlex";
    case OrderKind::Lex:
        return "lex";
    case OrderKind::Block:
        return "block:" + std::to_string(block);
    }
    return "degrevlex";
}

TermOrder TermOrder::parse(const std::string& text) {
    if (text == "degrevlex") return degrevlex();
    if (text == "lex") return lex();
    if (text.rfind("block:", 0) == 0) {
        try {
            int k = std::stoi(text.substr(6));
            if (k >= 0) return block_order(k);
        } catch (...) {
        }
    }
    throw parse_error("unknown term order '" + text + "'", 0, 0);
}

Ring::Ring(std::vector<std::string> names, TermOrder order)
    : names_(std::move(names)), order_(order) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw context_error("empty variable name");
        auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!fresh)
            throw context_error("duplicate variable name '" + names_[i] + "'");
    }
    if (order_.kind == OrderKind::Block &&
        (order_.block < 0 || order_.block > arity()))
        throw context_error("block order split out of range");
}

RingPtr Ring::make(std::vector<std::string> names, TermOrder order) {
    return std::make_shared<Ring>(std::move(names), order);
}

int Ring::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool Ring::same_as(const Ring& o) const {
    return this == &o || (names_ == o.names_ && order_ == o.order_);
}

Monomial Ring::var_monomial(int i) const {
    if (i < 0 || i >= arity()) throw context_error("variable index out of range");
    Monomial m = unit_monomial();
    m[i] = 1;
    return m;
}

RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b) throw context_error("null ring context");
    if (a == b || a->same_as(*b)) return a;
    throw context_error("ring context mismatch");
}

} // namespace coverforge
