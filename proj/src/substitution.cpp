#include "coverforge/substitution.hpp"

#include "coverforge/errors.hpp"

namespace coverforge {

Substitution& Substitution::map(const std::string& name, Polynomial image) {
    common_ring(codomain_, image.ring());
    images_.insert_or_assign(name, std::move(image));
    return *this;
}

Substitution& Substitution::map(const std::string& name, const Rational& value) {
    return map(name, Polynomial::constant(codomain_, value));
}

Polynomial Substitution::operator()(const Polynomial& f) const {
    if (f.is_zero()) return Polynomial::zero(codomain_);
    const Ring& src = *f.ring();

    // Resolve every used source variable once; cache powers as they appear.
    std::vector<const Polynomial*> image(src.arity(), nullptr);
    std::vector<Polynomial> named; // storage for name-shared fallbacks
    named.reserve(src.arity());
    for (int i = 0; i < src.arity(); ++i) {
        if (!f.uses_variable(i)) continue;
        auto it = images_.find(src.name(i));
        if (it != images_.end()) {
            image[i] = &it->second;
        } else {
            int j = codomain_->index_of(src.name(i));
            if (j < 0)
                throw context_error("substitution leaves variable '" + src.name(i) +
                                    "' unmapped");
            named.push_back(Polynomial::variable(codomain_, j));
            image[i] = &named.back();
        }
    }

    std::vector<std::vector<Polynomial>> powers(src.arity());
    auto power = [&](int var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(codomain_, Rational(1)));
            cache.push_back(*image[var]);
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * *image[var]);
        return cache[e];
    };

    Polynomial acc(codomain_);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(codomain_, t.coef);
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] != 0) prod = prod * power(static_cast<int>(i), t.mono[i]);
        acc += prod;
    }
    return acc;
}

} // namespace coverforge
