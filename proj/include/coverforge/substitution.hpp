#pragma once

#include <map>
#include <string>

#include "coverforge/polynomial.hpp"

namespace coverforge {

/// Ring homomorphism given by images of variables. Variables of the source
/// that are not explicitly mapped fall back to the codomain variable of the
/// same name; a variable with neither is a context error at apply time.
class Substitution {
public:
    explicit Substitution(RingPtr codomain) : codomain_(std::move(codomain)) {}

    const RingPtr& codomain() const { return codomain_; }

    /// Maps source variable `name` to `image` (a codomain polynomial).
    Substitution& map(const std::string& name, Polynomial image);
    Substitution& map(const std::string& name, const Rational& value);

    bool maps(const std::string& name) const { return images_.count(name) != 0; }

    Polynomial operator()(const Polynomial& f) const;

private:
    RingPtr codomain_;
    std::map<std::string, Polynomial> images_;
};

} // namespace coverforge
