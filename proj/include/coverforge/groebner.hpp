#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverforge/matrix.hpp"
#include "coverforge/polynomial.hpp"
#include "coverforge/qlinalg.hpp"

namespace coverforge {

/// Ideal of a polynomial ring, held as an explicit generator list.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;

    static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
};

/// Element of a free module S^m: one polynomial per basis position.
using FreeModuleElement = std::vector<Polynomial>;

/// Reduced Groebner basis. Unique for (ideal, ring order): no leading term
/// of one element divides any term of another, leading coefficients 1,
/// elements sorted descending by leading term.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
};

/// Module analogue under the position-over-term order (lower component
/// dominates, ties by the ring order).
struct ModuleGroebnerBasis {
    RingPtr ring;
    int rank = 0;
    std::vector<FreeModuleElement> elements;
};

GroebnerBasis buchberger(const Ideal& ideal);
ModuleGroebnerBasis module_buchberger(const RingPtr& ring, int rank,
                                      const std::vector<FreeModuleElement>& gens);

/// Fully reduced normal form: no term of the result is divisible by any
/// leading term of G. Zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
FreeModuleElement module_normal_form(const FreeModuleElement& f,
                                     const ModuleGroebnerBasis& G);

/// Division with cofactor tracking: f = sum cofactors[i]*gens[i] + remainder.
struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> cofactors;
};
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& gens);

/// Test helper: all S-polynomials of `gens` reduce to zero over `gens`.
bool satisfies_buchberger_criterion(const RingPtr& ring,
                                    const std::vector<Polynomial>& gens);

/// Generating set of {(a_1..a_m) : sum a_i gens_i = 0}, via a module GB with
/// position-over-term order. Graded inputs come back minimally generated.
std::vector<FreeModuleElement> syzygy_module(const std::vector<Polynomial>& gens);

/// Same for generator tuples living in S^rank with the given twists.
std::vector<FreeModuleElement> module_syzygies(const RingPtr& ring, int rank,
                                               const std::vector<FreeModuleElement>& gens,
                                               const std::vector<int>& twists);

/// Graded minimal generating subset (no member lies in the ideal of the
/// others). Throws degree_error on non-homogeneous input.
std::vector<Polynomial> min_generators(const std::vector<Polynomial>& gens);
std::vector<FreeModuleElement> module_min_generators(
    const RingPtr& ring, int rank, const std::vector<FreeModuleElement>& gens,
    const std::vector<int>& twists);

/// Generators of I intersected with the subring omitting `drop_vars`
/// (block-order GB, filtered). The result lives in the remaining-variable ring.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop_vars);

bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_contains(const GroebnerBasis& G, const Polynomial& f);

/// Monomials outside the leading-term ideal. Finite iff zero-dimensional, in
/// which case the count is the k-dimension of the quotient.
struct StandardMonomials {
    bool finite = false;
    std::vector<Monomial> monomials; // ascending under the ring order
};
StandardMonomials standard_monomials(const GroebnerBasis& G);

/// Matrix of multiplication by `var` on the standard-monomial basis of a
/// zero-dimensional quotient.
QMatrix multiplication_matrix(const GroebnerBasis& G,
                              const std::vector<Monomial>& basis, int var);

/// Ideal of top-degree parts, the degree being counted in the first `prefix`
/// ring variables (all of them by default). Computed from a GB under an
/// order refining that degree.
Ideal initial_ideal(const Ideal& ideal, int prefix = -1);

/// Minimal graded free resolution of S/I.
///   steps[0] is the 1 x b1 row of minimal generators, steps[s] maps
///   F_{s+1} -> F_s; consecutive products are zero; no step matrix carries a
///   nonzero constant entry.
struct Resolution {
    RingPtr ring;
    std::vector<PolyMatrix> steps;
    std::vector<int> betti;               // [1, b1, b2, ...]
    std::vector<std::vector<int>> twists; // per homological degree; twists[0] = {0}
    bool truncated = false;

    std::string betti_string() const; // "1,9,16,9,1"
};
Resolution free_resolution(const Ideal& ideal, int max_steps = 16);

} // namespace coverforge
