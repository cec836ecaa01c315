#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coverforge/errors.hpp"
#include "coverforge/groebner.hpp"
#include "coverforge/parser.hpp"
#include "coverforge/substitution.hpp"

using namespace coverforge;

namespace {

Polynomial P(const char* text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

std::vector<Polynomial> gens(const RingPtr& ring,
                             std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(P(t, ring));
    return out;
}

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 4,
                       int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(ring->arity(), 0);
        int budget = max_deg;
        for (int i = 0; i < ring->arity() && budget > 0; ++i) {
            int e = expo(rng) % (budget + 1);
            m[i] = e;
            budget -= e;
        }
        int c = coef(rng);
        terms.push_back({Rational(c == 0 ? 1 : c), m});
    }
    return Polynomial(ring, terms);
}

} // namespace

TEST_CASE("buchberger basics") {
    auto ring = Ring::make({"z1", "z2"});
    GroebnerBasis g1 = buchberger(Ideal::make(ring, gens(ring, {"z1"})));
    CHECK(g1.elements.size() == 1);
    CHECK(g1.elements[0] == P("z1", ring));

    // Already a Groebner basis: pairwise S-polynomials reduce to zero.
    auto q = gens(ring, {"z1^2", "z1*z2", "z2^2"});
    CHECK(satisfies_buchberger_criterion(ring, q));
    GroebnerBasis gq = buchberger(Ideal::make(ring, q));
    CHECK(gq.elements.size() == 3);

    // Uniqueness of the reduced basis under generator permutation.
    std::vector<Polynomial> perm = {q[2], q[0], q[1]};
    GroebnerBasis gp = buchberger(Ideal::make(ring, perm));
    CHECK(gq.elements == gp.elements);
}

TEST_CASE("reduced basis is unique under random permutation and scaling") {
    auto ring = Ring::make({"x", "y", "z"});
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> g;
        for (int i = 0; i < 3; ++i) g.push_back(random_poly(ring, rng));
        GroebnerBasis a = buchberger(Ideal::make(ring, g));
        std::shuffle(g.begin(), g.end(), rng);
        for (auto& f : g) f = f.scaled(Rational(2, 3));
        GroebnerBasis b = buchberger(Ideal::make(ring, g));
        CHECK(a.elements == b.elements);
        CHECK(satisfies_buchberger_criterion(ring, a.elements));
    }
}

TEST_CASE("normal forms") {
    auto ring = Ring::make({"z1", "z2"});
    Polynomial g = P("z1^2 + z2", ring);
    GroebnerBasis G = buchberger(Ideal::make(ring, {g}));
    CHECK(normal_form(g, G).is_zero());

    GroebnerBasis Gq =
        buchberger(Ideal::make(ring, gens(ring, {"z1^2", "z1*z2", "z2^2"})));
    CHECK(normal_form(P("z1*z2 + 1", ring), Gq) == P("1", ring));
}

TEST_CASE("division produces a verifiable cofactor certificate") {
    auto ring = Ring::make({"x", "y"});
    std::mt19937 rng(9);
    auto basis = gens(ring, {"x^2 - y", "x*y - 1"});
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(ring, rng, 5, 4);
        DivisionResult div = divide(f, basis);
        Polynomial rebuilt = div.remainder;
        for (std::size_t i = 0; i < basis.size(); ++i)
            rebuilt += div.cofactors[i] * basis[i];
        CHECK(rebuilt == f);
    }
    // Membership: NF(f, G) = 0 gives an exact representation f = sum a_i g_i.
    GroebnerBasis G = buchberger(Ideal::make(ring, basis));
    Polynomial member = P("x^3 - 1", ring); // x*(x^2-y) + (xy-1)
    DivisionResult div = divide(member, G.elements);
    CHECK(div.remainder.is_zero());
    Polynomial rebuilt(ring);
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        rebuilt += div.cofactors[i] * G.elements[i];
    CHECK(rebuilt == member);
}

TEST_CASE("syzygies") {
    auto ring = Ring::make({"x", "y"});
    auto syz = syzygy_module(gens(ring, {"x", "y"}));
    REQUIRE(syz.size() == 1);
    CHECK(syz[0][0] == P("y", ring));
    CHECK(syz[0][1] == P("-x", ring));

    auto zring = Ring::make({"z1", "z2"});
    auto q = gens(zring, {"z1^2", "z1*z2", "z2^2"});
    auto sq = syzygy_module(q);
    REQUIRE(sq.size() == 2);
    // The module generated by (0,-z2,z1) and (z2,-z1,0): our canonical basis
    // is the monic pair (z2,-z1,0), (0,z2,-z1).
    CHECK(sq[0] == FreeModuleElement({P("z2", zring), P("-z1", zring), P("0", zring)}));
    CHECK(sq[1] == FreeModuleElement({P("0", zring), P("z2", zring), P("-z1", zring)}));
}

TEST_CASE("syzygies annihilate the generators") {
    auto ring = Ring::make({"x", "y", "z"});
    std::mt19937 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> g;
        for (int i = 0; i < 3; ++i) g.push_back(random_poly(ring, rng, 3, 2));
        auto syz = syzygy_module(g);
        for (const auto& s : syz) {
            Polynomial acc(ring);
            for (std::size_t i = 0; i < g.size(); ++i) acc += s[i] * g[i];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("module normal forms decide membership") {
    auto ring = Ring::make({"z1", "z2"});
    // Syzygies of (z1^2, z1z2, z2^2) as a submodule of S^3.
    auto q = gens(ring, {"z1^2", "z1*z2", "z2^2"});
    auto syz = syzygy_module(q);
    ModuleGroebnerBasis G = module_buchberger(ring, 3, syz);
    // z2*s1 + z1*s2 is a member; a unit vector is not.
    FreeModuleElement combo = {
        P("z2", ring) * syz[0][0] + P("z1", ring) * syz[1][0],
        P("z2", ring) * syz[0][1] + P("z1", ring) * syz[1][1],
        P("z2", ring) * syz[0][2] + P("z1", ring) * syz[1][2]};
    CHECK(std::all_of(module_normal_form(combo, G).begin(),
                      module_normal_form(combo, G).end(),
                      [](const Polynomial& p) { return p.is_zero(); }));
    FreeModuleElement unit = {P("1", ring), P("0", ring), P("0", ring)};
    CHECK_FALSE(std::all_of(module_normal_form(unit, G).begin(),
                            module_normal_form(unit, G).end(),
                            [](const Polynomial& p) { return p.is_zero(); }));
}

TEST_CASE("minimal generators") {
    auto ring = Ring::make({"z1", "z2"});
    auto mg = min_generators(gens(ring, {"z1", "z1^2", "z2"}));
    REQUIRE(mg.size() == 2);
    CHECK(mg[0] == P("z1", ring));
    CHECK(mg[1] == P("z2", ring));

    auto single = min_generators(gens(ring, {"z1^2"}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == P("z1^2", ring));

    CHECK_THROWS_AS(min_generators(gens(ring, {"z1 + 1"})), degree_error);
}

TEST_CASE("free resolutions") {
    auto ring = Ring::make({"z0", "z1", "z2"});
    Resolution tri = free_resolution(
        Ideal::make(ring, gens(ring, {"z1^2", "z1*z2", "z2^2"})));
    CHECK(tri.betti == std::vector<int>({1, 3, 2}));
    CHECK(tri.twists[1] == std::vector<int>({-2, -2, -2}));
    CHECK(tri.twists[2] == std::vector<int>({-3, -3}));
    CHECK_FALSE(tri.truncated);

    Resolution prin =
        free_resolution(Ideal::make(ring, gens(ring, {"z1^3 + z2^3"})));
    CHECK(prin.betti == std::vector<int>({1, 1}));

    // Exactness witnesses and minimality.
    for (std::size_t s = 0; s + 1 < tri.steps.size(); ++s)
        CHECK(mat_mul(tri.steps[s], tri.steps[s + 1]).is_zero());
    for (const auto& M : tri.steps)
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j)
                CHECK((M.at(i, j).is_zero() || M.at(i, j).degree() > 0));

    Resolution cut = free_resolution(
        Ideal::make(ring, gens(ring, {"z1^2", "z1*z2", "z2^2"})), 1);
    CHECK(cut.truncated);

    CHECK_THROWS_AS(
        free_resolution(Ideal::make(ring, gens(ring, {"z1 - 1"}))),
        precondition_error);
}

TEST_CASE("random resolutions are exact and minimal") {
    auto ring = Ring::make({"x", "y", "z"});
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> expo(1, 2);
    for (int trial = 0; trial < 10; ++trial) {
        // Random monomial ideals stay homogeneous and small.
        std::vector<Polynomial> g;
        for (int i = 0; i < 3; ++i) {
            Monomial m(3, 0);
            m[0] = expo(rng);
            m[1] = expo(rng) - 1;
            m[2] = (trial + i) % 2;
            if (total_degree(m) == 0) m[0] = 1;
            g.push_back(Polynomial::term(ring, Rational(1), m));
        }
        Resolution res = free_resolution(Ideal::make(ring, g));
        for (std::size_t s = 0; s + 1 < res.steps.size(); ++s)
            CHECK(mat_mul(res.steps[s], res.steps[s + 1]).is_zero());
        for (const auto& M : res.steps)
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j)
                    CHECK((M.at(i, j).is_zero() || M.at(i, j).degree() > 0));
    }
}

TEST_CASE("elimination") {
    auto ring = Ring::make({"z", "w"});
    Ideal a = eliminate(Ideal::make(ring, gens(ring, {"z - w"})), {0});
    CHECK(a.generators.empty());
    Ideal b = eliminate(Ideal::make(ring, gens(ring, {"z*w"})), {0});
    CHECK(b.generators.empty());

    // t^2 - w, t - z: eliminating t leaves z^2 - w.
    auto tring = Ring::make({"t", "z", "w"});
    Ideal c = eliminate(
        Ideal::make(tring, gens(tring, {"t^2 - w", "t - z"})), {0});
    REQUIRE(c.generators.size() == 1);
    CHECK(c.generators[0] == P("z^2 - w", c.ring));
}

TEST_CASE("elimination soundness") {
    auto ring = Ring::make({"t", "x", "y"});
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> g;
        for (int i = 0; i < 2; ++i) g.push_back(random_poly(ring, rng, 3, 2));
        Ideal I = Ideal::make(ring, g);
        if (I.generators.empty()) continue;
        Ideal E = eliminate(I, {0});
        GroebnerBasis G = buchberger(I);
        Substitution lift(ring);
        for (const auto& f : E.generators) {
            for (const Term& t : f.terms()) (void)t;
            Polynomial lifted = lift(f);
            CHECK_FALSE(lifted.uses_variable(0));
            CHECK(normal_form(lifted, G).is_zero());
        }
    }
}

TEST_CASE("ideal equality") {
    auto ring = Ring::make({"z1", "z2"});
    Ideal a = Ideal::make(ring, gens(ring, {"z1^2 - z2", "z1*z2"}));
    Ideal b = Ideal::make(ring, {P("z1*z2", ring).scaled(Rational(-5, 3)),
                                 P("z1^2 - z2", ring)});
    CHECK(ideal_equal(a, b));
    CHECK_FALSE(ideal_equal(Ideal::make(ring, gens(ring, {"z1"})),
                            Ideal::make(ring, gens(ring, {"z1^2"}))));
}

TEST_CASE("standard monomials") {
    auto ring = Ring::make({"z1", "z2"});
    // The e=(1,0,0,1) triple-cover fiber: z1^2 - z2, z1 z2 - 1, z2^2 - z1.
    GroebnerBasis G = buchberger(Ideal::make(
        ring, gens(ring, {"z1^2 - z2", "z1*z2 - 1", "z2^2 - z1"})));
    StandardMonomials sm = standard_monomials(G);
    REQUIRE(sm.finite);
    REQUIRE(sm.monomials.size() == 3);
    CHECK(sm.monomials[0] == Monomial({0, 0}));
    // {1, z1, z2} in ascending order
    CHECK(sm.monomials[1] == Monomial({0, 1}));
    CHECK(sm.monomials[2] == Monomial({1, 0}));

    GroebnerBasis inf = buchberger(Ideal::make(ring, gens(ring, {"z1"})));
    CHECK_FALSE(standard_monomials(inf).finite);

    // Multiplication matrices on the fiber basis have trace zero (trace-free
    // family) and satisfy the fiber equation m_z^3 = 1.
    QMatrix mz = multiplication_matrix(G, sm.monomials, 0);
    Rational tr(0);
    for (int i = 0; i < 3; ++i) tr += mz.at(i, i);
    CHECK(tr.is_zero());
}

TEST_CASE("initial ideal") {
    auto ring = Ring::make({"z1", "z2"});
    // Deformed triple cover at the chart point c=(1,0,0,1).
    Ideal deformed = Ideal::make(
        ring, gens(ring, {"z1^2 - z2", "z1*z2 - 1", "z2^2 - z1"}));
    Ideal top = initial_ideal(deformed);
    CHECK(ideal_equal(top,
                      Ideal::make(ring, gens(ring, {"z1^2", "z1*z2", "z2^2"}))));

    Ideal homog = Ideal::make(ring, gens(ring, {"z1^2 + z1*z2", "z2^3"}));
    CHECK(ideal_equal(initial_ideal(homog), homog));
}

TEST_CASE("initial ideal is invariant under linear changes of basis") {
    // Basis independence: an affine substitution z -> Az + b changes in(I) by
    // the linear part A only.
    auto ring = Ring::make({"z1", "z2"});
    Ideal deformed = Ideal::make(
        ring, gens(ring, {"z1^2 - z2", "z1*z2 - 1", "z2^2 - z1"}));
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> pick(-3, 3);
    int done = 0;
    while (done < 6) {
        Rational a(pick(rng)), b(pick(rng)), c(pick(rng)), d(pick(rng));
        if ((a * d - b * c).is_zero()) continue;
        Rational e(pick(rng)), f(pick(rng));
        Polynomial z1 = P("z1", ring), z2 = P("z2", ring);
        Substitution affine(ring);
        affine.map("z1", z1.scaled(a) + z2.scaled(b) + Polynomial::constant(ring, e));
        affine.map("z2", z1.scaled(c) + z2.scaled(d) + Polynomial::constant(ring, f));
        Substitution linear(ring);
        linear.map("z1", z1.scaled(a) + z2.scaled(b));
        linear.map("z2", z1.scaled(c) + z2.scaled(d));

        std::vector<Polynomial> moved;
        for (const auto& g : deformed.generators) moved.push_back(affine(g));
        Ideal lhs = initial_ideal(Ideal::make(ring, moved));
        std::vector<Polynomial> tops;
        for (const auto& g : initial_ideal(deformed).generators)
            tops.push_back(linear(g));
        CHECK(ideal_equal(lhs, Ideal::make(ring, tops)));
        ++done;
    }
}
