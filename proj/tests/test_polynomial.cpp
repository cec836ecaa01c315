#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coverforge/errors.hpp"
#include "coverforge/matrix.hpp"
#include "coverforge/parser.hpp"
#include "coverforge/polynomial.hpp"
#include "coverforge/substitution.hpp"

using namespace coverforge;

namespace {

Polynomial P(const char* text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 5,
                       int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-4, 4);
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
        terms.push_back({Rational(coef(rng)), m});
    }
    return Polynomial(ring, terms);
}

} // namespace

TEST_CASE("term order comparisons") {
    TermOrder drl = TermOrder::degrevlex();
    // degrevlex in 3 variables: x^2 > xy > y^2 > xz > yz > z^2.
    CHECK(drl.compare({2, 0, 0}, {1, 1, 0}) > 0);
    CHECK(drl.compare({1, 1, 0}, {0, 2, 0}) > 0);
    CHECK(drl.compare({0, 2, 0}, {1, 0, 1}) > 0);
    CHECK(drl.compare({1, 0, 1}, {0, 1, 1}) > 0);
    CHECK(drl.compare({0, 1, 1}, {0, 0, 2}) > 0);
    CHECK(drl.compare({1, 0, 0}, {0, 0, 2}) < 0); // degree first

    TermOrder lex = TermOrder::lex();
    CHECK(lex.compare({1, 0, 0}, {0, 9, 9}) > 0);

    // block(1) eliminates the first variable: any t beats everything t-free.
    TermOrder blk = TermOrder::block_order(1);
    CHECK(blk.compare({1, 0, 0}, {0, 5, 5}) > 0);
    CHECK(blk.compare({0, 2, 0}, {0, 1, 1}) > 0);
}

TEST_CASE("arithmetic examples") {
    auto ring = Ring::make({"z1", "z2"});
    CHECK(P("z1 + z2", ring) * P("z1 - z2", ring) == P("z1^2 - z2^2", ring));
    CHECK((P("z1^3 - 2*z2", ring) * Polynomial::zero(ring)).is_zero());

    auto dring = Ring::make({"z0", "z1", "c1", "c0"});
    CHECK(P("z0^2", dring) - P("z0^2 - c1*z0 - c0*z1", dring) ==
          P("c1*z0 + c0*z1", dring));
}

TEST_CASE("ring context errors") {
    auto a = Ring::make({"x"});
    auto b = Ring::make({"y"});
    CHECK_THROWS_AS(P("x", a) + P("y", b), context_error);
}

TEST_CASE("substitution examples") {
    auto ring = Ring::make({"z0", "c32", "c43"});
    Substitution s(ring);
    s.map("z0", P("z0 - (c32 + c43)", ring));
    // The trace-free shift applied to z0^2.
    CHECK(s(P("z0^2", ring)) ==
          P("z0^2 - 2*(c32 + c43)*z0 + (c32 + c43)^2", ring));

    Substitution id(ring);
    Polynomial f = P("z0^2 - 2/3*c32*z0 + 1", ring);
    CHECK(id(f) == f);

    auto xi = Ring::make({"xi0", "xi2345"});
    auto c = Ring::make({"c11", "xi2345"});
    Substitution fit(c);
    fit.map("xi0", P("3*c11", c));
    CHECK(fit(P("xi0*xi2345", xi)) == P("3*c11*xi2345", c));

    Substitution missing(c);
    CHECK_THROWS_AS(missing(P("xi0", xi)), context_error);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto src = Ring::make({"x", "y"});
    auto dst = Ring::make({"u", "v"});
    std::mt19937 rng(42);
    Substitution s(dst);
    s.map("x", P("u + v^2", dst));
    s.map("y", P("2*u*v - 1", dst));
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_poly(src, rng);
        Polynomial g = random_poly(src, rng);
        Polynomial h = random_poly(src, rng);
        CHECK(s(f * g + h) == s(f) * s(g) + s(h));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto ring = Ring::make({"x", "y", "z"});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_poly(ring, rng);
        Polynomial g = random_poly(ring, rng);
        Polynomial h = random_poly(ring, rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("homogenize") {
    auto ring = Ring::make({"z0", "z1", "z2", "c1", "c0", "d"});
    // The deformation lift: q - (sum c z)z0 - d z0^2.
    Polynomial f = P("z1^2 - c1*z1 - c0*z2 - d", ring);
    // Grading by total degree treats the c's as variables, so homogenize the
    // plain-variable version.
    Polynomial plain = P("z1^2 - z1 - z2 - 1", ring);
    CHECK(plain.homogenized(0, 2) == P("z1^2 - z1*z0 - z2*z0 - z0^2", ring));
    (void)f;

    Polynomial already = P("z1^2 + z1*z2", ring);
    CHECK(already.homogenized(0, 2) == already);

    auto tw = Ring::make({"t", "z", "w"});
    CHECK(P("z^2 + w", tw).homogenized(0, 2) == P("z^2 + w*t", tw));
    CHECK_THROWS_AS(P("z^2", tw).homogenized(0, 1), degree_error);
}

TEST_CASE("homogenize then dehomogenize recovers the input") {
    auto ring = Ring::make({"t", "x", "y"});
    std::mt19937 rng(11);
    Substitution setone(ring);
    setone.map("t", Rational(1));
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(ring, rng, 4, 3);
        // strip any t so the homogenization variable is fresh
        Substitution drop(ring);
        drop.map("t", Rational(1));
        f = drop(f);
        if (f.is_zero()) continue;
        Polynomial lifted = f.homogenized(0, f.degree());
        CHECK(lifted.is_homogeneous());
        CHECK(setone(lifted) == f);
    }
}

TEST_CASE("pfaffian examples") {
    auto ring = Ring::make({"xi12", "xi13", "xi14", "xi23", "xi24", "xi34"});
    PolyMatrix zero(ring, 4, 4);
    CHECK(pfaffian4(zero).is_zero());

    PolyMatrix m(ring, 4, 4);
    const char* upper[3][4] = {{"", "xi12", "xi13", "xi14"},
                               {"", "", "xi23", "xi24"},
                               {"", "", "", "xi34"}};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Polynomial e = P(upper[i][j], ring);
            m.set(i, j, e);
            m.set(j, i, -e);
        }
    Polynomial pf = pfaffian4(m);
    CHECK(pf == P("xi12*xi34 - xi13*xi24 + xi14*xi23", ring));
    CHECK(pf * pf == m.det());

    // Non-skew input is rejected.
    PolyMatrix bad(ring, 4, 4);
    bad.set(0, 1, P("xi12", ring));
    CHECK_THROWS_AS(pfaffian4(bad), shape_error);
    CHECK_THROWS_AS(pfaffian4(PolyMatrix(ring, 3, 3)), shape_error);

    // The c-matrix of the spinor identification: Pf^2 = det.
    auto cring = Ring::make({"c21", "c30", "c33", "c31", "c00", "c03", "c01",
                             "c12", "c10", "c13"});
    const char* centries[4][4] = {
        {"", "3*c21", "c30", "-c33"},
        {"", "", "-c00", "c03"},
        {"", "", "", "3*c12"},
        {"", "", "", ""}};
    PolyMatrix mc(cring, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Polynomial e = P(centries[i][j], cring);
            mc.set(i, j, e);
            mc.set(j, i, -e);
        }
    Polynomial pfc = pfaffian4(mc);
    CHECK(pfc.degree() == 2);
    CHECK(pfc * pfc == mc.det());
}

TEST_CASE("pfaffian squares to the determinant on random skew matrices") {
    auto ring = Ring::make({"a", "b"});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMatrix m(ring, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Polynomial e = random_poly(ring, rng, 2, 2);
                m.set(i, j, e);
                m.set(j, i, -e);
            }
        Polynomial pf = pfaffian4(m);
        CHECK(pf * pf == m.det());
    }
}

TEST_CASE("matrix product examples") {
    auto ring = Ring::make({"z1", "z2"});
    // q * l = 0 for the triple cover data (columns are Koszul syzygies).
    PolyMatrix q(ring, 1, 3,
                 {P("z1^2", ring), P("z1*z2", ring), P("z2^2", ring)});
    PolyMatrix l(ring, 3, 2,
                 {P("0", ring), P("z2", ring), P("-z2", ring), P("-z1", ring),
                  P("z1", ring), P("0", ring)});
    CHECK(mat_mul(q, l).is_zero());

    PolyMatrix eye(ring, 2, 2);
    eye.set(0, 0, P("1", ring));
    eye.set(1, 1, P("1", ring));
    CHECK(mat_mul(l, eye) == l);

    PolyMatrix row(ring, 1, 3,
                   {P("z1^2", ring), P("z1*z2", ring), P("z2^2", ring)});
    PolyMatrix col(ring, 3, 1, {P("z2", ring), P("-z1", ring), P("0", ring)});
    CHECK(mat_mul(row, col).is_zero());

    CHECK_THROWS_AS(mat_mul(l, l), shape_error);
}

TEST_CASE("canonical print parses back to the identical term list") {
    auto ring = Ring::make({"z0", "z1", "w0", "c32"});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial f = random_poly(ring, rng, 6, 4);
        CHECK(parse_polynomial(f.str(), ring) == f);
    }
    // Monomial factors print in declared-variable order; the grammar accepts
    // them in any order.
    CHECK(P("z0^2 - 2/3*c32*z0 + 1", ring).str() == "z0^2 - 2/3*z0*c32 + 1");
    CHECK(P("z0^2 - 2/3*z0*c32 + 1", ring) == P("z0^2 - 2/3*c32*z0 + 1", ring));
}
