#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverforge/cover.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/parser.hpp"
#include "coverforge/substitution.hpp"

using namespace coverforge;

namespace {

Polynomial P(const char* text, const RingPtr& ring) {
    return parse_polynomial(text, ring);
}

CoverProblem triple_problem(std::vector<std::string> tracefree = {"c00 + c11",
                                                                  "c10 + c21"}) {
    auto fiber = Ring::make({"z1", "z2"});
    return make_cover_problem(
        fiber, {P("z1^2", fiber), P("z1*z2", fiber), P("z2^2", fiber)},
        std::move(tracefree));
}

} // namespace

TEST_CASE("build_system on the triple cover") {
    BuiltSystem sys = build_system(triple_problem());
    CHECK(sys.layout.m == 3);
    CHECK(sys.layout.r == 2);
    CHECK(sys.layout.n2 == 2);
    // q*l = 0 was asserted inside; the syzygy matrix has linear entries.
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 2; ++k)
            CHECK(sys.l.at(i, k).degree() <= 1);
    // The expanded product has entries in z0-degrees 1..3 only.
    for (int k = 0; k < 2; ++k)
        for (const Term& t : sys.E.at(0, k).terms())
            CHECK(t.mono[0] >= 1);
}

TEST_CASE("hypothesis violations are rejected") {
    auto fiber = Ring::make({"z1", "z2"});
    // Complete intersection: the Koszul syzygy has degree-2 entries.
    CHECK_THROWS_AS(
        build_system(make_cover_problem(fiber, {P("z1^2", fiber), P("z2^2", fiber)})),
        hypothesis_error);
    // Non-minimal generators.
    CHECK_THROWS_AS(build_system(make_cover_problem(
                        fiber, {P("z1^2", fiber), P("z1*z2", fiber),
                                P("z2^2", fiber),
                                P("z1^2 + z1*z2", fiber)})),
                    hypothesis_error);
    // Wrong degree.
    CHECK_THROWS_AS(make_cover_problem(fiber, {P("z1^3", fiber)}), hypothesis_error);
    CHECK_THROWS_AS(make_cover_problem(fiber, {P("z1^2 + z1", fiber)}),
                    hypothesis_error);
}

TEST_CASE("triple-cover relations reproduce the hand-computed system") {
    CoverRelations rel = cover_relations(triple_problem());
    const RingPtr& c = rel.layout.c_ring;

    std::vector<std::string> free_names;
    for (int j : rel.free_c) free_names.push_back(c->name(j));
    CHECK(free_names ==
          std::vector<std::string>({"c01", "c11", "c20", "c21"}));

    CHECK(rel.n_subst.at("n0_0") == P("c21", c));
    CHECK(rel.n_subst.at("n0_1") == P("-2*c11", c));
    CHECK(rel.n_subst.at("n0_2") == P("c01", c));
    CHECK(rel.n_subst.at("n1_0") == P("-c20", c));
    CHECK(rel.n_subst.at("n1_1") == P("-2*c21", c));
    CHECK(rel.n_subst.at("n1_2") == P("c11", c));

    CHECK(rel.linear_relations.size() == 2);
    CHECK(rel.linear_relations[0] == P("c00 + c11", c));
    CHECK(rel.linear_relations[1] == P("c10 + c21", c));

    CHECK(rel.d_exprs[0] == P("2*c11^2 - 2*c01*c21", c));
    CHECK(rel.d_exprs[1] == P("c01*c20 + c11*c21", c));
    CHECK(rel.d_exprs[2] == P("2*c11*c20 + 2*c21^2", c));

    CHECK(rel.quadratic_relations.empty());
    CHECK(rel.cubics_ok);
    for (const auto& cubic : rel.cubics) CHECK(cubic.is_zero());
}

TEST_CASE("pinning every c to zero gives the trivial deformation") {
    std::vector<std::string> all_c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            all_c.push_back("c" + std::to_string(i) + std::to_string(j));
    CoverRelations rel = cover_relations(triple_problem(all_c));
    CHECK(rel.free_c.empty());
    for (const auto& [name, value] : rel.n_subst) {
        (void)name;
        CHECK(value.is_zero());
    }
    for (const auto& d : rel.d_exprs) CHECK(d.is_zero());
}

TEST_CASE("verify_fiber on the triple cover") {
    CoverRelations rel = cover_relations(triple_problem());
    // Chart point c = (1,0,0,1): free values c01=1, c11=0, c20=1, c21=0.
    auto point = full_c_point(rel, {{"c01", Rational(1)},
                                    {"c11", Rational(0)},
                                    {"c20", Rational(1)},
                                    {"c21", Rational(0)}});
    FiberReport rep = verify_fiber(rel, point);
    CHECK(rep.points == 3);
    CHECK(rep.reference_points == 3);
    CHECK(rep.betti == std::vector<int>({1, 3, 2}));
    CHECK(rep.betti_matches);
    CHECK(rep.initial_matches);
    CHECK(rep.ok());

    // c = 0: the fat point itself, same resolution format.
    auto origin = full_c_point(rel, {});
    FiberReport fat = verify_fiber(rel, origin);
    CHECK(fat.points == 3);
    CHECK(fat.betti == std::vector<int>({1, 3, 2}));
    CHECK(fat.initial_matches);
}

TEST_CASE("verify_fiber rejects points off the relation locus") {
    auto fiber = Ring::make({"z1", "z2"});
    CoverRelations rel = cover_relations(triple_problem());
    std::vector<Rational> bad(rel.layout.c_ring->arity(), Rational(0));
    bad[rel.layout.c_ring->index_of("c00")] = Rational(1); // violates c00 + c11
    CHECK_THROWS_AS(verify_fiber(rel, bad), precondition_error);
    (void)fiber;
}

TEST_CASE("master identity holds through a re-expansion") {
    // Re-expand (q - zCz0 - Dz0^2)(l + Nz0) with everything substituted and
    // check each (z0, fiber) coefficient reduces to zero mod the relations.
    CoverRelations rel = cover_relations(triple_problem());
    const UnknownLayout& L = rel.layout;
    const RingPtr& big = L.big;
    Substitution inject(big);
    auto to_big = [&](const Polynomial& p) { return inject(p); };

    Polynomial z0 = Polynomial::variable(big, L.big_z0());
    for (int k = 0; k < L.n2; ++k) {
        Polynomial acc(big);
        for (int i = 0; i < L.m; ++i) {
            Polynomial f = to_big(rel.problem.q[i]);
            for (int j = 0; j < L.r; ++j)
                f -= to_big(rel.c_matrix.at(i, j)) *
                     Polynomial::variable(big, L.big_fiber(j)) * z0;
            f -= to_big(rel.d_exprs[i]) * z0 * z0;
            Polynomial col = to_big(rel.l.at(i, k)) +
                             to_big(rel.n_matrix.at(i, k)) * z0;
            acc += f * col;
        }
        CHECK(acc.is_zero()); // I_q is trivial for the triple cover
    }
}

TEST_CASE("permutation equivariance at matched points") {
    // Permuting the generators permutes the unknown grids; the relation loci
    // coincide under renaming and the d/N values agree pointwise.
    auto fiber = Ring::make({"z1", "z2"});
    std::vector<Polynomial> q = {P("z1^2", fiber), P("z1*z2", fiber),
                                 P("z2^2", fiber)};
    CoverRelations base = cover_relations(
        make_cover_problem(fiber, q, {"c00 + c11", "c10 + c21"}));

    // sigma swaps generators 0 and 2; trace-free forms renamed accordingly.
    std::vector<Polynomial> perm = {q[2], q[1], q[0]};
    CoverRelations swapped = cover_relations(
        make_cover_problem(fiber, perm, {"c20 + c11", "c10 + c01"}));

    // Renaming c'_{sigma(i) j} -> c_{i j} identifies the two relation ideals.
    auto rename_to_base = [&](const Polynomial& p) {
        Substitution s(base.layout.c_ring);
        int sigma[3] = {2, 1, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j)
                s.map(swapped.layout.c_name(i, j),
                      Polynomial::variable(
                          base.layout.c_ring,
                          base.layout.c_ring->index_of(
                              base.layout.c_name(sigma[i], j))));
        return s(p);
    };
    std::vector<Polynomial> moved;
    for (const auto& f : swapped.linear_relations) moved.push_back(rename_to_base(f));
    CHECK(ideal_equal(Ideal::make(base.layout.c_ring, moved),
                      Ideal::make(base.layout.c_ring, base.linear_relations)));

    // Matched random points: d'_{sigma(i)}(renamed) == d_i.
    std::vector<std::array<Rational, 4>> samples = {
        {Rational(1), Rational(0), Rational(0), Rational(1)},
        {Rational(2), Rational(1), Rational(-1), Rational(3)},
        {Rational(1, 2), Rational(1, 3), Rational(0), Rational(-2)}};
    for (const auto& s : samples) {
        // base free values (c01, c11, c20, c21)
        auto base_pt = full_c_point(base, {{"c01", s[0]},
                                           {"c11", s[1]},
                                           {"c20", s[2]},
                                           {"c21", s[3]}});
        // swapped problem: c'_{i j} = c_{sigma(i) j}
        std::map<std::string, Rational> swapped_free;
        for (int idx : swapped.free_c) swapped_free[swapped.layout.c_ring->name(idx)] =
            Rational(0);
        int sigma[3] = {2, 1, 0};
        std::vector<Rational> swapped_pt(swapped.layout.c_ring->arity(), Rational(0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j)
                swapped_pt[swapped.layout.cring_c(i, j)] =
                    base_pt[base.layout.cring_c(sigma[i], j)];
        for (int i = 0; i < 3; ++i) {
            Rational base_d = base.d_exprs[sigma[i]].evaluate(base_pt);
            Rational swapped_d = swapped.d_exprs[i].evaluate(swapped_pt);
            CHECK(base_d == swapped_d);
        }
    }
}
