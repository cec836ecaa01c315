// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are exact (rational identities); the time budgets are
// part of the criteria and enforced.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "coverforge/catalog.hpp"
#include "coverforge/cover.hpp"
#include "coverforge/groebner.hpp"
#include "coverforge/parser.hpp"
#include "coverforge/substitution.hpp"

using namespace coverforge;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(int criterion, bool pass, double secs, const std::string& what) {
    std::printf("criterion %d: %s  (%.2fs)  %s\n", criterion,
                pass ? "PASS" : "FAIL", secs, what.c_str());
    if (!pass) ++failures;
}

bool has_pass(const Certificate& cert, const std::string& id) {
    for (const auto& c : cert.checks)
        if (c.id == id) return c.pass;
    return false;
}

bool all_pass(const Certificate& cert, std::initializer_list<const char*> ids) {
    bool ok = true;
    for (const char* id : ids) ok = ok && has_pass(cert, id);
    return ok;
}

Polynomial rand_poly(const RingPtr& ring, std::mt19937& rng, int max_terms,
                     int max_deg) {
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

Rational rand_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

} // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    using clock = std::chrono::steady_clock;

    // 1. Triple cover: C, (l+N), D match the expected forms entry-for-entry.
    {
        auto t0 = clock::now();
        Certificate cert = triple_cover_instance();
        bool pass = all_pass(cert, {"renaming-derived", "C-expected", "l-expected",
                                    "lN-expected", "D-expected", "Iq-trivial"});
        double dt = seconds_since(t0);
        report(1, pass && dt < 1.0, dt,
               "triple cover C, (l+N), D reproduced entry-for-entry against the "
               "expected forms; D = (2(c0c2-c1^2), -(c0c3-c1c2), 2(c1c3-c2^2)) "
               "as the equation constants");
    }

    // 2. Degree-6 relations: shifted/renamed C, D, and the ten quadrics of I_q.
    {
        auto t0 = clock::now();
        Certificate cert = degree6_instance();
        bool pass = all_pass(cert, {"free-parameters", "C-pre-shift",
                                    "trace-free-shift", "C-post-shift",
                                    "renaming-derived", "C-renamed",
                                    "block-structure", "D-expected", "Iq-count",
                                    "Iq-ideal", "Iq-scalars"});
        double dt = seconds_since(t0);
        report(2, pass && dt < 60.0, dt,
               "degree-6 C^t equals the expected forms before and after the "
               "trace-free shift; D matches modulo I_q; I_q equals the ten "
               "expected quadrics as an ideal and as a set up to scalars");
    }

    // 3. OGr(5,10) identification.
    {
        auto t0 = clock::now();
        Certificate cert = spinor_identification();
        bool pass = all_pass(cert, {"substitution-invertible", "ideal-equal",
                                    "rearrangement-signs", "rearrangement-ideal",
                                    "generator-fit"});
        double dt = seconds_since(t0);
        report(3, pass && dt < 60.0, dt,
               "xi -> c is an invertible linear map, ideal_equal(substituted "
               "OGr, I_q) = true, and <xi0 v - Pf(M), Mv> equals the OGr ideal");
    }

    // 4. Quadraticity at d = 3 and d = 6: all step-4 cubics reduce to zero.
    {
        auto t0 = clock::now();
        const CoverRelations& tri = triple_relations();
        const CoverRelations& six = degree6_relations();
        bool pass = tri.cubics_ok && six.cubics_ok;
        for (const auto& r : tri.cubic_residues) pass = pass && r.is_zero();
        for (const auto& r : six.cubic_residues) pass = pass && r.is_zero();
        double dt = seconds_since(t0);
        report(4, pass && dt < 60.0, dt,
               "all step-4 cubic residues reduce to 0 modulo the linear and "
               "quadratic relations, for d = 3 and d = 6");
    }

    // 5. Resolution-format preservation on random relation points.
    {
        auto t0 = clock::now();
        std::mt19937 rng(6021023);
        const CoverRelations& six = degree6_relations();
        const Resolution& six_ref = degree6_cone_resolution();
        bool pass = true;
        double worst = 0.0;
        int samples = 0;
        while (samples < 10) {
            std::array<Rational, 4> e, c;
            for (auto& x : e) x = rand_rational(rng);
            for (auto& x : c) x = rand_rational(rng);
            if (delta_tc_value(e).is_zero() || delta_tc_value(c).is_zero()) continue;
            auto s0 = clock::now();
            auto point = full_c_point(six, degree6_section_point(e, c));
            FiberReport rep = verify_fiber(six, point, &six_ref);
            double ds = seconds_since(s0);
            worst = std::max(worst, ds);
            pass = pass && rep.points == 6 &&
                   rep.betti == std::vector<int>({1, 9, 16, 9, 1}) &&
                   rep.betti_matches && rep.initial_matches && ds < 5.0;
            ++samples;
        }
        const CoverRelations& tri = triple_relations();
        const Resolution& tri_ref = triple_cone_resolution();
        int tri_samples = 0;
        while (tri_samples < 10) {
            std::array<Rational, 4> c;
            for (auto& x : c) x = rand_rational(rng);
            if (delta_tc_value(c).is_zero()) continue;
            auto point = full_c_point(tri, triple_section_point(c));
            FiberReport rep = verify_fiber(tri, point, &tri_ref);
            pass = pass && rep.points == 3 &&
                   rep.betti == std::vector<int>({1, 3, 2}) && rep.betti_matches &&
                   rep.initial_matches;
            ++tri_samples;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "10 degree-6 + 10 triple random section fibers: Betti "
                      "(1,9,16,9,1)/(1,3,2) and in(deformed) = (q); worst "
                      "sample %.2fs",
                      worst);
        report(5, pass, seconds_since(t0), buf);
    }

    // 6. Prop. 3.5: discriminant, projected cubic, distinctness, traces,
    //    cyclotomic points.
    {
        auto t0 = clock::now();
        Certificate cert = three_points_instance();
        bool pass = all_pass(cert, {"delta-form", "delta-eval",
                                    "projected-cubic", "disc-relation",
                                    "samples-50", "traces-vanish", "cyclo-points",
                                    "cyclo-distinct", "barycenter"});
        double dt = seconds_since(t0);
        report(6, pass && dt < 30.0, dt,
               "Delta_tc closed form, projected cubic up to one scalar, "
               "distinct <=> Delta != 0 on 50 samples, vanishing traces, and "
               "the (1,1),(eps,eps^2),(eps^2,eps) fiber");
    }

    // 7. S3-Galois structure: invariance and the Z2/Z3 quotient ideals.
    {
        auto t0 = clock::now();
        Certificate cert = s3_galois_instance();
        bool pass = all_pass(cert, {"group-relations", "invariance", "kappa",
                                    "z2-members", "z2-row-identity", "z2-initial",
                                    "z3-normalization", "z3-member",
                                    "z3-delta-identity"});
        double dt = seconds_since(t0);
        report(7, pass && dt < 30.0, dt,
               "S3 invariance certificates and group relations; Z3 member "
               "(z1w2-z2w1)^2 - Delta_tc (fitted normalization of the /2 "
               "convention); Z2 members with kappa = 2 and triple-cover "
               "in-ideal in u coordinates");
    }

    // 8. Engine property suite on randomized inputs, fixed seed.
    {
        auto t0 = clock::now();
        std::mt19937 rng(271828);
        bool pass = true;
        int cases = 0;

        auto ring3 = Ring::make({"x", "y", "z"});

        // Buchberger criterion + reduced-basis uniqueness under permutation.
        for (int trial = 0; trial < 40; ++trial, ++cases) {
            std::vector<Polynomial> g;
            for (int i = 0; i < 3; ++i) g.push_back(rand_poly(ring3, rng, 3, 3));
            GroebnerBasis a = buchberger(Ideal::make(ring3, g));
            pass = pass && satisfies_buchberger_criterion(ring3, a.elements);
            std::shuffle(g.begin(), g.end(), rng);
            GroebnerBasis b = buchberger(Ideal::make(ring3, g));
            pass = pass && a.elements == b.elements;
        }

        // Syzygy annihilation.
        for (int trial = 0; trial < 40; ++trial, ++cases) {
            std::vector<Polynomial> g;
            for (int i = 0; i < 3; ++i) g.push_back(rand_poly(ring3, rng, 3, 2));
            for (const auto& s : syzygy_module(g)) {
                Polynomial acc(ring3);
                for (std::size_t i = 0; i < g.size(); ++i) acc += s[i] * g[i];
                pass = pass && acc.is_zero();
            }
        }

        // NF-membership cofactor re-verification.
        auto basis = std::vector<Polynomial>{
            parse_polynomial("x^2 - y", ring3), parse_polynomial("x*y - z", ring3),
            parse_polynomial("y^2 - x*z", ring3)};
        GroebnerBasis G = buchberger(Ideal::make(ring3, basis));
        for (int trial = 0; trial < 60; ++trial, ++cases) {
            Polynomial f = rand_poly(ring3, rng, 5, 4);
            DivisionResult div = divide(f, G.elements);
            Polynomial rebuilt = div.remainder;
            for (std::size_t i = 0; i < G.elements.size(); ++i)
                rebuilt += div.cofactors[i] * G.elements[i];
            pass = pass && rebuilt == f;
            Polynomial member = f - div.remainder; // an exact ideal member
            pass = pass && normal_form(member, G).is_zero();
        }

        // Elimination soundness.
        auto ring_t = Ring::make({"t", "x", "y"});
        for (int trial = 0; trial < 30; ++trial, ++cases) {
            std::vector<Polynomial> g = {rand_poly(ring_t, rng, 3, 2),
                                         rand_poly(ring_t, rng, 3, 2)};
            Ideal I = Ideal::make(ring_t, g);
            if (I.generators.empty()) continue;
            Ideal E = eliminate(I, {0});
            GroebnerBasis GI = buchberger(I);
            Substitution lift(ring_t);
            for (const auto& f : E.generators) {
                Polynomial lifted = lift(f);
                pass = pass && !lifted.uses_variable(0) &&
                       normal_form(lifted, GI).is_zero();
            }
        }

        // Resolution exactness and minimality on random monomial ideals.
        std::uniform_int_distribution<int> expo(1, 3);
        for (int trial = 0; trial < 30; ++trial, ++cases) {
            std::vector<Polynomial> g;
            for (int i = 0; i < 3; ++i) {
                Monomial m(3, 0);
                m[i % 3] = expo(rng);
                m[(i + 1) % 3] = expo(rng) - 1;
                g.push_back(Polynomial::term(ring3, Rational(1), m));
            }
            Resolution res = free_resolution(Ideal::make(ring3, g));
            for (std::size_t s = 0; s + 1 < res.steps.size(); ++s)
                pass = pass && mat_mul(res.steps[s], res.steps[s + 1]).is_zero();
            for (const auto& M : res.steps)
                for (int i = 0; i < M.rows(); ++i)
                    for (int j = 0; j < M.cols(); ++j)
                        pass = pass &&
                               (M.at(i, j).is_zero() || M.at(i, j).degree() > 0);
        }

        double dt = seconds_since(t0);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "engine property suite: %d randomized cases (seed fixed), "
                      "0 tolerance",
                      cases);
        report(8, pass && cases >= 200 && dt < 120.0, dt, buf);
    }

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
