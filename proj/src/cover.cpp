#include "coverforge/cover.hpp"

#include <algorithm>

#include "coverforge/errors.hpp"
#include "coverforge/parser.hpp"
#include "coverforge/substitution.hpp"

namespace coverforge {

namespace {

std::string two_digit_name(const std::string& stem, int i, int j) {
    // Compact cIJ when both indices are single digits, unambiguous otherwise.
    if (i < 10 && j < 10) return stem + std::to_string(i) + std::to_string(j);
    return stem + std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

std::string UnknownLayout::n_name(int syz, int gen) const {
    return "n" + std::to_string(syz) + "_" + std::to_string(gen);
}
std::string UnknownLayout::d_name(int gen) const { return "d" + std::to_string(gen); }
std::string UnknownLayout::c_name(int gen, int var) const {
    return two_digit_name("c", gen, var);
}

CoverProblem make_cover_problem(RingPtr fiber_ring, std::vector<Polynomial> q,
                                std::vector<std::string> tracefree) {
    CoverProblem p;
    p.fiber_ring = std::move(fiber_ring);
    for (auto& g : q) {
        if (g.is_zero()) throw hypothesis_error("zero generator in q");
        common_ring(p.fiber_ring, g.ring());
        if (!g.is_homogeneous() || g.degree() != 2)
            throw hypothesis_error("generator '" + g.str() +
                                   "' is not homogeneous of degree 2");
        p.q.push_back(std::move(g));
    }
    if (p.q.empty()) throw hypothesis_error("empty generator list");
    p.tracefree = std::move(tracefree);
    return p;
}

BuiltSystem build_system(const CoverProblem& problem) {
    const int m = static_cast<int>(problem.q.size());
    const int r = problem.fiber_ring->arity();

    // Solver hypotheses: q minimal, first syzygy matrix linear.
    {
        auto minimal = min_generators(problem.q);
        if (static_cast<int>(minimal.size()) != m)
            throw hypothesis_error("q is not a minimal generating set");
    }
    auto syzygies = syzygy_module(problem.q);
    const int n2 = static_cast<int>(syzygies.size());
    if (n2 == 0)
        throw hypothesis_error("q has no syzygies; the algorithm needs a linear first "
                               "syzygy matrix");
    for (const auto& s : syzygies)
        for (const auto& entry : s)
            if (entry.degree() > 1)
                throw hypothesis_error("first syzygy matrix of q is not linear");

    UnknownLayout layout;
    layout.m = m;
    layout.r = r;
    layout.n2 = n2;
    {
        std::vector<std::string> names;
        names.push_back("z0");
        for (const auto& v : problem.fiber_ring->names()) names.push_back(v);
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < m; ++j) names.push_back(layout.n_name(i, j));
        for (int i = 0; i < m; ++i) names.push_back(layout.d_name(i));
        std::vector<std::string> c_names;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < r; ++j) c_names.push_back(layout.c_name(i, j));
        for (const auto& n : c_names) names.push_back(n);
        layout.big = Ring::make(names, TermOrder::degrevlex());
        layout.c_ring = Ring::make(c_names, TermOrder::degrevlex());
    }

    Substitution lift(layout.big);
    const RingPtr& big = layout.big;
    auto bigvar = [&](int idx) { return Polynomial::variable(big, idx); };

    PolyMatrix l(big, m, n2);
    for (int k = 0; k < n2; ++k)
        for (int i = 0; i < m; ++i) l.set(i, k, lift(syzygies[k][i]));

    Polynomial z0 = bigvar(layout.big_z0());
    std::vector<Polynomial> f; // deformed generators over the combined ring
    for (int i = 0; i < m; ++i) {
        Polynomial linear(big);
        for (int j = 0; j < r; ++j)
            linear += bigvar(layout.big_c(i, j)) * bigvar(layout.big_fiber(j));
        f.push_back(lift(problem.q[i]) - linear * z0 -
                    bigvar(layout.big_d(i)) * z0 * z0);
    }

    PolyMatrix E(big, 1, n2);
    for (int k = 0; k < n2; ++k) {
        Polynomial acc(big);
        for (int i = 0; i < m; ++i) {
            Polynomial col = l.at(i, k) + bigvar(layout.big_n(k, i)) * z0;
            acc += f[i] * col;
        }
        E.set(0, k, acc);
    }

    // Step (1): the z0^0 stratum is q*l, zero by the definition of a syzygy.
    for (int k = 0; k < n2; ++k)
        for (const Term& t : E.at(0, k).terms())
            if (t.mono[layout.big_z0()] == 0)
                throw internal_error("q*l did not vanish");

    return {layout, l, E};
}

namespace {

// Splits a combined-ring monomial into (z0 exponent, fiber part, unknown part).
struct SplitMono {
    int z0 = 0;
    Monomial fiber;   // length r
    Monomial unknown; // length arity(big) with z0/fiber cleared
};

SplitMono split_mono(const UnknownLayout& L, const Monomial& mono) {
    SplitMono s;
    s.z0 = mono[L.big_z0()];
    s.fiber.assign(L.r, 0);
    for (int j = 0; j < L.r; ++j) s.fiber[j] = mono[L.big_fiber(j)];
    s.unknown = mono;
    s.unknown[L.big_z0()] = 0;
    for (int j = 0; j < L.r; ++j) s.unknown[L.big_fiber(j)] = 0;
    return s;
}

Polynomial c_to_big(const UnknownLayout& L, const Polynomial& c_poly) {
    Substitution up(L.big);
    return up(c_poly);
}

} // namespace

CoverRelations cover_relations(const CoverProblem& problem) {
    BuiltSystem sys = build_system(problem);
    const UnknownLayout& L = sys.layout;
    const int m = L.m, r = L.r, n2 = L.n2;
    const RingPtr& big = L.big;

    CoverRelations rel;
    rel.problem = problem;
    rel.layout = L;
    rel.l = sys.l;

    // ---- step (2): z0^1 stratum, eliminate every n ------------------------
    // Unknown columns: all n's first (row-major), then c's ascending (i,j); the
    // leftmost-pivot elimination therefore eliminates each relation's earliest
    // c and leaves the later ones free, matching the displayed parametrization.
    const int n_cols = n2 * m;
    const int c_cols = m * r;
    const int cols = n_cols + c_cols;

    auto column_of = [&](int big_index) -> int {
        int base_n = L.big_n(0, 0);
        int base_d = L.big_d(0);
        int base_c = L.big_c(0, 0);
        if (big_index >= base_n && big_index < base_d) return big_index - base_n;
        if (big_index >= base_c) return n_cols + (big_index - base_c);
        return -1;
    };

    std::vector<std::vector<Rational>> rows;
    for (int k = 0; k < n2; ++k) {
        // Group the z0^1 terms of E_k by their fiber monomial.
        std::map<Monomial, std::vector<Rational>> per_mono;
        for (const Term& t : sys.E.at(0, k).terms()) {
            SplitMono s = split_mono(L, t.mono);
            if (s.z0 != 1) continue;
            int col = -1;
            for (int v = 0; v < big->arity(); ++v) {
                if (s.unknown[v] == 0) continue;
                if (s.unknown[v] != 1 || col != -1)
                    throw internal_error("z0^1 stratum is not linear in the unknowns");
                col = column_of(v);
            }
            if (col < 0) throw internal_error("z0^1 stratum has a free coefficient");
            auto& row = per_mono[s.fiber];
            if (row.empty()) row.assign(cols, Rational(0));
            row[col] += t.coef;
        }
        std::vector<std::pair<Monomial, std::vector<Rational>>> ordered(per_mono.begin(),
                                                                        per_mono.end());
        std::sort(ordered.begin(), ordered.end(),
                  [&](const auto& a, const auto& b) {
                      return problem.fiber_ring->compare(a.first, b.first) > 0;
                  });
        for (auto& [mono, row] : ordered) {
            (void)mono;
            rows.push_back(std::move(row));
        }
    }
    // Trace-free constraints join the same system (they touch only c columns).
    for (const auto& text : problem.tracefree) {
        Polynomial form = parse_polynomial(text, L.c_ring);
        if (form.is_zero()) continue;
        if (form.degree() != 1 || !form.is_homogeneous())
            throw precondition_error("trace-free constraint '" + text +
                                     "' is not a linear form in the c's");
        std::vector<Rational> row(cols, Rational(0));
        for (const Term& t : form.terms())
            for (int v = 0; v < L.c_ring->arity(); ++v)
                if (t.mono[v] == 1) row[n_cols + v] += t.coef;
        rows.push_back(std::move(row));
    }

    QMatrix sys2(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < sys2.rows(); ++i)
        for (int j = 0; j < cols; ++j) sys2.at(i, j) = rows[i][j];
    std::vector<int> pivots = sys2.rref();

    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int j = 0; j < n_cols; ++j)
        if (!is_pivot[j])
            throw internal_error("an n unknown stayed free; q cannot be minimal");

    auto tail_poly = [&](int row) {
        // -sum of the free-column entries, as a c_ring polynomial.
        Polynomial acc(L.c_ring);
        for (int j = n_cols; j < cols; ++j) {
            if (is_pivot[j] || sys2.at(row, j).is_zero()) continue;
            acc += Polynomial::term(L.c_ring, -sys2.at(row, j),
                                    L.c_ring->var_monomial(j - n_cols));
        }
        return acc;
    };

    rel.c_param.assign(c_cols, Polynomial(L.c_ring));
    for (int j = 0; j < c_cols; ++j)
        if (!is_pivot[n_cols + j]) {
            rel.free_c.push_back(j);
            rel.c_param[j] = Polynomial::variable(L.c_ring, j);
        }
    for (int rrow = 0; rrow < static_cast<int>(pivots.size()); ++rrow) {
        int p = pivots[rrow];
        if (p < n_cols) {
            int syz = p / m, gen = p % m;
            rel.n_subst[L.n_name(syz, gen)] = tail_poly(rrow);
        } else {
            // Reduced linear relation: pivot c + tail = 0.
            Polynomial form = Polynomial::variable(L.c_ring, p - n_cols) - tail_poly(rrow);
            rel.linear_relations.push_back(form);
            rel.c_param[p - n_cols] = tail_poly(rrow);
        }
    }

    rel.c_matrix = PolyMatrix(L.c_ring, m, r);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) rel.c_matrix.set(i, j, rel.c_param[L.cring_c(i, j)]);
    rel.n_matrix = PolyMatrix(L.c_ring, m, n2);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n2; ++k)
            rel.n_matrix.set(i, k, rel.n_subst.at(L.n_name(k, i)));

    // ---- step (3): substitute, z0^2 stratum, solve for the d's ------------
    Substitution back2(big);
    for (auto& [name, value] : rel.n_subst) back2.map(name, c_to_big(L, value));
    for (int j = 0; j < c_cols; ++j)
        back2.map(L.c_ring->name(j), c_to_big(L, rel.c_param[j]));

    PolyMatrix E2 = sys.E.substituted(back2);

    struct DRow {
        std::vector<Rational> dcoef;
        Polynomial cpart; // quadratic in the free c's
    };
    std::vector<DRow> drows;
    for (int k = 0; k < n2; ++k) {
        std::map<Monomial, DRow> per_mono;
        for (const Term& t : E2.at(0, k).terms()) {
            SplitMono s = split_mono(L, t.mono);
            if (s.z0 != 2) continue;
            int dvar = -1;
            Monomial cmono(L.c_ring->arity(), 0);
            for (int v = 0; v < big->arity(); ++v) {
                if (s.unknown[v] == 0) continue;
                if (v >= L.big_d(0) && v < L.big_c(0, 0)) {
                    if (s.unknown[v] != 1 || dvar != -1)
                        throw internal_error("z0^2 stratum is not linear in the d's");
                    dvar = v - L.big_d(0);
                } else if (v >= L.big_c(0, 0)) {
                    cmono[v - L.big_c(0, 0)] = s.unknown[v];
                } else {
                    throw internal_error("z0^2 stratum still contains an n");
                }
            }
            auto& row = per_mono[s.fiber];
            if (row.dcoef.empty()) {
                row.dcoef.assign(m, Rational(0));
                row.cpart = Polynomial(L.c_ring);
            }
            if (dvar >= 0) {
                if (total_degree(cmono) != 0)
                    throw internal_error("mixed d*c term in the z0^2 stratum");
                row.dcoef[dvar] += t.coef;
            } else {
                row.cpart += Polynomial::term(L.c_ring, t.coef, cmono);
            }
        }
        std::vector<std::pair<Monomial, DRow>> ordered;
        for (auto& [mono, row] : per_mono) ordered.emplace_back(mono, std::move(row));
        std::sort(ordered.begin(), ordered.end(),
                  [&](const auto& a, const auto& b) {
                      return problem.fiber_ring->compare(a.first, b.first) > 0;
                  });
        for (auto& [mono, row] : ordered) {
            (void)mono;
            drows.push_back(std::move(row));
        }
    }

    // Exact elimination on the d block; the c parts ride along symbolically.
    std::vector<int> d_pivot_row(m, -1);
    std::vector<bool> row_used(drows.size(), false);
    for (int col = 0; col < m; ++col) {
        int pr = -1;
        for (int i = 0; i < static_cast<int>(drows.size()); ++i) {
            if (row_used[i] || drows[i].dcoef[col].is_zero()) continue;
            pr = i;
            break;
        }
        if (pr < 0) continue;
        row_used[pr] = true;
        d_pivot_row[col] = pr;
        Rational inv = drows[pr].dcoef[col].inverse();
        for (auto& c : drows[pr].dcoef) c *= inv;
        drows[pr].cpart = drows[pr].cpart.scaled(inv);
        for (int i = 0; i < static_cast<int>(drows.size()); ++i) {
            if (i == pr || drows[i].dcoef[col].is_zero()) continue;
            Rational f = drows[i].dcoef[col];
            for (int j = 0; j < m; ++j)
                drows[i].dcoef[j] -= f * drows[pr].dcoef[j];
            drows[i].cpart -= drows[pr].cpart.scaled(f);
        }
    }
    for (int i = 0; i < m; ++i)
        if (d_pivot_row[i] < 0)
            throw internal_error("a d unknown stayed free; q cannot be minimal");

    rel.d_exprs.assign(m, Polynomial(L.c_ring));
    for (int i = 0; i < m; ++i) rel.d_exprs[i] = -drows[d_pivot_row[i]].cpart;

    std::vector<Polynomial> residual;
    for (int i = 0; i < static_cast<int>(drows.size()); ++i) {
        if (row_used[i]) continue;
        bool all_zero = std::all_of(drows[i].dcoef.begin(), drows[i].dcoef.end(),
                                    [](const Rational& x) { return x.is_zero(); });
        if (!all_zero) throw internal_error("inconsistent d elimination");
        if (!drows[i].cpart.is_zero()) residual.push_back(drows[i].cpart);
    }
    rel.quadratic_relations = min_generators(residual);
    // Inter-reduce the minimal set: each generator replaced by its normal form
    // modulo the others, iterated to a fixpoint. Keeps the ideal and
    // minimality, strips redundant tails from every generator.
    for (int pass = 0; pass < 4; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < rel.quadratic_relations.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < rel.quadratic_relations.size(); ++j)
                if (j != i) others.push_back(rel.quadratic_relations[j]);
            if (others.empty()) break;
            GroebnerBasis G = buchberger(Ideal::make(L.c_ring, others));
            Polynomial nf = normal_form(rel.quadratic_relations[i], G);
            if (nf.is_zero())
                throw internal_error("minimal quadratic relation became redundant");
            if (nf != rel.quadratic_relations[i]) {
                rel.quadratic_relations[i] = nf;
                changed = true;
            }
        }
        if (!changed) break;
    }
    rel.iq_basis.ring = L.c_ring;
    if (!rel.quadratic_relations.empty())
        rel.iq_basis = buchberger(Ideal::make(L.c_ring, rel.quadratic_relations));

    // The d's are canonical only modulo I_q (which c-parts land in the pivot
    // rows depends on the elimination); reduce to the normal-form representative.
    if (!rel.quadratic_relations.empty())
        for (auto& d : rel.d_exprs) d = normal_form(d, rel.iq_basis);

    // ---- step (4): z0^3 stratum cubics reduce to zero ---------------------
    Substitution back3(big);
    for (int i = 0; i < m; ++i) back3.map(L.d_name(i), c_to_big(L, rel.d_exprs[i]));
    PolyMatrix E3 = E2.substituted(back3);

    rel.cubics_ok = true;
    for (int k = 0; k < n2; ++k) {
        Polynomial cubic(L.c_ring);
        for (const Term& t : E3.at(0, k).terms()) {
            SplitMono s = split_mono(L, t.mono);
            if (s.z0 != 3) continue;
            if (total_degree(s.fiber) != 0)
                throw internal_error("z0^3 stratum is not fiber-free");
            Monomial cmono(L.c_ring->arity(), 0);
            for (int v = L.big_c(0, 0); v < big->arity(); ++v)
                cmono[v - L.big_c(0, 0)] = s.unknown[v];
            cubic += Polynomial::term(L.c_ring, t.coef, cmono);
        }
        Polynomial residue = rel.quadratic_relations.empty()
                                 ? cubic
                                 : normal_form(cubic, rel.iq_basis);
        rel.cubics.push_back(cubic);
        rel.cubic_residues.push_back(residue);
        if (!residue.is_zero()) rel.cubics_ok = false;
    }

    // Master identity: with everything substituted, every coefficient of
    // every entry of E lies in the ideal of relations.
    for (int k = 0; k < n2; ++k) {
        std::map<Monomial, Polynomial> coeffs; // key: (z0, fiber) part
        for (const Term& t : E3.at(0, k).terms()) {
            SplitMono s = split_mono(L, t.mono);
            Monomial key(1 + L.r, 0);
            key[0] = s.z0;
            for (int j = 0; j < L.r; ++j) key[1 + j] = s.fiber[j];
            Monomial cmono(L.c_ring->arity(), 0);
            for (int v = L.big_c(0, 0); v < big->arity(); ++v)
                cmono[v - L.big_c(0, 0)] = s.unknown[v];
            auto [it, fresh] = coeffs.emplace(key, Polynomial(L.c_ring));
            (void)fresh;
            it->second += Polynomial::term(L.c_ring, t.coef, cmono);
        }
        for (auto& [key, coeff] : coeffs) {
            (void)key;
            Polynomial nf = rel.quadratic_relations.empty()
                                ? coeff
                                : normal_form(coeff, rel.iq_basis);
            if (!nf.is_zero())
                throw internal_error("master identity failed: a coefficient of the "
                                     "expanded product is outside the relations ideal");
        }
    }

    return rel;
}

std::vector<Rational> full_c_point(const CoverRelations& rel,
                                   const std::map<std::string, Rational>& free_values) {
    const UnknownLayout& L = rel.layout;
    std::vector<Rational> values(L.c_ring->arity(), Rational(0));
    std::vector<Rational> free_point(L.c_ring->arity(), Rational(0));
    for (const auto& [name, value] : free_values) {
        int idx = L.c_ring->index_of(name);
        if (idx < 0) throw precondition_error("unknown c parameter '" + name + "'");
        if (std::find(rel.free_c.begin(), rel.free_c.end(), idx) == rel.free_c.end())
            throw precondition_error("'" + name + "' is an eliminated c, not a free one");
        free_point[idx] = value;
    }
    for (int j = 0; j < L.c_ring->arity(); ++j)
        values[j] = rel.c_param[j].evaluate(free_point);
    return values;
}

Resolution cone_resolution(const CoverProblem& problem) {
    // z0 goes last so the degrevlex basis of the homogenized ideal stays the
    // homogenization of the affine one.
    std::vector<std::string> hnames = problem.fiber_ring->names();
    hnames.push_back("z0");
    RingPtr hring = Ring::make(hnames, TermOrder::degrevlex());
    Substitution lift(hring);
    std::vector<Polynomial> reference;
    for (const auto& g : problem.q) reference.push_back(lift(g));
    return free_resolution(Ideal::make(hring, reference));
}

FiberReport verify_fiber(const CoverRelations& rel, const std::vector<Rational>& c_values,
                         const Resolution* reference) {
    const UnknownLayout& L = rel.layout;
    if (static_cast<int>(c_values.size()) != L.c_ring->arity())
        throw precondition_error("c point must value every c variable");
    for (const auto& form : rel.linear_relations)
        if (!form.evaluate(c_values).is_zero())
            throw precondition_error("c point violates linear relation " + form.str());
    for (const auto& quad : rel.quadratic_relations)
        if (!quad.evaluate(c_values).is_zero())
            throw precondition_error("c point violates quadratic relation " + quad.str());

    const int m = L.m, r = L.r;
    const RingPtr& fiber = rel.problem.fiber_ring;

    // Affine fiber equations f_i = q_i - sum c*_ij z_j - h_i(c*).
    std::vector<Polynomial> affine;
    for (int i = 0; i < m; ++i) {
        Polynomial f = rel.problem.q[i];
        for (int j = 0; j < r; ++j) {
            Rational cij = rel.c_matrix.at(i, j).evaluate(c_values);
            f -= Polynomial::variable(fiber, j).scaled(cij);
        }
        f -= Polynomial::constant(fiber, rel.d_exprs[i].evaluate(c_values));
        affine.push_back(f);
    }

    FiberReport report;
    GroebnerBasis fiber_gb = buchberger(Ideal::make(fiber, affine));
    StandardMonomials sm = standard_monomials(fiber_gb);
    if (!sm.finite) throw precondition_error("deformed fiber is not zero-dimensional");
    report.points = static_cast<int>(sm.monomials.size());

    GroebnerBasis cone_gb = buchberger(Ideal::make(fiber, rel.problem.q));
    StandardMonomials cone_sm = standard_monomials(cone_gb);
    report.reference_points = static_cast<int>(cone_sm.monomials.size());

    // Homogenized ideal, z0 last (see cone_resolution).
    std::vector<std::string> hnames = fiber->names();
    hnames.push_back("z0");
    RingPtr hring = Ring::make(hnames, TermOrder::degrevlex());
    Substitution lift(hring);
    std::vector<Polynomial> homog;
    for (int i = 0; i < m; ++i)
        homog.push_back(lift(affine[i]).homogenized(hring->arity() - 1, 2));
    Resolution res = free_resolution(Ideal::make(hring, homog));
    Resolution ref = reference ? *reference : cone_resolution(rel.problem);
    report.betti = res.betti;
    report.reference_betti = ref.betti;
    report.betti_matches = res.betti == ref.betti && res.twists == ref.twists;

    Ideal top = initial_ideal(Ideal::make(fiber, affine));
    report.initial_matches = ideal_equal(top, Ideal::make(fiber, rel.problem.q));
    return report;
}

} // namespace coverforge
