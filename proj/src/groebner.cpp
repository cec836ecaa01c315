#include "coverforge/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "coverforge/errors.hpp"
#include "coverforge/substitution.hpp"

namespace coverforge {

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
    Ideal I;
    I.ring = std::move(ring);
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        common_ring(I.ring, g.ring());
        I.generators.push_back(std::move(g));
    }
    return I;
}

namespace {

// ---- free-module element helpers (position-over-term order) ----

bool mod_is_zero(const FreeModuleElement& v) {
    return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int mod_lead_comp(const FreeModuleElement& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

FreeModuleElement mod_zero(const RingPtr& ring, int rank) {
    return FreeModuleElement(rank, Polynomial(ring));
}

FreeModuleElement mod_sub(const FreeModuleElement& a, const FreeModuleElement& b) {
    FreeModuleElement r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!b[i].is_zero()) r[i] = r[i] - b[i];
    return r;
}

// h -= c * x^m * g, touching only the components where g is nonzero.
void mod_axpy_sub(FreeModuleElement& h, const Rational& c, const Monomial& m,
                  const FreeModuleElement& g) {
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!g[i].is_zero()) h[i] = h[i] - g[i].times_term(c, m);
}

FreeModuleElement mod_times_term(const FreeModuleElement& v, const Rational& c,
                                 const Monomial& m) {
    FreeModuleElement r(v);
    for (Polynomial& p : r) p = p.times_term(c, m);
    return r;
}

FreeModuleElement mod_scaled(const FreeModuleElement& v, const Rational& c) {
    FreeModuleElement r(v);
    for (Polynomial& p : r) p = p.scaled(c);
    return r;
}

// Compare two module elements by their leading terms under POT.
int mod_lead_compare(const Ring& ring, const FreeModuleElement& a,
                     const FreeModuleElement& b) {
    int ca = mod_lead_comp(a), cb = mod_lead_comp(b);
    if (ca != cb) return ca > cb ? -1 : 1; // lower component = larger element
    if (ca < 0) return 0;
    return ring.compare(a[ca].leading_mono(), b[cb].leading_mono());
}

struct ModLead {
    int comp;
    Monomial mono;
    Rational coef;
};

ModLead mod_lead(const FreeModuleElement& v) {
    int c = mod_lead_comp(v);
    if (c < 0) throw internal_error("leading term of zero module element");
    return {c, v[c].leading_mono(), v[c].leading_coef()};
}

// Full reduction under POT. Components are consumed in ascending order; a
// reducer's tail only touches the same component below the leading monomial
// or later components, so a single forward sweep terminates.
FreeModuleElement mod_divide(const FreeModuleElement& f,
                             const std::vector<FreeModuleElement>& gens,
                             std::vector<Polynomial>* cofactors,
                             const RingPtr& ring) {
    const int rank = static_cast<int>(f.size());
    std::vector<ModLead> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) leads.push_back(mod_lead(g));

    FreeModuleElement rem = mod_zero(ring, rank);
    FreeModuleElement h(f);
    for (int comp = 0; comp < rank; ++comp) {
        while (!h[comp].is_zero()) {
            const Term& t = h[comp].leading_term();
            int hit = -1;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (leads[k].comp == comp && mono_divides(leads[k].mono, t.mono)) {
                    hit = static_cast<int>(k);
                    break;
                }
            }
            if (hit < 0) {
                rem[comp] = rem[comp] + Polynomial::term(ring, t.coef, t.mono);
                h[comp] = h[comp] - Polynomial::term(ring, t.coef, t.mono);
                continue;
            }
            Rational c = t.coef / leads[hit].coef;
            Monomial m = mono_div(t.mono, leads[hit].mono);
            mod_axpy_sub(h, c, m, gens[hit]);
            if (cofactors)
                (*cofactors)[hit] =
                    (*cofactors)[hit] + Polynomial::term(ring, c, m);
        }
    }
    return rem;
}

FreeModuleElement mod_spair(const FreeModuleElement& a, const FreeModuleElement& b,
                            const RingPtr& ring) {
    ModLead la = mod_lead(a), lb = mod_lead(b);
    Monomial lcm = mono_lcm(la.mono, lb.mono);
    FreeModuleElement sa = mod_times_term(a, la.coef.inverse(), mono_div(lcm, la.mono));
    FreeModuleElement sb = mod_times_term(b, lb.coef.inverse(), mono_div(lcm, lb.mono));
    (void)ring;
    return mod_sub(sa, sb);
}

struct PairKey {
    int lcm_deg;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

struct BuchbergerRun {
    std::vector<FreeModuleElement> basis; // monic
    // With syzygy tracking: provenance rows over the input generators and the
    // syzygies collected from the S-pairs that reduced to zero.
    std::vector<FreeModuleElement> provenance;
    std::vector<FreeModuleElement> syzygies;
};

// Buchberger with normal selection (minimal lcm degree, then first index).
// Pair pruning: product criterion in the rank-1 case (it is invalid for
// modules), chain criterion when both sibling pairs were already handled.
// Syzygy mode tracks cofactors; the zero reductions then generate the full
// syzygy module of the input list (Schreyer). The pruned pairs stay covered:
// chain-skipped syzygies are combinations of their siblings', and
// product-skipped pairs contribute their Koszul syzygy explicitly.
BuchbergerRun mod_buchberger_engine(const RingPtr& ring, int rank,
                                    const std::vector<FreeModuleElement>& gens,
                                    bool track_syzygies) {
    BuchbergerRun run;
    const int m = static_cast<int>(gens.size());
    for (int i = 0; i < m; ++i) {
        if (mod_is_zero(gens[i])) {
            if (track_syzygies) {
                // A zero input generator is annihilated by the unit vector.
                FreeModuleElement unit = mod_zero(ring, m);
                unit[i] = Polynomial::constant(ring, Rational(1));
                run.syzygies.push_back(std::move(unit));
            }
            continue;
        }
        Rational inv = mod_lead(gens[i]).coef.inverse();
        run.basis.push_back(mod_scaled(gens[i], inv));
        if (track_syzygies) {
            FreeModuleElement row = mod_zero(ring, m);
            row[i] = Polynomial::constant(ring, inv);
            run.provenance.push_back(std::move(row));
        }
    }

    std::vector<ModLead> leads;
    for (const auto& g : run.basis) leads.push_back(mod_lead(g));

    std::set<PairKey> queue;
    std::set<std::pair<int, int>> handled;
    auto enqueue = [&](int i, int j) {
        if (leads[i].comp != leads[j].comp) return;
        Monomial lcm = mono_lcm(leads[i].mono, leads[j].mono);
        queue.insert({total_degree(lcm), i, j});
    };
    for (int j = 1; j < static_cast<int>(run.basis.size()); ++j)
        for (int i = 0; i < j; ++i) enqueue(i, j);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        int i = pk.i, j = pk.j;
        handled.insert({i, j});

        if (rank == 1 && mono_coprime(leads[i].mono, leads[j].mono)) {
            if (track_syzygies) {
                // Koszul syzygy of the pair, pushed through the provenance.
                FreeModuleElement syz = mod_zero(ring, m);
                for (int c = 0; c < m; ++c)
                    syz[c] = run.basis[j][0] * run.provenance[i][c] -
                             run.basis[i][0] * run.provenance[j][c];
                if (!mod_is_zero(syz)) run.syzygies.push_back(std::move(syz));
            }
            continue;
        }
        {
            Monomial lcm = mono_lcm(leads[i].mono, leads[j].mono);
            bool chained = false;
            for (int k = 0; k < static_cast<int>(run.basis.size()) && !chained; ++k) {
                if (k == i || k == j || leads[k].comp != leads[i].comp) continue;
                if (!mono_divides(leads[k].mono, lcm)) continue;
                auto key = [&](int a, int b) {
                    return std::make_pair(std::min(a, b), std::max(a, b));
                };
                if (handled.count(key(i, k)) && handled.count(key(k, j)))
                    chained = true;
            }
            if (chained) continue;
        }

        Monomial lcm = mono_lcm(leads[i].mono, leads[j].mono);
        Monomial ui = mono_div(lcm, leads[i].mono);
        Monomial uj = mono_div(lcm, leads[j].mono);
        FreeModuleElement s = mod_sub(mod_times_term(run.basis[i], Rational(1), ui),
                                      mod_times_term(run.basis[j], Rational(1), uj));
        std::vector<Polynomial> cof;
        if (track_syzygies) cof.assign(run.basis.size(), Polynomial(ring));
        FreeModuleElement r =
            mod_divide(s, run.basis, track_syzygies ? &cof : nullptr, ring);

        if (mod_is_zero(r)) {
            if (track_syzygies) {
                FreeModuleElement syz =
                    mod_sub(mod_times_term(run.provenance[i], Rational(1), ui),
                            mod_times_term(run.provenance[j], Rational(1), uj));
                for (std::size_t k = 0; k < cof.size(); ++k) {
                    if (cof[k].is_zero()) continue;
                    for (int c = 0; c < m; ++c)
                        syz[c] = syz[c] - cof[k] * run.provenance[k][c];
                }
                if (!mod_is_zero(syz)) run.syzygies.push_back(std::move(syz));
            }
            continue;
        }
        Rational inv = mod_lead(r).coef.inverse();
        run.basis.push_back(mod_scaled(r, inv));
        if (track_syzygies) {
            FreeModuleElement prov =
                mod_sub(mod_times_term(run.provenance[i], Rational(1), ui),
                        mod_times_term(run.provenance[j], Rational(1), uj));
            for (std::size_t k = 0; k < cof.size(); ++k) {
                if (cof[k].is_zero()) continue;
                for (int c = 0; c < m; ++c)
                    prov[c] = prov[c] - cof[k] * run.provenance[k][c];
            }
            run.provenance.push_back(mod_scaled(prov, inv));
        }
        leads.push_back(mod_lead(run.basis.back()));
        int n = static_cast<int>(run.basis.size()) - 1;
        for (int t = 0; t < n; ++t) enqueue(t, n);
    }
    return run;
}

std::vector<FreeModuleElement> mod_buchberger_raw(const RingPtr& ring, int rank,
                                                  std::vector<FreeModuleElement> basis) {
    return mod_buchberger_engine(ring, rank, basis, false).basis;
}

// Inter-reduce a Groebner basis to the unique reduced one.
std::vector<FreeModuleElement> mod_reduce_basis(const RingPtr& ring, int rank,
                                                std::vector<FreeModuleElement> basis) {
    // Minimalize: drop elements whose leading term another leading term divides.
    std::vector<FreeModuleElement> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        ModLead li = mod_lead(basis[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            ModLead lj = mod_lead(basis[j]);
            if (lj.comp != li.comp || !mono_divides(lj.mono, li.mono)) continue;
            if (lj.mono == li.mono) {
                redundant = j < i; // equal leads: keep the first
            } else {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<FreeModuleElement> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            FreeModuleElement r = mod_divide(minimal[i], others, nullptr, ring);
            r = mod_scaled(r, mod_lead(r).coef.inverse());
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const FreeModuleElement& a, const FreeModuleElement& b) {
                  return mod_lead_compare(*ring, a, b) > 0;
              });
    (void)rank;
    return minimal;
}

FreeModuleElement poly_to_mod(const Polynomial& p) { return {p}; }

std::vector<FreeModuleElement> polys_to_mods(const std::vector<Polynomial>& ps) {
    std::vector<FreeModuleElement> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(poly_to_mod(p));
    return out;
}

// Degree of a homogeneous module element with component twists; nullopt when
// the element is not homogeneous for that grading.
std::optional<int> mod_degree(const FreeModuleElement& v, const std::vector<int>& twists) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_homogeneous()) return std::nullopt;
        int d = v[i].degree() + twists[i];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<int>(0);
}

} // namespace

ModuleGroebnerBasis module_buchberger(const RingPtr& ring, int rank,
                                      const std::vector<FreeModuleElement>& gens) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != rank)
            throw context_error("module element rank mismatch");
        for (const auto& p : g)
            if (!p.is_zero()) common_ring(ring, p.ring());
    }
    std::vector<FreeModuleElement> nonzero;
    for (const auto& g : gens)
        if (!mod_is_zero(g)) nonzero.push_back(g);
    if (nonzero.empty()) return {ring, rank, {}};
    auto raw = mod_buchberger_raw(ring, rank, std::move(nonzero));
    return {ring, rank, mod_reduce_basis(ring, rank, std::move(raw))};
}

GroebnerBasis buchberger(const Ideal& ideal) {
    if (ideal.generators.empty())
        throw precondition_error("Groebner basis of an empty generator list");
    ModuleGroebnerBasis g = module_buchberger(ideal.ring, 1, polys_to_mods(ideal.generators));
    GroebnerBasis out;
    out.ring = ideal.ring;
    for (auto& e : g.elements) out.elements.push_back(e[0]);
    return out;
}

FreeModuleElement module_normal_form(const FreeModuleElement& f,
                                     const ModuleGroebnerBasis& G) {
    if (static_cast<int>(f.size()) != G.rank)
        throw context_error("module element rank mismatch");
    if (G.elements.empty()) return f;
    return mod_divide(f, G.elements, nullptr, G.ring);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (f.is_zero()) return f;
    common_ring(f.ring(), G.ring);
    if (G.elements.empty()) return f;
    auto r = mod_divide(poly_to_mod(f), polys_to_mods(G.elements), nullptr, G.ring);
    return r[0];
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw precondition_error("division by an empty list");
    RingPtr ring = f.ring() ? f.ring() : gens.front().ring();
    for (const auto& g : gens) common_ring(ring, g.ring());
    DivisionResult res;
    res.cofactors.assign(gens.size(), Polynomial(ring));
    if (f.is_zero()) {
        res.remainder = Polynomial(ring);
        return res;
    }
    auto r = mod_divide(poly_to_mod(f), polys_to_mods(gens), &res.cofactors, ring);
    res.remainder = r[0];
    return res;
}

bool satisfies_buchberger_criterion(const RingPtr& ring,
                                    const std::vector<Polynomial>& gens) {
    auto mods = polys_to_mods(gens);
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = i + 1; j < mods.size(); ++j) {
            FreeModuleElement s = mod_spair(mods[i], mods[j], ring);
            if (!mod_is_zero(mod_divide(s, mods, nullptr, ring))) return false;
        }
    return true;
}

std::vector<FreeModuleElement> module_syzygies(const RingPtr& ring, int rank,
                                               const std::vector<FreeModuleElement>& gens,
                                               const std::vector<int>& twists) {
    if (gens.empty()) throw precondition_error("syzygies of an empty list");
    const int m = static_cast<int>(gens.size());
    BuchbergerRun run = mod_buchberger_engine(ring, rank, gens, true);
    std::vector<FreeModuleElement> syz = std::move(run.syzygies);

    // Graded case: return a minimal generating set (twists = generator degrees).
    bool graded = true;
    for (const auto& g : gens)
        if (!mod_degree(g, twists)) graded = false;
    if (graded && !syz.empty()) {
        std::vector<int> syz_twists;
        for (const auto& g : gens) syz_twists.push_back(*mod_degree(g, twists));
        syz = module_min_generators(ring, m, syz, syz_twists);
        std::sort(syz.begin(), syz.end(),
                  [&](const FreeModuleElement& a, const FreeModuleElement& b) {
                      return mod_lead_compare(*ring, a, b) > 0;
                  });
    }

    // Exactness witness: every returned syzygy annihilates the input.
    for (const auto& s : syz) {
        FreeModuleElement acc = mod_zero(ring, rank);
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < rank; ++c)
                if (!gens[i][c].is_zero()) acc[c] = acc[c] + s[i] * gens[i][c];
        if (!mod_is_zero(acc)) throw internal_error("syzygy fails to annihilate");
    }
    return syz;
}

std::vector<FreeModuleElement> syzygy_module(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw precondition_error("syzygies of an empty list");
    RingPtr ring = gens.front().ring();
    for (const auto& g : gens) common_ring(ring, g.ring());
    return module_syzygies(ring, 1, polys_to_mods(gens), {0});
}

namespace {

// Sparse incremental Gaussian elimination over Q: rows are kept echelonized
// by leading column; reduce() returns the residual of a vector against the
// current span, insert() adds a residual as a new pivot row.
class SparseEchelon {
public:
    using Row = std::map<int, Rational>;

    // Reduces in place; true when the vector drops to zero (member).
    bool reduce(Row& v) const {
        for (const auto& [pivot, row] : rows_) {
            auto it = v.find(pivot);
            if (it == v.end()) continue;
            Rational f = it->second;
            for (const auto& [col, coef] : row) {
                auto& slot = v[col];
                slot -= f * coef;
                if (slot.is_zero()) v.erase(col);
            }
        }
        return v.empty();
    }

    void insert(Row v) {
        if (v.empty()) return;
        int pivot = v.begin()->first;
        Rational inv = v.begin()->second.inverse();
        for (auto& [col, coef] : v) coef *= inv;
        rows_.emplace(pivot, std::move(v));
    }

private:
    std::map<int, Row> rows_; // pivot column -> normalized row
};

void walk_monomials(Monomial& m, int var, int remaining,
                    const std::function<void(const Monomial&)>& fn) {
    if (var == static_cast<int>(m.size()) - 1) {
        m[var] = remaining;
        fn(m);
        m[var] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        m[var] = e;
        walk_monomials(m, var + 1, remaining - e, fn);
    }
    m[var] = 0;
}

} // namespace

std::vector<FreeModuleElement> module_min_generators(
    const RingPtr& ring, int rank, const std::vector<FreeModuleElement>& gens,
    const std::vector<int>& twists) {
    if (static_cast<int>(twists.size()) != rank)
        throw context_error("twist list does not match module rank");
    std::vector<std::pair<int, int>> order; // (degree, input index)
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (mod_is_zero(gens[i])) continue;
        auto d = mod_degree(gens[i], twists);
        if (!d)
            throw degree_error("minimal generators require homogeneous input");
        order.emplace_back(*d, static_cast<int>(i));
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // Degree-by-degree membership in the span of the kept generators: the
    // degree-d slice of the generated submodule is spanned by the monomial
    // multiples of the kept elements, so one echelonized batch per degree
    // decides every candidate of that degree exactly.
    std::vector<std::pair<int, FreeModuleElement>> kept; // (degree, element)
    std::vector<std::pair<int, FreeModuleElement>> tagged; // (input index, element)
    std::size_t at = 0;
    while (at < order.size()) {
        int degree = order[at].first;
        std::map<std::pair<int, Monomial>, int> columns;
        auto column = [&](int comp, const Monomial& m) {
            auto key = std::make_pair(comp, m);
            auto it = columns.find(key);
            if (it == columns.end())
                it = columns.emplace(key, static_cast<int>(columns.size())).first;
            return it->second;
        };
        auto vectorize = [&](const FreeModuleElement& v) {
            SparseEchelon::Row row;
            for (int c = 0; c < rank; ++c)
                for (const Term& t : v[c].terms())
                    row[column(c, t.mono)] = t.coef;
            return row;
        };
        SparseEchelon span;
        for (const auto& [kdeg, kelt] : kept) {
            int shift = degree - kdeg;
            if (shift < 0) continue;
            Monomial mu(ring->arity(), 0);
            walk_monomials(mu, 0, shift, [&](const Monomial& mono) {
                SparseEchelon::Row row =
                    vectorize(mod_times_term(kelt, Rational(1), mono));
                span.reduce(row);
                span.insert(std::move(row));
            });
        }
        for (; at < order.size() && order[at].first == degree; ++at) {
            const FreeModuleElement& candidate = gens[order[at].second];
            SparseEchelon::Row row = vectorize(candidate);
            if (!tagged.empty() && span.reduce(row)) continue;
            span.insert(std::move(row));
            kept.emplace_back(degree, candidate);
            tagged.emplace_back(order[at].second, candidate);
        }
    }
    // Restore the input order among the survivors.
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FreeModuleElement> out;
    for (auto& [idx, e] : tagged) {
        (void)idx;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Polynomial> min_generators(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    RingPtr ring;
    for (const auto& g : gens)
        if (!g.is_zero()) ring = common_ring(ring ? ring : g.ring(), g.ring());
    if (!ring) return {};
    auto mods = module_min_generators(ring, 1, polys_to_mods(gens), {0});
    std::vector<Polynomial> out;
    for (auto& m : mods) out.push_back(m[0]);
    return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop_vars) {
    const Ring& ring = *ideal.ring;
    std::vector<bool> drop(ring.arity(), false);
    for (int v : drop_vars) {
        if (v < 0 || v >= ring.arity()) throw context_error("eliminate: bad variable index");
        drop[v] = true;
    }
    // Reorder so the dropped variables form a block-order prefix.
    std::vector<std::string> names;
    for (int i = 0; i < ring.arity(); ++i)
        if (drop[i]) names.push_back(ring.name(i));
    int k = static_cast<int>(names.size());
    std::vector<std::string> keep_names;
    for (int i = 0; i < ring.arity(); ++i)
        if (!drop[i]) {
            names.push_back(ring.name(i));
            keep_names.push_back(ring.name(i));
        }
    RingPtr work = Ring::make(names, TermOrder::block_order(k));
    Substitution into_work(work);
    std::vector<Polynomial> work_gens;
    for (const auto& g : ideal.generators) work_gens.push_back(into_work(g));

    GroebnerBasis G = buchberger(Ideal::make(work, work_gens));

    TermOrder sub_order = ring.order().kind == OrderKind::Lex ? TermOrder::lex()
                                                              : TermOrder::degrevlex();
    RingPtr sub = Ring::make(keep_names, sub_order);
    Substitution into_sub(sub);
    std::vector<Polynomial> out;
    for (const auto& g : G.elements)
        if (g.free_of_prefix(k)) out.push_back(into_sub(g));
    return Ideal::make(sub, out);
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
    return normal_form(f, G).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    common_ring(a.ring, b.ring);
    bool a_empty = a.generators.empty();
    bool b_empty = b.generators.empty();
    if (a_empty || b_empty) {
        auto all_zero = [](const Ideal& I) {
            return std::all_of(I.generators.begin(), I.generators.end(),
                               [](const Polynomial& p) { return p.is_zero(); });
        };
        return all_zero(a) && all_zero(b);
    }
    GroebnerBasis ga = buchberger(a);
    GroebnerBasis gb = buchberger(b);
    for (const auto& f : a.generators)
        if (!ideal_contains(gb, f)) return false;
    for (const auto& f : b.generators)
        if (!ideal_contains(ga, f)) return false;
    return true;
}

StandardMonomials standard_monomials(const GroebnerBasis& G) {
    const Ring& ring = *G.ring;
    const int n = ring.arity();
    std::vector<Monomial> leads;
    for (const auto& g : G.elements) leads.push_back(g.leading_mono());

    StandardMonomials out;
    // Zero-dimensional iff every variable has a pure-power leading monomial.
    std::vector<int> bound(n, -1);
    for (const Monomial& lm : leads) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n && pure; ++i) {
            if (lm[i] == 0) continue;
            if (var >= 0)
                pure = false;
            else
                var = i;
        }
        if (pure && var >= 0 && (bound[var] < 0 || lm[var] < bound[var]))
            bound[var] = lm[var];
        if (pure && var < 0) { // constant leading monomial: unit ideal
            out.finite = true;
            return out;
        }
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0) return out; // infinite flag

    out.finite = true;
    Monomial current(n, 0);
    std::vector<Monomial> found;
    // Enumerate the box below the pure-power bounds, keep the staircase complement.
    std::function<void(int)> walk = [&](int var) {
        if (var == n) {
            for (const Monomial& lm : leads)
                if (mono_divides(lm, current)) return;
            found.push_back(current);
            return;
        }
        for (int e = 0; e < bound[var]; ++e) {
            current[var] = e;
            walk(var + 1);
        }
        current[var] = 0;
    };
    walk(0);
    std::sort(found.begin(), found.end(), [&](const Monomial& a, const Monomial& b) {
        return ring.compare(a, b) < 0;
    });
    out.monomials = std::move(found);
    return out;
}

QMatrix multiplication_matrix(const GroebnerBasis& G,
                              const std::vector<Monomial>& basis, int var) {
    const int n = static_cast<int>(basis.size());
    std::map<Monomial, int> where;
    for (int i = 0; i < n; ++i) where[basis[i]] = i;
    QMatrix M(n, n);
    for (int j = 0; j < n; ++j) {
        Monomial m = basis[j];
        m[var] += 1;
        Polynomial nf = normal_form(Polynomial::term(G.ring, Rational(1), m), G);
        for (const Term& t : nf.terms()) {
            auto it = where.find(t.mono);
            if (it == where.end())
                throw internal_error("normal form left the standard-monomial basis");
            M.at(it->second, j) = t.coef;
        }
    }
    return M;
}

Ideal initial_ideal(const Ideal& ideal, int prefix) {
    const Ring& ring = *ideal.ring;
    if (prefix < 0) prefix = ring.arity();
    if (prefix == 0 || prefix > ring.arity())
        throw context_error("initial_ideal: bad degree-variable prefix");
    RingPtr work = Ring::make(ring.names(), TermOrder::block_order(prefix));
    Substitution into_work(work);
    std::vector<Polynomial> work_gens;
    for (const auto& g : ideal.generators) work_gens.push_back(into_work(g));
    GroebnerBasis G = buchberger(Ideal::make(work, work_gens));
    Substitution back(ideal.ring);
    std::vector<Polynomial> tops;
    for (const auto& g : G.elements) tops.push_back(back(g.top_part_in_prefix(prefix)));
    return Ideal::make(ideal.ring, tops);
}

} // namespace coverforge
