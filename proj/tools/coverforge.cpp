#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coverforge/catalog.hpp"
#include "coverforge/cover.hpp"
#include "coverforge/errors.hpp"
#include "coverforge/groebner.hpp"
#include "coverforge/parser.hpp"
#include "coverforge/substitution.hpp"

using namespace coverforge;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit-code contract: 1 parse, 2 precondition, 3 regression mismatch, 4 internal.
enum ExitCode { kOk = 0, kParse = 1, kPrecondition = 2, kRegression = 3, kInternal = 4 };

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedProblem load_problem(const std::string& path, const std::string& order_text) {
    ParsedProblem p = parse_problem(slurp(path));
    if (!order_text.empty()) {
        TermOrder order = TermOrder::parse(order_text);
        RingPtr reordered = Ring::make(p.ring->names(), order);
        Substitution moved(reordered);
        for (auto& g : p.generators) g = moved(g);
        p.ring = reordered;
    }
    return p;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

ordered_json betti_json(const Resolution& res) {
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < res.betti.size(); ++i) {
        ordered_json row;
        row["step"] = i;
        row["rank"] = res.betti[i];
        row["twists"] = i < res.twists.size() ? res.twists[i] : std::vector<int>{};
        steps.push_back(row);
    }
    return steps;
}

int cmd_gb(const std::string& path, const std::string& order, bool json) {
    ParsedProblem p = load_problem(path, order);
    GroebnerBasis G = buchberger(Ideal::make(p.ring, p.generators));
    if (json) {
        ordered_json j;
        j["ring"] = p.ring->names();
        j["order"] = p.ring->order().str();
        ordered_json elems = ordered_json::array();
        for (const auto& g : G.elements) elems.push_back(g.str());
        j["elements"] = elems;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "# reduced Groebner basis, order " << p.ring->order().str()
                  << "\n";
        for (const auto& g : G.elements) std::cout << g << "\n";
    }
    return kOk;
}

int cmd_nf(const std::string& path, const std::string& poly_text,
           const std::string& order, bool json) {
    ParsedProblem p = load_problem(path, order);
    GroebnerBasis G = buchberger(Ideal::make(p.ring, p.generators));
    Polynomial f = parse_polynomial(poly_text, p.ring);
    Polynomial r = normal_form(f, G);
    if (json) {
        ordered_json j;
        j["normal_form"] = r.str();
        j["member"] = r.is_zero();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r << "\n";
    }
    return kOk;
}

int cmd_syz(const std::string& path, const std::string& order, bool json) {
    ParsedProblem p = load_problem(path, order);
    auto syz = syzygy_module(p.generators);
    if (json) {
        ordered_json j;
        j["count"] = syz.size();
        ordered_json rows = ordered_json::array();
        for (const auto& s : syz) {
            ordered_json row = ordered_json::array();
            for (const auto& c : s) row.push_back(c.str());
            rows.push_back(row);
        }
        j["syzygies"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& s : syz) {
            std::string line;
            for (const auto& c : s) line += "(" + c.str() + ") ";
            std::cout << line << "\n";
        }
    }
    return kOk;
}

int cmd_resolve(const std::string& path, const std::string& order, int max_steps,
                bool json) {
    ParsedProblem p = load_problem(path, order);
    Resolution res = free_resolution(Ideal::make(p.ring, p.generators), max_steps);
    if (json) {
        ordered_json j;
        j["order"] = p.ring->order().str();
        j["betti"] = betti_json(res);
        j["truncated"] = res.truncated;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "betti: " << res.betti_string() << "\n";
        for (std::size_t s = 0; s < res.steps.size(); ++s)
            std::cout << "step " << s + 1 << ":\n" << res.steps[s].str();
        if (res.truncated) std::cout << "truncated at max steps\n";
    }
    return kOk;
}

int cmd_eliminate(const std::string& path, const std::string& vars,
                  const std::string& order, bool json) {
    ParsedProblem p = load_problem(path, order);
    std::vector<int> drop;
    std::istringstream ss(vars);
    std::string name;
    while (std::getline(ss, name, ',')) {
        int idx = p.ring->index_of(name);
        if (idx < 0) throw precondition_error("unknown variable '" + name + "'");
        drop.push_back(idx);
    }
    Ideal out = eliminate(Ideal::make(p.ring, p.generators), drop);
    if (json) {
        ordered_json j;
        j["ring"] = out.ring->names();
        ordered_json gens = ordered_json::array();
        for (const auto& g : out.generators) gens.push_back(g.str());
        j["generators"] = gens;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : out.generators) std::cout << g << "\n";
    }
    return kOk;
}

CoverRelations relations_from_file(const std::string& path) {
    ParsedProblem p = parse_problem(slurp(path));
    return cover_relations(make_cover_problem(p.ring, p.generators, p.tracefree_texts));
}

ordered_json relations_json(const CoverRelations& rel) {
    ordered_json j;
    ordered_json nsub = ordered_json::object();
    for (const auto& [name, value] : rel.n_subst) nsub[name] = value.str();
    j["n_subst"] = nsub;
    ordered_json linear = ordered_json::array();
    for (const auto& f : rel.linear_relations) linear.push_back(f.str());
    j["linear"] = linear;
    ordered_json d = ordered_json::object();
    for (int i = 0; i < rel.layout.m; ++i)
        d[rel.layout.d_name(i)] = rel.d_exprs[i].str();
    j["d"] = d;
    ordered_json iq = ordered_json::array();
    for (const auto& f : rel.quadratic_relations) iq.push_back(f.str());
    j["Iq"] = iq;
    j["cubics_ok"] = rel.cubics_ok;
    return j;
}

int cmd_relations(const std::string& path, bool json) {
    CoverRelations rel = relations_from_file(path);
    if (json) {
        std::cout << relations_json(rel).dump(2) << "\n";
    } else {
        std::cout << "# free parameters:";
        for (int idx : rel.free_c) std::cout << " " << rel.layout.c_ring->name(idx);
        std::cout << "\nC =\n" << rel.c_matrix.str();
        std::cout << "linear relations:\n";
        for (const auto& f : rel.linear_relations) std::cout << "  " << f << "\n";
        std::cout << "d:\n";
        for (int i = 0; i < rel.layout.m; ++i)
            std::cout << "  " << rel.layout.d_name(i) << " = " << rel.d_exprs[i]
                      << "\n";
        std::cout << "Iq (" << rel.quadratic_relations.size() << "):\n";
        for (const auto& f : rel.quadratic_relations) std::cout << "  " << f << "\n";
        std::cout << "cubics_ok: " << (rel.cubics_ok ? "true" : "false") << "\n";
    }
    return kOk;
}

bool problem_matches_degree6(const CoverRelations& rel) {
    const auto& names = rel.problem.fiber_ring->names();
    return rel.layout.m == 9 && rel.layout.r == 4 &&
           names == std::vector<std::string>({"z1", "z2", "w1", "w2"});
}

int cmd_fiber(const std::string& path, const std::string& e_text,
              const std::string& c_text, bool json) {
    CoverRelations rel = relations_from_file(path);
    std::map<std::string, Rational> free_values;
    if (!e_text.empty()) {
        auto ev = parse_rationals(e_text);
        auto cv = parse_rationals(c_text);
        if (ev.size() != 4 || cv.size() != 4)
            throw precondition_error("--e and --c take four rationals each for the "
                                     "linear section");
        if (!problem_matches_degree6(rel))
            throw precondition_error("--e only applies to the degree-6 problem");
        free_values = degree6_section_point({ev[0], ev[1], ev[2], ev[3]},
                                            {cv[0], cv[1], cv[2], cv[3]});
    } else {
        auto cv = parse_rationals(c_text);
        if (cv.size() != rel.free_c.size())
            throw precondition_error("--c needs one value per free parameter (" +
                                     std::to_string(rel.free_c.size()) + ")");
        for (std::size_t i = 0; i < cv.size(); ++i)
            free_values[rel.layout.c_ring->name(rel.free_c[i])] = cv[i];
    }
    FiberReport rep = verify_fiber(rel, full_c_point(rel, free_values));
    if (json) {
        ordered_json j;
        j["points"] = rep.points;
        j["betti"] = rep.betti;
        j["reference_betti"] = rep.reference_betti;
        j["initial_matches"] = rep.initial_matches;
        j["ok"] = rep.ok();
        std::cout << j.dump(2) << "\n";
    } else {
        std::string betti;
        for (std::size_t i = 0; i < rep.betti.size(); ++i)
            betti += (i ? "," : "") + std::to_string(rep.betti[i]);
        std::cout << "points: " << rep.points << ", betti: " << betti
                  << ", initial: " << (rep.initial_matches ? "(q)" : "MISMATCH")
                  << "\n";
    }
    return rep.ok() ? kOk : kRegression;
}

int cmd_catalog(const std::string& name, bool all, bool json) {
    std::vector<Certificate> certs;
    if (all) {
        certs = run_catalog_all();
    } else if (!name.empty()) {
        certs.push_back(run_catalog(name));
    } else {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
        return kOk;
    }
    bool ok = true;
    if (json) {
        std::string sep = "[\n";
        for (const auto& cert : certs) {
            std::cout << sep << cert.to_json();
            sep = ",\n";
            ok = ok && cert.ok();
        }
        std::cout << "\n]\n";
    } else {
        for (const auto& cert : certs) {
            std::cout << cert.to_text() << "\n";
            ok = ok && cert.ok();
        }
    }
    return ok ? kOk : kRegression;
}

int cmd_verify(const std::string& name, bool json) {
    Certificate cert = run_catalog(name);
    if (json) {
        std::cout << cert.to_json() << "\n";
    } else {
        std::cout << cert.to_text();
        std::cout << (cert.ok() ? "verified\n" : "FAILED\n");
    }
    return cert.ok() ? kOk : kRegression;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverforge: exact computation of cover homomorphisms, the ideal "
                 "of q-relations, and the built-in verification catalog"};
    app.require_subcommand(1);

    std::string path, order, poly_text, vars, e_text, c_text, name;
    bool json = false, all = false;
    int max_steps = 16;

    auto add_common = [&](CLI::App* sub, bool with_order = true) {
        sub->add_flag("--json", json, "machine-readable output");
        if (with_order)
            sub->add_option("--order", order, "degrevlex | lex | block:k");
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of the ideal");
    gb->add_option("file", path)->required();
    add_common(gb);

    CLI::App* nf = app.add_subcommand("nf", "normal form modulo the ideal");
    nf->add_option("file", path)->required();
    nf->add_option("--poly", poly_text, "polynomial to reduce")->required();
    add_common(nf);

    CLI::App* syz = app.add_subcommand("syz", "minimal first syzygies");
    syz->add_option("file", path)->required();
    add_common(syz);

    CLI::App* resolve = app.add_subcommand("resolve", "minimal free resolution");
    resolve->add_option("file", path)->required();
    resolve->add_option("--max-steps", max_steps, "cap on the number of steps");
    add_common(resolve);

    CLI::App* elim = app.add_subcommand("eliminate", "eliminate variables");
    elim->add_option("file", path)->required();
    elim->add_option("--vars", vars, "comma-separated variables to drop")->required();
    add_common(elim);

    CLI::App* relations =
        app.add_subcommand("relations", "run the z0-graded cover algorithm");
    relations->add_option("file", path)->required();
    add_common(relations, false);

    CLI::App* fiber = app.add_subcommand("fiber", "verify a deformed fiber");
    fiber->add_option("file", path)->required();
    fiber->add_option("--e", e_text, "linear-section e0,e1,e2,e3");
    fiber->add_option("--c", c_text, "free parameter values")->required();
    add_common(fiber, false);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in reference computations");
    catalog->add_option("name", name, "instance name");
    catalog->add_flag("--all", all, "run every instance");
    add_common(catalog, false);

    CLI::App* verify = app.add_subcommand("verify", "named verification certificate");
    verify->add_option("name", name)->required();
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }

    try {
        if (gb->parsed()) return cmd_gb(path, order, json);
        if (nf->parsed()) return cmd_nf(path, poly_text, order, json);
        if (syz->parsed()) return cmd_syz(path, order, json);
        if (resolve->parsed()) return cmd_resolve(path, order, max_steps, json);
        if (elim->parsed()) return cmd_eliminate(path, vars, order, json);
        if (relations->parsed()) return cmd_relations(path, json);
        if (fiber->parsed()) return cmd_fiber(path, e_text, c_text, json);
        if (catalog->parsed()) return cmd_catalog(name, all, json);
        if (verify->parsed()) return cmd_verify(name, json);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kPrecondition;
    } catch (const context_error& e) {
        std::cerr << "context error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const shape_error& e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const degree_error& e) {
        std::cerr << "degree error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const regression_error& e) {
        std::cerr << "regression mismatch: " << e.what() << "\n";
        return kRegression;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
