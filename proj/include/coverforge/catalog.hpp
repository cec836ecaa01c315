#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "coverforge/cover.hpp"
#include "coverforge/groebner.hpp"

namespace coverforge {

/// One verified reproduction step inside a catalog instance.
struct CatalogCheck {
    std::string id;
    bool pass = false;
    std::string witness; // recomputed value, diff, or note
};

/// Machine-checkable certificate of a named reference computation.
struct Certificate {
    std::string name;
    std::vector<std::pair<std::string, std::string>> artifacts;
    std::vector<CatalogCheck> checks;

    bool ok() const;
    std::string to_json() const; // {name, artifacts:{...}, checks:[{id,status,witness}]}
    std::string to_text() const; // human-readable report
};

/// Compiled-in instances. Each reruns the engine and compares against the
/// expected artifacts embedded here.
Certificate triple_cover_instance();
Certificate degree6_instance();
Certificate ogr10_instance();
Certificate spinor_identification(); // the "deg6-ogr" identification
Certificate three_points_instance(); // discriminant, projected cubic, barycenter
Certificate s3_galois_instance();    // S3 invariance, Z2/Z3 quotient ideals

const std::vector<std::string>& catalog_names();
Certificate run_catalog(const std::string& name);
/// Runs all instances (parallelism capped by COVER_FORGE_THREADS), results in
/// name order.
std::vector<Certificate> run_catalog_all();

// ---- engine-level accessors shared by the CLI, tests and acceptance ------

/// Memoized solver runs for the two cover instances.
const CoverRelations& triple_relations();
const CoverRelations& degree6_relations();
const Resolution& triple_cone_resolution();
const Resolution& degree6_cone_resolution();

/// The triple-cover discriminant form e0^2e3^2 + 4e0e2^3 - 3e1^2e2^2 +
/// 4e1^3e3 - 6e0e1e2e3 over the given variables.
Polynomial delta_tc(const RingPtr& ring, const std::array<int, 4>& e_vars);
Rational delta_tc_value(const std::array<Rational, 4>& e);

/// The 10 quadrics cutting out OGr(5,10) in P^15, in the xi ring.
Ideal ogr10_ideal();

/// Free-parameter values of the solved relations for a linear-section point
/// C_i = e_i * Ctilde (degree 6) or for the (c0..c3) chart (triple).
std::map<std::string, Rational> degree6_section_point(const std::array<Rational, 4>& e,
                                                      const std::array<Rational, 4>& c);
std::map<std::string, Rational> triple_section_point(const std::array<Rational, 4>& c);

/// Projection of the symbolic three-point scheme to P^1: the binary cubic
/// (t eliminated), its match against the expected coefficients, and the exact
/// relation disc(cubic) = disc_scale * Delta_tc^disc_power.
struct ProjectedCubic {
    Polynomial cubic;       // in the (z, w, e0..e3) ring, matched form
    Rational match_scale;   // engine generator = match_scale * expected
    Rational disc_scale;
    int disc_power = 0;
};
ProjectedCubic projected_cubic();

/// Squarefree test of the specialized binary cubic at rational e: true iff
/// the three points are pairwise distinct (gcd criterion, including the root
/// at infinity).
bool three_points_distinct(const std::array<Rational, 4>& e);

/// The S3-Galois linear-section ideal at e=(1,0,0,1) with symbolic
/// c0..c3, in the (z1,z2,w1,w2,c0..c3) ring.
Ideal galois_section_ideal();

} // namespace coverforge
