#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverforge/catalog.hpp"
#include "coverforge/parser.hpp"

using namespace coverforge;

TEST_CASE("every catalog instance verifies") {
    for (const auto& name : catalog_names()) {
        Certificate cert = run_catalog(name);
        INFO(cert.to_text());
        CHECK(cert.ok());
    }
}

TEST_CASE("certificates carry machine-readable structure") {
    Certificate cert = run_catalog("triple");
    std::string json = cert.to_json();
    CHECK(json.find("\"name\": \"triple\"") != std::string::npos);
    CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(json.find("\"checks\"") != std::string::npos);
    CHECK(run_catalog("deg6-ogr").name == "spinor"); // CLI alias
    CHECK_THROWS(run_catalog("nonsense"));
}

TEST_CASE("delta_tc values") {
    auto z = Rational(0);
    CHECK(delta_tc_value({z, z, z, z}).is_zero());
    CHECK(delta_tc_value({Rational(1), z, z, Rational(1)}).is_one());
    // symbolic display
    auto er = Ring::make({"e0", "e1", "e2", "e3"});
    CHECK(delta_tc(er, {0, 1, 2, 3}) ==
          parse_polynomial(
              "e0^2*e3^2 + 4*e0*e2^3 - 3*e1^2*e2^2 + 4*e1^3*e3 - 6*e0*e1*e2*e3",
              er));
}

TEST_CASE("three-point distinctness matches the discriminant") {
    Rational z(0), one(1);
    CHECK(three_points_distinct({one, z, z, one}));
    CHECK_FALSE(three_points_distinct({z, z, z, z}));
    // Branch-locus family e = (0, 1, a, 3a^2/4).
    for (long a = 1; a <= 4; ++a) {
        std::array<Rational, 4> e = {z, one, Rational(a),
                                     Rational(3) * Rational(a) * Rational(a) /
                                         Rational(4)};
        CHECK(delta_tc_value(e).is_zero());
        CHECK_FALSE(three_points_distinct(e));
    }
}

TEST_CASE("projected cubic matches the display up to one scalar") {
    ProjectedCubic pc = projected_cubic();
    CHECK_FALSE(pc.match_scale.is_zero());
    CHECK(pc.disc_power == 3);
    CHECK(pc.disc_scale == Rational(-1, 3));
}

TEST_CASE("section points satisfy the relations") {
    const CoverRelations& rel = degree6_relations();
    Rational one(1), z(0);
    auto free_vals = degree6_section_point({one, z, z, one},
                                           {Rational(2), z, z, Rational(3)});
    auto point = full_c_point(rel, free_vals);
    for (const auto& f : rel.linear_relations) CHECK(f.evaluate(point).is_zero());
    for (const auto& f : rel.quadratic_relations)
        CHECK(f.evaluate(point).is_zero());
}

TEST_CASE("ogr ideal data") {
    Ideal ogr = ogr10_ideal();
    CHECK(ogr.generators.size() == 10);
    for (const auto& g : ogr.generators) {
        CHECK(g.is_homogeneous());
        CHECK(g.degree() == 2);
        CHECK(g.term_count() == 4);
    }
}

TEST_CASE("galois section ideal parses and is degree 6 at the base point") {
    Ideal section = galois_section_ideal();
    CHECK(section.generators.size() == 9);
}
