#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strata/fixtures.hpp"
#include "strata/stellar.hpp"

using namespace strata;

TEST_CASE("unstable stratification of B[2] has strata of sizes 1, 2, 4") {
    StratifiedBC sbc = unstable_stratification(fixtures::chain_category(2));
    CHECK(stratum_cells(sbc.strat, 0).size() == 1);
    CHECK(stratum_cells(sbc.strat, 1).size() == 2);
    CHECK(stratum_cells(sbc.strat, 2).size() == 4);
    CHECK(check_conditions(sbc.strat).all_pass());
}

TEST_CASE("unstable stratification of the hourglass: 1, 2, 7") {
    AcycCat c = fixtures::hourglass();
    StratifiedBC sbc = unstable_stratification(c);
    CHECK(stratum_cells(sbc.strat, *c.find_object("x")).size() == 1);
    CHECK(stratum_cells(sbc.strat, *c.find_object("y")).size() == 2);
    CHECK(stratum_cells(sbc.strat, *c.find_object("z")).size() == 7);
    CHECK(check_conditions(sbc.strat).all_pass());
}

TEST_CASE("stable stratification is the unstable one of the opposite") {
    AcycCat c = fixtures::hourglass();
    StratifiedBC stable = stable_stratification(c);
    // Stratum sizes by source: chains starting at x, y, z respectively.
    CHECK(stratum_cells(stable.strat, *c.find_object("x")).size() == 6);
    CHECK(stratum_cells(stable.strat, *c.find_object("y")).size() == 3);
    CHECK(stratum_cells(stable.strat, *c.find_object("z")).size() == 1);
    CHECK(check_conditions(stable.strat).all_pass());
}

TEST_CASE("one-object category: single stratum") {
    AcycCat c = fixtures::chain_category(0);
    StratifiedBC sbc = unstable_stratification(c);
    CHECK(sbc.strat.used_labels().size() == 1);
}

TEST_CASE("lower star of a minimal object") {
    AcycCat c = fixtures::hourglass();
    NerveData bc = nondegenerate_nerve(c);
    StellarCell sx = lower_star(c, *c.find_object("x"), bc);
    CHECK(sx.dome.space.f_vector() == std::vector<int>{1});
    CHECK(sx.boundary.space.empty());
    CHECK(sx.h_map().is_isomorphism());
}

TEST_CASE("lower star at z in the hourglass category") {
    AcycCat c = fixtures::hourglass();
    NerveData bc = nondegenerate_nerve(c);
    StellarCell sz = lower_star(c, *c.find_object("z"), bc);
    // Boundary: two disjoint edges on four vertices.
    CHECK(sz.boundary.space.f_vector() == std::vector<int>{4, 2});
    // Dome: cone on the boundary.
    CHECK(sz.dome.space.euler() == 1);
    CHECK(sz.h_map().is_isomorphism());
    CHECK(homology(sz.dome.space).reduced_point());
    // Interior cells are the chains ending at 1_z: the vertex 1_z, four
    // edges into it, and the two triangles through u1, u2; they biject with
    // the seven cells of the open stratum e_z.
    CHECK(sz.interior.size() == 7);
}

TEST_CASE("D_2 of [2] is Delta^2 as a cone") {
    AcycCat c = fixtures::chain_category(2);
    NerveData bc = nondegenerate_nerve(c);
    StellarCell s2 = lower_star(c, 2, bc);
    CHECK(s2.dome.space.f_vector() == std::vector<int>{3, 3, 1});
    CHECK(isomorphic_brute(s2.dome.space, standard_simplex(2)));
    // Boundary is the edge path B([2]_{<2}) = Delta^1.
    CHECK(s2.boundary.space.f_vector() == std::vector<int>{2, 1});
    CHECK(s2.h_map().is_isomorphism());
}

TEST_CASE("stratum equals star on fixtures") {
    {
        AcycCat c = fixtures::chain_category(3);
        NerveData bc = nondegenerate_nerve(c);
        for (int x = 0; x < c.num_objects(); ++x)
            CHECK(verify_stratum_equals_star(c, x, bc).pass);
    }
    {
        AcycCat c = fixtures::hourglass();
        NerveData bc = nondegenerate_nerve(c);
        for (int x = 0; x < c.num_objects(); ++x) {
            auto rep = verify_stratum_equals_star(c, x, bc);
            CHECK(rep.pass);
        }
        // e_y = {vertex y, edge v} and D_y is an edge.
        StellarCell sy = lower_star(c, *c.find_object("y"), bc);
        CHECK(sy.dome.space.f_vector() == std::vector<int>{2, 1});
        StratifiedBC sbc = unstable_stratification(c);
        auto ey = stratum_cells(sbc.strat, *c.find_object("y"));
        CHECK(ey.size() == 2);
    }
    {
        AcycCat c = fixtures::collapsing_composites();
        NerveData bc = nondegenerate_nerve(c);
        for (int x = 0; x < c.num_objects(); ++x)
            CHECK(verify_stratum_equals_star(c, x, bc).pass);
    }
}

TEST_CASE("upper star at y in the hourglass category") {
    AcycCat c = fixtures::hourglass();
    NerveData bc = nondegenerate_nerve(c);
    StellarCell up = upper_star(c, *c.find_object("y"), bc);
    // y down C has objects 1_y, u1, u2; boundary is two points.
    CHECK(up.dome.space.f_vector() == std::vector<int>{3, 2});
    CHECK(up.boundary.space.f_vector() == std::vector<int>{2});
    CHECK(up.h_map().is_isomorphism());
}

TEST_CASE("cylindrical structure on [2] and the hourglass category") {
    {
        AcycCat c = fixtures::chain_category(2);
        NerveData bc = nondegenerate_nerve(c);
        CylStructure cyl = cylindrical_structure(c, bc);
        CHECK(verify_cylindrical(c, cyl).pass);
    }
    {
        AcycCat c = fixtures::hourglass();
        NerveData bc = nondegenerate_nerve(c);
        CylStructure cyl = cylindrical_structure(c, bc);
        auto rep = verify_cylindrical(c, cyl);
        CHECK(rep.pass);
        // Parameter sets: P(y,z) = {u1, u2}, P(x,z) = {u1v, u2v}.
        CHECK(c.hom(*c.find_object("y"), *c.find_object("z")).size() == 2);
        CHECK(c.hom(*c.find_object("x"), *c.find_object("z")).size() == 2);
    }
}

TEST_CASE("extracted face category recovers the original") {
    for (AcycCat c : {fixtures::hourglass(), fixtures::chain_category(2),
                      fixtures::parallel_arrows(3), fixtures::collapsing_composites()}) {
        RoundtripReport rep = roundtrip(c);
        CHECK(rep.pass);
        CHECK(rep.iso.isomorphic);
    }
}

TEST_CASE("roundtrip on [n]") {
    for (int n = 0; n <= 4; ++n) {
        RoundtripReport rep = roundtrip(fixtures::chain_category(n));
        CHECK(rep.pass);
    }
}

TEST_CASE("simplicial face category of the boundary of Delta^2") {
    SimpSet b2 = boundary_simplex(2);
    AcycCat fc = simplicial_face_category(b2);
    CHECK(validate(fc).pass);
    // For a regular complex this is the face poset as a category: every hom
    // has at most one morphism.
    for (int x = 0; x < fc.num_objects(); ++x)
        for (int y = 0; y < fc.num_objects(); ++y)
            CHECK(fc.hom(x, y).size() <= 1);
    // Against the face poset of the simplicial stratification.
    auto fp = face_poset(simplicial_stratification(b2));
    auto iso = iso_check(fc, AcycCat::from_poset(fp.poset));
    CHECK(iso.isomorphic);
}

TEST_CASE("salvetti f-vector check") {
    CHECK(salvetti_fvector_check(boundary_simplex(2)).pass);
    CHECK(salvetti_fvector_check(standard_simplex(2)).pass);
    CHECK(salvetti_fvector_check(simplicial_complex(4, {{0, 1, 2}, {1, 2, 3}})).pass);
}

TEST_CASE("enriched roundtrip: hexagon flow category") {
    auto hex = fixtures::hexagon();
    EnrichedRoundtripReport rep = roundtrip_enriched(hex.flow.cat);
    CHECK(rep.pass);
    CHECK(rep.num_strata == 2);
}
