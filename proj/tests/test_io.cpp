#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/export_off.hpp"
#include "strata/fixtures.hpp"
#include "strata/json_io.hpp"
#include "strata/random_gen.hpp"
#include "strata/stellar.hpp"

using namespace strata;

namespace {

bool simpset_identical(const SimpSet& a, const SimpSet& b) {
    if (a.f_vector() != b.f_vector()) return false;
    for (int d = 0; d <= a.dim(); ++d)
        for (int i = 0; i < a.count(d); ++i) {
            if (a.name(SimplexRef{d, i}) != b.name(SimplexRef{d, i})) return false;
            for (int k = 0; k <= d && d >= 1; ++k)
                if (a.face_entry(SimplexRef{d, i}, k) != b.face_entry(SimplexRef{d, i}, k))
                    return false;
        }
    return true;
}

}  // namespace

TEST_CASE("simpset json round trip is exact") {
    std::vector<SimpSet> battery = {standard_simplex(3), boundary_simplex(2),
                                    nondegenerate_nerve(fixtures::hourglass()).space};
    for (int i = 0; i < 10; ++i) battery.push_back(random_complex(Rng::split(31, i).next(), 15));
    // A space with genuinely degenerate face entries: the diagonal of the
    // suspension fixture.
    battery.push_back(classifying_space(fixtures::suspension_circle()).space);
    for (const SimpSet& s : battery) {
        Json j = simpset_to_json(s);
        SimpSet back = simpset_from_json(j);
        CHECK(simpset_identical(s, back));
        CHECK(simpset_to_json(back) == j);
    }
}

TEST_CASE("poset json round trip") {
    FinPoset p = FinPoset::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}});
    Json j = poset_to_json(p);
    FinPoset back = poset_from_json(j);
    REQUIRE(back.size() == p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == back.leq(a, b));
    CHECK(poset_to_json(back) == j);
}

TEST_CASE("category json round trip (discrete and simpset tiers)") {
    {
        AcycCat c = fixtures::hourglass();
        Json j = category_to_json(c);
        AcycCat back = category_from_json(j);
        CHECK(validate(back).pass);
        CHECK(iso_check(c, back).isomorphic);
        CHECK(category_to_json(back) == j);
    }
    {
        AcycCat c = fixtures::suspension_circle();
        Json j = category_to_json(c);
        AcycCat back = category_from_json(j);
        CHECK(validate(back).pass);
        CHECK(back.tier() == HomTier::SimpSetEnriched);
        ClassifyingSpace bc = classifying_space(back);
        CHECK(homology(bc.space).equals(sphere_homology(2)));
    }
}

TEST_CASE("category json rejects malformed input") {
    Json j;
    j["objects"] = Json::array({"x", "y"});
    j["homs"]["x->q"] = {{"kind", "discrete"}, {"elements", Json::array({"f"})}};
    CHECK_THROWS_AS(category_from_json(j), Error);

    Json j2;
    j2["objects"] = Json::array({"x", "y"});
    j2["homs"]["x->y"] = {{"kind", "mystery"}};
    CHECK_THROWS_AS(category_from_json(j2), Error);
}

TEST_CASE("strat json round trip") {
    StratifiedBC sbc = unstable_stratification(fixtures::hourglass());
    Json j = strat_to_json(sbc.strat);
    StratSpace back = strat_from_json(j);
    CHECK(back.space.f_vector() == sbc.strat.space.f_vector());
    CHECK(back.label == sbc.strat.label);
    CHECK(strat_to_json(back) == j);
    CHECK(check_conditions(back).all_pass());
}

TEST_CASE("matching json round trip") {
    auto hex = fixtures::hexagon();
    Json j = matching_to_json(hex.complex, hex.matching);
    MatchingFile back = matching_from_json(j);
    CHECK(back.complex.size() == hex.complex.size());
    CHECK(back.matching.pairs.size() == hex.matching.pairs.size());
    CHECK(validate_matching(back.complex, back.matching).pass());
    CHECK(matching_to_json(back.complex, back.matching) == j);
}

TEST_CASE("off export") {
    // B[2] is vertex-faithful: direct export with 3 vertices and 1 triangle.
    ClassifyingSpace b2 = classifying_space(fixtures::chain_category(2));
    std::string off = export_off(b2.space);
    CHECK(off.substr(0, 4) == "OFF\n");
    CHECK(off.find("3 1 0\n") != std::string::npos);

    // The hourglass BC shares all three vertices between its two triangles:
    // barycentric fanning yields 3 + 2 vertices and 6 triangles.
    NerveData fig = nondegenerate_nerve(fixtures::hourglass());
    std::string off2 = export_off(fig.space);
    CHECK(off2.find("5 6 0\n") != std::string::npos);

    // Determinism.
    CHECK(export_off(fig.space) == off2);

    SimpSetBuilder deep;
    CHECK_THROWS_AS(export_off(standard_simplex(4)), Error);
}
