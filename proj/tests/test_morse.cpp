#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strata/fixtures.hpp"
#include "strata/morse.hpp"

using namespace strata;

TEST_CASE("regular complex basics") {
    RegComplex c = RegComplex::simplicial(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(c.size() == 4 + 6 + 4);
    CHECK(c.top_dim() == 2);
    CHECK(c.has_signs());
    auto h = homology(c.chain_complex());
    CHECK(h.equals(sphere_homology(2)));

    // Grading violation.
    FinPoset bad = FinPoset::from_covers(2, {{0, 1}});
    CHECK_THROWS_AS(RegComplex::from_graded_poset(bad, {0, 2}), Error);
}

TEST_CASE("dimension function gives the empty matching") {
    RegComplex c = RegComplex::simplicial(3, {{0, 1, 2}});
    std::vector<Rational> f(c.size());
    for (int i = 0; i < c.size(); ++i) f[i] = {c.cell_dim(i), 1};
    Matching m = matching_from_function(c, f);
    CHECK(m.pairs.empty());
    auto rep = validate_matching(c, m);
    CHECK(rep.pass());
    CHECK(static_cast<int>(rep.critical.size()) == c.size());
}

TEST_CASE("figure 3 height matching on the boundary of the 3-simplex") {
    auto hex = fixtures::hexagon();
    CHECK(hex.matching.pairs.size() == 6);
    auto rep = validate_matching(hex.complex, hex.matching);
    CHECK(rep.pass());
    REQUIRE(rep.critical.size() == 2);
    std::set<std::string> crit;
    for (int c : rep.critical) crit.insert(hex.complex.name(c));
    CHECK(crit == std::set<std::string>{"0", "1.2.3"});
}

TEST_CASE("single pair on Delta^1") {
    RegComplex c = RegComplex::simplicial(2, {{0, 1}});
    Matching m;
    m.pairs = {{*c.find("0"), *c.find("0.1")}};
    auto rep = validate_matching(c, m);
    CHECK(rep.pass());
    REQUIRE(rep.critical.size() == 1);
    CHECK(c.name(rep.critical[0]) == "1");
}

TEST_CASE("cyclic matching is rejected with a witness") {
    RegComplex c = RegComplex::simplicial(3, {{0, 1}, {1, 2}, {0, 2}});
    Matching m;
    m.pairs = {{*c.find("0"), *c.find("0.1")},
               {*c.find("1"), *c.find("1.2")},
               {*c.find("2"), *c.find("0.2")}};
    auto rep = validate_matching(c, m);
    CHECK(rep.structurally_valid);
    CHECK_FALSE(rep.acyclic);
    CHECK(rep.witness.find("closed V-path") != std::string::npos);

    // Non-cover pair.
    Matching bad;
    bad.pairs = {{*c.find("0"), *c.find("1.2")}};
    CHECK_FALSE(validate_matching(c, bad).structurally_valid);

    // Doubly matched cell.
    Matching dup;
    dup.pairs = {{*c.find("0"), *c.find("0.1")}, {*c.find("0"), *c.find("0.2")}};
    CHECK_FALSE(validate_matching(c, dup).structurally_valid);
}

TEST_CASE("not a discrete Morse function") {
    RegComplex c = RegComplex::simplicial(2, {{0, 1}});
    // The edge is below both vertices: two down-exceptions.
    std::vector<Rational> f(c.size());
    f[*c.find("0")] = {2, 1};
    f[*c.find("1")] = {2, 1};
    f[*c.find("0.1")] = {1, 1};
    CHECK_THROWS_AS(matching_from_function(c, f), Error);
}

TEST_CASE("morse complex of the hexagon fixture") {
    auto hex = fixtures::hexagon();
    auto res = morse_complex(hex.complex, hex.matching);
    CHECK(res.integer_coefficients);
    REQUIRE(res.critical.size() == 2);
    // Generators in dimensions 0 and 2, zero differential, H = (Z, 0, Z).
    CHECK(res.morse_chain.ranks == std::vector<int>{1, 0, 1});
    CHECK(res.morse_homology.equals(sphere_homology(2)));
    CHECK(res.complex_homology.equals(sphere_homology(2)));
    CHECK(res.homology_matches);
}

TEST_CASE("empty matching reproduces the chain complex") {
    RegComplex c = RegComplex::simplicial(3, {{0, 1, 2}});
    auto res = morse_complex(c, Matching{});
    CHECK(res.morse_chain.ranks == c.chain_complex().ranks);
    CHECK(res.morse_homology.equals(homology(c.chain_complex())));
}

TEST_CASE("maximal matching on Delta^2 leaves one critical vertex") {
    RegComplex c = RegComplex::simplicial(3, {{0, 1, 2}});
    Matching m;
    m.pairs = {{*c.find("1"), *c.find("0.1")},
               {*c.find("2"), *c.find("0.2")},
               {*c.find("1.2"), *c.find("0.1.2")}};
    auto rep = validate_matching(c, m);
    CHECK(rep.pass());
    auto res = morse_complex(c, m);
    CHECK(res.morse_chain.ranks == std::vector<int>{1, 0, 0});
    CHECK(res.morse_homology.reduced_point());
}

TEST_CASE("v-paths on the circle fixture") {
    auto circ = fixtures::circle();
    auto rep = validate_matching(circ.complex, circ.matching);
    CHECK(rep.pass());
    REQUIRE(rep.critical.size() == 2);
    int b = *circ.complex.find("b");
    int e2 = *circ.complex.find("e2");
    auto paths = v_paths(circ.complex, circ.matching, e2, b);
    CHECK(paths.size() == 2);
    // The two path signs cancel: the Morse differential vanishes and the
    // Morse homology is that of the circle.
    auto res = morse_complex(circ.complex, circ.matching);
    CHECK(res.morse_homology.equals(sphere_homology(1)));
    CHECK(res.morse_chain.boundary[1][0][0] == 0);
}

TEST_CASE("flow category of the circle") {
    auto circ = fixtures::circle();
    CHECK(circ.flow.cat.num_objects() == 2);
    CHECK(validate(circ.flow.cat).pass);
    // Two V-paths as a discrete hom poset.
    int lo = *circ.flow.cat.find_object("b");
    int hi = *circ.flow.cat.find_object("e2");
    CHECK(circ.flow.cat.hom_poset(lo, hi).size() == 2);
    auto res = classify_flow(circ.flow);
    CHECK(res.num_strata == 2);
    CHECK(res.homology.equals(sphere_homology(1)));
    // The double classifying space has the homology of the original complex.
    CHECK(res.homology.equals(homology(circ.complex.chain_complex())));
    CHECK(res.hom_shape_ok);
}

TEST_CASE("flow category of the hexagon and B^2C(h)") {
    auto hex = fixtures::hexagon();
    CHECK(validate(hex.flow.cat).pass);
    int lo = *hex.flow.cat.find_object("0");
    int hi = *hex.flow.cat.find_object("1.2.3");
    // Hom poset: face poset of the boundary of [1,2,3], six elements, whose
    // classifying space is a hexagon boundary.
    const FinPoset& hp = hex.flow.cat.hom_poset(lo, hi);
    CHECK(hp.size() == 6);
    auto oc = order_complex(hp);
    CHECK(oc.space.f_vector() == std::vector<int>{6, 6});
    CHECK(homology(oc.space).equals(sphere_homology(1)));

    auto res = classify_flow(hex.flow);
    CHECK(res.num_strata == 2);
    CHECK(res.cell_counts == std::vector<int>{2, 6, 6});
    CHECK(res.homology.equals(sphere_homology(2)));
    CHECK(res.homology.equals(homology(hex.complex.chain_complex())));
    CHECK(res.hom_shape_ok);
    // The diagonal model is finer than the cell table but has the same
    // homotopy-invariant content.
    CHECK(res.space.space.euler() == 2);
}

TEST_CASE("one-object flow category") {
    RegComplex c = RegComplex::simplicial(1, {{0}});
    FlowCategory fc = flow_category(c, Matching{});
    CHECK(fc.cat.num_objects() == 1);
    auto res = classify_flow(fc);
    CHECK(res.num_strata == 1);
    CHECK(res.space.space.f_vector() == std::vector<int>{1});
}

TEST_CASE("gap > 1 without supplied homs raises") {
    auto hex = fixtures::hexagon();
    CHECK_THROWS_AS(flow_category(hex.complex, hex.matching), Error);
}

TEST_CASE("mod-2 route on an unsigned complex") {
    FinPoset p = FinPoset::from_relations(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}},
                                          {"a", "b", "e1", "e2"});
    RegComplex c = RegComplex::from_graded_poset(p, {0, 0, 1, 1});
    CHECK_FALSE(c.has_signs());
    CHECK(c.betti_mod2() == std::vector<int>{1, 1});
    Matching m;
    m.pairs = {{*c.find("a"), *c.find("e1")}};
    auto res = morse_complex(c, m);
    CHECK_FALSE(res.integer_coefficients);
    CHECK(res.morse_betti_mod2 == res.complex_betti_mod2);
}
