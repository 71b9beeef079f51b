#include "strata/fixtures.hpp"

namespace strata {
namespace fixtures {

AcycCat hourglass() {
    AcycCat c(HomTier::Discrete);
    int x = c.add_object("x");
    int y = c.add_object("y");
    int z = c.add_object("z");
    int v = c.add_morphism("v", x, y);
    int u1 = c.add_morphism("u1", y, z);
    int u2 = c.add_morphism("u2", y, z);
    int u1v = c.add_morphism("u1v", x, z);
    int u2v = c.add_morphism("u2v", x, z);
    c.set_compose(u1, v, u1v);
    c.set_compose(u2, v, u2v);
    return c;
}

AcycCat chain_category(int n) { return AcycCat::from_poset(FinPoset::chain(n + 1)); }

AcycCat parallel_arrows(int count) {
    AcycCat c(HomTier::Discrete);
    int x = c.add_object("x");
    int y = c.add_object("y");
    for (int i = 0; i < count; ++i) c.add_morphism("u" + std::to_string(i + 1), x, y);
    return c;
}

AcycCat suspension_circle() {
    AcycCat c(HomTier::SimpSetEnriched);
    int x = c.add_object("x");
    int y = c.add_object("y");
    c.set_hom_space(x, y, simplicial_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
    return c;
}

AcycCat collapsing_composites() {
    AcycCat c(HomTier::Discrete);
    int a = c.add_object("a");
    int x = c.add_object("x");
    int z = c.add_object("z");
    int w1 = c.add_morphism("w", a, x);
    int w2 = c.add_morphism("w'", a, x);
    int v = c.add_morphism("v", x, z);
    int m = c.add_morphism("m", a, z);
    c.set_compose(v, w1, m);
    c.set_compose(v, w2, m);
    return c;
}

HexagonFixture hexagon() {
    HexagonFixture out;
    out.complex = RegComplex::simplicial(
        4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto id = [&](const std::string& nm) { return *out.complex.find(nm); };
    // Height function: v0 lowest, pairing every other cell downward.
    out.height_function.assign(out.complex.size(), {0, 1});
    auto set = [&](const std::string& nm, long long v) {
        out.height_function[id(nm)] = {v, 1};
    };
    set("0", 0);
    set("1", 1);
    set("2", 2);
    set("3", 3);
    set("0.1", 1);
    set("0.2", 2);
    set("0.3", 3);
    set("1.2", 4);
    set("1.3", 5);
    set("2.3", 6);
    set("0.1.2", 4);
    set("0.1.3", 5);
    set("0.2.3", 6);
    set("1.2.3", 7);
    out.matching = matching_from_function(out.complex, out.height_function);

    // Supplied hom poset: the face poset of the boundary of [v1,v2,v3].
    FinPoset hexposet = FinPoset::from_relations(
        6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}},
        {"1", "2", "3", "1.2", "1.3", "2.3"});
    std::map<std::pair<int, int>, FinPoset> supplied;
    supplied[{id("0"), id("1.2.3")}] = hexposet;
    out.flow = flow_category(out.complex, out.matching, supplied);
    return out;
}

CircleFixture circle() {
    CircleFixture out;
    FinPoset p = FinPoset::from_relations(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}},
                                          {"a", "b", "e1", "e2"});
    std::map<std::pair<int, int>, int> signs;
    signs[{0, 2}] = -1;  // boundary of each edge is b - a
    signs[{1, 2}] = 1;
    signs[{0, 3}] = -1;
    signs[{1, 3}] = 1;
    out.complex = RegComplex::from_graded_poset(p, {0, 0, 1, 1}, signs);
    out.matching.pairs = {{*out.complex.find("a"), *out.complex.find("e1")}};
    out.flow = flow_category(out.complex, out.matching);
    return out;
}

}  // namespace fixtures
}  // namespace strata
