#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strata/acyccat.hpp"
#include "strata/fixtures.hpp"
#include "strata/random_gen.hpp"

using namespace strata;

namespace {

// Oracle: the number of k-chains of a discrete category is the chain count
// of P(C) weighted by hom cardinalities, enumerated by brute force over
// object chains.
long long chain_polynomial_count(const AcycCat& c, int k) {
    FinPoset p = c.underlying_poset();
    long long total = 0;
    std::vector<int> chain;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(chain.size()) == k + 1) {
            long long prod = 1;
            for (size_t i = 0; i + 1 < chain.size(); ++i)
                prod *= static_cast<long long>(c.hom(chain[i], chain[i + 1]).size());
            total += prod;
            return;
        }
        for (int y = 0; y < p.size(); ++y) {
            if (!chain.empty() && !(p.less(chain.back(), y))) continue;
            chain.push_back(y);
            rec();
            chain.pop_back();
        }
    };
    rec();
    return total;
}

}  // namespace

TEST_CASE("hourglass category validates") {
    AcycCat c = fixtures::hourglass();
    auto rep = validate(c);
    CHECK(rep.pass);
    CHECK(rep.locally_finite);
}

TEST_CASE("validation failures") {
    // Inverse pair between distinct objects.
    AcycCat bad(HomTier::Discrete);
    int x = bad.add_object("x");
    int y = bad.add_object("y");
    bad.add_morphism("f", x, y);
    bad.add_morphism("g", y, x);
    auto rep = validate(bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.issues[0].axiom == "acyclicity");

    // Non-identity endomorphism (a monoid).
    AcycCat mono(HomTier::Discrete);
    int m = mono.add_object("m");
    int e = mono.add_morphism("e", m, m);
    mono.set_compose(e, e, e);
    auto rep2 = validate(mono);
    CHECK_FALSE(rep2.pass);
    bool found = false;
    for (const auto& i : rep2.issues)
        if (i.axiom == "identity-endomorphisms") found = true;
    CHECK(found);

    // Missing composite.
    AcycCat miss(HomTier::Discrete);
    int a = miss.add_object("a");
    int b = miss.add_object("b");
    int cc = miss.add_object("c");
    miss.add_morphism("f", a, b);
    miss.add_morphism("g", b, cc);
    auto rep3 = validate(miss);
    CHECK_FALSE(rep3.pass);
}

TEST_CASE("the hourglass category nerve") {
    AcycCat c = fixtures::hourglass();
    NerveData nd = nondegenerate_nerve(c);
    CHECK(nd.space.f_vector() == std::vector<int>{3, 5, 2});
    // Cross-check with the chain polynomial oracle.
    for (int k = 0; k <= 2; ++k) CHECK(nd.space.count(k) == chain_polynomial_count(c, k));
    // Hourglass homology (Z, Z, 0).
    auto h = homology(nd.space);
    CHECK(h.betti == std::vector<int>{1, 1, 0});
    CHECK(h.torsion[0].empty());
    CHECK(h.torsion[1].empty());
    CHECK(nd.space.euler() == 0);
}

TEST_CASE("B[n] is the standard simplex") {
    for (int n = 0; n <= 4; ++n) {
        AcycCat c = fixtures::chain_category(n);
        ClassifyingSpace bc = classifying_space(c);
        CHECK(bc.space.f_vector() == oracles::simplex_f_vector(n));
        CHECK(isomorphic_brute(bc.space, standard_simplex(n)));
    }
}

TEST_CASE("B of a poset equals its order complex") {
    std::vector<FinPoset> battery = {
        FinPoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
        FinPoset::from_covers(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}),
        FinPoset::antichain(4),
    };
    // Seeded random posets on up to 8 elements.
    for (int i = 0; i < 20; ++i) {
        Rng rng = Rng::split(4242, i);
        int n = 2 + static_cast<int>(rng.below(7));
        std::vector<std::pair<int, int>> rels;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.chance(1, 3)) rels.push_back({a, b});
        battery.push_back(FinPoset::from_relations(n, rels));
    }
    for (const auto& p : battery) {
        AcycCat c = AcycCat::from_poset(p);
        NerveData nd = nondegenerate_nerve(c);
        auto oc = order_complex(p);
        CHECK(nd.space.f_vector() == oc.space.f_vector());
        CHECK(isomorphic_brute(nd.space, oc.space));
    }
}

TEST_CASE("comma categories on the hourglass category") {
    AcycCat c = fixtures::hourglass();
    int z = *c.find_object("z");
    CommaResult cz = comma_below(c, z);
    // Objects u1v, u2v, u1, u2, 1_z.
    CHECK(cz.cat.num_objects() == 5);
    CHECK(cz.cat.find_object("u1v").has_value());
    CHECK(cz.cat.find_object("1_z").has_value());
    // Six non-identity morphisms: two triangles over v plus four into 1_z.
    // (The cone structure D_z = cone(two disjoint edges) forces 5 - 6 + 2.)
    CHECK(cz.cat.num_morphisms() == 6);
    NerveData dz = nondegenerate_nerve(cz.cat);
    CHECK(dz.space.f_vector() == std::vector<int>{5, 6, 2});
    CHECK(dz.space.euler() == 1);
    CHECK(homology(dz.space).reduced_point());

    int y = *c.find_object("y");
    CommaResult yup = comma_above(c, y);
    // y down C: objects 1_y, u1, u2; no non-identity morphisms.
    CHECK(yup.cat.num_objects() == 3);
    CHECK(yup.cat.num_morphisms() == 2);  // 1_y -> u1, 1_y -> u2
    // The strictly-above part has no morphisms at all.
    std::vector<int> nonid;
    for (int i = 0; i < yup.cat.num_objects(); ++i)
        if (i != yup.identity_object) nonid.push_back(i);
    SubcatResult above = full_subcategory(yup.cat, nonid);
    CHECK(above.cat.num_morphisms() == 0);

    // Minimal object: C down x is the one-object category.
    int x = *c.find_object("x");
    CommaResult cx = comma_below(c, x);
    CHECK(cx.cat.num_objects() == 1);
    CHECK(cx.cat.num_morphisms() == 0);
}

TEST_CASE("comma on [2]") {
    AcycCat c = fixtures::chain_category(2);
    CommaResult c2 = comma_below(c, *c.find_object("2"));
    // [2] down 2 is isomorphic to [2] itself.
    auto rep = iso_check(c2.cat, c);
    CHECK(rep.isomorphic);
}

TEST_CASE("iso_check") {
    AcycCat c = fixtures::hourglass();
    auto self = iso_check(c, c);
    CHECK(self.isomorphic);

    // hourglass vs its opposite: hom cardinality profiles differ.
    auto op = iso_check(c, c.opposite());
    CHECK_FALSE(op.isomorphic);
    CHECK(op.mismatch == "hom cardinality profile differs");

    // Two presentations of [2].
    AcycCat a = fixtures::chain_category(2);
    AcycCat b(HomTier::Discrete);
    int p2 = b.add_object("two");
    int p0 = b.add_object("zero");
    int p1 = b.add_object("one");
    int f01 = b.add_morphism("f01", p0, p1);
    int f12 = b.add_morphism("f12", p1, p2);
    int f02 = b.add_morphism("f02", p0, p2);
    b.set_compose(f12, f01, f02);
    auto two = iso_check(a, b);
    CHECK(two.isomorphic);

    // Parallel arrows with different counts.
    auto pp = iso_check(fixtures::parallel_arrows(2), fixtures::parallel_arrows(3));
    CHECK_FALSE(pp.isomorphic);
}

TEST_CASE("enriched nerve with one-point homs matches the discrete BC") {
    for (int n = 1; n <= 3; ++n) {
        AcycCat c = fixtures::chain_category(n);
        AcycCat pe = c.as_poset_enriched();
        CHECK(validate(pe).pass);
        ClassifyingSpace enriched_bc = classifying_space(pe);
        ClassifyingSpace discrete_bc = classifying_space(c);
        CHECK(enriched_bc.space.f_vector() == discrete_bc.space.f_vector());
        CHECK(isomorphic_brute(enriched_bc.space, discrete_bc.space));
    }
    // Also with parallel morphisms (antichain homs of size > 1).
    AcycCat fig = fixtures::hourglass();
    ClassifyingSpace eb = classifying_space(fig.as_poset_enriched());
    ClassifyingSpace db = classifying_space(fig);
    CHECK(eb.space.f_vector() == db.space.f_vector());
    CHECK(isomorphic_brute(eb.space, db.space));
}

TEST_CASE("suspension of a circle (hom = S^1)") {
    AcycCat c = fixtures::suspension_circle();
    CHECK(validate(c).pass);
    ClassifyingSpace bc = classifying_space(c);
    CHECK(bc.space.euler() == 2);
    auto h = homology(bc.space);
    CHECK(h.equals(sphere_homology(2)));
    // Product cells: two vertices, plus one cell per hom-space simplex with
    // the dimension shifted by one.
    CHECK(bc.cell_counts == std::vector<int>{2, 3, 3});
}

TEST_CASE("poset-enriched nerve of a nontrivial hom poset") {
    // Two objects with hom poset a chain of length 2: BC is Delta^2
    // quotiented at the ends... combinatorially the diagonal must be
    // 2-dimensional with chi = 1 (a cone over the hom interval).
    AcycCat c(HomTier::PosetEnriched);
    int x = c.add_object("x");
    int y = c.add_object("y");
    c.set_hom_poset(x, y, FinPoset::chain(2));
    CHECK(validate(c).pass);
    ClassifyingSpace bc = classifying_space(c);
    // Cells: 2 vertices; hom model has 2 vertices + 1 edge.
    CHECK(bc.cell_counts == std::vector<int>{2, 2, 1});
    auto h = homology(bc.space);
    // The suspension of an interval is a disk.
    CHECK(h.reduced_point());
}

TEST_CASE("collapsing composites fixture") {
    AcycCat c = fixtures::collapsing_composites();
    CHECK(validate(c).pass);
    NerveData nd = nondegenerate_nerve(c);
    for (int k = 0; k < static_cast<int>(nd.chains.size()); ++k)
        CHECK(nd.space.count(k) == chain_polynomial_count(c, k));
}

TEST_CASE("nerve counts match the chain polynomial on random categories") {
    for (int i = 0; i < 25; ++i) {
        AcycCat c = random_acyclic_category(Rng::split(321, i).next(), 5, 3);
        NerveData nd = nondegenerate_nerve(c);
        for (int k = 0; k < static_cast<int>(nd.chains.size()); ++k)
            CHECK(nd.space.count(k) == chain_polynomial_count(c, k));
    }
}
