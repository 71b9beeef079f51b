#ifndef STRATA_FIXTURES_HPP
#define STRATA_FIXTURES_HPP

#include "strata/acyccat.hpp"
#include "strata/morse.hpp"

namespace strata {
namespace fixtures {

// The three-object category with v: x->y, u1,u2: y->z and the composites
// u1v, u2v: x->z. Its classifying space is the "hourglass".
AcycCat hourglass();

// The poset [n] = {0 < ... < n} as a discrete category.
AcycCat chain_category(int n);

// Two objects x, y with C(x,y) = the given number of parallel morphisms.
AcycCat parallel_arrows(int count);

// Two objects with C(x,y) a 3-vertex circle (simpset-enriched tier).
AcycCat suspension_circle();

// Objects a < x < z with C(a,x) = {w, w'}, C(x,z) = {v}, C(a,z) = {m} and
// v o w = v o w' = m: composition is not injective.
AcycCat collapsing_composites();

// Boundary of the 3-simplex as a regular complex, plus the height-function
// matching (six pairs) whose critical cells are [v0] and [v1.v2.v3].
struct HexagonFixture {
    RegComplex complex;
    Matching matching;
    std::vector<std::pair<long long, long long>> height_function;  // per cell id
    FlowCategory flow;  // two objects; hom = face poset of the top face boundary
};

HexagonFixture hexagon();

// Circle with two vertices and two edges, one vertex-edge pair matched.
struct CircleFixture {
    RegComplex complex;
    Matching matching;
    FlowCategory flow;
};

CircleFixture circle();

}  // namespace fixtures
}  // namespace strata

#endif
