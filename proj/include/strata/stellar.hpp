#ifndef STRATA_STELLAR_HPP
#define STRATA_STELLAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/acyccat.hpp"
#include "strata/strat.hpp"

namespace strata {

// BC with each nondegenerate cell labeled by the target (unstable) or source
// (stable) object of its chain; the poset is P(C).
struct StratifiedBC {
    ClassifyingSpace bc;
    StratSpace strat;
};

StratifiedBC unstable_stratification(const AcycCat& c);
StratifiedBC stable_stratification(const AcycCat& c);

// The lower star of an object: D_x = B(C down x) with its boundary
// BC_{<x}, the explicit cone isomorphism h_x, and the attaching map s_x.
struct StellarCell {
    int object = 0;
    CommaResult comma;           // C down x (or x down C for the dual)
    NerveData dome;              // D_x
    NerveData boundary;          // BC_{<x} (may be empty)
    ConeResult cone_model;       // boundary joined with the apex 1_x
    // Images of the cone isomorphism h_x and the attaching map s_x,
    // per dimension and index of dome cells.
    std::vector<std::vector<FormalSimplex>> h_image;       // into cone_model.space
    std::vector<std::vector<FormalSimplex>> attach_image;  // into BC
    std::vector<SimplexRef> interior;  // cells of D_x ending at 1_x
    std::vector<int> boundary_object_map;    // boundary object -> comma object
    std::vector<int> boundary_morphism_map;  // boundary morphism -> comma morphism

    SimplicialMap h_map() const { return {&dome.space, &cone_model.space, h_image}; }
    SimplicialMap attach_map(const SimpSet& bc_space) const {
        return {&dome.space, &bc_space, attach_image};
    }
};

// Lower star: D_x = B(C down x), boundary BC_{<x}, cone model
// boundary * {1_x}. Upper star is the dual with the apex first.
StellarCell lower_star(const AcycCat& c, int x, const NerveData& bc);
StellarCell upper_star(const AcycCat& c, int x, const NerveData& bc);

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string w) {
        pass = false;
        failures.push_back(std::move(w));
    }
    std::string to_string() const;
};

// Link identification: boundary k-cells correspond to nondegenerate (k+1)-chains
// of C ending at x, s_x(D_x^o) must be the open stratum and s_x(D_x)
// its closure, cell-exactly.
CheckReport verify_stratum_equals_star(const AcycCat& c, int x, const NerveData& bc);

// Cylindrical structure on the unstable stratification: parameter sets
// P_{x,y} = C(x,y) with b maps given by postcomposition.
struct CylStructure {
    const AcycCat* cat = nullptr;
    std::vector<StellarCell> stars;  // per object
    // b_maps[y][u] : cell of D_x -> cell of D_y for u in C(x,y), stored as a
    // per-dimension index map aligned with stars[x].dome.
    std::map<std::pair<int, int>, std::vector<std::vector<SimplexRef>>> b_maps;  // key (u, x)
};

CylStructure cylindrical_structure(const AcycCat& c, const NerveData& bc);

// Verifies the three commuting diagrams of cylindrical normality, the
// embedding condition, and the coverage of each dome by parameter-indexed
// interiors.
CheckReport verify_cylindrical(const AcycCat& c, const CylStructure& cyl);

// Objects = strata, homs = parameter sets, composition = the c maps.
AcycCat extract_face_category(const StratSpace& strat, const CylStructure& cyl);

// For a simplicially-stratified space: the face category whose homs are the
// face occurrences (iterated face positions), reducing to the face poset for
// regular complexes.
AcycCat simplicial_face_category(const SimpSet& x);

struct RoundtripReport {
    bool pass = false;
    IsoReport iso;
    CheckReport checks;
};

// Executable round trip: build the unstable stratification, verify
// the cylindrical structure, extract the face category, and exhibit an
// isomorphism with the original category.
RoundtripReport roundtrip(const AcycCat& c);

// Poset-enriched structural mode: the classifying-space strata are counted
// and each extracted hom complex (rebuilt from the diagonal) must be
// isomorphic to the nerve of the corresponding hom poset.
struct EnrichedRoundtripReport {
    bool pass = false;
    int num_strata = 0;
    CheckReport checks;
};

EnrichedRoundtripReport roundtrip_enriched(const AcycCat& c);

// Salvetti-style check: for the simplicial stratification of a complex, the
// classifying space of the extracted face category has the f-vector of the
// barycentric subdivision.
CheckReport salvetti_fvector_check(const SimpSet& x);

}  // namespace strata

#endif
