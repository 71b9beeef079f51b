#ifndef STRATA_ACYCCAT_HPP
#define STRATA_ACYCCAT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/bisimpset.hpp"
#include "strata/poset.hpp"
#include "strata/simpset.hpp"

namespace strata {

// A non-identity morphism of a discrete-tier acyclic category.
struct Morphism {
    std::string name;
    int src = 0;
    int tgt = 0;
};

enum class HomTier { Discrete, PosetEnriched, SimpSetEnriched };

// Finite acyclic category. Objects are always discrete; homs between
// distinct objects are finite sets (discrete tier), finite posets whose
// nerves model the hom spaces (poset-enriched tier), or finite simplicial
// sets (simpset-enriched tier, no composition supported). Identities are
// implicit throughout.
class AcycCat {
public:
    explicit AcycCat(HomTier tier = HomTier::Discrete) : tier_(tier) {}

    HomTier tier() const { return tier_; }
    int num_objects() const { return static_cast<int>(objects_.size()); }
    const std::string& object_name(int x) const { return objects_.at(x); }
    std::optional<int> find_object(const std::string& nm) const;
    int add_object(std::string name);

    // --- discrete tier ---
    int add_morphism(std::string name, int src, int tgt);
    void set_compose(int g, int f, int gf);  // g after f
    int num_morphisms() const { return static_cast<int>(mors_.size()); }
    const Morphism& morphism(int id) const { return mors_.at(id); }
    const std::vector<int>& hom(int x, int y) const;  // morphism ids
    int compose(int g, int f) const;
    std::optional<int> find_morphism(const std::string& nm) const;

    // --- poset-enriched tier ---
    void set_hom_poset(int x, int y, FinPoset p);
    void set_compose_table(int x, int y, int z, std::vector<std::vector<int>> table);
    const FinPoset& hom_poset(int x, int y) const;
    bool has_hom_poset(int x, int y) const;
    // Value of the composition monotone map on elements (g in hom(y,z),
    // f in hom(x,y)).
    int compose_elements(int x, int y, int z, int g, int f) const;
    bool has_compose_table(int x, int y, int z) const;

    // --- simpset-enriched tier ---
    void set_hom_space(int x, int y, SimpSet s);
    const SimpSet& hom_space(int x, int y) const;
    bool has_hom_space(int x, int y) const;

    bool hom_nonempty(int x, int y) const;  // x != y
    // Reachability poset P(C); requires acyclicity.
    FinPoset underlying_poset() const;

    AcycCat opposite() const;

    // Convenience: the poset P as a discrete category (unique morphisms).
    static AcycCat from_poset(const FinPoset& p);
    // Discrete category re-expressed with antichain hom posets.
    AcycCat as_poset_enriched() const;

private:
    HomTier tier_;
    std::vector<std::string> objects_;
    std::vector<Morphism> mors_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
    std::map<std::pair<int, int>, int> compose_;
    std::map<std::pair<int, int>, FinPoset> hom_posets_;
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> compose_tables_;
    std::map<std::pair<int, int>, SimpSet> hom_spaces_;
    std::vector<int> empty_hom_;
};

struct ValidationIssue {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    bool pass = false;
    bool locally_finite = true;  // always true on finite models; reported anyway
    std::vector<ValidationIssue> issues;
    std::string to_string() const;
};

ValidationReport validate(const AcycCat& c);

// --- discrete-tier nerve ------------------------------------------------------

// A cell of the classifying space of a discrete acyclic category: the
// nondegenerate chain it came from.
struct ChainCell {
    int src = 0;             // first object
    std::vector<int> mors;   // morphism ids, source-to-target order; empty = vertex
    int tgt(const AcycCat& c) const {
        return mors.empty() ? src : c.morphism(mors.back()).tgt;
    }
};

struct NerveData {
    SimpSet space;
    std::vector<std::vector<ChainCell>> chains;  // per dim, idx
    std::optional<SimplexRef> find_chain(const AcycCat& c, const ChainCell& cell) const;
};

// Nondegenerate nerve of a discrete-tier category; the classifying space is
// this Delta-complex (faces have empty degeneracy words).
NerveData nondegenerate_nerve(const AcycCat& c);

// --- comma categories (discrete tier) -----------------------------------------

struct CommaObject {
    int object = 0;    // the source object y of u: y -> x
    int morphism = -1; // morphism id into x, or -1 for the identity at x
};

struct CommaResult {
    AcycCat cat;
    std::vector<CommaObject> objects;            // comma object id -> data
    std::vector<int> morphism_underlying;        // comma morphism id -> morphism id in C
    int identity_object = -1;                    // the (x, 1_x) object
};

CommaResult comma_below(const AcycCat& c, int x);  // C down x
CommaResult comma_above(const AcycCat& c, int x);  // x down C

// Full subcategory on the given objects (discrete tier).
struct SubcatResult {
    AcycCat cat;
    std::vector<int> object_map;    // sub object -> original object
    std::vector<int> morphism_map;  // sub morphism -> original morphism
};

SubcatResult full_subcategory(const AcycCat& c, const std::vector<int>& objects);

// --- enriched nerve ------------------------------------------------------------

// A weak chain in a hom poset: the raw form of a q-simplex of its nerve.
using WeakChain = std::vector<int>;

struct EnrichedGenerator {
    std::vector<int> objects;          // x0 < ... < xp
    std::vector<WeakChain> components; // poset tier: q-simplex of hom(x_i, x_{i+1})
    std::vector<SimplexRef> space_components;  // simpset tier
};

struct EnrichedNerve {
    BisimpSet nerve;
    // (p,q) -> generators in BiRef index order.
    std::map<std::pair<int, int>, std::vector<EnrichedGenerator>> gen_lookup;
};

// Nondegenerate bisimplicial nerve of a poset-enriched or simpset-enriched
// category. For the simpset tier the category must have no composable pairs.
EnrichedNerve enriched_nerve(const AcycCat& c);

// A product cell of the enriched classifying space: a chain together with one
// nondegenerate hom-space simplex per step.
struct EnrichedCell {
    std::vector<int> objects;
    std::vector<SimplexRef> components;  // per step, simplex of the hom space model
    int dim = 0;
};

struct ClassifyingSpace {
    // The simplicial-set model: the nondegenerate nerve (discrete tier) or
    // the diagonal of the bisimplicial nerve (enriched tiers).
    SimpSet space;
    // Discrete tier bookkeeping.
    std::optional<NerveData> nerve;
    // Enriched tier bookkeeping.
    std::optional<EnrichedNerve> enriched;
    std::optional<DiagonalResult> diag;
    std::vector<EnrichedCell> cells;      // enriched tiers: the product cells
    std::vector<int> cell_counts;         // per dimension (either tier)
    // Label of each nondegenerate simplex: target object of its chain.
    std::vector<std::vector<int>> simplex_target;
    std::vector<std::vector<int>> simplex_source;
};

ClassifyingSpace classifying_space(const AcycCat& c);

// For the enriched tiers: the simplicial-set model of hom(x, y) used by the
// nerve (the order complex of the hom poset, or the hom space itself).
SimpSet enriched_hom_model(const AcycCat& c, int x, int y);

// --- isomorphism ----------------------------------------------------------------

struct CatIso {
    std::vector<int> object_map;
    // Discrete tier: morphism id -> morphism id.
    std::vector<int> morphism_map;
};

struct IsoReport {
    bool isomorphic = false;
    std::optional<CatIso> iso;
    std::string mismatch;  // certified invariant mismatch when not isomorphic
};

IsoReport iso_check(const AcycCat& a, const AcycCat& b);

}  // namespace strata

#endif
