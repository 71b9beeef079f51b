#ifndef STRATA_MORSE_HPP
#define STRATA_MORSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/acyccat.hpp"
#include "strata/homology.hpp"
#include "strata/poset.hpp"
#include "strata/strat.hpp"

namespace strata {

// Graded face poset of a finite regular CW complex. Simplicial inputs carry
// integer incidence signs; abstract graded posets work mod 2.
class RegComplex {
public:
    static RegComplex simplicial(int n_vertices, const std::vector<std::vector<int>>& facets);
    // dims per element; signs (optional) on cover pairs (lower, upper).
    static RegComplex from_graded_poset(const FinPoset& p, const std::vector<int>& dims,
                                        const std::map<std::pair<int, int>, int>& signs = {});

    int size() const { return static_cast<int>(dims_.size()); }
    int top_dim() const;
    int cell_dim(int c) const { return dims_.at(c); }
    const std::string& name(int c) const { return names_.at(c); }
    std::optional<int> find(const std::string& nm) const;
    const std::vector<int>& faces(int c) const { return faces_.at(c); }      // covered cells
    const std::vector<int>& cofaces(int c) const { return cofaces_.at(c); }  // covering cells
    bool has_signs() const { return has_signs_; }
    int incidence(int upper, int lower) const;  // +-1 (signed) or 1 (mod 2)

    // Grading along covers and the codimension-2 diamond condition.
    void validate() const;

    ChainComplex chain_complex() const;  // integer when signed
    std::vector<int> betti_mod2() const;

private:
    std::vector<int> dims_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> faces_, cofaces_;
    std::map<std::pair<int, int>, int> signs_;  // (lower, upper) -> incidence
    bool has_signs_ = false;
};

// Partial matching pairing cells with covering cells.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (lower, upper)
};

struct MatchingReport {
    bool structurally_valid = false;  // pairs are covers, each cell used once
    bool acyclic = false;
    std::string witness;             // cycle or structural violation
    std::vector<int> critical;       // unmatched cells
    bool pass() const { return structurally_valid && acyclic; }
};

// Acyclicity via cycle detection in the modified Hasse digraph, cross-checked
// by Kahn-style topological sorting.
MatchingReport validate_matching(const RegComplex& c, const Matching& m);

// The matching induced by a discrete Morse function (values as rationals).
// Throws with a witness if f violates Forman's conditions.
using Rational = std::pair<long long, long long>;
Matching matching_from_function(const RegComplex& c, const std::vector<Rational>& f);

// A gradient path from a face of a critical cell down to a critical cell.
struct VPath {
    std::vector<int> cells;  // sigma_0, tau_1, sigma_1, ..., sigma_r
    int sign = 1;
};

std::vector<VPath> v_paths(const RegComplex& c, const Matching& m, int upper_critical,
                           int lower_critical);

struct MorseComplexResult {
    std::vector<int> critical;
    ChainComplex morse_chain;     // over Z when signed, entries mod 2 otherwise
    bool integer_coefficients = false;
    HomologyReport morse_homology;    // signed case
    HomologyReport complex_homology;  // signed case
    std::vector<int> morse_betti_mod2;
    std::vector<int> complex_betti_mod2;
    bool homology_matches = false;
};

// Generators = critical cells, boundary = signed V-path counts. A homology
// mismatch with the underlying complex is an implementation bug and raises.
MorseComplexResult morse_complex(const RegComplex& c, const Matching& m);

// Poset-enriched flow category: objects are critical cells; hom posets are
// V-path sets for dimension gap 1 and must be supplied for larger gaps.
struct FlowCategory {
    AcycCat cat;                      // PosetEnriched tier
    std::vector<int> critical_cells;  // object index -> cell id
};

FlowCategory flow_category(
    const RegComplex& c, const Matching& m,
    const std::map<std::pair<int, int>, FinPoset>& supplied_homs = {},
    const std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>>& supplied_compose =
        {});

struct ClassifyFlowResult {
    ClassifyingSpace space;   // B^2 C(f)
    StratSpace strat;         // unstable stratification
    int num_strata = 0;
    std::vector<int> cell_counts;  // product cells per dimension
    HomologyReport homology;
    bool hom_shape_ok = false;  // extracted hom complexes match hom-poset nerves
    std::string detail;
};

ClassifyFlowResult classify_flow(const FlowCategory& fc);

}  // namespace strata

#endif
