#ifndef STRATA_STRAT_HPP
#define STRATA_STRAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/poset.hpp"
#include "strata/simpset.hpp"

namespace strata {

// A poset-labeled simplicial set: every nondegenerate simplex carries exactly
// one label; the stratum of a label is the union of its open cells.
struct StratSpace {
    SimpSet space;
    FinPoset poset;
    std::vector<std::vector<int>> label;  // per dim, idx -> poset element

    int label_of(SimplexRef s) const { return label[s.dim][s.idx]; }
    void validate() const;
    // Labels actually used (the face poset's underlying set P(X)).
    std::vector<int> used_labels() const;
};

// All nondegenerate simplices in the closure of the stratum of lam.
std::vector<SimplexRef> stratum_closure(const StratSpace& x, int lam);
std::vector<SimplexRef> stratum_cells(const StratSpace& x, int lam);

struct ConditionVerdict {
    bool pass = true;
    std::string witness;
};

struct StratReport {
    ConditionVerdict continuity;      // (1)
    ConditionVerdict openness;        // (2)
    ConditionVerdict closure_order;   // (3)
    ConditionVerdict frontier;        // (4)
    ConditionVerdict closed_unions;   // (5)
    ConditionVerdict connected;
    ConditionVerdict locally_closed;
    ConditionVerdict surjective;
    // Per-stratum verdicts, keyed by label index.
    std::vector<std::pair<int, bool>> connected_by_stratum;
    std::vector<std::pair<int, bool>> locally_closed_by_stratum;
    // CW conditions; trivially satisfied on finite models but reported.
    ConditionVerdict closure_finite;
    ConditionVerdict weak_topology;

    bool conditions_pass() const {
        return continuity.pass && openness.pass && closure_order.pass && frontier.pass &&
               closed_unions.pass;
    }
    bool all_pass() const {
        return conditions_pass() && connected.pass && locally_closed.pass && surjective.pass;
    }
    std::string to_string() const;
};

// Executable versions of the five conditions plus connectivity and local
// closedness. The openness criterion uses singleton closures; with
// `exhaustive_subsets` every subset of the label poset is checked instead
// (closure commutes with finite unions, so the two agree; the flag is the
// oracle route).
StratReport check_conditions(const StratSpace& x, bool exhaustive_subsets = false);

// Each nondegenerate simplex labels itself; the poset is the face relation.
StratSpace simplicial_stratification(const SimpSet& x);

// Join of stratified spaces over the join poset.
struct JoinStratResult {
    StratSpace strat;
    JoinResult join_data;
    PosetJoinResult poset_data;
};

JoinStratResult join_strat(const StratSpace& a, const StratSpace& b);
JoinStratResult cone_strat(const StratSpace& x);

// Image of the labeling with mu <= lam iff e_mu lies in the closure of
// e_lam. Requires condition (3).
struct FacePosetResult {
    FinPoset poset;
    std::vector<int> from_label;  // poset element of each original label, -1 if unused
};

FacePosetResult face_poset(const StratSpace& x);

}  // namespace strata

#endif
