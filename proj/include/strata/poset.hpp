#ifndef STRATA_POSET_HPP
#define STRATA_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/homology.hpp"
#include "strata/simpset.hpp"

namespace strata {

// Finite poset with Hasse diagram and cached reachability.
class FinPoset {
public:
    FinPoset() = default;
    static FinPoset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                std::vector<std::string> names = {});
    // Reflexive-transitive closure of an arbitrary relation (must be acyclic).
    static FinPoset from_relations(int n, const std::vector<std::pair<int, int>>& rels,
                                   std::vector<std::string> names = {});
    static FinPoset antichain(int n);
    static FinPoset chain(int n);  // [n-1] = {0 < 1 < ... < n-1}

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool less(int a, int b) const { return a != b && leq_[a][b]; }
    const std::string& name(int a) const { return names_[a]; }
    std::optional<int> find(const std::string& nm) const;

    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> down_set(int x) const;  // {y : y <= x}
    std::vector<int> up_set(int x) const;    // {y : y >= x}
    std::vector<int> strictly_below(int x) const;
    std::vector<int> strictly_above(int x) const;
    int height(int x) const;  // longest chain ending at x, counted by edges
    std::vector<int> minimal_elements() const;

    // Elements strictly between a and b.
    std::vector<int> open_interval(int a, int b) const;
    FinPoset induced(const std::vector<int>& elements) const;

    FinPoset adjoin_bottom(const std::string& name = "0^") const;
    FinPoset opposite() const;

    void validate() const;  // antisymmetry / acyclicity

private:
    int n_ = 0;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::string> names_;
};

// Order complex: nondegenerate k-simplices are strict chains x0 < ... < xk.
struct OrderComplexResult {
    SimpSet space;
    std::vector<std::vector<std::vector<int>>> chains;  // per dim, idx -> element list
};

OrderComplexResult order_complex(const FinPoset& p);

// Isomorphism search via (height, degree) refinement with backtracking.
std::optional<std::vector<int>> poset_iso(const FinPoset& a, const FinPoset& b);

// The join poset P(X) * P(Y) = P(X) + P(X) x P(Y) + P(Y).
struct PosetJoinResult {
    FinPoset poset;
    std::vector<int> from_a;                 // a-element -> join element
    std::vector<int> from_b;                 // b-element -> join element
    std::vector<std::vector<int>> from_pair; // [a][b] -> join element
};

PosetJoinResult poset_join(const FinPoset& a, const FinPoset& b);

// Necessary CW-poset condition (Bjorner): for each x above the unique
// minimum, the order complex of the open interval (0^, x) must have the
// homology and Euler characteristic of a sphere of dimension height(x) - 2.
// This is necessary only; sphere recognition is undecidable in general.
struct CwElementVerdict {
    int element = 0;
    int expected_sphere_dim = 0;
    bool pass = false;
    std::string detail;
};

struct CwCheckReport {
    bool well_formed = false;  // unique minimum exists
    bool pass = false;
    bool necessary_only = true;
    std::vector<CwElementVerdict> verdicts;
};

CwCheckReport cw_poset_necessary_check(const FinPoset& p);

}  // namespace strata

#endif
