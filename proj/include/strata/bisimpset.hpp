#ifndef STRATA_BISIMPSET_HPP
#define STRATA_BISIMPSET_HPP

#include <map>
#include <string>
#include <vector>

#include "strata/simpset.hpp"

namespace strata {

// A bi-nondegenerate generator of a bisimplicial set, addressed by bidegree.
struct BiRef {
    int p = 0;
    int q = 0;
    int idx = 0;
    auto operator<=>(const BiRef&) const = default;
};

// s^h_{hword} s^v_{vword} (target), both words in normal form.
struct BiFormal {
    DegenWord hword;
    DegenWord vword;
    BiRef target;

    int p() const { return target.p + static_cast<int>(hword.size()); }
    int q() const { return target.q + static_cast<int>(vword.size()); }
    auto operator<=>(const BiFormal&) const = default;
};

// Levelwise finite bisimplicial set given by bi-nondegenerate generators
// with horizontal and vertical faces stored in normal form.
class BisimpSet {
public:
    int count(int p, int q) const;
    const std::string& name(BiRef g) const;
    const BiFormal& hface_entry(BiRef g, int i) const;  // g.p >= 1
    const BiFormal& vface_entry(BiRef g, int j) const;  // g.q >= 1

    BiFormal hface(const BiFormal& x, int i) const;
    BiFormal vface(const BiFormal& x, int j) const;

    // Checks bisimplicial identities on all generators.
    void validate() const;

    std::vector<BiRef> all_generators() const;  // deterministic order

private:
    friend class BisimpSetBuilder;
    // generators keyed by (p, q)
    std::map<std::pair<int, int>, std::vector<std::vector<BiFormal>>> hfaces_;
    std::map<std::pair<int, int>, std::vector<std::vector<BiFormal>>> vfaces_;
    std::map<std::pair<int, int>, std::vector<std::string>> names_;
};

class BisimpSetBuilder {
public:
    BiRef add(int p, int q, std::string name);
    void set_hface(BiRef g, int i, BiFormal f);
    void set_vface(BiRef g, int j, BiFormal f);
    BisimpSet build(bool run_validate = true);

private:
    BisimpSet out_;
};

// The diagonal simplicial set of a bisimplicial set.
struct DiagonalCell {
    DegenWord hword;
    DegenWord vword;
    BiRef gen;
    auto operator<=>(const DiagonalCell&) const = default;
};

struct DiagonalResult {
    SimpSet space;
    std::vector<std::vector<DiagonalCell>> cells;  // per dim, idx
};

DiagonalResult diagonal(const BisimpSet& b);

}  // namespace strata

#endif
