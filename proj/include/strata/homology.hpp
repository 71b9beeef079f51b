#ifndef STRATA_HOMOLOGY_HPP
#define STRATA_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "strata/simpset.hpp"

namespace strata {

using Zint = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<Zint>>;  // row-major

// Graded free Z-module with integer boundary matrices.
// boundary[n] maps C_n -> C_{n-1}; boundary[0] is the empty map.
struct ChainComplex {
    std::vector<int> ranks;
    std::vector<IntMat> boundary;  // boundary[n]: ranks[n-1] x ranks[n]

    int top_dim() const { return static_cast<int>(ranks.size()) - 1; }
    // dd = 0 check.
    void validate() const;
};

// Normalized chains: faces landing on degenerate simplices contribute zero.
ChainComplex normalized_chain_complex(const SimpSet& x);

struct HomologyReport {
    std::vector<int> betti;
    std::vector<std::vector<Zint>> torsion;  // torsion[n]: coefficients > 1 for H_n
    long long euler = 0;

    bool reduced_point() const;  // H_0 = Z, everything else 0, no torsion
    bool equals(const HomologyReport& o) const;
    std::string to_string() const;
};

struct SmithResult {
    std::vector<Zint> diagonal;  // nonzero invariant factors d1 | d2 | ...
    int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithResult smith_normal_form(IntMat m);

HomologyReport homology(const ChainComplex& c);
HomologyReport homology(const SimpSet& x);

// H of the n-sphere (unreduced), n >= 0; n = -1 gives the empty space.
HomologyReport sphere_homology(int n);
HomologyReport point_homology();

}  // namespace strata

#endif
