#ifndef STRATA_HARNESS_HPP
#define STRATA_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

// Batch property harnesses over seeded random instances. Every harness has a
// serial reference path and an OpenMP path over the same per-sample kernel;
// results are identical by construction (per-index seed split, index-ordered
// aggregation).
struct HarnessResult {
    int samples = 0;
    int failures = 0;
    std::vector<std::string> witnesses;  // first few, in index order

    bool pass() const { return failures == 0; }
};

// Face-category round trip on random acyclic categories.
HarnessResult roundtrip_harness(int count, std::uint64_t seed, bool parallel,
                                int max_objects = 5, int max_hom = 3);

// Stratification condition implications on random labeled complexes.
HarnessResult implications_harness(int count, std::uint64_t seed, bool parallel,
                                   int max_cells = 12);

// Join laws: reduced Euler characteristic and the face poset of the join.
HarnessResult join_law_harness(int count, std::uint64_t seed, bool parallel,
                               int max_cells = 8);

// Morse homology equals complex homology on random acyclic matchings.
HarnessResult morse_harness(int count, std::uint64_t seed, bool parallel, int max_cells = 50);

// cone(X) has point homology.
HarnessResult cone_point_harness(int count, std::uint64_t seed, bool parallel,
                                 int max_cells = 10);

// Conical charts verify and cover BC on random categories.
HarnessResult chart_harness(int count, std::uint64_t seed, bool parallel, int max_objects = 4,
                            int max_hom = 3);

// Inner horn filling (n <= 3) on random categories.
HarnessResult horn_harness(int count, std::uint64_t seed, bool parallel, int max_objects = 4,
                           int max_hom = 2);

}  // namespace strata

#endif
