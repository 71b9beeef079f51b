#ifndef STRATA_RANDOM_GEN_HPP
#define STRATA_RANDOM_GEN_HPP

#include <cstdint>

#include "strata/acyccat.hpp"
#include "strata/morse.hpp"
#include "strata/strat.hpp"

namespace strata {

// Deterministic splittable generator (splitmix64 core); identical across
// platforms and thread schedules.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
    bool chance(std::uint64_t num, std::uint64_t den);

    static Rng split(std::uint64_t seed, std::uint64_t index);
};

// Free category on a random acyclic multigraph: morphisms are directed paths,
// composition is concatenation. Hom sizes are capped by resampling.
AcycCat random_acyclic_category(std::uint64_t seed, int max_objects, int max_hom);

// Random simplicial complex with at most max_cells nondegenerate simplices.
SimpSet random_complex(std::uint64_t seed, int max_cells, int max_vertices = 6);

// Random poset-labeled complex; mixes labeling strategies (fully random,
// simplicial, dimension-coarsened) so condition outcomes vary.
StratSpace random_labeled_complex(std::uint64_t seed, int max_cells);

RegComplex random_simplicial_regcomplex(std::uint64_t seed, int max_cells);

// Greedy random acyclic matching on a regular complex.
Matching random_acyclic_matching(const RegComplex& c, std::uint64_t seed);

}  // namespace strata

#endif
