#ifndef STRATA_EXITPATH_HPP
#define STRATA_EXITPATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/stellar.hpp"
#include "strata/strat.hpp"

namespace strata {

// Exit recognition for simplices of the chain-generated fragment: vertex
// labels must be monotone and every open face must sit in the stratum of its
// last vertex.
bool is_exit_simplex(const StratSpace& x, const FormalSimplex& s);

// The monotonicity half on a bare vertex-label sequence (for probes that are
// not fragment simplices, such as an edge read against its orientation).
bool is_exit_vertex_labels(const FinPoset& p, const std::vector<int>& labels);

// Conical chart at an object: D_x joined with the boundary of the dual dome,
// mapped into BC by n_x.
struct ConicalChart {
    int object = 0;
    StellarCell star;     // D_x with h_x and s_x
    StellarCell costar;   // D_x^op with h_x^op and t_x
    JoinResult chart;     // D_x * boundary(D_x^op)
    // n_x on cells of the chart, into BC.
    std::vector<std::vector<SimplexRef>> n_image;
    // Cells of BC whose closure contains the vertex x (the open-chart image).
    std::vector<SimplexRef> vertex_star;
    // Chart cells mapping bijectively onto vertex_star: interior a-cells and
    // pairs with interior a-part.
    std::vector<SimplexRef> open_cells;
};

ConicalChart build_chart(const AcycCat& c, const NerveData& bc, int x);

struct ChartReport {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string w) {
        pass = false;
        failures.push_back(std::move(w));
    }
};

// (a) n_x is simplicial and restricts to a bijection open-chart cells ->
// vertex-star cells; (b) the a-restriction is s_x and the apex-side
// restriction is t_x through h_x^op; (c) the open-chart cells match
// D_x^o x cone^o(boundary) dimensionwise; (d) coverage is checked by
// chart_cover below.
ChartReport verify_chart(const AcycCat& c, const NerveData& bc, const ConicalChart& chart);

struct CoverReport {
    bool pass = false;
    std::vector<int> uncovered;  // flat ids of uncovered cells (empty on pass)
};

// Every cell of BC lies in some chart's vertex star.
CoverReport chart_cover(const AcycCat& c, const NerveData& bc);

// Inner horn data: faces of an n-simplex with face k missing (0 < k < n).
struct Horn {
    int n = 0;
    int k = 0;
    std::vector<FormalSimplex> faces;  // indices 0..n, entry k ignored
};

// Exhaustive filler search over fragment simplices, smallest cell first.
std::optional<FormalSimplex> horn_fill(const StratSpace& x, const Horn& horn);

struct HornsReport {
    long long horns_checked = 0;
    long long filled = 0;
    bool all_filled = false;
    std::string first_unfilled;
    // A capped sample of (horn description, filler cell) pairs.
    std::vector<std::pair<std::string, std::string>> fillers;
};

// Enumerates every compatible inner horn of the fragment in dimensions
// 2..max_dim and fills each.
HornsReport fill_all_inner_horns(const StratSpace& x, int max_dim);

}  // namespace strata

#endif
