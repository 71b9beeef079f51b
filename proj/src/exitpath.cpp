#include "strata/exitpath.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace strata {

bool is_exit_vertex_labels(const FinPoset& p, const std::vector<int>& labels) {
    for (size_t i = 0; i + 1 < labels.size(); ++i)
        if (!p.leq(labels[i], labels[i + 1])) return false;
    return true;
}

bool is_exit_simplex(const StratSpace& x, const FormalSimplex& s) {
    if (!x.space.has(s.target)) throw Error("is_exit_simplex: not a simplex of the space");
    int n = s.dim();
    std::vector<int> vlabels(n + 1);
    for (int i = 0; i <= n; ++i) vlabels[i] = x.label_of(x.space.vertex(s, i));
    if (!is_exit_vertex_labels(x.poset, vlabels)) return false;
    // Every open face must lie in the stratum of its last vertex.
    std::vector<int> subset;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (!subset.empty()) {
            FormalSimplex f = x.space.subface(s, subset);
            if (x.label_of(f.target) != vlabels[subset.back()]) return false;
        }
        for (int v = from; v <= n; ++v) {
            subset.push_back(v);
            bool ok = rec(v + 1);
            subset.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0);
}

// --- charts ------------------------------------------------------------------------

ConicalChart build_chart(const AcycCat& c, const NerveData& bc, int x) {
    if (c.tier() != HomTier::Discrete) throw Error("build_chart: discrete tier only");
    if (x < 0 || x >= c.num_objects()) throw Error("build_chart: unknown object");
    ConicalChart out;
    out.object = x;
    out.star = lower_star(c, x, bc);
    out.costar = upper_star(c, x, bc);

    // boundary of the costar: BC_{>x}.
    out.chart = join(out.star.dome.space, out.costar.boundary.space);

    // Rebuild boundary-of-costar chains in terms of the costar comma data.
    const StellarCell& co = out.costar;

    // n_x on each chart cell.
    out.n_image.resize(out.chart.space.dim() + 1);
    for (int d = 0; d <= out.chart.space.dim(); ++d) {
        for (int i = 0; i < static_cast<int>(out.chart.cells[d].size()); ++i) {
            const JoinCell& jc = out.chart.cells[d][i];
            if (jc.kind == JoinCell::Kind::A) {
                // s_x on D_x cells.
                out.n_image[d].push_back(out.star.attach_image[jc.a.dim][jc.a.idx].target);
                continue;
            }
            if (jc.kind == JoinCell::Kind::B) {
                // t_x on boundary cells: the underlying chain without x.
                const ChainCell& bcell = co.boundary.chains[jc.b.dim][jc.b.idx];
                ChainCell chain;
                int comma_src = co.boundary_object_map[bcell.src];
                chain.src = co.comma.objects[comma_src].object;
                for (int m : bcell.mors)
                    chain.mors.push_back(
                        co.comma.morphism_underlying[co.boundary_morphism_map[m]]);
                auto ref = bc.find_chain(c, chain);
                if (!ref) throw Error("build_chart: t_x image missing");
                out.n_image[d].push_back(*ref);
                continue;
            }
            // Pair (u-chain over x, v-chain in C_{>x}): the composite chain
            // (u_1, ..., u_p, v_0 o u_{p+1}, v_1, ..., v_q).
            const ChainCell& ucell = out.star.dome.chains[jc.a.dim][jc.a.idx];
            const ChainCell& vcell = co.boundary.chains[jc.b.dim][jc.b.idx];
            ChainCell chain;
            chain.src = out.star.comma.objects[ucell.src].object;
            for (int m : ucell.mors)
                chain.mors.push_back(out.star.comma.morphism_underlying[m]);
            // u_{p+1}: the morphism into x carried by the last comma object.
            int last_comma = ucell.src;
            for (int m : ucell.mors) last_comma = out.star.comma.cat.morphism(m).tgt;
            int u_last = out.star.comma.objects[last_comma].morphism;  // may be -1 = 1_x
            int v0_comma = co.boundary_object_map[vcell.src];
            int v0 = co.comma.objects[v0_comma].morphism;  // x -> z_0
            int bridge = (u_last == -1) ? v0 : c.compose(v0, u_last);
            chain.mors.push_back(bridge);
            for (int m : vcell.mors)
                chain.mors.push_back(co.comma.morphism_underlying[co.boundary_morphism_map[m]]);
            auto ref = bc.find_chain(c, chain);
            if (!ref) throw Error("build_chart: composite chain missing");
            out.n_image[d].push_back(*ref);
        }
    }

    // Vertex star: cells whose chain contains x as an object.
    for (int d = 0; d <= bc.space.dim(); ++d)
        for (int i = 0; i < bc.space.count(d); ++i) {
            const ChainCell& ch = bc.chains[d][i];
            int cur = ch.src;
            bool contains = (cur == x);
            for (int m : ch.mors) {
                cur = c.morphism(m).tgt;
                if (cur == x) contains = true;
            }
            if (contains) out.vertex_star.push_back(SimplexRef{d, i});
        }

    // Open-chart cells: interior a-cells and pairs with interior a-part.
    std::set<SimplexRef> interior(out.star.interior.begin(), out.star.interior.end());
    for (int d = 0; d <= out.chart.space.dim(); ++d)
        for (int i = 0; i < static_cast<int>(out.chart.cells[d].size()); ++i) {
            const JoinCell& jc = out.chart.cells[d][i];
            if (jc.kind == JoinCell::Kind::A && interior.count(jc.a))
                out.open_cells.push_back(SimplexRef{d, i});
            else if (jc.kind == JoinCell::Kind::Pair && interior.count(jc.a))
                out.open_cells.push_back(SimplexRef{d, i});
        }
    return out;
}

ChartReport verify_chart(const AcycCat& c, const NerveData& bc, const ConicalChart& chart) {
    ChartReport rep;
    // n_x is a cellwise simplicial map.
    SimplicialMap n{&chart.chart.space, &bc.space, {}};
    n.image.resize(chart.chart.space.dim() + 1);
    for (int d = 0; d < static_cast<int>(chart.n_image.size()); ++d)
        for (SimplexRef t : chart.n_image[d]) n.image[d].push_back(nondeg(t));
    try {
        n.verify();
    } catch (const Error& e) {
        rep.fail(std::string("n_x is not simplicial: ") + e.what());
    }

    // (a) open-chart cells biject with the vertex star.
    std::set<SimplexRef> star_set(chart.vertex_star.begin(), chart.vertex_star.end());
    std::set<SimplexRef> image_set;
    for (SimplexRef s : chart.open_cells) {
        SimplexRef img = chart.n_image[s.dim][s.idx];
        if (!image_set.insert(img).second)
            rep.fail("n_x not injective on open-chart cells at " + chart.chart.space.name(s));
        if (!star_set.count(img))
            rep.fail("open-chart image " + bc.space.name(img) + " lacks the chart vertex");
    }
    if (image_set != star_set) rep.fail("open-chart image differs from the vertex star");

    // (b) restriction identities. The a-part is s_x by construction; check
    // the apex-side against t_x through h_x^op: apex * (boundary cell) must
    // map where t_x sends the corresponding costar cell.
    {
        const StellarCell& co = chart.costar;
        // h_x^op sends costar cells to cone cells; match pure-boundary cells
        // and apex-join cells of the cone model with chart cells over the
        // interior vertex of D_x.
        // Pure b-cells of the chart = t_x images, compare directly:
        for (int d = 0; d <= co.boundary.space.dim(); ++d)
            for (int i = 0; i < co.boundary.space.count(d); ++i) {
                // find the chart cell for this b-part
                const auto& layer = chart.chart.cells[d];
                for (int j = 0; j < static_cast<int>(layer.size()); ++j) {
                    if (layer[j].kind != JoinCell::Kind::B || !(layer[j].b == SimplexRef{d, i}))
                        continue;
                    // t_x of the costar cell containing this boundary chain:
                    // rebuild via attach_image of the costar over the
                    // corresponding comma chain.
                    const ChainCell& bcell = co.boundary.chains[d][i];
                    ChainCell comma_chain;
                    comma_chain.src = co.boundary_object_map[bcell.src];
                    for (int m : bcell.mors)
                        comma_chain.mors.push_back(co.boundary_morphism_map[m]);
                    auto cref = co.dome.find_chain(co.comma.cat, comma_chain);
                    if (!cref) {
                        rep.fail("costar cell lookup failed");
                        continue;
                    }
                    SimplexRef tx = co.attach_image[cref->dim][cref->idx].target;
                    if (!(chart.n_image[d][j] == tx))
                        rep.fail("n_x on the boundary part differs from t_x at " +
                                 co.boundary.space.name(SimplexRef{d, i}));
                }
            }
        // The apex vertex of the chart (interior vertex of D_x) maps to the
        // vertex x = t_x(1_x), and the cells apex * v agree with t_x through
        // h_x^op: both give the chain x -> z_0 -> ... -> z_q.
        bool found_apex = false;
        SimplexRef apex{0, -1};
        for (int j = 0; j < static_cast<int>(chart.chart.cells[0].size()); ++j) {
            const JoinCell& jc = chart.chart.cells[0][j];
            if (jc.kind == JoinCell::Kind::A &&
                std::find(chart.star.interior.begin(), chart.star.interior.end(), jc.a) !=
                    chart.star.interior.end()) {
                found_apex = true;
                apex = jc.a;
                SimplexRef img = chart.n_image[0][j];
                ChainCell vx{chart.object, {}};
                auto xref = bc.find_chain(c, vx);
                if (!xref || !(img == *xref)) rep.fail("chart apex does not map to the vertex");
            }
        }
        if (!found_apex) rep.fail("chart has no apex vertex");
        for (int d = 1; found_apex && d <= chart.chart.space.dim(); ++d) {
            for (int j = 0; j < static_cast<int>(chart.chart.cells[d].size()); ++j) {
                const JoinCell& jc = chart.chart.cells[d][j];
                if (jc.kind != JoinCell::Kind::Pair || !(jc.a == apex)) continue;
                // The costar chain (1_x -> v_0 -> ...) over this boundary cell.
                const ChainCell& bcell = co.boundary.chains[jc.b.dim][jc.b.idx];
                ChainCell costar_chain;
                costar_chain.src = co.comma.identity_object;
                int first_obj = co.boundary_object_map[bcell.src];
                int into_first = -1;
                for (int m : co.comma.cat.hom(co.comma.identity_object, first_obj))
                    into_first = m;
                if (into_first < 0) {
                    rep.fail("costar chain from the identity is missing");
                    continue;
                }
                costar_chain.mors.push_back(into_first);
                for (int m : bcell.mors)
                    costar_chain.mors.push_back(co.boundary_morphism_map[m]);
                auto cref = co.dome.find_chain(co.comma.cat, costar_chain);
                if (!cref) {
                    rep.fail("costar chain lookup failed");
                    continue;
                }
                SimplexRef tx = co.attach_image[cref->dim][cref->idx].target;
                if (!(chart.n_image[d][j] == tx))
                    rep.fail("n_x on apex-side cells differs from t_x at " +
                             chart.chart.space.name(SimplexRef{d, j}));
            }
        }
    }

    // (c) open-chart identity: cells of D_x^o * bd(D_x^op) minus bd(D_x^op)
    // biject with cells of D_x^o x cone^o(bd(D_x^op)), dimensionwise.
    {
        std::map<int, long long> lhs, rhs;
        for (SimplexRef s : chart.open_cells) lhs[s.dim]++;
        long long interior_cells = static_cast<long long>(chart.star.interior.size());
        std::map<int, long long> int_by_dim;
        for (SimplexRef s : chart.star.interior) int_by_dim[s.dim]++;
        // cone^o cells: the apex (dim 0) and apex*b-cells (dim q+1).
        std::map<int, long long> cone_by_dim;
        cone_by_dim[0] = 1;
        for (int q = 0; q <= chart.costar.boundary.space.dim(); ++q)
            cone_by_dim[q + 1] += chart.costar.boundary.space.count(q);
        for (auto [da, na] : int_by_dim)
            for (auto [dc, nc] : cone_by_dim) rhs[da + dc] += na * nc;
        (void)interior_cells;
        if (lhs != rhs) rep.fail("open-chart product identity fails dimensionwise");
    }
    return rep;
}

CoverReport chart_cover(const AcycCat& c, const NerveData& bc) {
    CoverReport rep;
    std::set<SimplexRef> covered;
    for (int x = 0; x < c.num_objects(); ++x) {
        ConicalChart chart = build_chart(c, bc, x);
        covered.insert(chart.vertex_star.begin(), chart.vertex_star.end());
    }
    for (int d = 0; d <= bc.space.dim(); ++d)
        for (int i = 0; i < bc.space.count(d); ++i)
            if (!covered.count(SimplexRef{d, i}))
                rep.uncovered.push_back(d * 1000000 + i);
    rep.pass = rep.uncovered.empty();
    return rep;
}

// --- horn filling --------------------------------------------------------------------

namespace {

// All formal simplices of the fragment in a fixed dimension, ordered by
// (target dim, target idx, word).
std::vector<FormalSimplex> fragment_simplices(const SimpSet& s, int n) {
    std::vector<FormalSimplex> out;
    for (int d = 0; d <= std::min(n, s.dim()); ++d) {
        for (int i = 0; i < s.count(d); ++i) {
            // Words of size n - d over {0..n-1}, strictly decreasing.
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            std::vector<int> cur;
            std::function<void(int)> rec = [&](int start) {
                if (static_cast<int>(cur.size()) == n - d) {
                    DegenWord w(cur.rbegin(), cur.rend());
                    out.push_back(FormalSimplex{w, SimplexRef{d, i}});
                    return;
                }
                for (int v = start; v < n; ++v) {
                    cur.push_back(v);
                    rec(v + 1);
                    cur.pop_back();
                }
            };
            rec(0);
        }
    }
    return out;
}

}  // namespace

std::optional<FormalSimplex> horn_fill(const StratSpace& x, const Horn& horn) {
    if (horn.k <= 0 || horn.k >= horn.n) throw Error("horn_fill: not an inner horn");
    if (static_cast<int>(horn.faces.size()) != horn.n + 1) throw Error("horn_fill: bad arity");
    for (int i = 0; i <= horn.n; ++i) {
        if (i == horn.k) continue;
        if (horn.faces[i].dim() != horn.n - 1) throw Error("horn_fill: face dimension mismatch");
        if (!is_exit_simplex(x, horn.faces[i]))
            throw Error("horn_fill: face " + std::to_string(i) + " is not an exit simplex");
    }
    for (const FormalSimplex& cand : fragment_simplices(x.space, horn.n)) {
        bool ok = true;
        for (int i = 0; i <= horn.n && ok; ++i) {
            if (i == horn.k) continue;
            if (x.space.face(cand, i) != horn.faces[i]) ok = false;
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

HornsReport fill_all_inner_horns(const StratSpace& x, int max_dim) {
    HornsReport rep;
    rep.all_filled = true;
    for (int n = 2; n <= max_dim; ++n) {
        std::vector<FormalSimplex> lower = fragment_simplices(x.space, n - 1);
        for (int k = 1; k < n; ++k) {
            // Enumerate compatible tuples (faces_0..faces_n minus k).
            std::vector<int> positions;
            for (int i = 0; i <= n; ++i)
                if (i != k) positions.push_back(i);
            std::vector<FormalSimplex> chosen(n + 1);
            std::function<void(size_t)> rec = [&](size_t at) {
                if (at == positions.size()) {
                    Horn h{n, k, chosen};
                    ++rep.horns_checked;
                    auto filler = horn_fill(x, h);
                    if (filler) {
                        ++rep.filled;
                        if (rep.fillers.size() < 50) {
                            std::string desc = "L^" + std::to_string(n) + "_" +
                                               std::to_string(k) + "(";
                            for (size_t fi = 0; fi < positions.size(); ++fi) {
                                if (fi) desc += ',';
                                desc += x.space.name(chosen[positions[fi]].target);
                                for (int j : chosen[positions[fi]].word)
                                    desc += "s" + std::to_string(j);
                            }
                            desc += ")";
                            std::string fname = x.space.name(filler->target);
                            for (int j : filler->word) fname += "s" + std::to_string(j);
                            rep.fillers.push_back({desc, fname});
                        }
                    } else {
                        rep.all_filled = false;
                        if (rep.first_unfilled.empty())
                            rep.first_unfilled = "Lambda^" + std::to_string(n) + "_" +
                                                 std::to_string(k) + " at " +
                                                 x.space.name(chosen[k == 0 ? 1 : 0].target);
                    }
                    return;
                }
                int i = positions[at];
                for (const FormalSimplex& f : lower) {
                    // Compatibility with earlier chosen faces:
                    // d_i sigma_j = d_{j-1} sigma_i for i < j.
                    bool ok = true;
                    for (size_t prev = 0; prev < at && ok; ++prev) {
                        int j = positions[prev];  // j < i since positions ascend
                        if (n - 2 < 0) continue;
                        FormalSimplex lhs = x.space.face(f, j);        // d_j sigma_i, j < i
                        FormalSimplex rhs = x.space.face(chosen[j], i - 1);
                        if (lhs != rhs) ok = false;
                    }
                    if (!ok) continue;
                    chosen[i] = f;
                    rec(at + 1);
                }
            };
            if (n >= 2) rec(0);
        }
    }
    return rep;
}

}  // namespace strata
