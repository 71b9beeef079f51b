#include "strata/morse.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "strata/stellar.hpp"

namespace strata {

RegComplex RegComplex::simplicial(int n_vertices, const std::vector<std::vector<int>>& facets) {
    SimpSet s = simplicial_complex(n_vertices, facets);
    RegComplex out;
    out.has_signs_ = true;
    std::map<std::string, int> id_of;
    for (int d = 0; d <= s.dim(); ++d)
        for (int i = 0; i < s.count(d); ++i) {
            int id = static_cast<int>(out.dims_.size());
            out.dims_.push_back(d);
            out.names_.push_back(s.name(SimplexRef{d, i}));
            id_of[s.name(SimplexRef{d, i})] = id;
        }
    out.faces_.resize(out.size());
    out.cofaces_.resize(out.size());
    for (int d = 1; d <= s.dim(); ++d)
        for (int i = 0; i < s.count(d); ++i) {
            int upper = id_of[s.name(SimplexRef{d, i})];
            for (int k = 0; k <= d; ++k) {
                const FormalSimplex& f = s.face_entry(SimplexRef{d, i}, k);
                int lower = id_of[s.name(f.target)];
                out.faces_[upper].push_back(lower);
                out.cofaces_[lower].push_back(upper);
                out.signs_[{lower, upper}] = (k % 2 == 0) ? 1 : -1;
            }
        }
    out.validate();
    return out;
}

RegComplex RegComplex::from_graded_poset(const FinPoset& p, const std::vector<int>& dims,
                                         const std::map<std::pair<int, int>, int>& signs) {
    if (static_cast<int>(dims.size()) != p.size()) throw Error("from_graded_poset: bad dims");
    RegComplex out;
    out.dims_ = dims;
    for (int i = 0; i < p.size(); ++i) out.names_.push_back(p.name(i));
    out.faces_.resize(p.size());
    out.cofaces_.resize(p.size());
    for (auto [a, b] : p.covers()) {
        out.faces_[b].push_back(a);
        out.cofaces_[a].push_back(b);
    }
    if (!signs.empty()) {
        out.has_signs_ = true;
        out.signs_ = signs;
    }
    out.validate();
    return out;
}

int RegComplex::top_dim() const {
    int d = -1;
    for (int v : dims_) d = std::max(d, v);
    return d;
}

std::optional<int> RegComplex::find(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == nm) return i;
    return std::nullopt;
}

int RegComplex::incidence(int upper, int lower) const {
    if (!has_signs_) return 1;
    auto it = signs_.find({lower, upper});
    if (it == signs_.end()) throw Error("incidence: not a cover pair");
    return it->second;
}

void RegComplex::validate() const {
    for (int c = 0; c < size(); ++c)
        for (int f : faces_[c])
            if (dims_[f] != dims_[c] - 1)
                throw Error("regular complex: cover does not drop dimension by one at " +
                            names_[c]);
    // Diamond condition: every codim-2 incidence has exactly two middles.
    for (int top = 0; top < size(); ++top) {
        std::map<int, int> middle_count;
        for (int mid : faces_[top])
            for (int bot : faces_[mid]) middle_count[bot]++;
        for (auto [bot, k] : middle_count)
            if (k != 2)
                throw Error("regular complex: diamond condition fails between " + names_[top] +
                            " and " + names_[bot]);
    }
    if (has_signs_) {
        // dd = 0 is checked via the chain complex.
        chain_complex();
    }
}

ChainComplex RegComplex::chain_complex() const {
    ChainComplex cc;
    int d = top_dim();
    cc.ranks.assign(d + 1, 0);
    cc.boundary.resize(d + 1);
    std::vector<std::vector<int>> by_dim(d + 1);
    std::vector<int> index_in_dim(size());
    for (int c = 0; c < size(); ++c) {
        index_in_dim[c] = static_cast<int>(by_dim[dims_[c]].size());
        by_dim[dims_[c]].push_back(c);
        cc.ranks[dims_[c]]++;
    }
    for (int n = 1; n <= d; ++n) {
        IntMat m(cc.ranks[n - 1], std::vector<Zint>(cc.ranks[n], 0));
        for (int c : by_dim[n])
            for (int f : faces_[c])
                m[index_in_dim[f]][index_in_dim[c]] += has_signs_ ? incidence(c, f) : 1;
        cc.boundary[n] = std::move(m);
    }
    if (has_signs_) cc.validate();
    return cc;
}

namespace {

std::vector<int> mod2_betti_of(const std::vector<IntMat>& boundary,
                               const std::vector<int>& ranks) {
    // Gaussian elimination over GF(2).
    auto rank2 = [](IntMat m) -> int {
        if (m.empty() || m[0].empty()) return 0;
        size_t rows = m.size(), cols = m[0].size();
        for (auto& row : m)
            for (auto& v : row) v = ((v % 2) + 2) % 2;
        int rank = 0;
        size_t rr = 0;
        for (size_t c = 0; c < cols && rr < rows; ++c) {
            size_t piv = rr;
            while (piv < rows && m[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(m[rr], m[piv]);
            for (size_t i = 0; i < rows; ++i)
                if (i != rr && m[i][c] != 0)
                    for (size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + m[rr][j]) % 2;
            ++rr;
            ++rank;
        }
        return rank;
    };
    int d = static_cast<int>(ranks.size()) - 1;
    std::vector<int> rk(d + 2, 0);
    for (int n = 1; n <= d; ++n) rk[n] = rank2(boundary[n]);
    std::vector<int> betti(d + 1);
    for (int n = 0; n <= d; ++n) betti[n] = ranks[n] - rk[n] - rk[n + 1];
    return betti;
}

}  // namespace

std::vector<int> RegComplex::betti_mod2() const {
    ChainComplex cc = chain_complex();
    return mod2_betti_of(cc.boundary, cc.ranks);
}

// --- matchings -------------------------------------------------------------------

MatchingReport validate_matching(const RegComplex& c, const Matching& m) {
    MatchingReport rep;
    std::vector<int> partner(c.size(), -1);
    rep.structurally_valid = true;
    for (auto [lo, hi] : m.pairs) {
        if (lo < 0 || hi < 0 || lo >= c.size() || hi >= c.size() ||
            std::find(c.faces(hi).begin(), c.faces(hi).end(), lo) == c.faces(hi).end()) {
            rep.structurally_valid = false;
            rep.witness = "pair is not a cover pair";
            return rep;
        }
        if (partner[lo] != -1 || partner[hi] != -1) {
            rep.structurally_valid = false;
            rep.witness = "cell matched twice: " + c.name(partner[lo] != -1 ? lo : hi);
            return rep;
        }
        partner[lo] = hi;
        partner[hi] = lo;
    }
    for (int i = 0; i < c.size(); ++i)
        if (partner[i] == -1) rep.critical.push_back(i);

    // Modified Hasse digraph: downward cover edges, reversed on matched pairs.
    std::vector<std::vector<int>> adj(c.size());
    for (int hi = 0; hi < c.size(); ++hi)
        for (int lo : c.faces(hi)) {
            if (partner[lo] == hi)
                adj[lo].push_back(hi);
            else
                adj[hi].push_back(lo);
        }
    // Route 1: DFS cycle detection with witness.
    std::vector<int> state(c.size(), 0);
    std::vector<int> stack, cycle;
    std::function<bool(int)> dfs = [&](int v) -> bool {
        state[v] = 1;
        stack.push_back(v);
        for (int w : adj[v]) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        stack.pop_back();
        return false;
    };
    bool cyclic = false;
    for (int v = 0; v < c.size() && !cyclic; ++v)
        if (state[v] == 0) cyclic = dfs(v);
    // Route 2: Kahn peeling; must agree.
    {
        std::vector<int> indeg(c.size(), 0);
        for (int v = 0; v < c.size(); ++v)
            for (int w : adj[v]) indeg[w]++;
        std::queue<int> q;
        for (int v = 0; v < c.size(); ++v)
            if (indeg[v] == 0) q.push(v);
        int seen = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ++seen;
            for (int w : adj[v])
                if (--indeg[w] == 0) q.push(w);
        }
        bool kahn_cyclic = seen != c.size();
        if (kahn_cyclic != cyclic) throw Error("matching acyclicity routes disagree");
    }
    rep.acyclic = !cyclic;
    if (cyclic) {
        std::ostringstream os;
        os << "closed V-path:";
        for (int v : cycle) os << ' ' << c.name(v);
        rep.witness = os.str();
    }
    return rep;
}

Matching matching_from_function(const RegComplex& c, const std::vector<Rational>& f) {
    if (static_cast<int>(f.size()) != c.size())
        throw Error("matching_from_function: wrong number of values");
    auto leq = [&](Rational a, Rational b) {
        return static_cast<long long>(a.first) * b.second <=
               static_cast<long long>(b.first) * a.second;
    };
    for (const auto& [num, den] : f)
        if (den <= 0) throw Error("matching_from_function: denominators must be positive");
    Matching m;
    for (int cell = 0; cell < c.size(); ++cell) {
        std::vector<int> exceptional_up, exceptional_down;
        for (int up : c.cofaces(cell))
            if (leq(f[up], f[cell])) exceptional_up.push_back(up);
        for (int dn : c.faces(cell))
            if (leq(f[cell], f[dn])) exceptional_down.push_back(dn);
        if (exceptional_up.size() + exceptional_down.size() > 1)
            throw Error("not a discrete Morse function: two exceptions at " + c.name(cell));
        if (exceptional_up.size() == 1) m.pairs.push_back({cell, exceptional_up[0]});
    }
    MatchingReport rep = validate_matching(c, m);
    if (!rep.pass())
        throw Error("matching_from_function: induced matching invalid: " + rep.witness);
    return m;
}

// --- V-paths and the Morse complex --------------------------------------------------

std::vector<VPath> v_paths(const RegComplex& c, const Matching& m, int upper, int lower) {
    std::vector<int> partner(c.size(), -1);
    for (auto [lo, hi] : m.pairs) {
        partner[lo] = hi;
        partner[hi] = lo;
    }
    if (partner[upper] != -1 || partner[lower] != -1)
        throw Error("v_paths: endpoints must be critical");
    std::vector<VPath> out;
    // Path: sigma_0 (face of upper), then alternately tau_i = partner(sigma_{i-1}),
    // sigma_i a face of tau_i different from sigma_{i-1}; ends when sigma = lower.
    std::vector<int> cells;
    std::function<void(int, int)> walk = [&](int sigma, int sign) {
        cells.push_back(sigma);
        if (sigma == lower) {
            out.push_back(VPath{cells, sign});
            cells.pop_back();
            return;
        }
        int tau = partner[sigma];
        if (tau != -1 && c.cell_dim(tau) == c.cell_dim(sigma) + 1 && tau != upper) {
            cells.push_back(tau);
            for (int next : c.faces(tau)) {
                if (next == sigma) continue;
                int step = -c.incidence(tau, sigma) * c.incidence(tau, next);
                walk(next, sign * step);
            }
            cells.pop_back();
        }
        cells.pop_back();
    };
    for (int sigma : c.faces(upper)) walk(sigma, c.incidence(upper, sigma));
    return out;
}

MorseComplexResult morse_complex(const RegComplex& c, const Matching& m) {
    MatchingReport mrep = validate_matching(c, m);
    if (!mrep.pass()) throw Error("morse_complex: invalid matching: " + mrep.witness);
    MorseComplexResult out;
    out.critical = mrep.critical;
    out.integer_coefficients = c.has_signs();

    int d = c.top_dim();
    std::vector<std::vector<int>> crit_by_dim(d + 1);
    std::vector<int> index_in_dim(c.size(), -1);
    for (int cell : out.critical) {
        index_in_dim[cell] = static_cast<int>(crit_by_dim[c.cell_dim(cell)].size());
        crit_by_dim[c.cell_dim(cell)].push_back(cell);
    }
    out.morse_chain.ranks.assign(d + 1, 0);
    for (int n = 0; n <= d; ++n)
        out.morse_chain.ranks[n] = static_cast<int>(crit_by_dim[n].size());
    out.morse_chain.boundary.resize(d + 1);
    for (int n = 1; n <= d; ++n) {
        IntMat mat(out.morse_chain.ranks[n - 1], std::vector<Zint>(out.morse_chain.ranks[n], 0));
        for (int tau : crit_by_dim[n])
            for (int sigma : crit_by_dim[n - 1])
                for (const VPath& p : v_paths(c, m, tau, sigma))
                    mat[index_in_dim[sigma]][index_in_dim[tau]] += p.sign;
        if (!c.has_signs())
            for (auto& row : mat)
                for (auto& v : row) v = ((v % 2) + 2) % 2;
        out.morse_chain.boundary[n] = std::move(mat);
    }
    if (c.has_signs()) {
        out.morse_chain.validate();
        out.morse_homology = homology(out.morse_chain);
        out.complex_homology = homology(c.chain_complex());
        out.homology_matches = out.morse_homology.equals(out.complex_homology);
    } else {
        out.morse_betti_mod2 = mod2_betti_of(out.morse_chain.boundary, out.morse_chain.ranks);
        out.complex_betti_mod2 = c.betti_mod2();
        auto a = out.morse_betti_mod2, b = out.complex_betti_mod2;
        a.resize(std::max(a.size(), b.size()), 0);
        b.resize(a.size(), 0);
        out.homology_matches = a == b;
    }
    if (!out.homology_matches)
        throw Error("morse_complex: Morse homology differs from complex homology");
    return out;
}

// --- flow category ------------------------------------------------------------------

FlowCategory flow_category(
    const RegComplex& c, const Matching& m,
    const std::map<std::pair<int, int>, FinPoset>& supplied_homs,
    const std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>>& supplied_compose) {
    MatchingReport mrep = validate_matching(c, m);
    if (!mrep.pass()) throw Error("flow_category: invalid matching: " + mrep.witness);
    FlowCategory out;
    out.cat = AcycCat(HomTier::PosetEnriched);
    out.critical_cells = mrep.critical;
    std::vector<int> obj_of(c.size(), -1);
    for (int cell : mrep.critical) obj_of[cell] = out.cat.add_object(c.name(cell));

    // Reachability in the modified Hasse digraph (descending flows).
    std::vector<int> partner(c.size(), -1);
    for (auto [lo, hi] : m.pairs) {
        partner[lo] = hi;
        partner[hi] = lo;
    }
    std::vector<std::vector<int>> adj(c.size());
    for (int hi = 0; hi < c.size(); ++hi)
        for (int lo : c.faces(hi)) {
            if (partner[lo] == hi)
                adj[lo].push_back(hi);
            else
                adj[hi].push_back(lo);
        }
    std::vector<std::vector<bool>> reach(c.size(), std::vector<bool>(c.size(), false));
    for (int v = 0; v < c.size(); ++v) {
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!reach[v][w]) {
                    reach[v][w] = true;
                    stack.push_back(w);
                }
        }
    }

    // Morphisms run from the lower critical cell to the higher one.
    for (int hi : mrep.critical) {
        for (int lo : mrep.critical) {
            if (hi == lo) continue;
            int gap = c.cell_dim(hi) - c.cell_dim(lo);
            if (gap <= 0) continue;
            bool connected = reach[hi][lo];
            auto key = std::make_pair(obj_of[lo], obj_of[hi]);
            auto supplied = supplied_homs.find({lo, hi});
            if (supplied != supplied_homs.end()) {
                out.cat.set_hom_poset(key.first, key.second, supplied->second);
                continue;
            }
            if (!connected) continue;
            if (gap == 1) {
                auto paths = v_paths(c, m, hi, lo);
                std::vector<std::string> names;
                for (size_t i = 0; i < paths.size(); ++i) {
                    std::string nm;
                    for (int cell : paths[i].cells) {
                        if (!nm.empty()) nm += '>';
                        nm += c.name(cell);
                    }
                    names.push_back(nm);
                }
                if (!paths.empty())
                    out.cat.set_hom_poset(
                        key.first, key.second,
                        FinPoset::from_relations(static_cast<int>(paths.size()), {}, names));
            } else {
                throw Error("flow_category: hom poset for a gap-" + std::to_string(gap) +
                            " pair (" + c.name(lo) + " -> " + c.name(hi) +
                            ") must be supplied");
            }
        }
    }
    // Composition tables where triples exist.
    for (int x = 0; x < out.cat.num_objects(); ++x)
        for (int y = 0; y < out.cat.num_objects(); ++y)
            for (int z = 0; z < out.cat.num_objects(); ++z) {
                if (x == y || y == z) continue;
                if (!out.cat.hom_nonempty(x, y) || !out.cat.hom_nonempty(y, z)) continue;
                auto it = supplied_compose.find({x, y, z});
                if (it == supplied_compose.end())
                    throw Error("flow_category: composition table for a composable triple "
                                "must be supplied");
                out.cat.set_compose_table(x, y, z, it->second);
            }
    ValidationReport v = validate(out.cat);
    if (!v.pass) throw Error("flow_category: invalid result: " + v.to_string());
    return out;
}

ClassifyFlowResult classify_flow(const FlowCategory& fc) {
    ClassifyFlowResult out;
    StratifiedBC sbc = unstable_stratification(fc.cat);
    out.space = std::move(sbc.bc);
    out.strat = std::move(sbc.strat);
    out.num_strata = static_cast<int>(out.strat.used_labels().size());
    out.cell_counts = out.space.cell_counts;
    out.homology = homology(out.space.space);
    EnrichedRoundtripReport err = roundtrip_enriched(fc.cat);
    out.hom_shape_ok = err.pass;
    out.detail = err.checks.to_string();
    return out;
}

}  // namespace strata
