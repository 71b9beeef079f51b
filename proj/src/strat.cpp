#include "strata/strat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace strata {

void StratSpace::validate() const {
    if (static_cast<int>(label.size()) != space.dim() + 1)
        throw Error("strat: label table has wrong dimension range");
    for (int d = 0; d <= space.dim(); ++d) {
        if (static_cast<int>(label[d].size()) != space.count(d))
            throw Error("strat: label table has wrong size in dimension " + std::to_string(d));
        for (int l : label[d])
            if (l < 0 || l >= poset.size()) throw Error("strat: label out of range");
    }
}

std::vector<int> StratSpace::used_labels() const {
    std::set<int> used;
    for (const auto& layer : label) used.insert(layer.begin(), layer.end());
    return {used.begin(), used.end()};
}

std::vector<SimplexRef> stratum_cells(const StratSpace& x, int lam) {
    if (lam < 0 || lam >= x.poset.size()) throw Error("stratum_cells: unknown label");
    std::vector<SimplexRef> out;
    for (int d = 0; d <= x.space.dim(); ++d)
        for (int i = 0; i < x.space.count(d); ++i)
            if (x.label[d][i] == lam) out.push_back(SimplexRef{d, i});
    return out;
}

std::vector<SimplexRef> stratum_closure(const StratSpace& x, int lam) {
    std::set<SimplexRef> seen;
    for (SimplexRef s : stratum_cells(x, lam))
        for (SimplexRef t : x.space.closure(s)) seen.insert(t);
    return {seen.begin(), seen.end()};
}

namespace {

std::string cell_witness(const StratSpace& x, SimplexRef s) {
    return x.space.name(s) + " (label " + x.poset.name(x.label_of(s)) + ")";
}

}  // namespace

std::string StratReport::to_string() const {
    std::ostringstream os;
    auto line = [&](const char* nm, const ConditionVerdict& v) {
        os << nm << ": " << (v.pass ? "pass" : "FAIL") ;
        if (!v.pass) os << " [" << v.witness << "]";
        os << "\n";
    };
    line("(1) continuity", continuity);
    line("(2) openness", openness);
    line("(3) closure-order", closure_order);
    line("(4) frontier", frontier);
    line("(5) closed-unions", closed_unions);
    line("connected strata", connected);
    line("locally closed strata", locally_closed);
    line("surjective", surjective);
    line("CW closure-finite", closure_finite);
    line("CW weak-topology", weak_topology);
    return os.str();
}

StratReport check_conditions(const StratSpace& x, bool exhaustive_subsets) {
    x.validate();
    StratReport rep;
    const FinPoset& P = x.poset;
    int nl = P.size();

    // Precompute stratum cells and closures per used label.
    std::vector<std::vector<SimplexRef>> cells(nl), closures(nl);
    std::vector<bool> used(nl, false);
    for (int l = 0; l < nl; ++l) {
        cells[l] = stratum_cells(x, l);
        used[l] = !cells[l].empty();
        if (used[l]) closures[l] = stratum_closure(x, l);
    }

    auto in_closure = [&](int l, SimplexRef s) {
        return std::binary_search(closures[l].begin(), closures[l].end(), s);
    };
    // e_mu subset of cl(e_lam)?
    auto stratum_in_closure = [&](int mu, int lam) {
        for (SimplexRef s : cells[mu])
            if (!in_closure(lam, s)) return false;
        return true;
    };

    // (1) continuity: cl(e_lam) contained in the union of e_mu, mu <= lam.
    for (int l = 0; l < nl && rep.continuity.pass; ++l) {
        if (!used[l]) continue;
        for (SimplexRef s : closures[l]) {
            if (!P.leq(x.label_of(s), l)) {
                rep.continuity = {false, cell_witness(x, s) + " in cl(e_" + P.name(l) +
                                             ") but label not <= " + P.name(l)};
                break;
            }
        }
    }

    // (2) openness via singleton closures: every cell with label <= lam lies
    // in cl(e_lam).
    for (int l = 0; l < nl && rep.openness.pass; ++l) {
        if (!used[l]) continue;
        for (int m = 0; m < nl; ++m) {
            if (!used[m] || !P.leq(m, l)) continue;
            for (SimplexRef s : cells[m]) {
                if (!in_closure(l, s)) {
                    rep.openness = {false, cell_witness(x, s) + " has label <= " + P.name(l) +
                                               " but is outside cl(e_" + P.name(l) + ")"};
                    break;
                }
            }
            if (!rep.openness.pass) break;
        }
    }
    if (exhaustive_subsets && rep.openness.pass && rep.continuity.pass) {
        // Oracle route: pi^{-1}(cl B) = cl pi^{-1}(B) for every subset B.
        if (nl > 20) throw Error("check_conditions: exhaustive oracle limited to 20 labels");
        for (unsigned long long bits = 0; bits < (1ULL << nl); ++bits) {
            // cl B in the Alexandroff topology is the down-closure of B.
            std::set<SimplexRef> preim_clB, cl_preim;
            for (int l = 0; l < nl; ++l) {
                bool in_clB = false;
                for (int m = 0; m < nl; ++m)
                    if ((bits >> m) & 1ULL)
                        if (P.leq(l, m)) in_clB = true;
                if (in_clB)
                    for (SimplexRef s : cells[l]) preim_clB.insert(s);
                if ((bits >> l) & 1ULL)
                    for (SimplexRef s : closures[l]) cl_preim.insert(s);
            }
            if (preim_clB != cl_preim) {
                rep.openness = {false, "exhaustive subset oracle found a mismatch"};
                break;
            }
        }
    }

    // (3) e_mu in cl(e_lam) iff mu <= lam.
    for (int m = 0; m < nl && rep.closure_order.pass; ++m) {
        if (!used[m]) continue;
        for (int l = 0; l < nl; ++l) {
            if (!used[l]) continue;
            bool inc = stratum_in_closure(m, l);
            bool le = P.leq(m, l);
            if (inc != le) {
                rep.closure_order = {false, "e_" + P.name(m) + (inc ? " inside " : " outside ") +
                                                "cl(e_" + P.name(l) + ") but " +
                                                (le ? "mu <= lam" : "mu !<= lam")};
                break;
            }
        }
    }

    // (4) frontier: e_mu meets cl(e_lam) => e_mu inside cl(e_lam).
    for (int m = 0; m < nl && rep.frontier.pass; ++m) {
        if (!used[m]) continue;
        for (int l = 0; l < nl; ++l) {
            if (!used[l]) continue;
            bool meets = false;
            for (SimplexRef s : cells[m])
                if (in_closure(l, s)) meets = true;
            if (meets && !stratum_in_closure(m, l)) {
                rep.frontier = {false, "e_" + P.name(m) + " meets but is not inside cl(e_" +
                                           P.name(l) + ")"};
                break;
            }
        }
    }

    // (5) for every down-closed label set, the union of closures equals the
    // union of strata. Down-closed sets are generated by antichains; on the
    // finite cell model it suffices to check principal down-sets, and the
    // exhaustive flag checks every down-closed set.
    auto check_downset = [&](const std::vector<int>& members) -> std::optional<std::string> {
        std::set<SimplexRef> strata_union, closure_union;
        for (int l : members) {
            if (!used[l]) continue;
            strata_union.insert(cells[l].begin(), cells[l].end());
            closure_union.insert(closures[l].begin(), closures[l].end());
        }
        if (strata_union != closure_union) {
            for (SimplexRef s : closure_union)
                if (!strata_union.count(s))
                    return cell_witness(x, s) + " in the closure union but not in the strata union";
        }
        return std::nullopt;
    };
    for (int l = 0; l < nl && rep.closed_unions.pass; ++l) {
        if (!used[l]) continue;
        std::vector<int> down;
        for (int m = 0; m < nl; ++m)
            if (P.leq(m, l)) down.push_back(m);
        if (auto w = check_downset(down)) rep.closed_unions = {false, *w};
    }
    if (exhaustive_subsets && rep.closed_unions.pass) {
        for (unsigned long long bits = 0; bits < (1ULL << nl); ++bits) {
            std::vector<int> members;
            bool down_closed = true;
            for (int l = 0; l < nl; ++l)
                if ((bits >> l) & 1ULL) members.push_back(l);
            for (int l : members)
                for (int m = 0; m < nl; ++m)
                    if (P.leq(m, l) && !((bits >> m) & 1ULL)) down_closed = false;
            if (!down_closed) continue;
            if (auto w = check_downset(members)) {
                rep.closed_unions = {false, *w};
                break;
            }
        }
    }

    // Connectivity: face/coface adjacency within each stratum.
    for (int l = 0; l < nl; ++l) {
        if (!used[l]) continue;
        if (cells[l].size() <= 1) {
            rep.connected_by_stratum.push_back({l, true});
            continue;
        }
        std::map<SimplexRef, int> comp;
        for (size_t i = 0; i < cells[l].size(); ++i) comp[cells[l][i]] = static_cast<int>(i);
        std::vector<int> parent(cells[l].size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> root = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        auto unite = [&](int a, int b) { parent[root(a)] = root(b); };
        for (size_t i = 0; i < cells[l].size(); ++i) {
            SimplexRef s = cells[l][i];
            if (s.dim == 0) continue;
            // A cell is adjacent to any cell of the stratum in its closure.
            for (SimplexRef t : x.space.closure(s)) {
                auto it = comp.find(t);
                if (it != comp.end()) unite(static_cast<int>(i), it->second);
            }
        }
        int r0 = root(0);
        bool conn = true;
        for (size_t i = 1; i < parent.size(); ++i)
            if (root(static_cast<int>(i)) != r0) conn = false;
        rep.connected_by_stratum.push_back({l, conn});
        if (!conn && rep.connected.pass)
            rep.connected = {false, "stratum e_" + P.name(l) + " is disconnected"};
    }

    // Locally closed: cl(e) minus e is closed, i.e. no face of a cell of
    // cl(e) \ e lies back in e.
    for (int l = 0; l < nl; ++l) {
        if (!used[l]) continue;
        bool lc = true;
        for (SimplexRef s : closures[l]) {
            if (x.label_of(s) == l) continue;
            for (SimplexRef t : x.space.closure(s)) {
                if (x.label_of(t) == l) {
                    lc = false;
                    if (rep.locally_closed.pass)
                        rep.locally_closed = {
                            false, "cl(e_" + P.name(l) + ") \\ e has cell " + x.space.name(s) +
                                       " with face " + x.space.name(t) + " back in the stratum"};
                    break;
                }
            }
            if (!lc) break;
        }
        rep.locally_closed_by_stratum.push_back({l, lc});
    }

    // Surjectivity onto the declared poset (recorded, not fatal).
    for (int l = 0; l < nl; ++l)
        if (!used[l]) {
            rep.surjective = {false, "label " + P.name(l) + " has an empty stratum"};
            break;
        }

    // CW conditions: finite models are closure finite with the weak topology.
    int max_strata_in_boundary = 0;
    for (int l = 0; l < nl; ++l) {
        if (!used[l]) continue;
        std::set<int> met;
        for (SimplexRef s : closures[l])
            if (x.label_of(s) != l) met.insert(x.label_of(s));
        max_strata_in_boundary = std::max(max_strata_in_boundary, static_cast<int>(met.size()));
    }
    rep.closure_finite = {true, "boundaries meet at most " +
                                    std::to_string(max_strata_in_boundary) + " strata"};
    rep.weak_topology = {true, "finite cell model"};
    return rep;
}

StratSpace simplicial_stratification(const SimpSet& x) {
    StratSpace out;
    out.space = x;
    std::vector<std::string> names;
    int n = 0;
    std::vector<std::vector<int>> lab(x.dim() + 1);
    std::vector<std::pair<int, int>> rels;
    std::map<SimplexRef, int> flat;
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            flat[SimplexRef{d, i}] = n;
            names.push_back(x.name(SimplexRef{d, i}));
            lab[d].push_back(n);
            ++n;
        }
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.count(d); ++i)
            for (SimplexRef t : x.closure(SimplexRef{d, i}))
                if (!(t == SimplexRef{d, i})) rels.push_back({flat[t], flat[SimplexRef{d, i}]});
    out.poset = FinPoset::from_relations(n, rels, names);
    out.label = std::move(lab);
    return out;
}

JoinStratResult join_strat(const StratSpace& a, const StratSpace& b) {
    {
        StratReport ra = check_conditions(a), rb = check_conditions(b);
        if (!(ra.continuity.pass && ra.openness.pass))
            throw Error("join_strat: left factor fails conditions (1)+(2)");
        if (!(rb.continuity.pass && rb.openness.pass))
            throw Error("join_strat: right factor fails conditions (1)+(2)");
    }
    JoinStratResult out;
    out.join_data = join(a.space, b.space);
    out.poset_data = poset_join(a.poset, b.poset);
    out.strat.space = out.join_data.space;
    out.strat.poset = out.poset_data.poset;
    out.strat.label.resize(out.strat.space.dim() + 1);
    for (int d = 0; d <= out.strat.space.dim(); ++d) {
        for (const JoinCell& c : out.join_data.cells[d]) {
            int l;
            switch (c.kind) {
                case JoinCell::Kind::A:
                    l = out.poset_data.from_a[a.label_of(c.a)];
                    break;
                case JoinCell::Kind::B:
                    l = out.poset_data.from_b[b.label_of(c.b)];
                    break;
                default:
                    l = out.poset_data.from_pair[a.label_of(c.a)][b.label_of(c.b)];
            }
            out.strat.label[d].push_back(l);
        }
    }
    return out;
}

JoinStratResult cone_strat(const StratSpace& x) {
    StratSpace pt;
    pt.space = standard_simplex(0);
    pt.poset = FinPoset::antichain(1);
    pt.label = {{0}};
    return join_strat(pt, x);
}

FacePosetResult face_poset(const StratSpace& x) {
    StratReport rep = check_conditions(x);
    if (!rep.closure_order.pass)
        throw Error("face_poset: stratification violates condition (3): " +
                    rep.closure_order.witness);
    FacePosetResult out;
    std::vector<int> used = x.used_labels();
    out.from_label.assign(x.poset.size(), -1);
    std::vector<std::string> names;
    for (size_t i = 0; i < used.size(); ++i) {
        out.from_label[used[i]] = static_cast<int>(i);
        names.push_back(x.poset.name(used[i]));
    }
    std::vector<std::pair<int, int>> rels;
    // mu <= lam iff e_mu inside cl(e_lam); under (3) this is the restriction
    // of the ambient order, computed here from closures directly.
    std::vector<std::vector<SimplexRef>> closures(used.size());
    std::vector<std::vector<SimplexRef>> cells(used.size());
    for (size_t i = 0; i < used.size(); ++i) {
        cells[i] = stratum_cells(x, used[i]);
        closures[i] = stratum_closure(x, used[i]);
    }
    for (size_t i = 0; i < used.size(); ++i)
        for (size_t j = 0; j < used.size(); ++j) {
            if (i == j) continue;
            bool inside = true;
            for (SimplexRef s : cells[i])
                if (!std::binary_search(closures[j].begin(), closures[j].end(), s)) inside = false;
            if (inside) rels.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    out.poset = FinPoset::from_relations(static_cast<int>(used.size()), rels, names);
    return out;
}

}  // namespace strata
