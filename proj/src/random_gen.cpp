#include "strata/random_gen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace strata {

std::uint64_t Rng::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

Rng Rng::split(std::uint64_t seed, std::uint64_t index) {
    Rng base(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    base.next();
    return base;
}

AcycCat random_acyclic_category(std::uint64_t seed, int max_objects, int max_hom) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng = Rng::split(seed, attempt * 0x9e37ULL + 17);
        int n = 1 + static_cast<int>(rng.below(max_objects));
        if (rng.chance(1, 4)) {
            // Poset category: compositions collapse maximally.
            std::vector<std::pair<int, int>> rels;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (rng.chance(1, 2)) rels.push_back({a, b});
            return AcycCat::from_poset(FinPoset::from_relations(n, rels));
        }
        // Random acyclic multigraph on objects 0 < 1 < ... < n-1.
        std::vector<std::tuple<int, int, int>> edges;  // (src, tgt, id)
        int edge_id = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int parallel = 0;
                if (rng.chance(2, 3)) parallel = 1 + static_cast<int>(rng.below(2));
                for (int k = 0; k < parallel; ++k) edges.push_back({i, j, edge_id++});
            }
        // Paths between each pair.
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths;
        std::function<void(int, int, std::vector<int>&)> walk = [&](int start, int at,
                                                                    std::vector<int>& acc) {
            if (!acc.empty()) paths[{start, at}].push_back(acc);
            for (const auto& [s, t, id] : edges) {
                if (s != at) continue;
                acc.push_back(id);
                walk(start, t, acc);
                acc.pop_back();
            }
        };
        for (int i = 0; i < n; ++i) {
            std::vector<int> acc;
            walk(i, i, acc);
        }
        bool too_big = false;
        long long total = 0;
        for (const auto& [key, ps] : paths) {
            if (static_cast<int>(ps.size()) > max_hom) too_big = true;
            total += static_cast<long long>(ps.size());
        }
        if (too_big || total > 40) continue;

        AcycCat c(HomTier::Discrete);
        for (int i = 0; i < n; ++i) c.add_object("o" + std::to_string(i));
        std::map<std::vector<int>, int> mor_of_path;
        for (const auto& [key, ps] : paths)
            for (const auto& p : ps) {
                std::string nm;
                for (int e : p) {
                    if (!nm.empty()) nm += '.';
                    nm += "e" + std::to_string(e);
                }
                mor_of_path[p] = c.add_morphism(nm, key.first, key.second);
            }
        for (const auto& [key1, ps1] : paths)
            for (const auto& p1 : ps1)
                for (const auto& [key2, ps2] : paths) {
                    if (key2.first != key1.second) continue;
                    for (const auto& p2 : ps2) {
                        std::vector<int> cat = p1;
                        cat.insert(cat.end(), p2.begin(), p2.end());
                        c.set_compose(mor_of_path.at(p2), mor_of_path.at(p1), mor_of_path.at(cat));
                    }
                }
        return c;
    }
}

SimpSet random_complex(std::uint64_t seed, int max_cells, int max_vertices) {
    Rng rng = Rng::split(seed, 0xc0ffee);
    for (;;) {
        int v = 1 + static_cast<int>(rng.below(max_vertices));
        std::vector<std::vector<int>> facets;
        int tries = 1 + static_cast<int>(rng.below(4));
        for (int t = 0; t < tries; ++t) {
            int k = 1 + static_cast<int>(rng.below(std::min(v, 4)));
            std::set<int> pick;
            while (static_cast<int>(pick.size()) < k)
                pick.insert(static_cast<int>(rng.below(v)));
            facets.push_back({pick.begin(), pick.end()});
        }
        SimpSet s = simplicial_complex(v, facets);
        if (s.total_cells() <= max_cells) return s;
    }
}

StratSpace random_labeled_complex(std::uint64_t seed, int max_cells) {
    Rng rng = Rng::split(seed, 0x5712a7);
    SimpSet space = random_complex(rng.next(), max_cells);
    int strategy = static_cast<int>(rng.below(4));
    if (strategy == 0) {
        // The simplicial stratification itself.
        return simplicial_stratification(space);
    }
    if (strategy == 1) {
        // Coarsen by dimension into a chain.
        StratSpace s;
        s.space = space;
        s.poset = FinPoset::chain(space.dim() + 1);
        s.label.resize(space.dim() + 1);
        for (int d = 0; d <= space.dim(); ++d) s.label[d].assign(space.count(d), d);
        return s;
    }
    // Random poset with random labels (strategy 2), or labels weakly
    // correlated with dimension (strategy 3).
    StratSpace s;
    s.space = space;
    int m = 1 + static_cast<int>(rng.below(4));
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (rng.chance(1, 2)) rels.push_back({a, b});
    s.poset = FinPoset::from_relations(m, rels);
    s.label.resize(space.dim() + 1);
    for (int d = 0; d <= space.dim(); ++d)
        for (int i = 0; i < space.count(d); ++i) {
            int l;
            if (strategy == 3)
                l = std::min(m - 1, d + static_cast<int>(rng.below(2)));
            else
                l = static_cast<int>(rng.below(m));
            s.label[d].push_back(l);
        }
    return s;
}

RegComplex random_simplicial_regcomplex(std::uint64_t seed, int max_cells) {
    Rng rng = Rng::split(seed, 0x2e6c);
    for (;;) {
        int v = 2 + static_cast<int>(rng.below(5));
        std::vector<std::vector<int>> facets;
        int tries = 1 + static_cast<int>(rng.below(5));
        for (int t = 0; t < tries; ++t) {
            int k = 1 + static_cast<int>(rng.below(std::min(v, 4)));
            std::set<int> pick;
            while (static_cast<int>(pick.size()) < k)
                pick.insert(static_cast<int>(rng.below(v)));
            facets.push_back({pick.begin(), pick.end()});
        }
        SimpSet s = simplicial_complex(v, facets);
        if (s.total_cells() > max_cells) continue;
        std::vector<std::vector<int>> all_facets;
        for (int d = 0; d <= s.dim(); ++d)
            for (int i = 0; i < s.count(d); ++i) {
                // Re-extract facet lists from names (vertex lists).
                std::vector<int> vs;
                std::string nm = s.name(SimplexRef{d, i});
                int cur = 0;
                bool has = false;
                for (char ch : nm) {
                    if (ch == '.') {
                        vs.push_back(cur);
                        cur = 0;
                        has = false;
                    } else {
                        cur = cur * 10 + (ch - '0');
                        has = true;
                    }
                }
                if (has) vs.push_back(cur);
                all_facets.push_back(vs);
            }
        return RegComplex::simplicial(v, all_facets);
    }
}

Matching random_acyclic_matching(const RegComplex& c, std::uint64_t seed) {
    Rng rng = Rng::split(seed, 0xabcd);
    std::vector<std::pair<int, int>> candidates;
    for (int hi = 0; hi < c.size(); ++hi)
        for (int lo : c.faces(hi)) candidates.push_back({lo, hi});
    // Fisher-Yates with the deterministic generator.
    for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
        std::swap(candidates[i], candidates[rng.below(i + 1)]);
    Matching m;
    std::vector<bool> used(c.size(), false);
    for (auto [lo, hi] : candidates) {
        if (used[lo] || used[hi]) continue;
        m.pairs.push_back({lo, hi});
        if (validate_matching(c, m).pass()) {
            used[lo] = used[hi] = true;
        } else {
            m.pairs.pop_back();
        }
    }
    return m;
}

}  // namespace strata
