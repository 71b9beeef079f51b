#include "strata/simpset.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace strata {

bool word_is_normal(const DegenWord& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] <= w[i + 1]) return false;
    return w.empty() || w.back() >= 0;
}

DegenWord word_mul_left(int j, const DegenWord& w) {
    // s_j s_{w0} = s_{w0+1} s_j when j <= w0.
    DegenWord out;
    out.reserve(w.size() + 1);
    size_t i = 0;
    int cur = j;
    while (i < w.size() && cur <= w[i]) {
        out.push_back(w[i] + 1);
        ++i;
    }
    out.push_back(cur);
    for (; i < w.size(); ++i) out.push_back(w[i]);
    return out;
}

DegenWord word_compose(const DegenWord& a, const DegenWord& b) {
    DegenWord out = b;
    for (auto it = a.rbegin(); it != a.rend(); ++it) out = word_mul_left(*it, out);
    return out;
}

FormalSimplex nondeg(SimplexRef s) { return FormalSimplex{{}, s}; }

int SimpSet::total_cells() const {
    int t = 0;
    for (int c : counts_) t += c;
    return t;
}

long long SimpSet::euler() const {
    long long chi = 0;
    for (int n = 0; n <= dim(); ++n) chi += (n % 2 == 0 ? 1LL : -1LL) * counts_[n];
    return chi;
}

const std::string& SimpSet::name(SimplexRef s) const {
    if (!has(s)) throw Error("simplex reference out of range");
    return names_[s.dim][s.idx];
}

std::optional<SimplexRef> SimpSet::find_by_name(int d, const std::string& nm) const {
    if (d < 0 || d > dim()) return std::nullopt;
    auto it = by_name_[d].find(nm);
    if (it == by_name_[d].end()) return std::nullopt;
    return SimplexRef{d, it->second};
}

const FormalSimplex& SimpSet::face_entry(SimplexRef s, int i) const {
    if (!has(s) || s.dim < 1) throw Error("face_entry: bad simplex");
    if (i < 0 || i > s.dim) throw Error("face_entry: bad index");
    return faces_[s.dim][s.idx][i];
}

FormalSimplex SimpSet::face(const FormalSimplex& x, int i) const {
    if (x.dim() < 1) throw Error("face: dimension 0 simplex");
    DegenWord emitted;
    int cur = i;
    const DegenWord& w = x.word;
    for (size_t m = 0; m < w.size(); ++m) {
        int j = w[m];
        if (cur < j) {
            emitted.push_back(j - 1);
        } else if (cur == j || cur == j + 1) {
            // d_cur s_j = id; remaining word applies unchanged.
            DegenWord rest(w.begin() + m + 1, w.end());
            DegenWord full = word_compose(emitted, rest);
            return FormalSimplex{full, x.target};
        } else {
            emitted.push_back(j);
            --cur;
        }
    }
    // d_cur reaches the nondegenerate target.
    const FormalSimplex& f = face_entry(x.target, cur);
    return FormalSimplex{word_compose(emitted, f.word), f.target};
}

FormalSimplex SimpSet::degenerate(const FormalSimplex& x, int j) const {
    if (j < 0 || j > x.dim()) throw Error("degenerate: bad index");
    return FormalSimplex{word_mul_left(j, x.word), x.target};
}

FormalSimplex SimpSet::subface(const FormalSimplex& x, const std::vector<int>& keep) const {
    if (keep.empty()) throw Error("subface: empty vertex set");
    FormalSimplex cur = x;
    for (int i = x.dim(); i >= 0; --i) {
        if (!std::binary_search(keep.begin(), keep.end(), i)) cur = face(cur, i);
    }
    return cur;
}

SimplexRef SimpSet::vertex(const FormalSimplex& x, int i) const {
    FormalSimplex v = subface(x, {i});
    return v.target;
}

std::vector<SimplexRef> SimpSet::closure(SimplexRef s) const {
    std::set<SimplexRef> seen;
    std::vector<SimplexRef> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
        SimplexRef c = stack.back();
        stack.pop_back();
        if (c.dim == 0) continue;
        for (int i = 0; i <= c.dim; ++i) {
            SimplexRef t = face_entry(c, i).target;
            if (seen.insert(t).second) stack.push_back(t);
        }
    }
    return {seen.begin(), seen.end()};
}

void SimpSet::validate() const {
    for (int n = 1; n <= dim(); ++n) {
        for (int idx = 0; idx < counts_[n]; ++idx) {
            SimplexRef s{n, idx};
            for (int i = 0; i <= n; ++i) {
                const FormalSimplex& f = face_entry(s, i);
                if (!word_is_normal(f.word)) throw Error("face word not in normal form: " + name(s));
                if (f.dim() != n - 1) throw Error("face dimension mismatch at " + name(s));
                if (!has(f.target)) throw Error("face target out of range at " + name(s));
            }
            if (n < 2) continue;
            for (int j = 1; j <= n; ++j) {
                for (int i = 0; i < j; ++i) {
                    FormalSimplex a = face(face(nondeg(s), j), i);
                    FormalSimplex b = face(face(nondeg(s), i), j - 1);
                    if (a != b)
                        throw Error("simplicial identity d_" + std::to_string(i) + " d_" +
                                    std::to_string(j) + " fails at " + name(s));
                }
            }
        }
    }
}

SimplexRef SimpSetBuilder::add(int d, std::string nm) {
    if (d < 0) throw Error("add: negative dimension");
    while (static_cast<int>(out_.counts_.size()) <= d) {
        out_.counts_.push_back(0);
        out_.faces_.emplace_back();
        out_.names_.emplace_back();
        out_.by_name_.emplace_back();
    }
    int idx = out_.counts_[d]++;
    out_.faces_[d].emplace_back(std::vector<FormalSimplex>(d >= 1 ? d + 1 : 0));
    if (!out_.by_name_[d].emplace(nm, idx).second)
        throw Error("duplicate simplex name in dimension " + std::to_string(d) + ": " + nm);
    out_.names_[d].push_back(std::move(nm));
    return SimplexRef{d, idx};
}

void SimpSetBuilder::set_face(SimplexRef s, int i, FormalSimplex f) {
    out_.faces_[s.dim][s.idx][i] = std::move(f);
}

void SimpSetBuilder::set_faces(SimplexRef s, std::vector<FormalSimplex> fs) {
    if (static_cast<int>(fs.size()) != s.dim + 1) throw Error("set_faces: wrong arity");
    out_.faces_[s.dim][s.idx] = std::move(fs);
}

SimpSet SimpSetBuilder::build(bool run_validate) {
    // Trim trailing empty dimensions.
    while (!out_.counts_.empty() && out_.counts_.back() == 0) {
        out_.counts_.pop_back();
        out_.faces_.pop_back();
        out_.names_.pop_back();
        out_.by_name_.pop_back();
    }
    if (run_validate) out_.validate();
    return std::move(out_);
}

FormalSimplex SimplicialMap::apply(const FormalSimplex& x) const {
    const FormalSimplex& im = image[x.target.dim][x.target.idx];
    return FormalSimplex{word_compose(x.word, im.word), im.target};
}

void SimplicialMap::verify() const {
    for (int n = 0; n <= dom->dim(); ++n) {
        for (int idx = 0; idx < dom->count(n); ++idx) {
            SimplexRef s{n, idx};
            const FormalSimplex& im = image[n][idx];
            if (im.dim() != n) throw Error("simplicial map: dimension mismatch at " + dom->name(s));
            for (int i = 0; i <= n && n >= 1; ++i) {
                FormalSimplex lhs = apply(dom->face_entry(s, i));
                FormalSimplex rhs = cod->face(im, i);
                if (lhs != rhs) throw Error("simplicial map does not commute with d_" +
                                            std::to_string(i) + " at " + dom->name(s));
            }
        }
    }
}

bool SimplicialMap::is_isomorphism() const {
    verify();
    if (dom->dim() != cod->dim()) return false;
    for (int n = 0; n <= dom->dim(); ++n) {
        if (dom->count(n) != cod->count(n)) return false;
        std::vector<bool> hit(cod->count(n), false);
        for (int idx = 0; idx < dom->count(n); ++idx) {
            const FormalSimplex& im = image[n][idx];
            if (!im.word.empty()) return false;
            if (hit[im.target.idx]) return false;
            hit[im.target.idx] = true;
        }
    }
    return true;
}

// --- standard simplex -----------------------------------------------------

namespace {

std::string vertex_list_name(const std::vector<int>& vs) {
    std::string nm;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) nm += '.';
        nm += std::to_string(vs[i]);
    }
    return nm;
}

void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    (void)n;
}

}  // namespace

SimpSet simplicial_complex(int n_vertices, const std::vector<std::vector<int>>& facets) {
    // Collect all faces of all facets.
    std::set<std::vector<int>> cells;
    for (int v = 0; v < n_vertices; ++v) cells.insert({v});
    std::function<void(const std::vector<int>&)> add_all = [&](const std::vector<int>& f) {
        if (f.empty()) return;
        if (!cells.insert(f).second) return;
        for (size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + i);
            add_all(sub);
        }
    };
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error("simplicial_complex: repeated vertex in facet");
        if (!f.empty() && (f.front() < 0 || f.back() >= n_vertices))
            throw Error("simplicial_complex: vertex out of range");
        add_all(f);
    }
    SimpSetBuilder b;
    std::map<std::vector<int>, SimplexRef> ref;
    for (const auto& c : cells)
        if (c.size() == 1) ref[c] = b.add(0, vertex_list_name(c));
    int maxd = 0;
    for (const auto& c : cells) maxd = std::max<int>(maxd, static_cast<int>(c.size()) - 1);
    for (int d = 1; d <= maxd; ++d) {
        for (const auto& c : cells) {
            if (static_cast<int>(c.size()) != d + 1) continue;
            SimplexRef s = b.add(d, vertex_list_name(c));
            ref[c] = s;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> sub = c;
                sub.erase(sub.begin() + i);
                b.set_face(s, i, nondeg(ref.at(sub)));
            }
        }
    }
    return b.build();
}

SimpSet standard_simplex(int n) {
    if (n < 0) throw Error("standard_simplex: negative n");
    std::vector<int> top(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i;
    return simplicial_complex(n + 1, {top});
}

SimpSet boundary_simplex(int n) {
    if (n < 1) throw Error("boundary_simplex: n must be >= 1");
    std::vector<std::vector<int>> facets;
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> f = all;
        f.erase(f.begin() + i);
        facets.push_back(f);
    }
    return simplicial_complex(n + 1, facets);
}

// --- product --------------------------------------------------------------

namespace {

// Strips common degeneracies from a pair of formal simplices of equal
// dimension, returning the extracted diagonal word.
DegenWord strip_pair(const SimpSet& A, const SimpSet& B, FormalSimplex& x, FormalSimplex& y) {
    DegenWord diag;
    for (;;) {
        std::vector<int> common;
        std::set_intersection(x.word.begin(), x.word.end(), y.word.begin(), y.word.end(),
                              std::back_inserter(common), std::greater<int>());
        if (common.empty()) break;
        int j = common.front();
        x = A.face(x, j);
        y = B.face(y, j);
        diag.push_back(j);
    }
    if (!word_is_normal(diag)) throw Error("strip_pair: non-normal diagonal word");
    return diag;
}

}  // namespace

ProductResult product(const SimpSet& a, const SimpSet& b) {
    ProductResult out;
    SimpSetBuilder builder;
    std::map<std::pair<FormalSimplex, FormalSimplex>, SimplexRef> ref;
    int maxdim = (a.empty() || b.empty()) ? -1 : a.dim() + b.dim();
    std::vector<std::vector<std::pair<FormalSimplex, FormalSimplex>>> parts;

    for (int p = 0; p <= maxdim; ++p) {
        parts.emplace_back();
        for (int s = 0; s <= std::min(p, a.dim()); ++s) {
            for (int t = 0; t <= std::min(p, b.dim()); ++t) {
                if (s + t < p) continue;
                // Words w1 (size p-s) and w2 (size p-t), disjoint subsets of {0..p-1}.
                subsets_of_size(p, p - s, [&](const std::vector<int>& w1set) {
                    std::vector<int> rest;
                    for (int v = 0; v < p; ++v)
                        if (!std::binary_search(w1set.begin(), w1set.end(), v)) rest.push_back(v);
                    subsets_of_size(static_cast<int>(rest.size()), p - t,
                                    [&](const std::vector<int>& pick) {
                        DegenWord w1(w1set.rbegin(), w1set.rend());
                        DegenWord w2;
                        for (auto it = pick.rbegin(); it != pick.rend(); ++it)
                            w2.push_back(rest[*it]);
                        std::sort(w2.begin(), w2.end(), std::greater<int>());
                        for (int si = 0; si < a.count(s); ++si) {
                            for (int ti = 0; ti < b.count(t); ++ti) {
                                FormalSimplex x{w1, SimplexRef{s, si}};
                                FormalSimplex y{w2, SimplexRef{t, ti}};
                                parts[p].emplace_back(x, y);
                            }
                        }
                    });
                });
            }
        }
        // Deterministic order within the dimension.
        std::sort(parts[p].begin(), parts[p].end());
        for (const auto& [x, y] : parts[p]) {
            std::string nm = "(" + a.name(x.target);
            for (int j : x.word) nm += "s" + std::to_string(j);
            nm += "," + b.name(y.target);
            for (int j : y.word) nm += "s" + std::to_string(j);
            nm += ")";
            ref[{x, y}] = builder.add(p, nm);
        }
    }
    for (int p = 1; p <= maxdim; ++p) {
        for (size_t idx = 0; idx < parts[p].size(); ++idx) {
            SimplexRef s{p, static_cast<int>(idx)};
            auto [x, y] = parts[p][idx];
            for (int i = 0; i <= p; ++i) {
                FormalSimplex fx = a.face(x, i);
                FormalSimplex fy = b.face(y, i);
                DegenWord diag = strip_pair(a, b, fx, fy);
                builder.set_face(s, i, FormalSimplex{diag, ref.at({fx, fy})});
            }
        }
    }
    out.space = builder.build();
    out.parts = std::move(parts);
    return out;
}

SimplicialMap ProductResult::projection_a(const SimpSet& a) const {
    SimplicialMap m{&space, &a, {}};
    m.image.resize(space.dim() + 1);
    for (int p = 0; p <= space.dim(); ++p)
        for (const auto& [x, y] : parts[p]) m.image[p].push_back(x);
    return m;
}

SimplicialMap ProductResult::projection_b(const SimpSet& b) const {
    SimplicialMap m{&space, &b, {}};
    m.image.resize(space.dim() + 1);
    for (int p = 0; p <= space.dim(); ++p)
        for (const auto& [x, y] : parts[p]) m.image[p].push_back(y);
    return m;
}

// --- join -------------------------------------------------------------------

JoinResult join(const SimpSet& a, const SimpSet& b) {
    JoinResult out;
    SimpSetBuilder builder;
    int ad = a.dim(), bd = b.dim();
    int maxdim = std::max(ad, bd);
    if (ad >= 0 && bd >= 0) maxdim = std::max(maxdim, ad + bd + 1);
    std::vector<std::vector<JoinCell>> cells(std::max(0, maxdim + 1));
    std::map<std::pair<int, SimplexRef>, SimplexRef> amap, bmap;  // tagged lookup
    std::map<std::pair<SimplexRef, SimplexRef>, SimplexRef> pmap;

    for (int k = 0; k <= maxdim; ++k) {
        for (int i = 0; i < a.count(k); ++i) {
            SimplexRef s{k, i};
            SimplexRef r = builder.add(k, "a:" + a.name(s));
            amap[{0, s}] = r;
            cells[k].push_back(JoinCell{JoinCell::Kind::A, s, {}});
        }
        for (int i = 0; i < b.count(k); ++i) {
            SimplexRef s{k, i};
            SimplexRef r = builder.add(k, "b:" + b.name(s));
            bmap[{1, s}] = r;
            cells[k].push_back(JoinCell{JoinCell::Kind::B, {}, s});
        }
        for (int p = 0; p < k; ++p) {
            int q = k - 1 - p;
            for (int i = 0; i < a.count(p); ++i) {
                for (int j = 0; j < b.count(q); ++j) {
                    SimplexRef sa{p, i}, sb{q, j};
                    SimplexRef r = builder.add(k, a.name(sa) + "*" + b.name(sb));
                    pmap[{sa, sb}] = r;
                    cells[k].push_back(JoinCell{JoinCell::Kind::Pair, sa, sb});
                }
            }
        }
    }

    auto pair_face = [&](SimplexRef sa, SimplexRef sb, int i) -> FormalSimplex {
        int p = sa.dim, q = sb.dim;
        if (i <= p) {
            if (p == 0) return nondeg(bmap.at({1, sb}));
            const FormalSimplex& f = a.face_entry(sa, i);
            return FormalSimplex{f.word, pmap.at({f.target, sb})};
        }
        if (q == 0) return nondeg(amap.at({0, sa}));
        const FormalSimplex& f = b.face_entry(sb, i - p - 1);
        DegenWord w;
        for (int j : f.word) w.push_back(j + p + 1);
        return FormalSimplex{w, pmap.at({sa, f.target})};
    };

    for (int k = 1; k <= maxdim; ++k) {
        for (size_t idx = 0; idx < cells[k].size(); ++idx) {
            const JoinCell& c = cells[k][idx];
            SimplexRef s{k, static_cast<int>(idx)};
            for (int i = 0; i <= k; ++i) {
                if (c.kind == JoinCell::Kind::A) {
                    const FormalSimplex& f = a.face_entry(c.a, i);
                    builder.set_face(s, i, FormalSimplex{f.word, amap.at({0, f.target})});
                } else if (c.kind == JoinCell::Kind::B) {
                    const FormalSimplex& f = b.face_entry(c.b, i);
                    builder.set_face(s, i, FormalSimplex{f.word, bmap.at({1, f.target})});
                } else {
                    builder.set_face(s, i, pair_face(c.a, c.b, i));
                }
            }
        }
    }
    out.space = builder.build();
    out.cells = std::move(cells);
    return out;
}

std::optional<SimplexRef> JoinResult::cell_of_a(const SimpSet&, SimplexRef s) const {
    for (int d = 0; d < static_cast<int>(cells.size()); ++d)
        for (int i = 0; i < static_cast<int>(cells[d].size()); ++i)
            if (cells[d][i].kind == JoinCell::Kind::A && cells[d][i].a == s)
                return SimplexRef{d, i};
    return std::nullopt;
}

ConeResult cone(const SimpSet& x) {
    SimpSetBuilder pb;
    pb.add(0, "*");
    SimpSet pt = pb.build();
    ConeResult out;
    out.join_data = join(pt, x);
    out.space = out.join_data.space;
    out.apex = SimplexRef{0, 0};
    for (int i = 0; i < static_cast<int>(out.join_data.cells[0].size()); ++i)
        if (out.join_data.cells[0][i].kind == JoinCell::Kind::A) out.apex = SimplexRef{0, i};
    return out;
}

ConeResult cone_right(const SimpSet& x) {
    SimpSetBuilder pb;
    pb.add(0, "*");
    SimpSet pt = pb.build();
    ConeResult out;
    out.join_data = join(x, pt);
    out.space = out.join_data.space;
    for (int i = 0; i < static_cast<int>(out.join_data.cells[0].size()); ++i)
        if (out.join_data.cells[0][i].kind == JoinCell::Kind::B) out.apex = SimplexRef{0, i};
    return out;
}

// --- brute-force isomorphism ------------------------------------------------

namespace {

struct IsoSearch {
    const SimpSet& a;
    const SimpSet& b;
    long long budget;
    std::vector<SimplexRef> order;  // all simplices of a, low dimension first
    std::vector<std::vector<int>> fwd, used;

    bool extend(size_t pos) {
        if (budget-- <= 0) return false;
        if (pos == order.size()) return true;
        SimplexRef s = order[pos];
        int n = s.dim;
        for (int cand = 0; cand < b.count(n); ++cand) {
            if (used[n][cand]) continue;
            bool ok = true;
            for (int i = 0; i <= n && ok && n >= 1; ++i) {
                const FormalSimplex& fa = a.face_entry(s, i);
                const FormalSimplex& fb = b.face_entry(SimplexRef{n, cand}, i);
                if (fa.word != fb.word || fwd[fa.target.dim][fa.target.idx] != fb.target.idx)
                    ok = false;
            }
            if (!ok) continue;
            fwd[n][s.idx] = cand;
            used[n][cand] = 1;
            if (extend(pos + 1)) return true;
            fwd[n][s.idx] = -1;
            used[n][cand] = 0;
            if (budget <= 0) return false;
        }
        return false;
    }
};

}  // namespace

bool isomorphic_brute(const SimpSet& a, const SimpSet& b, int max_backtrack) {
    if (a.f_vector() != b.f_vector()) return false;
    if (a.empty()) return true;
    IsoSearch srch{a, b, max_backtrack, {}, {}, {}};
    srch.fwd.resize(a.dim() + 1);
    srch.used.resize(a.dim() + 1);
    for (int n = 0; n <= a.dim(); ++n) {
        srch.fwd[n].assign(a.count(n), -1);
        srch.used[n].assign(b.count(n), 0);
        for (int idx = 0; idx < a.count(n); ++idx) srch.order.push_back(SimplexRef{n, idx});
    }
    return srch.extend(0);
}

}  // namespace strata
