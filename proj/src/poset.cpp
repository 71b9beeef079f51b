#include "strata/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace strata {

namespace {

std::vector<std::string> default_names(int n, const std::vector<std::string>& given) {
    if (!given.empty()) {
        if (static_cast<int>(given.size()) != n) throw Error("poset: wrong number of names");
        return given;
    }
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
    return out;
}

}  // namespace

FinPoset FinPoset::from_relations(int n, const std::vector<std::pair<int, int>>& rels,
                                  std::vector<std::string> names) {
    FinPoset p;
    p.n_ = n;
    p.names_ = default_names(n, names);
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.leq_[i][i] = true;
    for (auto [a, b] : rels) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("poset: relation out of range");
        p.leq_[a][b] = true;
    }
    // Floyd-Warshall style closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq_[i][k])
                for (int j = 0; j < n; ++j)
                    if (p.leq_[k][j]) p.leq_[i][j] = true;
    p.validate();
    return p;
}

FinPoset FinPoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                               std::vector<std::string> names) {
    return from_relations(n, covers, std::move(names));
}

FinPoset FinPoset::antichain(int n) { return from_relations(n, {}); }

FinPoset FinPoset::chain(int n) {
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1});
    return from_relations(n, rels);
}

std::optional<int> FinPoset::find(const std::string& nm) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == nm) return i;
    return std::nullopt;
}

void FinPoset::validate() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && leq_[i][j] && leq_[j][i])
                throw Error("poset: antisymmetry fails between " + names_[i] + " and " + names_[j]);
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n_ && cover; ++c)
                if (c != a && c != b && less(a, c) && less(c, b)) cover = false;
            if (cover) out.push_back({a, b});
        }
    }
    return out;
}

std::vector<int> FinPoset::down_set(int x) const {
    if (x < 0 || x >= n_) throw Error("down_set: unknown element");
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq_[y][x]) out.push_back(y);
    return out;
}

std::vector<int> FinPoset::up_set(int x) const {
    if (x < 0 || x >= n_) throw Error("up_set: unknown element");
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq_[x][y]) out.push_back(y);
    return out;
}

std::vector<int> FinPoset::strictly_below(int x) const {
    std::vector<int> out = down_set(x);
    out.erase(std::remove(out.begin(), out.end(), x), out.end());
    return out;
}

std::vector<int> FinPoset::strictly_above(int x) const {
    std::vector<int> out = up_set(x);
    out.erase(std::remove(out.begin(), out.end(), x), out.end());
    return out;
}

int FinPoset::height(int x) const {
    std::vector<int> h(n_, -1);
    std::function<int(int)> rec = [&](int v) {
        if (h[v] >= 0) return h[v];
        int best = 0;
        for (int u = 0; u < n_; ++u)
            if (less(u, v)) best = std::max(best, rec(u) + 1);
        return h[v] = best;
    };
    return rec(x);
}

std::vector<int> FinPoset::minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        bool minimal = true;
        for (int y = 0; y < n_ && minimal; ++y)
            if (less(y, x)) minimal = false;
        if (minimal) out.push_back(x);
    }
    return out;
}

std::vector<int> FinPoset::open_interval(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < n_; ++c)
        if (less(a, c) && less(c, b)) out.push_back(c);
    return out;
}

FinPoset FinPoset::induced(const std::vector<int>& elements) const {
    FinPoset p;
    p.n_ = static_cast<int>(elements.size());
    p.leq_.assign(p.n_, std::vector<bool>(p.n_, false));
    for (int i = 0; i < p.n_; ++i) {
        p.names_.push_back(names_[elements[i]]);
        for (int j = 0; j < p.n_; ++j) p.leq_[i][j] = leq_[elements[i]][elements[j]];
    }
    return p;
}

FinPoset FinPoset::adjoin_bottom(const std::string& nm) const {
    FinPoset p;
    p.n_ = n_ + 1;
    p.leq_.assign(p.n_, std::vector<bool>(p.n_, false));
    p.names_.push_back(nm);
    for (int i = 0; i < n_; ++i) p.names_.push_back(names_[i]);
    for (int j = 0; j < p.n_; ++j) p.leq_[0][j] = true;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) p.leq_[i + 1][j + 1] = leq_[i][j];
    for (int i = 0; i < p.n_; ++i) p.leq_[i][i] = true;
    return p;
}

FinPoset FinPoset::opposite() const {
    FinPoset p;
    p.n_ = n_;
    p.names_ = names_;
    p.leq_.assign(n_, std::vector<bool>(n_, false));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) p.leq_[i][j] = leq_[j][i];
    return p;
}

OrderComplexResult order_complex(const FinPoset& p) {
    OrderComplexResult out;
    std::vector<std::vector<std::vector<int>>> chains;
    // Enumerate strict chains by DFS in index order.
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int last) {
        if (!cur.empty()) {
            int d = static_cast<int>(cur.size()) - 1;
            while (static_cast<int>(chains.size()) <= d) chains.emplace_back();
            chains[d].push_back(cur);
        }
        for (int v = 0; v < p.size(); ++v) {
            if (last >= 0 && !p.less(last, v)) continue;
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(-1);
    for (auto& layer : chains) std::sort(layer.begin(), layer.end());

    SimpSetBuilder b;
    std::map<std::vector<int>, SimplexRef> ref;
    for (int d = 0; d < static_cast<int>(chains.size()); ++d) {
        for (const auto& ch : chains[d]) {
            std::string nm;
            for (size_t i = 0; i < ch.size(); ++i) {
                if (i) nm += '<';
                nm += p.name(ch[i]);
            }
            ref[ch] = b.add(d, nm);
        }
    }
    for (int d = 1; d < static_cast<int>(chains.size()); ++d) {
        for (size_t idx = 0; idx < chains[d].size(); ++idx) {
            for (int i = 0; i <= d; ++i) {
                std::vector<int> sub = chains[d][idx];
                sub.erase(sub.begin() + i);
                b.set_face(SimplexRef{d, static_cast<int>(idx)}, i, nondeg(ref.at(sub)));
            }
        }
    }
    out.space = b.build();
    out.chains = std::move(chains);
    return out;
}

// --- isomorphism --------------------------------------------------------------

namespace {

std::vector<long long> invariant(const FinPoset& p) {
    std::vector<long long> inv(p.size());
    for (int x = 0; x < p.size(); ++x) {
        inv[x] = p.height(x) * 1000000LL + static_cast<long long>(p.down_set(x).size()) * 1000 +
                 static_cast<long long>(p.up_set(x).size());
    }
    return inv;
}

struct PosetIsoSearch {
    const FinPoset& a;
    const FinPoset& b;
    std::vector<long long> inva, invb;
    std::vector<int> fwd;
    std::vector<bool> used;

    bool extend(int x) {
        if (x == a.size()) return true;
        for (int y = 0; y < b.size(); ++y) {
            if (used[y] || inva[x] != invb[y]) continue;
            bool ok = true;
            for (int x2 = 0; x2 < x && ok; ++x2) {
                if (a.leq(x, x2) != b.leq(y, fwd[x2])) ok = false;
                if (a.leq(x2, x) != b.leq(fwd[x2], y)) ok = false;
            }
            if (!ok) continue;
            fwd[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            used[y] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> poset_iso(const FinPoset& a, const FinPoset& b) {
    if (a.size() != b.size()) return std::nullopt;
    PosetIsoSearch s{a, b, invariant(a), invariant(b), std::vector<int>(a.size(), -1),
                     std::vector<bool>(b.size(), false)};
    {
        auto sa = s.inva, sb = s.invb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    if (!s.extend(0)) return std::nullopt;
    return s.fwd;
}

PosetJoinResult poset_join(const FinPoset& a, const FinPoset& b) {
    PosetJoinResult out;
    int na = a.size(), nb = b.size();
    int n = na + na * nb + nb;
    std::vector<std::string> names;
    out.from_a.resize(na);
    out.from_b.resize(nb);
    out.from_pair.assign(na, std::vector<int>(nb, -1));
    for (int i = 0; i < na; ++i) {
        out.from_a[i] = static_cast<int>(names.size());
        names.push_back("a:" + a.name(i));
    }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            out.from_pair[i][j] = static_cast<int>(names.size());
            names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
        }
    for (int j = 0; j < nb; ++j) {
        out.from_b[j] = static_cast<int>(names.size());
        names.push_back("b:" + b.name(j));
    }
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < na; ++i)
        for (int i2 = 0; i2 < na; ++i2)
            if (a.less(i, i2)) rels.push_back({out.from_a[i], out.from_a[i2]});
    for (int j = 0; j < nb; ++j)
        for (int j2 = 0; j2 < nb; ++j2)
            if (b.less(j, j2)) rels.push_back({out.from_b[j], out.from_b[j2]});
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    if ((a.less(i, i2) || i == i2) && (b.less(j, j2) || j == j2) &&
                        !(i == i2 && j == j2))
                        rels.push_back({out.from_pair[i][j], out.from_pair[i2][j2]});
            rels.push_back({out.from_a[i], out.from_pair[i][j]});
            rels.push_back({out.from_b[j], out.from_pair[i][j]});
        }
    out.poset = FinPoset::from_relations(n, rels, names);
    return out;
}

CwCheckReport cw_poset_necessary_check(const FinPoset& p) {
    CwCheckReport rep;
    auto mins = p.minimal_elements();
    if (mins.size() != 1) {
        rep.well_formed = false;
        rep.pass = false;
        return rep;
    }
    int bot = mins[0];
    // The minimum must be below everything.
    for (int x = 0; x < p.size(); ++x)
        if (!p.leq(bot, x)) {
            rep.well_formed = false;
            return rep;
        }
    rep.well_formed = true;
    rep.pass = true;
    for (int x = 0; x < p.size(); ++x) {
        if (x == bot) continue;
        CwElementVerdict v;
        v.element = x;
        v.expected_sphere_dim = p.height(x) - 2;
        FinPoset interval = p.induced(p.open_interval(bot, x));
        if (v.expected_sphere_dim < 0) {
            v.pass = interval.size() == 0;
            v.detail = v.pass ? "empty interval" : "expected empty interval";
        } else {
            auto oc = order_complex(interval);
            auto h = homology(oc.space);
            auto want = sphere_homology(v.expected_sphere_dim);
            v.pass = h.equals(want) && oc.space.euler() == want.euler;
            v.detail = h.to_string() + " vs S^" + std::to_string(v.expected_sphere_dim);
        }
        if (!v.pass) rep.pass = false;
        rep.verdicts.push_back(v);
    }
    return rep;
}

}  // namespace strata
