#include "strata/bisimpset.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace strata {

int BisimpSet::count(int p, int q) const {
    auto it = names_.find({p, q});
    return it == names_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::string& BisimpSet::name(BiRef g) const {
    return names_.at({g.p, g.q}).at(g.idx);
}

const BiFormal& BisimpSet::hface_entry(BiRef g, int i) const {
    return hfaces_.at({g.p, g.q}).at(g.idx).at(i);
}

const BiFormal& BisimpSet::vface_entry(BiRef g, int j) const {
    return vfaces_.at({g.p, g.q}).at(g.idx).at(j);
}

// Shared word-pushing for one direction; the other word rides along.
namespace {

template <typename FaceFn>
BiFormal push_face(const DegenWord& word, int cur0, FaceFn&& entry, const DegenWord& other,
                   bool horizontal, BiRef target) {
    DegenWord emitted;
    int cur = cur0;
    for (size_t m = 0; m < word.size(); ++m) {
        int j = word[m];
        if (cur < j) {
            emitted.push_back(j - 1);
        } else if (cur == j || cur == j + 1) {
            DegenWord rest(word.begin() + m + 1, word.end());
            DegenWord full = word_compose(emitted, rest);
            if (horizontal) return BiFormal{full, other, target};
            return BiFormal{other, full, target};
        } else {
            emitted.push_back(j);
            --cur;
        }
    }
    const BiFormal& f = entry(cur);
    if (horizontal)
        return BiFormal{word_compose(emitted, f.hword), word_compose(other, f.vword), f.target};
    return BiFormal{word_compose(other, f.hword), word_compose(emitted, f.vword), f.target};
}

}  // namespace

BiFormal BisimpSet::hface(const BiFormal& x, int i) const {
    if (x.p() < 1) throw Error("hface: p = 0");
    return push_face(
        x.hword, i, [&](int cur) -> const BiFormal& { return hface_entry(x.target, cur); },
        x.vword, true, x.target);
}

BiFormal BisimpSet::vface(const BiFormal& x, int j) const {
    if (x.q() < 1) throw Error("vface: q = 0");
    return push_face(
        x.vword, j, [&](int cur) -> const BiFormal& { return vface_entry(x.target, cur); },
        x.hword, false, x.target);
}

void BisimpSet::validate() const {
    for (BiRef g : all_generators()) {
        BiFormal x{{}, {}, g};
        for (int i = 0; i <= g.p && g.p >= 1; ++i) {
            const BiFormal& f = hface_entry(g, i);
            if (!word_is_normal(f.hword) || !word_is_normal(f.vword))
                throw Error("bisimplicial: non-normal face word at " + name(g));
            if (f.p() != g.p - 1 || f.q() != g.q)
                throw Error("bisimplicial: hface bidegree mismatch at " + name(g));
        }
        for (int j = 0; j <= g.q && g.q >= 1; ++j) {
            const BiFormal& f = vface_entry(g, j);
            if (f.p() != g.p || f.q() != g.q - 1)
                throw Error("bisimplicial: vface bidegree mismatch at " + name(g));
        }
        if (g.p >= 2)
            for (int j = 1; j <= g.p; ++j)
                for (int i = 0; i < j; ++i)
                    if (hface(hface(x, j), i) != hface(hface(x, i), j - 1))
                        throw Error("bisimplicial: horizontal identity fails at " + name(g));
        if (g.q >= 2)
            for (int j = 1; j <= g.q; ++j)
                for (int i = 0; i < j; ++i)
                    if (vface(vface(x, j), i) != vface(vface(x, i), j - 1))
                        throw Error("bisimplicial: vertical identity fails at " + name(g));
        for (int i = 0; i <= g.p && g.p >= 1; ++i)
            for (int j = 0; j <= g.q && g.q >= 1; ++j)
                if (vface(hface(x, i), j) != hface(vface(x, j), i))
                    throw Error("bisimplicial: h/v commutation fails at " + name(g));
    }
}

std::vector<BiRef> BisimpSet::all_generators() const {
    std::vector<BiRef> out;
    for (const auto& [pq, nm] : names_)
        for (int idx = 0; idx < static_cast<int>(nm.size()); ++idx)
            out.push_back(BiRef{pq.first, pq.second, idx});
    return out;
}

BiRef BisimpSetBuilder::add(int p, int q, std::string nm) {
    auto& names = out_.names_[{p, q}];
    auto& hf = out_.hfaces_[{p, q}];
    auto& vf = out_.vfaces_[{p, q}];
    int idx = static_cast<int>(names.size());
    names.push_back(std::move(nm));
    hf.emplace_back(std::vector<BiFormal>(p >= 1 ? p + 1 : 0));
    vf.emplace_back(std::vector<BiFormal>(q >= 1 ? q + 1 : 0));
    return BiRef{p, q, idx};
}

void BisimpSetBuilder::set_hface(BiRef g, int i, BiFormal f) {
    out_.hfaces_.at({g.p, g.q}).at(g.idx).at(i) = std::move(f);
}

void BisimpSetBuilder::set_vface(BiRef g, int j, BiFormal f) {
    out_.vfaces_.at({g.p, g.q}).at(g.idx).at(j) = std::move(f);
}

BisimpSet BisimpSetBuilder::build(bool run_validate) {
    if (run_validate) out_.validate();
    return std::move(out_);
}

// --- diagonal ---------------------------------------------------------------

namespace {

// Extracts the diagonal degeneracy word from a formal bisimplex: positions in
// hword ∩ vword are diagonal degeneracies s_j = s^h_j s^v_j.
DegenWord strip_diagonal(const BisimpSet& b, BiFormal& x) {
    DegenWord diag;
    for (;;) {
        std::vector<int> common;
        std::set_intersection(x.hword.begin(), x.hword.end(), x.vword.begin(), x.vword.end(),
                              std::back_inserter(common), std::greater<int>());
        if (common.empty()) break;
        int j = common.front();
        x = b.vface(b.hface(x, j), j);
        diag.push_back(j);
    }
    if (!word_is_normal(diag)) throw Error("strip_diagonal: non-normal word");
    return diag;
}

void subsets_rec(const std::vector<int>& pool, int k, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn, size_t start) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (size_t v = start; v < pool.size(); ++v) {
        cur.push_back(pool[v]);
        subsets_rec(pool, k, cur, fn, v + 1);
        cur.pop_back();
    }
}

}  // namespace

DiagonalResult diagonal(const BisimpSet& b) {
    DiagonalResult out;
    auto gens = b.all_generators();
    int maxdim = 0;
    for (BiRef g : gens) maxdim = std::max(maxdim, g.p + g.q);

    std::vector<std::vector<DiagonalCell>> cells(maxdim + 1);
    for (BiRef g : gens) {
        for (int n = std::max(g.p, g.q); n <= g.p + g.q; ++n) {
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            std::vector<int> cur;
            subsets_rec(all, n - g.p, cur, [&](const std::vector<int>& hw) {
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                    if (!std::binary_search(hw.begin(), hw.end(), v)) rest.push_back(v);
                std::vector<int> cur2;
                subsets_rec(rest, n - g.q, cur2, [&](const std::vector<int>& vw) {
                    DegenWord hword(hw.rbegin(), hw.rend());
                    DegenWord vword(vw.rbegin(), vw.rend());
                    cells[n].push_back(DiagonalCell{hword, vword, g});
                }, 0);
            }, 0);
        }
    }
    for (auto& layer : cells) std::sort(layer.begin(), layer.end());

    SimpSetBuilder builder;
    std::map<DiagonalCell, SimplexRef> ref;
    for (int n = 0; n <= maxdim; ++n) {
        for (const DiagonalCell& c : cells[n]) {
            std::string nm = b.name(c.gen);
            for (int j : c.hword) nm += "h" + std::to_string(j);
            for (int j : c.vword) nm += "v" + std::to_string(j);
            ref[c] = builder.add(n, nm);
        }
    }
    for (int n = 1; n <= maxdim; ++n) {
        for (size_t idx = 0; idx < cells[n].size(); ++idx) {
            const DiagonalCell& c = cells[n][idx];
            for (int i = 0; i <= n; ++i) {
                BiFormal x{c.hword, c.vword, c.gen};
                BiFormal f = b.vface(b.hface(x, i), i);
                DegenWord diag = strip_diagonal(b, f);
                auto it = ref.find(DiagonalCell{f.hword, f.vword, f.target});
                if (it == ref.end()) throw Error("diagonal: face target not enumerated");
                builder.set_face(SimplexRef{n, static_cast<int>(idx)}, i,
                                 FormalSimplex{diag, it->second});
            }
        }
    }
    out.space = builder.build();
    out.cells = std::move(cells);
    return out;
}

}  // namespace strata
