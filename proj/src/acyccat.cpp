#include "strata/acyccat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace strata {

std::optional<int> AcycCat::find_object(const std::string& nm) const {
    for (int i = 0; i < num_objects(); ++i)
        if (objects_[i] == nm) return i;
    return std::nullopt;
}

int AcycCat::add_object(std::string name) {
    objects_.push_back(std::move(name));
    return num_objects() - 1;
}

int AcycCat::add_morphism(std::string name, int src, int tgt) {
    if (tier_ != HomTier::Discrete) throw Error("add_morphism: not a discrete-tier category");
    if (src < 0 || src >= num_objects() || tgt < 0 || tgt >= num_objects())
        throw Error("add_morphism: object out of range");
    int id = static_cast<int>(mors_.size());
    mors_.push_back(Morphism{std::move(name), src, tgt});
    homs_[{src, tgt}].push_back(id);
    return id;
}

void AcycCat::set_compose(int g, int f, int gf) {
    if (mors_.at(f).tgt != mors_.at(g).src) throw Error("set_compose: not composable");
    if (mors_.at(gf).src != mors_.at(f).src || mors_.at(gf).tgt != mors_.at(g).tgt)
        throw Error("set_compose: composite endpoints mismatch");
    compose_[{g, f}] = gf;
}

const std::vector<int>& AcycCat::hom(int x, int y) const {
    auto it = homs_.find({x, y});
    return it == homs_.end() ? empty_hom_ : it->second;
}

int AcycCat::compose(int g, int f) const {
    auto it = compose_.find({g, f});
    if (it == compose_.end()) throw Error("compose: missing composition entry");
    return it->second;
}

std::optional<int> AcycCat::find_morphism(const std::string& nm) const {
    for (int i = 0; i < num_morphisms(); ++i)
        if (mors_[i].name == nm) return i;
    return std::nullopt;
}

void AcycCat::set_hom_poset(int x, int y, FinPoset p) {
    if (tier_ != HomTier::PosetEnriched) throw Error("set_hom_poset: wrong tier");
    hom_posets_[{x, y}] = std::move(p);
}

void AcycCat::set_compose_table(int x, int y, int z, std::vector<std::vector<int>> table) {
    compose_tables_[{x, y, z}] = std::move(table);
}

const FinPoset& AcycCat::hom_poset(int x, int y) const { return hom_posets_.at({x, y}); }

bool AcycCat::has_hom_poset(int x, int y) const { return hom_posets_.count({x, y}) > 0; }

int AcycCat::compose_elements(int x, int y, int z, int g, int f) const {
    auto it = compose_tables_.find({x, y, z});
    if (it == compose_tables_.end()) throw Error("compose_elements: missing table");
    return it->second.at(g).at(f);
}

bool AcycCat::has_compose_table(int x, int y, int z) const {
    return compose_tables_.count({x, y, z}) > 0;
}

void AcycCat::set_hom_space(int x, int y, SimpSet s) {
    if (tier_ != HomTier::SimpSetEnriched) throw Error("set_hom_space: wrong tier");
    hom_spaces_[{x, y}] = std::move(s);
}

const SimpSet& AcycCat::hom_space(int x, int y) const { return hom_spaces_.at({x, y}); }

bool AcycCat::has_hom_space(int x, int y) const { return hom_spaces_.count({x, y}) > 0; }

bool AcycCat::hom_nonempty(int x, int y) const {
    switch (tier_) {
        case HomTier::Discrete:
            return !hom(x, y).empty();
        case HomTier::PosetEnriched:
            return has_hom_poset(x, y) && hom_poset(x, y).size() > 0;
        case HomTier::SimpSetEnriched:
            return has_hom_space(x, y) && !hom_space(x, y).empty();
    }
    return false;
}

FinPoset AcycCat::underlying_poset() const {
    std::vector<std::pair<int, int>> rels;
    for (int x = 0; x < num_objects(); ++x)
        for (int y = 0; y < num_objects(); ++y)
            if (x != y && hom_nonempty(x, y)) rels.push_back({x, y});
    return FinPoset::from_relations(num_objects(), rels, objects_);
}

AcycCat AcycCat::opposite() const {
    AcycCat op(tier_);
    op.objects_ = objects_;
    if (tier_ == HomTier::Discrete) {
        for (const Morphism& m : mors_) op.add_morphism(m.name, m.tgt, m.src);
        for (const auto& [gf, h] : compose_) op.compose_[{gf.second, gf.first}] = h;
    } else if (tier_ == HomTier::PosetEnriched) {
        for (const auto& [xy, p] : hom_posets_) op.hom_posets_[{xy.second, xy.first}] = p;
        for (const auto& [xyz, t] : compose_tables_) {
            auto [x, y, z] = xyz;
            std::vector<std::vector<int>> flipped;
            if (!t.empty()) {
                flipped.assign(t[0].size(), std::vector<int>(t.size(), 0));
                for (size_t g = 0; g < t.size(); ++g)
                    for (size_t f = 0; f < t[g].size(); ++f) flipped[f][g] = t[g][f];
            }
            op.compose_tables_[{z, y, x}] = flipped;
        }
    } else {
        for (const auto& [xy, s] : hom_spaces_) op.hom_spaces_[{xy.second, xy.first}] = s;
    }
    return op;
}

AcycCat AcycCat::from_poset(const FinPoset& p) {
    AcycCat c(HomTier::Discrete);
    for (int i = 0; i < p.size(); ++i) c.add_object(p.name(i));
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(x, y)) ids[{x, y}] = c.add_morphism(p.name(x) + "<" + p.name(y), x, y);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            for (int z = 0; z < p.size(); ++z)
                if (p.less(x, y) && p.less(y, z))
                    c.set_compose(ids[{y, z}], ids[{x, y}], ids[{x, z}]);
    return c;
}

AcycCat AcycCat::as_poset_enriched() const {
    if (tier_ != HomTier::Discrete) throw Error("as_poset_enriched: discrete tier expected");
    AcycCat c(HomTier::PosetEnriched);
    c.objects_ = objects_;
    for (int x = 0; x < num_objects(); ++x) {
        for (int y = 0; y < num_objects(); ++y) {
            const auto& h = hom(x, y);
            if (h.empty()) continue;
            std::vector<std::string> names;
            for (int id : h) names.push_back(mors_[id].name);
            c.set_hom_poset(x, y, FinPoset::from_relations(static_cast<int>(h.size()), {}, names));
        }
    }
    for (int x = 0; x < num_objects(); ++x)
        for (int y = 0; y < num_objects(); ++y)
            for (int z = 0; z < num_objects(); ++z) {
                const auto& hf = hom(x, y);
                const auto& hg = hom(y, z);
                if (hf.empty() || hg.empty()) continue;
                std::vector<std::vector<int>> table(hg.size(), std::vector<int>(hf.size(), 0));
                const auto& hgf = hom(x, z);
                for (size_t g = 0; g < hg.size(); ++g)
                    for (size_t f = 0; f < hf.size(); ++f) {
                        int comp = compose(hg[g], hf[f]);
                        auto it = std::find(hgf.begin(), hgf.end(), comp);
                        table[g][f] = static_cast<int>(it - hgf.begin());
                    }
                c.set_compose_table(x, y, z, table);
            }
    return c;
}

// --- validation ----------------------------------------------------------------

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    os << (pass ? "pass" : "fail");
    for (const auto& i : issues) os << "\n  [" << i.axiom << "] " << i.witness;
    return os.str();
}

ValidationReport validate(const AcycCat& c) {
    ValidationReport rep;
    auto issue = [&](const std::string& a, const std::string& w) {
        rep.issues.push_back({a, w});
    };
    int n = c.num_objects();
    // Axiom 1: at most one of C(x,y), C(y,x) nonempty for distinct x, y.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (c.hom_nonempty(x, y) && c.hom_nonempty(y, x))
                issue("acyclicity", "both C(" + c.object_name(x) + "," + c.object_name(y) +
                                        ") and the reverse are nonempty");
    // Axiom 2: no non-identity endomorphisms.
    for (int x = 0; x < n; ++x)
        if (c.hom_nonempty(x, x))
            issue("identity-endomorphisms", "C(" + c.object_name(x) + "," + c.object_name(x) +
                                                ") contains a non-identity morphism");

    if (c.tier() == HomTier::Discrete) {
        // Composition totality and endpoints.
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (x == y || y == z) continue;
                    for (int f : c.hom(x, y))
                        for (int g : c.hom(y, z)) {
                            int gf = -1;
                            try {
                                gf = c.compose(g, f);
                            } catch (const Error&) {
                                issue("composition-totality",
                                      c.morphism(g).name + " o " + c.morphism(f).name +
                                          " undefined");
                                continue;
                            }
                            const Morphism& m = c.morphism(gf);
                            if (m.src != x || m.tgt != z)
                                issue("composition-endpoints",
                                      c.morphism(g).name + " o " + c.morphism(f).name);
                        }
                }
        // Associativity on all composable triples.
        if (rep.issues.empty()) {
            for (int m1 = 0; m1 < c.num_morphisms(); ++m1)
                for (int m2 = 0; m2 < c.num_morphisms(); ++m2)
                    for (int m3 = 0; m3 < c.num_morphisms(); ++m3) {
                        const Morphism&a = c.morphism(m1), &b = c.morphism(m2), &d = c.morphism(m3);
                        if (a.tgt != b.src || b.tgt != d.src) continue;
                        if (c.compose(m3, c.compose(m2, m1)) !=
                            c.compose(c.compose(m3, m2), m1))
                            issue("associativity", a.name + ", " + b.name + ", " + d.name);
                    }
        }
    } else if (c.tier() == HomTier::PosetEnriched) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (x == y || y == z) continue;
                    if (!c.hom_nonempty(x, y) || !c.hom_nonempty(y, z)) continue;
                    if (!c.has_compose_table(x, y, z)) {
                        issue("composition-totality",
                              "missing table " + c.object_name(x) + "," + c.object_name(y) + "," +
                                  c.object_name(z));
                        continue;
                    }
                    const FinPoset& hf = c.hom_poset(x, y);
                    const FinPoset& hg = c.hom_poset(y, z);
                    const FinPoset& hz = c.hom_poset(x, z);
                    // Monotonicity in both arguments.
                    for (int g1 = 0; g1 < hg.size(); ++g1)
                        for (int g2 = 0; g2 < hg.size(); ++g2)
                            for (int f1 = 0; f1 < hf.size(); ++f1)
                                for (int f2 = 0; f2 < hf.size(); ++f2)
                                    if (hg.leq(g1, g2) && hf.leq(f1, f2) &&
                                        !hz.leq(c.compose_elements(x, y, z, g1, f1),
                                                c.compose_elements(x, y, z, g2, f2)))
                                        issue("composition-monotone",
                                              c.object_name(x) + "->" + c.object_name(z));
                }
        // Associativity elementwise.
        for (int x = 0; x < n && rep.issues.empty(); ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int w = 0; w < n; ++w) {
                        if (!(x != y && y != z && z != w)) continue;
                        if (!c.hom_nonempty(x, y) || !c.hom_nonempty(y, z) ||
                            !c.hom_nonempty(z, w))
                            continue;
                        for (int f = 0; f < c.hom_poset(x, y).size(); ++f)
                            for (int g = 0; g < c.hom_poset(y, z).size(); ++g)
                                for (int h = 0; h < c.hom_poset(z, w).size(); ++h) {
                                    int a1 = c.compose_elements(
                                        x, z, w, h, c.compose_elements(x, y, z, g, f));
                                    int a2 = c.compose_elements(
                                        x, y, w, c.compose_elements(y, z, w, h, g), f);
                                    if (a1 != a2)
                                        issue("associativity", c.object_name(x) + "->" +
                                                                    c.object_name(w));
                                }
                    }
    } else {
        // SimpSet-enriched: composition is out of scope, so there must be no
        // composable pairs.
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (x != y && y != z && c.hom_nonempty(x, y) && c.hom_nonempty(y, z))
                        issue("composable-pair-unsupported",
                              c.object_name(x) + "->" + c.object_name(y) + "->" +
                                  c.object_name(z));
    }

    // The reachability relation must be a partial order (antisymmetry is
    // acyclicity; transitivity needs composition totality, checked above).
    if (rep.issues.empty()) c.underlying_poset();
    rep.pass = rep.issues.empty();
    return rep;
}

// --- nondegenerate nerve (discrete) ----------------------------------------------

std::optional<SimplexRef> NerveData::find_chain(const AcycCat&, const ChainCell& cell) const {
    int d = static_cast<int>(cell.mors.size());
    if (d >= static_cast<int>(chains.size())) return std::nullopt;
    for (int i = 0; i < static_cast<int>(chains[d].size()); ++i)
        if (chains[d][i].src == cell.src && chains[d][i].mors == cell.mors)
            return SimplexRef{d, i};
    return std::nullopt;
}

namespace {

std::string chain_name(const AcycCat& c, const ChainCell& cell) {
    if (cell.mors.empty()) return c.object_name(cell.src);
    std::string nm;
    for (size_t i = 0; i < cell.mors.size(); ++i) {
        if (i) nm += ';';
        nm += c.morphism(cell.mors[i]).name;
    }
    return nm;
}

}  // namespace

NerveData nondegenerate_nerve(const AcycCat& c) {
    if (c.tier() != HomTier::Discrete)
        throw Error("nondegenerate_nerve: discrete tier expected (use enriched_nerve)");
    NerveData out;
    std::vector<std::vector<ChainCell>> chains;
    chains.emplace_back();
    for (int x = 0; x < c.num_objects(); ++x) chains[0].push_back(ChainCell{x, {}});
    // Extend chains dimension by dimension.
    for (int d = 1;; ++d) {
        std::vector<ChainCell> next;
        for (const ChainCell& cell : chains[d - 1]) {
            int end = cell.tgt(c);
            for (int y = 0; y < c.num_objects(); ++y) {
                if (y == end) continue;
                for (int m : c.hom(end, y)) {
                    ChainCell longer = cell;
                    longer.mors.push_back(m);
                    next.push_back(longer);
                }
            }
        }
        if (next.empty()) break;
        chains.push_back(std::move(next));
    }
    SimpSetBuilder b;
    std::map<std::pair<int, std::vector<int>>, SimplexRef> ref;
    for (int d = 0; d < static_cast<int>(chains.size()); ++d)
        for (int i = 0; i < static_cast<int>(chains[d].size()); ++i) {
            ref[{chains[d][i].src, chains[d][i].mors}] =
                b.add(d, chain_name(c, chains[d][i]));
        }
    for (int d = 1; d < static_cast<int>(chains.size()); ++d) {
        for (int i = 0; i < static_cast<int>(chains[d].size()); ++i) {
            const ChainCell& cell = chains[d][i];
            for (int k = 0; k <= d; ++k) {
                ChainCell f;
                if (k == 0) {
                    f.src = c.morphism(cell.mors[0]).tgt;
                    f.mors.assign(cell.mors.begin() + 1, cell.mors.end());
                } else if (k == d) {
                    f.src = cell.src;
                    f.mors.assign(cell.mors.begin(), cell.mors.end() - 1);
                } else {
                    f.src = cell.src;
                    f.mors = cell.mors;
                    int g = f.mors[k];
                    f.mors.erase(f.mors.begin() + k);
                    f.mors[k - 1] = c.compose(g, cell.mors[k - 1]);
                }
                b.set_face(SimplexRef{d, i}, k, nondeg(ref.at({f.src, f.mors})));
            }
        }
    }
    out.space = b.build();
    out.chains = std::move(chains);
    return out;
}

// --- comma categories ---------------------------------------------------------

namespace {

CommaResult comma_impl(const AcycCat& c, int x, bool below) {
    if (c.tier() != HomTier::Discrete) throw Error("comma: unsupported tier (discrete only)");
    if (x < 0 || x >= c.num_objects()) throw Error("comma: unknown object");
    CommaResult out;
    out.cat = AcycCat(HomTier::Discrete);
    // Objects: morphisms into x (resp. out of x), then the identity at x.
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const Morphism& mor = c.morphism(m);
        if ((below && mor.tgt == x) || (!below && mor.src == x)) {
            out.objects.push_back(CommaObject{below ? mor.src : mor.tgt, m});
            out.cat.add_object(mor.name);
        }
    }
    out.objects.push_back(CommaObject{x, -1});
    out.identity_object = out.cat.add_object("1_" + c.object_name(x));

    int no = static_cast<int>(out.objects.size());
    // Morphisms (y,u) -> (y',u'): w: y -> y' with u' o w = u (below),
    // dually w: y' -> y... for x down C: w: y -> y' with w o u = u'.
    std::map<std::pair<int, int>, int> wit;  // (comma src, comma tgt) -> comma morphism id
    for (int a = 0; a < no; ++a) {
        for (int bidx = 0; bidx < no; ++bidx) {
            if (a == bidx) continue;
            const CommaObject& oa = out.objects[a];
            const CommaObject& ob = out.objects[bidx];
            if (below) {
                // w: oa.object -> ob.object with ob.morphism o w = oa.morphism.
                if (ob.morphism == -1) {
                    // w = oa.morphism itself (target is (x, 1_x)).
                    if (oa.morphism == -1) continue;
                    int id = out.cat.add_morphism(c.morphism(oa.morphism).name + "@" +
                                                      out.cat.object_name(a) + ">" +
                                                      out.cat.object_name(bidx),
                                                  a, bidx);
                    out.morphism_underlying.push_back(oa.morphism);
                    wit[{a, bidx}] = id;
                    continue;
                }
                if (oa.morphism == -1) continue;  // nothing maps out of 1_x
                for (int w : c.hom(oa.object, ob.object)) {
                    if (c.compose(ob.morphism, w) == oa.morphism) {
                        int id = out.cat.add_morphism(c.morphism(w).name + "@" +
                                                          out.cat.object_name(a) + ">" +
                                                          out.cat.object_name(bidx),
                                                      a, bidx);
                        out.morphism_underlying.push_back(w);
                        wit[{a, bidx}] = id;
                    }
                }
            } else {
                // Objects are u: x -> y. Morphism (y,u) -> (y',u') is
                // w: y -> y' with w o u = u'.
                if (oa.morphism == -1) {
                    // source is 1_x: w = ob.morphism.
                    if (ob.morphism == -1) continue;
                    int id = out.cat.add_morphism(c.morphism(ob.morphism).name + "@" +
                                                      out.cat.object_name(a) + ">" +
                                                      out.cat.object_name(bidx),
                                                  a, bidx);
                    out.morphism_underlying.push_back(ob.morphism);
                    wit[{a, bidx}] = id;
                    continue;
                }
                if (ob.morphism == -1) continue;
                for (int w : c.hom(oa.object, ob.object)) {
                    if (c.compose(w, oa.morphism) == ob.morphism) {
                        int id = out.cat.add_morphism(c.morphism(w).name + "@" +
                                                          out.cat.object_name(a) + ">" +
                                                          out.cat.object_name(bidx),
                                                      a, bidx);
                        out.morphism_underlying.push_back(w);
                        wit[{a, bidx}] = id;
                    }
                }
            }
        }
    }
    // Composition: underlying morphisms compose in C; find the comma
    // morphism carrying the composite.
    for (int m1 = 0; m1 < out.cat.num_morphisms(); ++m1)
        for (int m2 = 0; m2 < out.cat.num_morphisms(); ++m2) {
            const Morphism& a1 = out.cat.morphism(m1);
            const Morphism& a2 = out.cat.morphism(m2);
            if (a1.tgt != a2.src) continue;
            int u1 = out.morphism_underlying[m1];
            int u2 = out.morphism_underlying[m2];
            int comp;
            if (out.objects[a2.tgt].morphism == -1 && below) {
                // Into the terminal object: the witness is u of the source.
                comp = out.objects[a1.src].morphism;
            } else if (out.objects[a1.src].morphism == -1 && !below) {
                comp = out.objects[a2.tgt].morphism;
            } else {
                comp = c.compose(u2, u1);
            }
            int found = -1;
            for (int m3 : out.cat.hom(a1.src, a2.tgt))
                if (out.morphism_underlying[m3] == comp) found = m3;
            if (found < 0) throw Error("comma: composite witness missing");
            out.cat.set_compose(m2, m1, found);
        }
    return out;
}

}  // namespace

CommaResult comma_below(const AcycCat& c, int x) { return comma_impl(c, x, true); }
CommaResult comma_above(const AcycCat& c, int x) { return comma_impl(c, x, false); }

// --- enriched nerve -------------------------------------------------------------

namespace {

std::vector<int> weak_chain_repeats(const WeakChain& f) {
    std::vector<int> out;
    for (size_t j = 0; j + 1 < f.size(); ++j)
        if (f[j] == f[j + 1]) out.push_back(static_cast<int>(j));
    return out;
}

// Common repeat positions across the tuple; for an empty tuple every
// position is a repeat.
std::vector<int> common_repeats(const std::vector<WeakChain>& comps, int q) {
    std::vector<int> common;
    if (comps.empty()) {
        for (int j = 0; j < q; ++j) common.push_back(j);
        return common;
    }
    std::vector<int> acc = weak_chain_repeats(comps[0]);
    for (size_t i = 1; i < comps.size(); ++i) {
        std::vector<int> r = weak_chain_repeats(comps[i]);
        std::vector<int> inter;
        std::set_intersection(acc.begin(), acc.end(), r.begin(), r.end(),
                              std::back_inserter(inter));
        acc = inter;
    }
    return acc;
}

// Strips all common vertical degeneracies, returning the vword.
DegenWord strip_tuple(std::vector<WeakChain>& comps, int& q) {
    DegenWord vword;
    for (;;) {
        std::vector<int> common = common_repeats(comps, q);
        if (common.empty()) break;
        int j = common.back();
        for (auto& f : comps) f.erase(f.begin() + j);
        --q;
        vword.push_back(j);
    }
    if (!word_is_normal(vword)) throw Error("strip_tuple: non-normal word");
    return vword;
}

void enumerate_weak_chains(const FinPoset& p, int len,
                           const std::function<void(const WeakChain&)>& fn) {
    WeakChain cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == len) {
            fn(cur);
            return;
        }
        for (int v = 0; v < p.size(); ++v) {
            if (!cur.empty() && !p.leq(cur.back(), v)) continue;
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

struct GenKey {
    std::vector<int> objects;
    std::vector<WeakChain> components;
    std::vector<SimplexRef> space_components;
    auto operator<=>(const GenKey&) const = default;
};

}  // namespace

EnrichedNerve enriched_nerve(const AcycCat& c) {
    if (c.tier() == HomTier::Discrete)
        throw Error("enriched_nerve: enriched tier expected (use nondegenerate_nerve)");
    ValidationReport v = validate(c);
    if (!v.pass) throw Error("enriched_nerve: category fails validation: " + v.to_string());

    // Enumerate nondegenerate object chains.
    FinPoset p = c.underlying_poset();
    std::vector<std::vector<int>> obj_chains;
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        obj_chains.push_back(cur);
        for (int y = 0; y < p.size(); ++y) {
            if (!cur.empty() && !(cur.back() != y && c.hom_nonempty(cur.back(), y))) continue;
            cur.push_back(y);
            rec();
            cur.pop_back();
        }
    };
    for (int x = 0; x < p.size(); ++x) {
        cur = {x};
        rec();
    }
    std::sort(obj_chains.begin(), obj_chains.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });

    EnrichedNerve out;
    BisimpSetBuilder bb;
    std::map<GenKey, BiRef> ref;

    auto add_gen = [&](const GenKey& key, int pdim, int q) {
        std::string nm;
        for (size_t i = 0; i < key.objects.size(); ++i) {
            if (i) nm += '<';
            nm += c.object_name(key.objects[i]);
        }
        nm += "|";
        if (c.tier() == HomTier::PosetEnriched) {
            for (size_t i = 0; i < key.components.size(); ++i) {
                if (i) nm += ';';
                nm += "(";
                for (size_t j = 0; j < key.components[i].size(); ++j) {
                    if (j) nm += ',';
                    nm += c.hom_poset(key.objects[i], key.objects[i + 1])
                              .name(key.components[i][j]);
                }
                nm += ")";
            }
        } else {
            for (size_t i = 0; i < key.space_components.size(); ++i) {
                if (i) nm += ';';
                nm += c.hom_space(key.objects[i], key.objects[i + 1])
                          .name(key.space_components[i]);
            }
        }
        BiRef r = bb.add(pdim, q, nm);
        ref[key] = r;
        return r;
    };

    if (c.tier() == HomTier::PosetEnriched) {
        // Generators.
        for (const auto& chain : obj_chains) {
            int pdim = static_cast<int>(chain.size()) - 1;
            if (pdim == 0) {
                add_gen(GenKey{chain, {}, {}}, 0, 0);
                continue;
            }
            int qmax = 0;
            for (int i = 0; i < pdim; ++i) {
                const FinPoset& hp = c.hom_poset(chain[i], chain[i + 1]);
                int h = 0;
                for (int e = 0; e < hp.size(); ++e) h = std::max(h, hp.height(e));
                qmax += h;
            }
            for (int q = 0; q <= qmax; ++q) {
                // Tuples of weak chains of length q+1, one per step, with no
                // common repeat position.
                std::vector<std::vector<WeakChain>> per_step(pdim);
                for (int i = 0; i < pdim; ++i)
                    enumerate_weak_chains(c.hom_poset(chain[i], chain[i + 1]), q + 1,
                                          [&](const WeakChain& f) { per_step[i].push_back(f); });
                std::vector<WeakChain> tuple(pdim);
                std::function<void(int)> pick = [&](int i) {
                    if (i == pdim) {
                        if (common_repeats(tuple, q).empty())
                            add_gen(GenKey{chain, tuple, {}}, pdim, q);
                        return;
                    }
                    for (const WeakChain& f : per_step[i]) {
                        tuple[i] = f;
                        pick(i + 1);
                    }
                };
                pick(0);
            }
        }
        // Faces.
        for (const auto& [key, r] : ref) {
            int pdim = r.p, q = r.q;
            const auto& objs = key.objects;
            // Vertical faces.
            for (int j = 0; j <= q && q >= 1; ++j) {
                std::vector<WeakChain> comps = key.components;
                for (auto& f : comps) f.erase(f.begin() + j);
                int q2 = q - 1;
                DegenWord vw = strip_tuple(comps, q2);
                bb.set_vface(r, j, BiFormal{{}, vw, ref.at(GenKey{objs, comps, {}})});
            }
            // Horizontal faces.
            for (int i = 0; i <= pdim && pdim >= 1; ++i) {
                std::vector<int> objs2;
                std::vector<WeakChain> comps;
                if (i == 0) {
                    objs2.assign(objs.begin() + 1, objs.end());
                    comps.assign(key.components.begin() + 1, key.components.end());
                } else if (i == pdim) {
                    objs2.assign(objs.begin(), objs.end() - 1);
                    comps.assign(key.components.begin(), key.components.end() - 1);
                } else {
                    objs2 = objs;
                    objs2.erase(objs2.begin() + i);
                    comps = key.components;
                    WeakChain merged(q + 1);
                    for (int j = 0; j <= q; ++j)
                        merged[j] = c.compose_elements(objs[i - 1], objs[i], objs[i + 1],
                                                       key.components[i][j],
                                                       key.components[i - 1][j]);
                    comps.erase(comps.begin() + i);
                    comps[i - 1] = merged;
                }
                int q2 = q;
                DegenWord vw = strip_tuple(comps, q2);
                bb.set_hface(r, i, BiFormal{{}, vw, ref.at(GenKey{objs2, comps, {}})});
            }
        }
    } else {
        // SimpSet-enriched: chains have length <= 1 (no composable pairs).
        for (const auto& chain : obj_chains) {
            int pdim = static_cast<int>(chain.size()) - 1;
            if (pdim == 0) {
                add_gen(GenKey{chain, {}, {}}, 0, 0);
            } else if (pdim == 1) {
                const SimpSet& hs = c.hom_space(chain[0], chain[1]);
                for (int d = 0; d <= hs.dim(); ++d)
                    for (int idx = 0; idx < hs.count(d); ++idx)
                        add_gen(GenKey{chain, {}, {SimplexRef{d, idx}}}, 1, d);
            } else {
                throw Error("enriched_nerve: composable chain in simpset tier");
            }
        }
        for (const auto& [key, r] : ref) {
            if (r.p == 0) continue;
            const SimpSet& hs = c.hom_space(key.objects[0], key.objects[1]);
            SimplexRef f = key.space_components[0];
            int q = r.q;
            // Vertical faces: face structure of the hom space.
            for (int j = 0; j <= q && q >= 1; ++j) {
                const FormalSimplex& ff = hs.face_entry(f, j);
                bb.set_vface(r, j,
                             BiFormal{{}, ff.word, ref.at(GenKey{key.objects, {}, {ff.target}})});
            }
            // Horizontal faces: collapse to the endpoint objects, fully
            // degenerate vertically.
            DegenWord full;
            for (int j = q - 1; j >= 0; --j) full.push_back(j);
            bb.set_hface(r, 0, BiFormal{{}, full, ref.at(GenKey{{key.objects[1]}, {}, {}})});
            bb.set_hface(r, 1, BiFormal{{}, full, ref.at(GenKey{{key.objects[0]}, {}, {}})});
        }
    }

    out.nerve = bb.build();
    // Generator table in BiRef index order.
    std::map<std::pair<int, int>, std::vector<EnrichedGenerator>> table;
    for (const auto& [key, r] : ref) {
        EnrichedGenerator g;
        g.objects = key.objects;
        g.components = key.components;
        g.space_components = key.space_components;
        auto& layer = table[{r.p, r.q}];
        while (static_cast<int>(layer.size()) <= r.idx) layer.emplace_back();
        layer[r.idx] = g;
    }
    out.gen_lookup = std::move(table);
    return out;
}

// --- classifying space -----------------------------------------------------------

SimpSet enriched_hom_model(const AcycCat& c, int x, int y) {
    if (c.tier() == HomTier::PosetEnriched) return order_complex(c.hom_poset(x, y)).space;
    if (c.tier() == HomTier::SimpSetEnriched) return c.hom_space(x, y);
    throw Error("enriched_hom_model: enriched tier expected");
}

ClassifyingSpace classifying_space(const AcycCat& c) {
    ClassifyingSpace out;
    if (c.tier() == HomTier::Discrete) {
        NerveData nd = nondegenerate_nerve(c);
        out.space = nd.space;
        out.cell_counts = nd.space.f_vector();
        out.simplex_target.resize(nd.space.dim() + 1);
        out.simplex_source.resize(nd.space.dim() + 1);
        for (int d = 0; d <= nd.space.dim(); ++d)
            for (int i = 0; i < nd.space.count(d); ++i) {
                out.simplex_target[d].push_back(nd.chains[d][i].tgt(c));
                out.simplex_source[d].push_back(nd.chains[d][i].src);
            }
        out.nerve = std::move(nd);
        return out;
    }
    EnrichedNerve en = enriched_nerve(c);
    DiagonalResult diag = diagonal(en.nerve);
    out.space = diag.space;
    out.simplex_target.resize(diag.space.dim() + 1);
    out.simplex_source.resize(diag.space.dim() + 1);
    for (int d = 0; d <= diag.space.dim(); ++d)
        for (const DiagonalCell& cell : diag.cells[d]) {
            const EnrichedGenerator& g = en.gen_lookup.at({cell.gen.p, cell.gen.q}).at(cell.gen.idx);
            out.simplex_target[d].push_back(g.objects.back());
            out.simplex_source[d].push_back(g.objects.front());
        }
    // Product-cell table: chains with one nondegenerate hom-model simplex per
    // step.
    std::vector<std::vector<int>> obj_chains;
    {
        FinPoset p = c.underlying_poset();
        std::vector<int> cur;
        std::function<void()> rec = [&]() {
            obj_chains.push_back(cur);
            for (int y = 0; y < p.size(); ++y) {
                if (!(cur.back() != y && c.hom_nonempty(cur.back(), y))) continue;
                cur.push_back(y);
                rec();
                cur.pop_back();
            }
        };
        for (int x = 0; x < p.size(); ++x) {
            cur = {x};
            rec();
        }
    }
    for (const auto& chain : obj_chains) {
        int pdim = static_cast<int>(chain.size()) - 1;
        std::vector<SimpSet> models;
        for (int i = 0; i < pdim; ++i)
            models.push_back(enriched_hom_model(c, chain[i], chain[i + 1]));
        std::vector<SimplexRef> pick(pdim);
        std::function<void(int, int)> rec2 = [&](int i, int dimsum) {
            if (i == pdim) {
                EnrichedCell cell;
                cell.objects = chain;
                cell.components = pick;
                cell.dim = pdim + dimsum;
                out.cells.push_back(cell);
                return;
            }
            for (int d = 0; d <= models[i].dim(); ++d)
                for (int idx = 0; idx < models[i].count(d); ++idx) {
                    pick[i] = SimplexRef{d, idx};
                    rec2(i + 1, dimsum + d);
                }
        };
        rec2(0, 0);
    }
    int maxdim = 0;
    for (const auto& cell : out.cells) maxdim = std::max(maxdim, cell.dim);
    out.cell_counts.assign(maxdim + 1, 0);
    for (const auto& cell : out.cells) out.cell_counts[cell.dim]++;
    out.enriched = std::move(en);
    out.diag = std::move(diag);
    return out;
}

// --- isomorphism -----------------------------------------------------------------

namespace {

// Per-object hom-size profiles used both as invariants and witnesses.
std::string hom_profile(const AcycCat& c) {
    std::vector<std::vector<long long>> profiles;
    for (int x = 0; x < c.num_objects(); ++x) {
        std::vector<long long> sizes_out, sizes_in;
        for (int y = 0; y < c.num_objects(); ++y) {
            if (x == y) continue;
            long long so = 0, si = 0;
            if (c.tier() == HomTier::Discrete) {
                so = c.hom(x, y).size();
                si = c.hom(y, x).size();
            } else if (c.tier() == HomTier::PosetEnriched) {
                so = c.has_hom_poset(x, y) ? c.hom_poset(x, y).size() : 0;
                si = c.has_hom_poset(y, x) ? c.hom_poset(y, x).size() : 0;
            } else {
                so = c.has_hom_space(x, y) ? c.hom_space(x, y).total_cells() : 0;
                si = c.has_hom_space(y, x) ? c.hom_space(y, x).total_cells() : 0;
            }
            if (so) sizes_out.push_back(so);
            if (si) sizes_in.push_back(si);
        }
        std::sort(sizes_out.begin(), sizes_out.end());
        std::sort(sizes_in.begin(), sizes_in.end());
        std::vector<long long> prof{static_cast<long long>(sizes_out.size()),
                                    static_cast<long long>(sizes_in.size())};
        prof.insert(prof.end(), sizes_out.begin(), sizes_out.end());
        prof.push_back(-1);
        prof.insert(prof.end(), sizes_in.begin(), sizes_in.end());
        profiles.push_back(prof);
    }
    std::sort(profiles.begin(), profiles.end());
    std::ostringstream os;
    for (const auto& p : profiles) {
        for (long long v : p) os << v << ' ';
        os << '|';
    }
    return os.str();
}

struct DiscreteIsoSearch {
    const AcycCat& a;
    const AcycCat& b;
    std::vector<int> obj_map;
    std::vector<bool> obj_used;
    std::vector<int> mor_map;

    bool hom_sizes_ok(int x, int y) {
        return a.hom(x, y).size() == b.hom(obj_map[x], obj_map[y]).size();
    }

    bool assign_morphisms(size_t pair_idx, const std::vector<std::pair<int, int>>& pairs) {
        if (pair_idx == pairs.size()) return check_composition();
        auto [x, y] = pairs[pair_idx];
        const auto& ha = a.hom(x, y);
        const auto& hb = b.hom(obj_map[x], obj_map[y]);
        std::vector<int> perm(hb.begin(), hb.end());
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t i = 0; i < ha.size(); ++i) mor_map[ha[i]] = perm[i];
            if (partial_composition_ok(pairs, pair_idx) && assign_morphisms(pair_idx + 1, pairs))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int m : ha) mor_map[m] = -1;
        return false;
    }

    bool partial_composition_ok(const std::vector<std::pair<int, int>>& pairs, size_t upto) {
        // Check all composable triples whose homs are fully assigned.
        for (int f = 0; f < a.num_morphisms(); ++f) {
            if (mor_map[f] < 0) continue;
            for (int g = 0; g < a.num_morphisms(); ++g) {
                if (mor_map[g] < 0) continue;
                const Morphism& mf = a.morphism(f);
                const Morphism& mg = a.morphism(g);
                if (mf.tgt != mg.src) continue;
                int gf = a.compose(g, f);
                if (mor_map[gf] < 0) continue;
                if (b.compose(mor_map[g], mor_map[f]) != mor_map[gf]) return false;
            }
        }
        (void)pairs;
        (void)upto;
        return true;
    }

    bool check_composition() { return true; }  // enforced incrementally

    bool extend_objects(int x) {
        if (x == a.num_objects()) {
            // All hom sizes must already match; assign morphisms.
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < a.num_objects(); ++u)
                for (int v = 0; v < a.num_objects(); ++v)
                    if (!a.hom(u, v).empty()) pairs.push_back({u, v});
            mor_map.assign(a.num_morphisms(), -1);
            return assign_morphisms(0, pairs);
        }
        for (int y = 0; y < b.num_objects(); ++y) {
            if (obj_used[y]) continue;
            obj_map[x] = y;
            obj_used[y] = true;
            bool ok = true;
            for (int x2 = 0; x2 <= x && ok; ++x2) {
                if (a.hom(x, x2).size() != b.hom(y, obj_map[x2]).size()) ok = false;
                if (a.hom(x2, x).size() != b.hom(obj_map[x2], y).size()) ok = false;
            }
            if (ok && extend_objects(x + 1)) return true;
            obj_used[y] = false;
        }
        obj_map[x] = -1;
        return false;
    }
};

}  // namespace

IsoReport iso_check(const AcycCat& a, const AcycCat& b) {
    IsoReport rep;
    if (a.tier() != b.tier()) {
        rep.mismatch = "tier differs";
        return rep;
    }
    if (a.num_objects() != b.num_objects()) {
        rep.mismatch = "object counts differ";
        return rep;
    }
    if (hom_profile(a) != hom_profile(b)) {
        rep.mismatch = "hom cardinality profile differs";
        return rep;
    }
    if (a.tier() == HomTier::Discrete) {
        DiscreteIsoSearch s{a, b, std::vector<int>(a.num_objects(), -1),
                            std::vector<bool>(b.num_objects(), false), {}};
        if (s.extend_objects(0)) {
            rep.isomorphic = true;
            rep.iso = CatIso{s.obj_map, s.mor_map};
        } else {
            rep.mismatch = "no object/morphism bijection respects composition";
        }
        return rep;
    }
    // Enriched tiers: object bijection + hom-structure isomorphisms; the
    // fixtures in scope have no composable triples, and composition tables
    // are checked elementwise when present.
    std::vector<int> obj_map(a.num_objects(), -1);
    std::vector<bool> used(b.num_objects(), false);
    std::function<bool(int)> extend = [&](int x) -> bool {
        if (x == a.num_objects()) return true;
        for (int y = 0; y < b.num_objects(); ++y) {
            if (used[y]) continue;
            bool ok = true;
            for (int x2 = 0; x2 <= x && ok; ++x2) {
                int y2 = (x2 == x) ? y : obj_map[x2];
                for (auto [u, v, uu, vv] : {std::tuple{x, x2, y, y2}, std::tuple{x2, x, y2, y}}) {
                    bool na = a.hom_nonempty(u, v);
                    bool nb = b.hom_nonempty(uu, vv);
                    if (na != nb) {
                        ok = false;
                        break;
                    }
                    if (!na) continue;
                    if (a.tier() == HomTier::PosetEnriched) {
                        if (!poset_iso(a.hom_poset(u, v), b.hom_poset(uu, vv))) ok = false;
                    } else {
                        if (!isomorphic_brute(a.hom_space(u, v), b.hom_space(uu, vv))) ok = false;
                    }
                }
            }
            if (!ok) continue;
            obj_map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            obj_map[x] = -1;
            used[y] = false;
        }
        return false;
    };
    if (extend(0)) {
        rep.isomorphic = true;
        rep.iso = CatIso{obj_map, {}};
    } else {
        rep.mismatch = "no object bijection matches hom structures";
    }
    return rep;
}

}  // namespace strata

namespace strata {

SubcatResult full_subcategory(const AcycCat& c, const std::vector<int>& objects) {
    if (c.tier() != HomTier::Discrete) throw Error("full_subcategory: discrete tier expected");
    SubcatResult out;
    out.cat = AcycCat(HomTier::Discrete);
    std::vector<int> inv(c.num_objects(), -1);
    for (int x : objects) {
        inv[x] = out.cat.add_object(c.object_name(x));
        out.object_map.push_back(x);
    }
    std::vector<int> minv(c.num_morphisms(), -1);
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const Morphism& mor = c.morphism(m);
        if (inv[mor.src] >= 0 && inv[mor.tgt] >= 0) {
            minv[m] = out.cat.add_morphism(mor.name, inv[mor.src], inv[mor.tgt]);
            out.morphism_map.push_back(m);
        }
    }
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (minv[g] < 0 || minv[f] < 0) continue;
            if (c.morphism(f).tgt != c.morphism(g).src) continue;
            int gf = c.compose(g, f);
            if (minv[gf] < 0) throw Error("full_subcategory: composite leaves the subcategory");
            out.cat.set_compose(minv[g], minv[f], minv[gf]);
        }
    return out;
}

}  // namespace strata
