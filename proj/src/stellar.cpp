#include "strata/stellar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace strata {

std::string CheckReport::to_string() const {
    std::ostringstream os;
    os << (pass ? "pass" : "fail");
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
}

namespace {

StratSpace make_strat(const ClassifyingSpace& bc, const FinPoset& p, bool by_target) {
    StratSpace s;
    s.space = bc.space;
    s.poset = p;
    s.label = by_target ? bc.simplex_target : bc.simplex_source;
    return s;
}

}  // namespace

StratifiedBC unstable_stratification(const AcycCat& c) {
    ValidationReport v = validate(c);
    if (!v.pass) throw Error("unstable_stratification: invalid category: " + v.to_string());
    StratifiedBC out;
    out.bc = classifying_space(c);
    out.strat = make_strat(out.bc, c.underlying_poset(), true);
    return out;
}

StratifiedBC stable_stratification(const AcycCat& c) {
    ValidationReport v = validate(c);
    if (!v.pass) throw Error("stable_stratification: invalid category: " + v.to_string());
    StratifiedBC out;
    out.bc = classifying_space(c);
    out.strat = make_strat(out.bc, c.underlying_poset().opposite(), false);
    return out;
}

// --- stellar cells ---------------------------------------------------------------

namespace {

// Finds the comma-category morphism between two comma objects with the given
// underlying morphism.
int find_comma_morphism(const CommaResult& comma, int src_obj, int tgt_obj, int underlying) {
    for (int m : comma.cat.hom(src_obj, tgt_obj))
        if (comma.morphism_underlying[m] == underlying) return m;
    throw Error("comma morphism lookup failed");
}

// The chain of a dome cell translated into the base category: the sequence
// of underlying morphisms.
ChainCell underlying_chain(const CommaResult& comma, const ChainCell& cell) {
    ChainCell out;
    out.src = comma.objects[cell.src].object;
    for (int m : cell.mors) out.mors.push_back(comma.morphism_underlying[m]);
    return out;
}

StellarCell star_impl(const AcycCat& c, int x, const NerveData& bc, bool below) {
    StellarCell out;
    out.object = x;
    out.comma = below ? comma_below(c, x) : comma_above(c, x);
    out.dome = nondegenerate_nerve(out.comma.cat);

    // Boundary = full subcategory away from the identity object.
    std::vector<int> objs;
    for (int i = 0; i < out.comma.cat.num_objects(); ++i)
        if (i != out.comma.identity_object) objs.push_back(i);
    SubcatResult sub = full_subcategory(out.comma.cat, objs);
    out.boundary = nondegenerate_nerve(sub.cat);
    out.cone_model = below ? cone_right(out.boundary.space) : cone(out.boundary.space);

    std::vector<int> obj_to_sub(out.comma.cat.num_objects(), -1);
    for (int i = 0; i < static_cast<int>(sub.object_map.size()); ++i)
        obj_to_sub[sub.object_map[i]] = i;

    // Locate join cells of the cone model.
    auto locate_cone_cell = [&](std::optional<SimplexRef> base, bool with_apex) -> SimplexRef {
        const auto& cells = out.cone_model.join_data.cells;
        for (int d = 0; d < static_cast<int>(cells.size()); ++d)
            for (int i = 0; i < static_cast<int>(cells[d].size()); ++i) {
                const JoinCell& jc = cells[d][i];
                if (!base && with_apex) {
                    if ((below && jc.kind == JoinCell::Kind::B) ||
                        (!below && jc.kind == JoinCell::Kind::A))
                        return SimplexRef{d, i};
                    continue;
                }
                if (base && !with_apex) {
                    if (below && jc.kind == JoinCell::Kind::A && jc.a == *base)
                        return SimplexRef{d, i};
                    if (!below && jc.kind == JoinCell::Kind::B && jc.b == *base)
                        return SimplexRef{d, i};
                    continue;
                }
                if (base && with_apex && jc.kind == JoinCell::Kind::Pair) {
                    if (below && jc.a == *base) return SimplexRef{d, i};
                    if (!below && jc.b == *base) return SimplexRef{d, i};
                }
            }
        throw Error("cone cell lookup failed");
    };

    // Map comma morphisms to boundary morphisms directly.
    std::vector<int> mor_to_sub(out.comma.cat.num_morphisms(), -1);
    for (int i = 0; i < static_cast<int>(sub.morphism_map.size()); ++i)
        mor_to_sub[sub.morphism_map[i]] = i;
    out.boundary_object_map = sub.object_map;
    out.boundary_morphism_map = sub.morphism_map;

    out.h_image.resize(out.dome.space.dim() + 1);
    out.attach_image.resize(out.dome.space.dim() + 1);
    for (int d = 0; d <= out.dome.space.dim(); ++d) {
        for (int i = 0; i < out.dome.space.count(d); ++i) {
            const ChainCell& cell = out.dome.chains[d][i];
            bool touches_identity = false;
            {
                int cur = cell.src;
                if (cur == out.comma.identity_object) touches_identity = true;
                for (int m : cell.mors) {
                    cur = out.comma.cat.morphism(m).tgt;
                    if (cur == out.comma.identity_object) touches_identity = true;
                }
            }
            if (touches_identity &&
                ((below && cell.tgt(out.comma.cat) == out.comma.identity_object) ||
                 (!below && cell.src == out.comma.identity_object))) {
                out.interior.push_back(SimplexRef{d, i});
                if (cell.mors.empty()) {
                    // The bare identity vertex maps to the apex.
                    out.h_image[d].push_back(nondeg(locate_cone_cell(std::nullopt, true)));
                } else {
                    // Strip the identity end; the rest is a boundary chain.
                    std::vector<int> mors = cell.mors;
                    int src = cell.src;
                    if (below) {
                        mors.pop_back();
                    } else {
                        src = out.comma.cat.morphism(mors.front()).tgt;
                        mors.erase(mors.begin());
                    }
                    ChainCell bchain;
                    bchain.src = obj_to_sub[src];
                    for (int m : mors) bchain.mors.push_back(mor_to_sub[m]);
                    auto ref = out.boundary.find_chain(sub.cat, bchain);
                    if (!ref) throw Error("lower_star: boundary prefix chain missing");
                    out.h_image[d].push_back(nondeg(locate_cone_cell(*ref, true)));
                }
            } else if (touches_identity) {
                throw Error("star: identity object inside a chain");
            } else {
                ChainCell bchain;
                bchain.src = obj_to_sub[cell.src];
                for (int m : cell.mors) bchain.mors.push_back(mor_to_sub[m]);
                auto ref = out.boundary.find_chain(sub.cat, bchain);
                if (!ref) throw Error("lower_star: boundary chain missing");
                out.h_image[d].push_back(nondeg(locate_cone_cell(*ref, false)));
            }
            // Attaching map: the underlying chain in BC.
            ChainCell image = underlying_chain(out.comma, cell);
            auto bref = bc.find_chain(c, image);
            if (!bref) throw Error("star: underlying chain missing from BC");
            out.attach_image[d].push_back(nondeg(*bref));
        }
    }
    return out;
}

}  // namespace

StellarCell lower_star(const AcycCat& c, int x, const NerveData& bc) {
    return star_impl(c, x, bc, true);
}

StellarCell upper_star(const AcycCat& c, int x, const NerveData& bc) {
    return star_impl(c, x, bc, false);
}

// --- stratum = star ----------------------------------------------------------------

CheckReport verify_stratum_equals_star(const AcycCat& c, int x, const NerveData& bc) {
    CheckReport rep;
    StellarCell star = lower_star(c, x, bc);

    // h_x is an isomorphism of simplicial sets D_x = cone(boundary).
    if (!star.h_map().is_isomorphism())
        rep.fail("h_x is not a simplicial isomorphism at " + c.object_name(x));
    try {
        star.attach_map(bc.space).verify();
    } catch (const Error& e) {
        rep.fail(std::string("s_x is not simplicial: ") + e.what());
    }

    // Link identification: boundary k-cells correspond bijectively to nondegenerate
    // (k+1)-chains of C ending at x, by appending the final morphism carried
    // by the last comma object.
    for (int d = 0; d <= std::max(star.boundary.space.dim(), bc.space.dim() - 1); ++d) {
        std::set<std::pair<int, std::vector<int>>> rebuilt;
        if (d <= star.boundary.space.dim())
            for (const ChainCell& bcell : star.boundary.chains[d]) {
                ChainCell chain;
                int comma_src = star.boundary_object_map[bcell.src];
                chain.src = star.comma.objects[comma_src].object;
                int last = comma_src;
                for (int m : bcell.mors) {
                    int cm = star.boundary_morphism_map[m];
                    chain.mors.push_back(star.comma.morphism_underlying[cm]);
                    last = star.comma.cat.morphism(cm).tgt;
                }
                chain.mors.push_back(star.comma.objects[last].morphism);
                if (!rebuilt.insert({chain.src, chain.mors}).second)
                    rep.fail("link identification not injective at " + c.object_name(x));
                auto ref = bc.find_chain(c, chain);
                if (!ref || bc.chains[d + 1][ref->idx].tgt(c) != x)
                    rep.fail("link identification image is not a chain ending at " + c.object_name(x));
            }
        long long lhs = d <= star.boundary.space.dim() ? star.boundary.space.count(d) : 0;
        long long rhs = 0;
        if (d + 1 <= bc.space.dim())
            for (const ChainCell& ch : bc.chains[d + 1])
                if (ch.tgt(c) == x) ++rhs;
        if (lhs != rhs)
            rep.fail("link identification count mismatch at " + c.object_name(x) + " dim " +
                     std::to_string(d) + ": " + std::to_string(lhs) + " vs " +
                     std::to_string(rhs));
    }

    // Open stratum identity: s_x restricted to interiors is a bijection onto the cells
    // labeled x; s_x over the whole dome covers exactly the closure.
    std::set<SimplexRef> stratum, image_of_interior, closure_cells, image_of_dome;
    for (int d = 0; d <= bc.space.dim(); ++d)
        for (int i = 0; i < bc.space.count(d); ++i)
            if (bc.chains[d][i].tgt(c) == x) stratum.insert(SimplexRef{d, i});
    for (SimplexRef s : stratum)
        for (SimplexRef t : bc.space.closure(s)) closure_cells.insert(t);
    std::set<SimplexRef> interior_set(star.interior.begin(), star.interior.end());
    for (int d = 0; d <= star.dome.space.dim(); ++d)
        for (int i = 0; i < star.dome.space.count(d); ++i) {
            SimplexRef img = star.attach_image[d][i].target;
            image_of_dome.insert(img);
            if (interior_set.count(SimplexRef{d, i})) {
                if (!image_of_interior.insert(img).second)
                    rep.fail("s_x not injective on interior cells at " + c.object_name(x));
            }
        }
    if (image_of_interior != stratum)
        rep.fail("s_x(D_x^o) differs from the open stratum at " + c.object_name(x));
    if (image_of_dome != closure_cells)
        rep.fail("s_x(D_x) differs from the stratum closure at " + c.object_name(x));
    return rep;
}

// --- cylindrical structure -----------------------------------------------------------

CylStructure cylindrical_structure(const AcycCat& c, const NerveData& bc) {
    if (c.tier() != HomTier::Discrete) throw Error("cylindrical_structure: discrete tier only");
    CylStructure out;
    out.cat = &c;
    for (int x = 0; x < c.num_objects(); ++x) out.stars.push_back(lower_star(c, x, bc));

    for (int u = 0; u < c.num_morphisms(); ++u) {
        const Morphism& mor = c.morphism(u);
        const StellarCell& sx = out.stars[mor.src];
        const StellarCell& sy = out.stars[mor.tgt];
        std::vector<std::vector<SimplexRef>> table(sx.dome.space.dim() + 1);
        for (int d = 0; d <= sx.dome.space.dim(); ++d) {
            for (const ChainCell& cell : sx.dome.chains[d]) {
                // Postcompose each comma object (z, w) with u.
                auto map_object = [&](int comma_obj) -> int {
                    const CommaObject& co = sx.comma.objects[comma_obj];
                    int new_mor = (co.morphism == -1) ? u : c.compose(u, co.morphism);
                    for (int j = 0; j < static_cast<int>(sy.comma.objects.size()); ++j)
                        if (sy.comma.objects[j].object == co.object &&
                            sy.comma.objects[j].morphism == new_mor)
                            return j;
                    throw Error("b map: target comma object missing");
                };
                ChainCell image;
                image.src = map_object(cell.src);
                for (int m : cell.mors) {
                    const Morphism& cm = sx.comma.cat.morphism(m);
                    int underlying = sx.comma.morphism_underlying[m];
                    image.mors.push_back(find_comma_morphism(sy.comma, map_object(cm.src),
                                                             map_object(cm.tgt), underlying));
                }
                auto ref = sy.dome.find_chain(sy.comma.cat, image);
                if (!ref) throw Error("b map: image chain missing");
                table[d].push_back(*ref);
            }
        }
        out.b_maps[{u, mor.src}] = std::move(table);
    }
    return out;
}

CheckReport verify_cylindrical(const AcycCat& c, const CylStructure& cyl) {
    CheckReport rep;
    // Each b map is simplicial: build the cell-level map and verify faces.
    for (const auto& [key, table] : cyl.b_maps) {
        int u = key.first;
        const StellarCell& sx = cyl.stars[c.morphism(u).src];
        const StellarCell& sy = cyl.stars[c.morphism(u).tgt];
        SimplicialMap m{&sx.dome.space, &sy.dome.space, {}};
        m.image.resize(sx.dome.space.dim() + 1);
        for (int d = 0; d < static_cast<int>(table.size()); ++d)
            for (SimplexRef t : table[d]) m.image[d].push_back(nondeg(t));
        try {
            m.verify();
        } catch (const Error& e) {
            rep.fail(std::string("b_{") + c.morphism(u).name + "} not simplicial: " + e.what());
        }

        // Diagram 1: s_y(b_u(cell)) = s_x(cell).
        for (int d = 0; d < static_cast<int>(table.size()); ++d)
            for (int i = 0; i < static_cast<int>(table[d].size()); ++i) {
                SimplexRef img = table[d][i];
                if (sy.attach_image[img.dim][img.idx] != sx.attach_image[d][i])
                    rep.fail("diagram (1) fails for " + c.morphism(u).name);
            }
    }

    // Diagram 2: b_{u'} ( b_u ) = b_{u' o u}, and (3) associativity of the
    // parameter composition is the category's associativity (validated).
    for (int u = 0; u < c.num_morphisms(); ++u) {
        for (int v = 0; v < c.num_morphisms(); ++v) {
            const Morphism& mu = c.morphism(u);
            const Morphism& mv = c.morphism(v);
            if (mu.tgt != mv.src) continue;
            int w = c.compose(v, u);
            const auto& tu = cyl.b_maps.at({u, mu.src});
            const auto& tv = cyl.b_maps.at({v, mv.src});
            const auto& tw = cyl.b_maps.at({w, mu.src});
            for (int d = 0; d < static_cast<int>(tu.size()); ++d)
                for (int i = 0; i < static_cast<int>(tu[d].size()); ++i) {
                    SimplexRef mid = tu[d][i];
                    if (tv[mid.dim][mid.idx] != tw[d][i])
                        rep.fail("diagram (2) fails for " + mv.name + " o " + mu.name);
                }
        }
    }

    // Embedding + coverage: every dome cell of D_y is either interior or the
    // image of exactly one (u, interior cell of D_src(u)).
    for (int y = 0; y < c.num_objects(); ++y) {
        const StellarCell& sy = cyl.stars[y];
        std::map<SimplexRef, int> hits;
        for (SimplexRef s : sy.interior) hits[s]++;
        for (const auto& [key, table] : cyl.b_maps) {
            int u = key.first;
            if (c.morphism(u).tgt != y) continue;
            const StellarCell& sx = cyl.stars[c.morphism(u).src];
            for (SimplexRef s : sx.interior) hits[table[s.dim][s.idx]]++;
        }
        for (int d = 0; d <= sy.dome.space.dim(); ++d)
            for (int i = 0; i < sy.dome.space.count(d); ++i) {
                auto it = hits.find(SimplexRef{d, i});
                int n = it == hits.end() ? 0 : it->second;
                if (n != 1)
                    rep.fail("coverage fails at object " + c.object_name(y) + " cell " +
                             sy.dome.space.name(SimplexRef{d, i}) + " (hit " +
                             std::to_string(n) + " times)");
            }
    }
    return rep;
}

AcycCat extract_face_category(const StratSpace& strat, const CylStructure& cyl) {
    const AcycCat& c = *cyl.cat;
    AcycCat out(HomTier::Discrete);
    // Objects: the strata, named by their labels, in label order.
    std::vector<int> used = strat.used_labels();
    std::vector<int> label_to_obj(strat.poset.size(), -1);
    for (int l : used) label_to_obj[l] = out.add_object("e_" + strat.poset.name(l));
    // Parameters: P_{x,y} = C(x,y); composition = the c maps.
    std::vector<int> mor_map(c.num_morphisms(), -1);
    for (int m = 0; m < c.num_morphisms(); ++m) {
        const Morphism& mor = c.morphism(m);
        if (label_to_obj[mor.src] < 0 || label_to_obj[mor.tgt] < 0)
            throw Error("extract_face_category: parameter between empty strata");
        mor_map[m] = out.add_morphism(mor.name, label_to_obj[mor.src], label_to_obj[mor.tgt]);
    }
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (c.morphism(f).tgt != c.morphism(g).src) continue;
            out.set_compose(mor_map[g], mor_map[f], mor_map[c.compose(g, f)]);
        }
    return out;
}

AcycCat simplicial_face_category(const SimpSet& x) {
    AcycCat out(HomTier::Discrete);
    std::map<SimplexRef, int> obj;
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.count(d); ++i)
            obj[SimplexRef{d, i}] = out.add_object(x.name(SimplexRef{d, i}));

    // Morphisms mu -> lam: vertex subsets S with subface(lam, S) = mu
    // (nondegenerate occurrences only).
    std::map<std::tuple<int, int, std::vector<int>>, int> mor;
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            SimplexRef lam{d, i};
            // Enumerate proper nonempty subsets of {0..d}.
            std::vector<int> all(d + 1);
            for (int v = 0; v <= d; ++v) all[v] = v;
            std::function<void(size_t, std::vector<int>&)> rec = [&](size_t start,
                                                                     std::vector<int>& cur) {
                if (!cur.empty() && static_cast<int>(cur.size()) <= d) {
                    FormalSimplex f = x.subface(nondeg(lam), cur);
                    if (f.nondegenerate()) {
                        std::string nm = x.name(lam) + "[";
                        for (size_t k = 0; k < cur.size(); ++k) {
                            if (k) nm += ',';
                            nm += std::to_string(cur[k]);
                        }
                        nm += "]";
                        mor[{obj[f.target], obj[lam], cur}] =
                            out.add_morphism(nm, obj[f.target], obj[lam]);
                    }
                }
                for (size_t v = start; v < all.size(); ++v) {
                    cur.push_back(all[v]);
                    rec(v + 1, cur);
                    cur.pop_back();
                }
            };
            std::vector<int> cur;
            rec(0, cur);
        }
    // Composition: relabel the inner subset through the outer one.
    for (const auto& [key_g, g] : mor)
        for (const auto& [key_f, f] : mor) {
            const auto& [gsrc, gtgt, gsub] = key_g;
            const auto& [fsrc, ftgt, fsub] = key_f;
            if (ftgt != gsrc) continue;
            std::vector<int> comp;
            for (int v : fsub) comp.push_back(gsub[v]);
            auto it = mor.find({fsrc, gtgt, comp});
            if (it == mor.end()) throw Error("simplicial_face_category: composite missing");
            out.set_compose(g, f, it->second);
        }
    return out;
}

RoundtripReport roundtrip(const AcycCat& c) {
    RoundtripReport rep;
    ValidationReport v = validate(c);
    if (!v.pass) {
        rep.checks.fail("category invalid: " + v.to_string());
        return rep;
    }
    if (c.tier() != HomTier::Discrete) {
        // Structural mode for enriched tiers.
        EnrichedRoundtripReport er = roundtrip_enriched(c);
        rep.checks = er.checks;
        rep.iso.isomorphic = er.pass;
        if (!er.pass) rep.iso.mismatch = "enriched hom structures do not match";
        rep.pass = er.pass;
        return rep;
    }
    StratifiedBC sbc = unstable_stratification(c);
    const NerveData& nerve = *sbc.bc.nerve;
    CylStructure cyl = cylindrical_structure(c, nerve);
    rep.checks = verify_cylindrical(c, cyl);
    for (int x = 0; x < c.num_objects(); ++x) {
        CheckReport r = verify_stratum_equals_star(c, x, nerve);
        if (!r.pass)
            for (const auto& f : r.failures) rep.checks.fail(f);
    }
    AcycCat extracted = extract_face_category(sbc.strat, cyl);
    rep.iso = iso_check(extracted, c);
    rep.pass = rep.checks.pass && rep.iso.isomorphic;
    return rep;
}

EnrichedRoundtripReport roundtrip_enriched(const AcycCat& c) {
    EnrichedRoundtripReport rep;
    if (c.tier() == HomTier::Discrete) throw Error("roundtrip_enriched: enriched tier expected");
    StratifiedBC sbc = unstable_stratification(c);
    rep.num_strata = static_cast<int>(sbc.strat.used_labels().size());
    if (rep.num_strata != c.num_objects())
        rep.checks.fail("stratum count differs from object count");

    // Rebuild each hom complex from the diagonal bookkeeping: generators over
    // the 1-chain (x,y) with the vertical face structure of the nerve.
    const EnrichedNerve& en = *sbc.bc.enriched;
    for (int x = 0; x < c.num_objects(); ++x) {
        for (int y = 0; y < c.num_objects(); ++y) {
            if (x == y || !c.hom_nonempty(x, y)) continue;
            SimpSetBuilder b;
            std::map<int, std::map<int, SimplexRef>> ref;  // q -> gen idx -> ref
            for (const auto& [pq, gens] : en.gen_lookup) {
                if (pq.first != 1) continue;
                for (int idx = 0; idx < static_cast<int>(gens.size()); ++idx)
                    if (gens[idx].objects == std::vector<int>{x, y})
                        ref[pq.second][idx] =
                            b.add(pq.second, en.nerve.name(BiRef{1, pq.second, idx}));
            }
            for (auto& [q, layer] : ref) {
                if (q == 0) continue;
                for (auto& [idx, r] : layer) {
                    for (int j = 0; j <= q; ++j) {
                        const BiFormal& f = en.nerve.vface_entry(BiRef{1, q, idx}, j);
                        b.set_face(r, j,
                                   FormalSimplex{f.vword, ref.at(f.target.q).at(f.target.idx)});
                    }
                }
            }
            SimpSet rebuilt = b.build();
            SimpSet model = enriched_hom_model(c, x, y);
            if (!isomorphic_brute(rebuilt, model))
                rep.checks.fail("hom complex at " + c.object_name(x) + "->" + c.object_name(y) +
                                " does not match the nerve of the hom structure");
        }
    }
    rep.pass = rep.checks.pass;
    return rep;
}

CheckReport salvetti_fvector_check(const SimpSet& x) {
    CheckReport rep;
    AcycCat fc = simplicial_face_category(x);
    ValidationReport v = validate(fc);
    if (!v.pass) {
        rep.fail("face category invalid: " + v.to_string());
        return rep;
    }
    ClassifyingSpace bfc = classifying_space(fc);
    // Independent route: flags of the iterated-face relation.
    std::map<SimplexRef, std::vector<SimplexRef>> closure;
    std::vector<SimplexRef> cells;
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            cells.push_back(SimplexRef{d, i});
            closure[SimplexRef{d, i}] = x.closure(SimplexRef{d, i});
        }
    // Count strict flags c_0 < c_1 < ... < c_k in the face relation (for
    // regular complexes this is the barycentric subdivision f-vector).
    std::vector<long long> flags;
    std::function<void(size_t, int)> chains = [&](size_t idx, int len) {
        while (static_cast<int>(flags.size()) <= len) flags.push_back(0);
        flags[len]++;
        for (size_t j = 0; j < cells.size(); ++j) {
            if (cells[j] == cells[idx]) continue;
            const auto& cl = closure[cells[j]];
            if (std::binary_search(cl.begin(), cl.end(), cells[idx]) && cells[j] != cells[idx])
                chains(j, len + 1);
        }
    };
    for (size_t i = 0; i < cells.size(); ++i) chains(i, 0);
    std::vector<int> expect(flags.begin(), flags.end());
    if (bfc.space.f_vector() != expect) {
        std::ostringstream os;
        os << "B(face category) f-vector (";
        for (int n : bfc.space.f_vector()) os << n << ' ';
        os << ") differs from barycentric flags (";
        for (int n : expect) os << n << ' ';
        os << ")";
        rep.fail(os.str());
    }
    return rep;
}

}  // namespace strata
