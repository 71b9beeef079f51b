#include "strata/harness.hpp"

#include <optional>
#include <set>

#include "strata/exitpath.hpp"
#include "strata/random_gen.hpp"
#include "strata/stellar.hpp"

namespace strata {

namespace {

constexpr int kMaxWitnesses = 8;

template <typename Kernel>
HarnessResult run_batch(int count, bool parallel, Kernel&& kernel) {
    std::vector<std::string> wit(count);
    std::vector<char> failed(count, 0);
    auto run_one = [&](int i) {
        try {
            std::optional<std::string> w = kernel(i);
            if (w) {
                failed[i] = 1;
                wit[i] = *w;
            }
        } catch (const std::exception& e) {
            failed[i] = 1;
            wit[i] = std::string("exception: ") + e.what();
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) run_one(i);
    } else {
        for (int i = 0; i < count; ++i) run_one(i);
    }
    HarnessResult out;
    out.samples = count;
    for (int i = 0; i < count; ++i) {
        if (!failed[i]) continue;
        ++out.failures;
        if (static_cast<int>(out.witnesses.size()) < kMaxWitnesses)
            out.witnesses.push_back("sample " + std::to_string(i) + ": " + wit[i]);
    }
    return out;
}

}  // namespace

HarnessResult roundtrip_harness(int count, std::uint64_t seed, bool parallel, int max_objects,
                                int max_hom) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        AcycCat c = random_acyclic_category(Rng::split(seed, i).next(), max_objects, max_hom);
        RoundtripReport rep = roundtrip(c);
        if (!rep.pass) {
            std::string w = "roundtrip failed";
            if (!rep.iso.isomorphic) w += " (" + rep.iso.mismatch + ")";
            if (!rep.checks.pass) w += ": " + rep.checks.to_string();
            return w;
        }
        return std::nullopt;
    });
}

HarnessResult implications_harness(int count, std::uint64_t seed, bool parallel, int max_cells) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        StratSpace s = random_labeled_complex(Rng::split(seed, i).next(), max_cells);
        StratReport r = check_conditions(s);
        bool c1 = r.continuity.pass, c2 = r.openness.pass, c3 = r.closure_order.pass,
             c4 = r.frontier.pass, c5 = r.closed_unions.pass;
        // Under (1), conditions (2) and (3) are equivalent.
        if (c1 && c2 && !c3) return "implication fails: (1)+(2) without (3)";
        if (c1 && c3 && !c2) return "implication fails: (1)+(3) without (2)";
        // (1) and (3) imply the frontier condition (4).
        if (c1 && c3 && !c4) return "implication fails: (1)+(3) without (4)";
        // (3), (4) and (5) imply (1).
        if (c3 && c4 && c5 && !c1) return "implication fails: (3)+(4)+(5) without (1)";
        // Third form: (1)+(2) holds exactly when every stratum closure is
        // the union of the strata below it.
        bool closure_form = true;
        for (int l : s.used_labels()) {
            std::set<SimplexRef> cl, below;
            for (SimplexRef c : stratum_closure(s, l)) cl.insert(c);
            for (int m : s.used_labels())
                if (s.poset.leq(m, l))
                    for (SimplexRef c : stratum_cells(s, m)) below.insert(c);
            if (cl != below) closure_form = false;
        }
        if (closure_form != (c1 && c2))
            return "equivalence fails: closure-union form vs (1)+(2)";
        return std::nullopt;
    });
}

HarnessResult join_law_harness(int count, std::uint64_t seed, bool parallel, int max_cells) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        Rng rng = Rng::split(seed, i);
        SimpSet a = random_complex(rng.next(), max_cells);
        SimpSet b = random_complex(rng.next(), max_cells);
        JoinResult j = join(a, b);
        auto reduced = [](const SimpSet& s) {
            long long chi = -1;
            for (int d = 0; d <= s.dim(); ++d)
                chi += (d % 2 == 0 ? 1LL : -1LL) * s.count(d);
            return chi;
        };
        if (reduced(j.space) != -reduced(a) * reduced(b))
            return std::string("reduced Euler law fails");

        // Stratified side: simplicial stratifications always satisfy (1)+(2).
        StratSpace sa = simplicial_stratification(a);
        StratSpace sb = simplicial_stratification(b);
        JoinStratResult js = join_strat(sa, sb);
        StratReport rep = check_conditions(js.strat);
        if (!(rep.continuity.pass && rep.openness.pass))
            return std::string("join_strat loses conditions (1)+(2)");
        FacePosetResult fp = face_poset(js.strat);
        // Explicit comparison against the join poset through the label maps.
        const FinPoset& jp = js.poset_data.poset;
        if (fp.poset.size() != jp.size()) return std::string("join face poset has wrong size");
        std::vector<int> to_fp(jp.size(), -1);
        for (int l = 0; l < jp.size(); ++l) to_fp[l] = fp.from_label[l];
        for (int u = 0; u < jp.size(); ++u)
            for (int v = 0; v < jp.size(); ++v) {
                if (to_fp[u] < 0 || to_fp[v] < 0) return std::string("join label unused");
                if (jp.leq(u, v) != fp.poset.leq(to_fp[u], to_fp[v]))
                    return std::string("join face poset differs from P(a) * P(b)");
            }
        return std::nullopt;
    });
}

HarnessResult morse_harness(int count, std::uint64_t seed, bool parallel, int max_cells) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        Rng rng = Rng::split(seed, i);
        RegComplex c = random_simplicial_regcomplex(rng.next(), max_cells);
        Matching m = random_acyclic_matching(c, rng.next());
        MorseComplexResult res = morse_complex(c, m);  // raises on mismatch
        if (!res.homology_matches) return std::string("Morse homology mismatch");
        return std::nullopt;
    });
}

HarnessResult cone_point_harness(int count, std::uint64_t seed, bool parallel, int max_cells) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        SimpSet x = random_complex(Rng::split(seed, i).next(), max_cells);
        ConeResult c = cone(x);
        if (!homology(c.space).reduced_point())
            return std::string("cone homology is not that of a point");
        return std::nullopt;
    });
}

HarnessResult chart_harness(int count, std::uint64_t seed, bool parallel, int max_objects,
                            int max_hom) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        AcycCat c = random_acyclic_category(Rng::split(seed, i).next(), max_objects, max_hom);
        NerveData bc = nondegenerate_nerve(c);
        for (int x = 0; x < c.num_objects(); ++x) {
            ConicalChart chart = build_chart(c, bc, x);
            ChartReport rep = verify_chart(c, bc, chart);
            if (!rep.pass) return "chart at " + c.object_name(x) + ": " + rep.failures.front();
        }
        if (!chart_cover(c, bc).pass) return std::string("charts do not cover BC");
        return std::nullopt;
    });
}

HarnessResult horn_harness(int count, std::uint64_t seed, bool parallel, int max_objects,
                           int max_hom) {
    return run_batch(count, parallel, [&](int i) -> std::optional<std::string> {
        AcycCat c = random_acyclic_category(Rng::split(seed, i).next(), max_objects, max_hom);
        StratifiedBC sbc = unstable_stratification(c);
        HornsReport rep = fill_all_inner_horns(sbc.strat, 3);
        if (!rep.all_filled) return "unfilled inner horn: " + rep.first_unfilled;
        return std::nullopt;
    });
}

}  // namespace strata
