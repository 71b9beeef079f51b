// strata: stratifications on classifying spaces of finite acyclic categories.
//
// Subcommands: nerve, classify, stratify, check-strat, implications, join,
// cone, stellar, roundtrip, exit (chart|cover|horns), morse
// (validate|complex|flow|classify), homology, export.
//
// Exit status: 0 all requested checks pass, 1 a check failed (witness in the
// report), 2 parse/usage error. STRATA_SEED overrides --seed.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "strata/export_off.hpp"
#include "strata/exitpath.hpp"
#include "strata/fixtures.hpp"
#include "strata/harness.hpp"
#include "strata/json_io.hpp"
#include "strata/random_gen.hpp"
#include "strata/stellar.hpp"

using namespace strata;

namespace {

int g_tap_counter = 0;

void tap(bool ok, const std::string& what) {
    ++g_tap_counter;
    std::cout << (ok ? "ok " : "not ok ") << g_tap_counter << " - " << what << "\n";
}

void emit_report(const std::string& out_path, const Json& report) {
    if (out_path.empty()) return;
    write_json_file(out_path, report);
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("STRATA_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

Json fvector_json(const SimpSet& s) {
    Json j = Json::array();
    for (int v : s.f_vector()) j.push_back(v);
    return j;
}

Json homology_json(const HomologyReport& h) {
    Json j;
    j["betti"] = h.betti;
    Json tors = Json::array();
    for (const auto& layer : h.torsion) {
        Json l = Json::array();
        for (const Zint& t : layer) l.push_back(t.str());
        tors.push_back(l);
    }
    j["torsion"] = tors;
    j["euler"] = h.euler;
    return j;
}

StratSpace stratify_category(const AcycCat& c, const std::string& mode) {
    if (mode == "unstable") return unstable_stratification(c).strat;
    if (mode == "stable") return stable_stratification(c).strat;
    if (mode == "simplicial") {
        ClassifyingSpace bc = classifying_space(c);
        return simplicial_stratification(bc.space);
    }
    throw Error("unknown stratification mode: " + mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratified classifying spaces of finite acyclic categories"};
    app.require_subcommand(1);

    std::string category_path, space_path, strat_path, a_path, b_path, out_path, report_path;
    std::string mode = "unstable", object_name, format = "json", fixture;
    std::string matching_path, flowhoms_path;
    std::uint64_t seed = 2026;
    int samples = 1000, max_dim = 3;
    bool parallel = false, exhaustive = false;

    auto add_report = [&](CLI::App* cmd) {
        cmd->add_option("--report", report_path, "write a JSON report here");
    };

    auto* nerve = app.add_subcommand("nerve", "nondegenerate nerve of a category");
    nerve->add_option("--category", category_path, "category.json")->required();
    add_report(nerve);

    auto* classify = app.add_subcommand("classify", "classifying space of a category");
    classify->add_option("--category", category_path, "category.json")->required();
    classify->add_option("--space-out", out_path, "write the simplicial set here");
    add_report(classify);

    auto* stratify = app.add_subcommand("stratify", "stratify the classifying space");
    stratify->add_option("--category", category_path, "category.json")->required();
    stratify->add_option("--mode", mode, "unstable|stable|simplicial");
    stratify->add_option("--out", out_path, "write strat.json here");
    add_report(stratify);

    auto* check = app.add_subcommand("check-strat", "run the stratification conditions");
    check->add_option("--strat", strat_path, "strat.json")->required();
    check->add_flag("--exhaustive", exhaustive, "subset-enumeration oracle for (2) and (5)");
    add_report(check);

    auto* implications = app.add_subcommand("implications", "stratification condition implications harness");
    implications->add_option("--samples", samples, "number of random samples");
    implications->add_option("--seed", seed, "seed (STRATA_SEED overrides)");
    implications->add_flag("--parallel", parallel, "evaluate samples in parallel");
    add_report(implications);

    auto* joincmd = app.add_subcommand("join", "join of two simplicial sets");
    joincmd->add_option("--a", a_path, "simpset.json")->required();
    joincmd->add_option("--b", b_path, "simpset.json")->required();
    joincmd->add_option("--out", out_path, "write the join here");
    add_report(joincmd);

    auto* conecmd = app.add_subcommand("cone", "cone on a simplicial set");
    conecmd->add_option("--space", space_path, "simpset.json")->required();
    conecmd->add_option("--out", out_path, "write the cone here");
    add_report(conecmd);

    auto* stellar = app.add_subcommand("stellar", "lower star of an object");
    stellar->add_option("--category", category_path, "category.json")->required();
    stellar->add_option("--object", object_name, "object name")->required();
    add_report(stellar);

    auto* roundtripcmd = app.add_subcommand("roundtrip", "face category round trip");
    roundtripcmd->add_option("--category", category_path, "category.json")->required();
    add_report(roundtripcmd);

    auto* exitcmd = app.add_subcommand("exit", "exit-path fragment checks");
    exitcmd->require_subcommand(1);
    auto* chart = exitcmd->add_subcommand("chart", "conical chart at an object");
    chart->add_option("--category", category_path, "category.json")->required();
    chart->add_option("--object", object_name, "object name")->required();
    add_report(chart);
    auto* cover = exitcmd->add_subcommand("cover", "charts cover the classifying space");
    cover->add_option("--category", category_path, "category.json")->required();
    add_report(cover);
    auto* horns = exitcmd->add_subcommand("horns", "fill all inner horns of the fragment");
    horns->add_option("--category", category_path, "category.json")->required();
    horns->add_option("--max-dim", max_dim, "maximum horn dimension (<= 3)");
    add_report(horns);

    auto* morsecmd = app.add_subcommand("morse", "discrete Morse pipeline");
    morsecmd->require_subcommand(1);
    auto* mvalidate = morsecmd->add_subcommand("validate", "validate a matching");
    mvalidate->add_option("--matching", matching_path, "matching.json");
    mvalidate->add_option("--fixture", fixture, "hexagon|circle");
    add_report(mvalidate);
    auto* mcomplex = morsecmd->add_subcommand("complex", "Morse chain complex and homology");
    mcomplex->add_option("--matching", matching_path, "matching.json");
    mcomplex->add_option("--fixture", fixture, "hexagon|circle");
    add_report(mcomplex);
    auto* mflow = morsecmd->add_subcommand("flow", "flow category");
    mflow->add_option("--matching", matching_path, "matching.json");
    mflow->add_option("--flowhoms", flowhoms_path, "flowhoms.json for gap > 1 pairs");
    mflow->add_option("--fixture", fixture, "hexagon|circle");
    add_report(mflow);
    auto* mclassify = morsecmd->add_subcommand("classify", "critical-cell stratification of B2C(f)");
    mclassify->add_option("--matching", matching_path, "matching.json");
    mclassify->add_option("--flowhoms", flowhoms_path, "flowhoms.json for gap > 1 pairs");
    mclassify->add_option("--fixture", fixture, "hexagon|circle");
    add_report(mclassify);

    auto* homologycmd = app.add_subcommand("homology", "integer homology of a simplicial set");
    homologycmd->add_option("--space", space_path, "simpset.json")->required();
    add_report(homologycmd);

    auto* exportcmd = app.add_subcommand("export", "export a simplicial set");
    exportcmd->add_option("--space", space_path, "simpset.json")->required();
    exportcmd->add_option("--format", format, "json|off");
    exportcmd->add_option("--out", out_path, "output file")->required();
    add_report(exportcmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Json report;
        bool pass = true;

        auto load_flow = [&]() -> FlowCategory {
            if (fixture == "hexagon") return fixtures::hexagon().flow;
            if (fixture == "circle") return fixtures::circle().flow;
            if (matching_path.empty()) throw Error("need --matching or --fixture");
            MatchingFile mf = matching_from_json(load_json_file(matching_path));
            std::map<std::pair<int, int>, FinPoset> supplied;
            if (!flowhoms_path.empty()) {
                auto homs = flowhoms_from_json(load_json_file(flowhoms_path));
                for (const auto& [key, p] : homs) {
                    auto lo = mf.complex.find(key.first);
                    auto hi = mf.complex.find(key.second);
                    if (!lo || !hi) throw Error("flowhoms: unknown cell " + key.first);
                    supplied[{*lo, *hi}] = p;
                }
            }
            return flow_category(mf.complex, mf.matching, supplied);
        };
        auto load_matching = [&]() -> MatchingFile {
            if (fixture == "hexagon") {
                auto hex = fixtures::hexagon();
                return MatchingFile{hex.complex, hex.matching};
            }
            if (fixture == "circle") {
                auto circ = fixtures::circle();
                return MatchingFile{circ.complex, circ.matching};
            }
            if (matching_path.empty()) throw Error("need --matching or --fixture");
            return matching_from_json(load_json_file(matching_path));
        };

        if (*nerve) {
            AcycCat c = category_from_json(load_json_file(category_path));
            auto v = validate(c);
            tap(v.pass, "category validates");
            pass = v.pass;
            report["validation"] = v.to_string();
            if (v.pass) {
                ClassifyingSpace bc = classifying_space(c);
                report["f_vector"] = fvector_json(bc.space);
                std::cout << "nerve f-vector:";
                for (int n : bc.space.f_vector()) std::cout << ' ' << n;
                std::cout << "\n";
            }
        } else if (*classify) {
            AcycCat c = category_from_json(load_json_file(category_path));
            ClassifyingSpace bc = classifying_space(c);
            report["f_vector"] = fvector_json(bc.space);
            report["cells"] = bc.cell_counts;
            report["homology"] = homology_json(homology(bc.space));
            tap(true, "classifying space built");
            std::cout << "cells per dimension:";
            for (int n : bc.cell_counts) std::cout << ' ' << n;
            std::cout << "\n";
            if (!out_path.empty()) write_json_file(out_path, simpset_to_json(bc.space));
        } else if (*stratify) {
            AcycCat c = category_from_json(load_json_file(category_path));
            StratSpace s = stratify_category(c, mode);
            StratReport r = check_conditions(s);
            tap(r.conditions_pass(), "stratification conditions (1)-(5)");
            pass = r.conditions_pass();
            report["mode"] = mode;
            report["conditions"] = r.to_string();
            report["strata"] = static_cast<int>(s.used_labels().size());
            if (!out_path.empty()) write_json_file(out_path, strat_to_json(s));
        } else if (*check) {
            StratSpace s = strat_from_json(load_json_file(strat_path));
            StratReport r = check_conditions(s, exhaustive);
            tap(r.continuity.pass, "(1) continuity");
            tap(r.openness.pass, "(2) openness");
            tap(r.closure_order.pass, "(3) closure order");
            tap(r.frontier.pass, "(4) frontier");
            tap(r.closed_unions.pass, "(5) closed unions");
            tap(r.connected.pass, "connected strata");
            tap(r.locally_closed.pass, "locally closed strata");
            pass = r.conditions_pass() && r.connected.pass && r.locally_closed.pass;
            report["report"] = r.to_string();
            Json per_stratum = Json::object();
            for (auto [l, okc] : r.connected_by_stratum)
                per_stratum[s.poset.name(l)]["connected"] = okc;
            for (auto [l, okl] : r.locally_closed_by_stratum)
                per_stratum[s.poset.name(l)]["locally_closed"] = okl;
            report["strata"] = per_stratum;
            if (!r.continuity.pass) report["witness"] = r.continuity.witness;
            else if (!r.closure_order.pass) report["witness"] = r.closure_order.witness;
            else if (!r.locally_closed.pass) report["witness"] = r.locally_closed.witness;
        } else if (*implications) {
            HarnessResult r = implications_harness(samples, effective_seed(seed), parallel);
            tap(r.pass(), "condition implications hold on " + std::to_string(r.samples) + " samples");
            pass = r.pass();
            report["samples"] = r.samples;
            report["failures"] = r.failures;
            report["witnesses"] = r.witnesses;
        } else if (*joincmd) {
            SimpSet a = simpset_from_json(load_json_file(a_path));
            SimpSet b = simpset_from_json(load_json_file(b_path));
            JoinResult j = join(a, b);
            report["f_vector"] = fvector_json(j.space);
            tap(true, "join built");
            if (!out_path.empty()) write_json_file(out_path, simpset_to_json(j.space));
        } else if (*conecmd) {
            SimpSet x = simpset_from_json(load_json_file(space_path));
            ConeResult c = cone(x);
            bool contractible = homology(c.space).reduced_point();
            tap(contractible, "cone is contractible");
            pass = contractible;
            report["f_vector"] = fvector_json(c.space);
            if (!out_path.empty()) write_json_file(out_path, simpset_to_json(c.space));
        } else if (*stellar) {
            AcycCat c = category_from_json(load_json_file(category_path));
            auto x = c.find_object(object_name);
            if (!x) throw Error("unknown object " + object_name);
            NerveData bc = nondegenerate_nerve(c);
            StellarCell star = lower_star(c, *x, bc);
            bool cone_iso = star.h_map().is_isomorphism();
            CheckReport sr = verify_stratum_equals_star(c, *x, bc);
            tap(cone_iso, "D_x = cone(boundary) via h_x");
            tap(sr.pass, "s_x(D_x^o) is the open stratum");
            pass = cone_iso && sr.pass;
            report["dome_f_vector"] = fvector_json(star.dome.space);
            report["boundary_f_vector"] = fvector_json(star.boundary.space);
            report["interior_cells"] = static_cast<int>(star.interior.size());
            Json hmap = Json::object();
            for (int d = 0; d <= star.dome.space.dim(); ++d)
                for (int i = 0; i < star.dome.space.count(d); ++i)
                    hmap[star.dome.space.name(SimplexRef{d, i})] =
                        star.cone_model.space.name(star.h_image[d][i].target);
            report["cone_isomorphism"] = hmap;
            report["checks"] = sr.to_string();
        } else if (*roundtripcmd) {
            AcycCat c = category_from_json(load_json_file(category_path));
            RoundtripReport r = roundtrip(c);
            tap(r.checks.pass, "cylindrical structure verifies");
            tap(r.iso.isomorphic, "face category isomorphic to the input");
            pass = r.pass;
            report["checks"] = r.checks.to_string();
            report["isomorphic"] = r.iso.isomorphic;
            if (r.iso.isomorphic && r.iso.iso && c.tier() == HomTier::Discrete) {
                // Extracted objects are the strata e_x in object order.
                Json objmap = Json::object();
                for (int i = 0; i < c.num_objects(); ++i)
                    objmap["e_" + c.object_name(i)] = c.object_name(r.iso.iso->object_map[i]);
                report["object_map"] = objmap;
            } else if (!r.iso.isomorphic) {
                report["mismatch"] = r.iso.mismatch;
            }
        } else if (*chart) {
            AcycCat c = category_from_json(load_json_file(category_path));
            auto x = c.find_object(object_name);
            if (!x) throw Error("unknown object " + object_name);
            NerveData bc = nondegenerate_nerve(c);
            ConicalChart ch = build_chart(c, bc, *x);
            ChartReport r = verify_chart(c, bc, ch);
            tap(r.pass, "chart verifies at " + object_name);
            pass = r.pass;
            Json image = Json::array();
            for (SimplexRef s : ch.vertex_star) image.push_back(bc.space.name(s));
            report["image_cells"] = image;
            report["image_size"] = static_cast<int>(ch.vertex_star.size());
            if (!r.pass) report["failures"] = r.failures;
        } else if (*cover) {
            AcycCat c = category_from_json(load_json_file(category_path));
            NerveData bc = nondegenerate_nerve(c);
            bool all = true;
            for (int x = 0; x < c.num_objects(); ++x) {
                ConicalChart ch = build_chart(c, bc, x);
                ChartReport r = verify_chart(c, bc, ch);
                tap(r.pass, "chart verifies at " + c.object_name(x));
                all = all && r.pass;
            }
            CoverReport cr = chart_cover(c, bc);
            tap(cr.pass, "charts cover BC");
            pass = all && cr.pass;
            report["covered"] = cr.pass;
        } else if (*horns) {
            AcycCat c = category_from_json(load_json_file(category_path));
            StratifiedBC sbc = unstable_stratification(c);
            if (max_dim > 3) throw Error("--max-dim is capped at 3");
            HornsReport r = fill_all_inner_horns(sbc.strat, max_dim);
            tap(r.all_filled, "all inner horns fill (" + std::to_string(r.horns_checked) +
                                  " horns)");
            pass = r.all_filled;
            report["horns_checked"] = r.horns_checked;
            report["filled"] = r.filled;
            Json fillers = Json::object();
            for (const auto& [desc, cell] : r.fillers) fillers[desc] = cell;
            report["fillers"] = fillers;
            if (!r.all_filled) report["first_unfilled"] = r.first_unfilled;
        } else if (*mvalidate) {
            MatchingFile mf = load_matching();
            MatchingReport r = validate_matching(mf.complex, mf.matching);
            tap(r.structurally_valid, "pairs are cover pairs, each cell once");
            tap(r.acyclic, "matching is acyclic");
            pass = r.pass();
            Json crit = Json::array();
            for (int cc : r.critical) crit.push_back(mf.complex.name(cc));
            report["critical"] = crit;
            if (!r.witness.empty()) report["witness"] = r.witness;
        } else if (*mcomplex) {
            MatchingFile mf = load_matching();
            MorseComplexResult r = morse_complex(mf.complex, mf.matching);
            tap(r.homology_matches, "Morse homology equals complex homology");
            pass = r.homology_matches;
            Json crit = Json::array();
            for (int cc : r.critical) crit.push_back(mf.complex.name(cc));
            report["critical"] = crit;
            if (r.integer_coefficients) {
                report["morse_homology"] = homology_json(r.morse_homology);
                report["complex_homology"] = homology_json(r.complex_homology);
            } else {
                report["morse_betti_mod2"] = r.morse_betti_mod2;
                report["complex_betti_mod2"] = r.complex_betti_mod2;
            }
        } else if (*mflow) {
            FlowCategory fc = load_flow();
            auto v = validate(fc.cat);
            tap(v.pass, "flow category validates");
            pass = v.pass;
            Json homs = Json::object();
            for (int x = 0; x < fc.cat.num_objects(); ++x)
                for (int y = 0; y < fc.cat.num_objects(); ++y)
                    if (x != y && fc.cat.hom_nonempty(x, y))
                        homs[fc.cat.object_name(x) + "->" + fc.cat.object_name(y)] =
                            fc.cat.hom_poset(x, y).size();
            report["objects"] = fc.cat.num_objects();
            report["hom_sizes"] = homs;
        } else if (*mclassify) {
            FlowCategory fc = load_flow();
            ClassifyFlowResult r = classify_flow(fc);
            tap(r.num_strata == fc.cat.num_objects(), "strata indexed by critical cells");
            tap(r.hom_shape_ok, "face category homs match the hom-poset nerves");
            pass = r.num_strata == fc.cat.num_objects() && r.hom_shape_ok;
            report["strata"] = r.num_strata;
            report["cells"] = r.cell_counts;
            report["homology"] = homology_json(r.homology);
            std::cout << "cells per dimension:";
            for (int n : r.cell_counts) std::cout << ' ' << n;
            std::cout << "\n";
        } else if (*homologycmd) {
            SimpSet s = simpset_from_json(load_json_file(space_path));
            HomologyReport h = homology(s);
            tap(true, "homology computed");
            report["homology"] = homology_json(h);
            std::cout << h.to_string() << "\n";
        } else if (*exportcmd) {
            SimpSet s = simpset_from_json(load_json_file(space_path));
            if (format == "off") {
                std::ofstream out(out_path);
                if (!out) throw Error("cannot write " + out_path);
                out << export_off(s);
            } else if (format == "json") {
                write_json_file(out_path, simpset_to_json(s));
            } else {
                throw Error("unknown format " + format);
            }
            tap(true, "exported " + out_path);
        }

        report["pass"] = pass;
        emit_report(report_path, report);
        return pass ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
