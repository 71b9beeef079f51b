#include "strata/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace strata {

Json simpset_to_json(const SimpSet& s) {
    Json j;
    j["dims"] = s.f_vector();
    Json cells = Json::array();
    for (int d = 0; d <= s.dim(); ++d) {
        for (int i = 0; i < s.count(d); ++i) {
            Json cell;
            cell["id"] = i;
            cell["dim"] = d;
            cell["name"] = s.name(SimplexRef{d, i});
            Json faces = Json::array();
            for (int k = 0; k <= d && d >= 1; ++k) {
                const FormalSimplex& f = s.face_entry(SimplexRef{d, i}, k);
                Json fj;
                fj["degen"] = f.word;
                fj["target"] = f.target.idx;
                faces.push_back(fj);
            }
            cell["faces"] = faces;
            cells.push_back(cell);
        }
    }
    j["simplices"] = cells;
    return j;
}

SimpSet simpset_from_json(const Json& j) {
    if (!j.contains("dims") || !j.contains("simplices")) throw Error("simpset json: missing keys");
    std::vector<int> dims = j["dims"].get<std::vector<int>>();
    SimpSetBuilder b;
    for (const auto& cell : j["simplices"]) {
        int d = cell.at("dim").get<int>();
        std::string nm = cell.contains("name")
                             ? cell["name"].get<std::string>()
                             : std::to_string(d) + ":" + std::to_string(cell.at("id").get<int>());
        SimplexRef r = b.add(d, nm);
        if (r.idx != cell.at("id").get<int>()) throw Error("simpset json: ids must be dense");
    }
    for (const auto& cell : j["simplices"]) {
        int d = cell.at("dim").get<int>();
        if (d == 0) continue;
        int i = cell.at("id").get<int>();
        const auto& faces = cell.at("faces");
        if (static_cast<int>(faces.size()) != d + 1) throw Error("simpset json: face arity");
        for (int k = 0; k <= d; ++k) {
            DegenWord w = faces[k].at("degen").get<DegenWord>();
            int tdim = d - 1 - static_cast<int>(w.size());
            b.set_face(SimplexRef{d, i}, k,
                       FormalSimplex{w, SimplexRef{tdim, faces[k].at("target").get<int>()}});
        }
    }
    SimpSet s = b.build();
    if (s.f_vector() != dims) throw Error("simpset json: dims do not match simplices");
    return s;
}

Json poset_to_json(const FinPoset& p) {
    Json j;
    Json elems = Json::array();
    for (int i = 0; i < p.size(); ++i) elems.push_back(p.name(i));
    j["elements"] = elems;
    Json covers = Json::array();
    for (auto [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
    j["covers"] = covers;
    return j;
}

FinPoset poset_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& e : j.at("elements")) names.push_back(e.get<std::string>());
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers")) covers.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return FinPoset::from_covers(static_cast<int>(names.size()), covers, names);
}

Json category_to_json(const AcycCat& c) {
    Json j;
    Json objs = Json::array();
    for (int i = 0; i < c.num_objects(); ++i) objs.push_back(c.object_name(i));
    j["objects"] = objs;
    Json homs = Json::object();
    if (c.tier() == HomTier::Discrete) {
        for (int x = 0; x < c.num_objects(); ++x)
            for (int y = 0; y < c.num_objects(); ++y) {
                const auto& h = c.hom(x, y);
                if (h.empty()) continue;
                Json hj;
                hj["kind"] = "discrete";
                Json elems = Json::array();
                for (int m : h) elems.push_back(c.morphism(m).name);
                hj["elements"] = elems;
                homs[c.object_name(x) + "->" + c.object_name(y)] = hj;
            }
        j["homs"] = homs;
        Json compose = Json::array();
        for (int g = 0; g < c.num_morphisms(); ++g)
            for (int f = 0; f < c.num_morphisms(); ++f) {
                if (c.morphism(f).tgt != c.morphism(g).src) continue;
                Json e;
                e["g"] = c.morphism(g).name;
                e["f"] = c.morphism(f).name;
                e["gf"] = c.morphism(c.compose(g, f)).name;
                compose.push_back(e);
            }
        j["compose"] = compose;
    } else if (c.tier() == HomTier::SimpSetEnriched) {
        for (int x = 0; x < c.num_objects(); ++x)
            for (int y = 0; y < c.num_objects(); ++y) {
                if (!c.has_hom_space(x, y)) continue;
                Json hj;
                hj["kind"] = "simpset";
                hj["space"] = simpset_to_json(c.hom_space(x, y));
                homs[c.object_name(x) + "->" + c.object_name(y)] = hj;
            }
        j["homs"] = homs;
        j["compose"] = Json::array();
    } else {
        throw Error("category_to_json: poset-enriched categories are built in memory");
    }
    return j;
}

AcycCat category_from_json(const Json& j) {
    std::vector<std::string> objs;
    for (const auto& o : j.at("objects")) objs.push_back(o.get<std::string>());
    // Decide the tier from the hom kinds.
    bool any_simpset = false, any_discrete = false;
    for (const auto& [key, hj] : j.at("homs").items()) {
        std::string kind = hj.at("kind").get<std::string>();
        if (kind == "simpset") any_simpset = true;
        else if (kind == "discrete") any_discrete = true;
        else throw Error("category json: unknown hom kind " + kind);
    }
    if (any_simpset && any_discrete)
        throw Error("category json: mixed hom kinds are not supported");
    AcycCat c(any_simpset ? HomTier::SimpSetEnriched : HomTier::Discrete);
    for (const auto& o : objs) c.add_object(o);
    auto parse_pair = [&](const std::string& key) -> std::pair<int, int> {
        auto arrow = key.find("->");
        if (arrow == std::string::npos) throw Error("category json: bad hom key " + key);
        auto x = c.find_object(key.substr(0, arrow));
        auto y = c.find_object(key.substr(arrow + 2));
        if (!x || !y) throw Error("category json: unknown object in " + key);
        return {*x, *y};
    };
    for (const auto& [key, hj] : j.at("homs").items()) {
        auto [x, y] = parse_pair(key);
        if (any_simpset) {
            c.set_hom_space(x, y, simpset_from_json(hj.at("space")));
        } else {
            for (const auto& e : hj.at("elements")) {
                std::string nm = e.get<std::string>();
                if (c.find_morphism(nm)) throw Error("category json: duplicate morphism " + nm);
                c.add_morphism(nm, x, y);
            }
        }
    }
    if (!any_simpset && j.contains("compose")) {
        for (const auto& e : j.at("compose")) {
            auto g = c.find_morphism(e.at("g").get<std::string>());
            auto f = c.find_morphism(e.at("f").get<std::string>());
            auto gf = c.find_morphism(e.at("gf").get<std::string>());
            if (!g || !f || !gf) throw Error("category json: unknown morphism in compose");
            c.set_compose(*g, *f, *gf);
        }
    }
    return c;
}

Json strat_to_json(const StratSpace& s) {
    Json j;
    j["space"] = simpset_to_json(s.space);
    j["poset"] = poset_to_json(s.poset);
    Json labels = Json::object();
    for (int d = 0; d <= s.space.dim(); ++d)
        for (int i = 0; i < s.space.count(d); ++i)
            labels[std::to_string(d) + ":" + std::to_string(i)] =
                s.poset.name(s.label[d][i]);
    j["labels"] = labels;
    return j;
}

StratSpace strat_from_json(const Json& j) {
    StratSpace s;
    s.space = simpset_from_json(j.at("space"));
    s.poset = poset_from_json(j.at("poset"));
    s.label.assign(s.space.dim() + 1, {});
    for (int d = 0; d <= s.space.dim(); ++d) s.label[d].assign(s.space.count(d), -1);
    for (const auto& [key, val] : j.at("labels").items()) {
        auto colon = key.find(':');
        if (colon == std::string::npos) throw Error("strat json: bad simplex id " + key);
        int d = std::stoi(key.substr(0, colon));
        int i = std::stoi(key.substr(colon + 1));
        auto l = s.poset.find(val.get<std::string>());
        if (!l) throw Error("strat json: unknown label " + val.get<std::string>());
        if (d < 0 || d > s.space.dim() || i < 0 || i >= s.space.count(d))
            throw Error("strat json: simplex id out of range " + key);
        s.label[d][i] = *l;
    }
    for (int d = 0; d <= s.space.dim(); ++d)
        for (int i = 0; i < s.space.count(d); ++i)
            if (s.label[d][i] < 0)
                throw Error("strat json: simplex " + std::to_string(d) + ":" + std::to_string(i) +
                            " has no label");
    s.validate();
    return s;
}

Json matching_to_json(const RegComplex& c, const Matching& m) {
    Json j;
    Json cj;
    // Serialize as a graded poset with signs; lossless for both input kinds.
    cj["kind"] = "poset";
    Json elems = Json::array();
    Json dims = Json::array();
    for (int i = 0; i < c.size(); ++i) {
        elems.push_back(c.name(i));
        dims.push_back(c.cell_dim(i));
    }
    cj["elements"] = elems;
    cj["dims"] = dims;
    Json covers = Json::array();
    Json signs = Json::array();
    std::vector<std::pair<int, int>> cover_pairs;
    for (int hi = 0; hi < c.size(); ++hi)
        for (int lo : c.faces(hi)) cover_pairs.push_back({lo, hi});
    std::sort(cover_pairs.begin(), cover_pairs.end());
    for (auto [lo, hi] : cover_pairs) {
        covers.push_back(Json::array({lo, hi}));
        if (c.has_signs()) signs.push_back(Json::array({lo, hi, c.incidence(hi, lo)}));
    }
    cj["covers"] = covers;
    if (c.has_signs()) cj["signs"] = signs;
    j["complex"] = cj;
    Json pairs = Json::array();
    for (auto [lo, hi] : m.pairs) pairs.push_back(Json::array({c.name(lo), c.name(hi)}));
    j["pairs"] = pairs;
    return j;
}

MatchingFile matching_from_json(const Json& j) {
    MatchingFile out;
    const Json& cj = j.at("complex");
    std::string kind = cj.at("kind").get<std::string>();
    if (kind == "simplicial") {
        std::vector<std::vector<int>> facets;
        for (const auto& f : cj.at("facets")) facets.push_back(f.get<std::vector<int>>());
        out.complex = RegComplex::simplicial(cj.at("vertices").get<int>(), facets);
    } else if (kind == "poset") {
        std::vector<std::string> names;
        for (const auto& e : cj.at("elements")) names.push_back(e.get<std::string>());
        std::vector<std::pair<int, int>> covers;
        for (const auto& cv : cj.at("covers"))
            covers.push_back({cv.at(0).get<int>(), cv.at(1).get<int>()});
        FinPoset p = FinPoset::from_covers(static_cast<int>(names.size()), covers, names);
        std::map<std::pair<int, int>, int> signs;
        if (cj.contains("signs"))
            for (const auto& sg : cj.at("signs"))
                signs[{sg.at(0).get<int>(), sg.at(1).get<int>()}] = sg.at(2).get<int>();
        out.complex =
            RegComplex::from_graded_poset(p, cj.at("dims").get<std::vector<int>>(), signs);
    } else {
        throw Error("matching json: unknown complex kind " + kind);
    }
    for (const auto& pr : j.at("pairs")) {
        auto lo = out.complex.find(pr.at(0).get<std::string>());
        auto hi = out.complex.find(pr.at(1).get<std::string>());
        if (!lo || !hi) throw Error("matching json: unknown cell in pair");
        out.matching.pairs.push_back({*lo, *hi});
    }
    return out;
}

std::map<std::pair<std::string, std::string>, FinPoset> flowhoms_from_json(const Json& j) {
    std::map<std::pair<std::string, std::string>, FinPoset> out;
    for (const auto& h : j.at("homs")) {
        out[{h.at("from").get<std::string>(), h.at("to").get<std::string>()}] =
            poset_from_json(h.at("poset"));
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace strata
