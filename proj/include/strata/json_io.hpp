#ifndef STRATA_JSON_IO_HPP
#define STRATA_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "strata/acyccat.hpp"
#include "strata/morse.hpp"
#include "strata/poset.hpp"
#include "strata/simpset.hpp"
#include "strata/strat.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

// simpset.json
Json simpset_to_json(const SimpSet& s);
SimpSet simpset_from_json(const Json& j);

// poset.json
Json poset_to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j);

// category.json (discrete or simpset-enriched homs)
Json category_to_json(const AcycCat& c);
AcycCat category_from_json(const Json& j);

// strat.json
Json strat_to_json(const StratSpace& s);
StratSpace strat_from_json(const Json& j);

// matching.json: complex + pairs by cell name
struct MatchingFile {
    RegComplex complex;
    Matching matching;
};
Json matching_to_json(const RegComplex& c, const Matching& m);
MatchingFile matching_from_json(const Json& j);

// flowhoms.json: supplied hom posets by critical-cell names
std::map<std::pair<std::string, std::string>, FinPoset> flowhoms_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace strata

#endif
