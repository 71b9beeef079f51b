#ifndef STRATA_EXPORT_OFF_HPP
#define STRATA_EXPORT_OFF_HPP

#include <string>

#include "strata/simpset.hpp"

namespace strata {

// OFF preview for complexes of dimension <= 3. Complexes whose cells embed
// (distinct vertices, distinct vertex sets) are exported directly; otherwise
// every 2-cell is fanned around a barycenter vertex so coincident cells
// separate. Output is byte-deterministic.
std::string export_off(const SimpSet& s);

}  // namespace strata

#endif
