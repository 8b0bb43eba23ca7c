#pragma once

#include "wpvol/laurent.hpp"
#include "wpvol/multipoly.hpp"
#include "wpvol/volumes.hpp"

#include "json.hpp"

#include <string>

namespace wpvol {

using Json = nlohmann::ordered_json;

// RingElem <-> [[k, "p/q"], ...], ascending k, zero coefficients omitted
Json ring_to_json(const RingElem& e);
RingElem ring_from_json(const Json& j);

// MultiPoly <-> [{"exp": [...], "coef": [[k,"p/q"],...]}, ...], exponents in
// lexicographic order
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& p);

std::string poly_to_text(const MultiPoly& p);
std::string poly_to_latex(const MultiPoly& p);

// versioned cache file; entries re-pass a cheap invariant check on load
void save_table(const VolumeTable& table, const std::string& path);
VolumeTable load_table(const std::string& path);

std::string canonical_table_json(const VolumeTable& table);

}  // namespace wpvol
