#pragma once

#include <json.hpp>
#include <utility>

#include "lozenge/polyring.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

// Tiling serialization; "basis" is the row-major matrix [a|b], "cells" the
// orientation string in linear cell order.
nlohmann::json tiling_to_json(const Tiling& t, const Basis& basis);
std::pair<Tiling, Basis> tiling_from_json(const nlohmann::json& j);

// Polynomial as a list of {"l","d","r","coeff"} terms in ascending
// lexicographic exponent order.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace lozenge
