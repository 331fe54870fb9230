#pragma once

#include <json.hpp>

#include "lozenge/tiling.hpp"

namespace lozenge {

// Run the full cross-check suite (generating function vs. matrix permanent
// vs. brute-force census, fingerprint/type identities, counting formulas,
// edge closed forms, quotient and flip properties) over every canonical
// lattice with index <= max_index. Returns a deterministic JSON report.
nlohmann::json run_verify(Int max_index, Int cap = kDefaultEnumerationCap);

}  // namespace lozenge
