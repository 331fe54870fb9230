#pragma once

#include <vector>

#include "lozenge/tiling.hpp"

namespace lozenge {

// The two matchings of the unit hexagon around the vertex m + u:
// config A = (tau(m), tau(m+u), tau(m+u-v)) = (D, L, R), config B = (R, D, L).
enum class FlipConfig { A, B };

struct FlipSite {
    Cell center;
    FlipConfig config;

    friend constexpr auto operator<=>(const FlipSite&, const FlipSite&) = default;
};

// All flip sites, in linear order of the center cell.
std::vector<FlipSite> flip_sites(const Tiling& t);

// Exchange the two hexagon matchings at the site. Throws
// std::invalid_argument("stale flip site") if the site does not match.
Tiling apply_flip(const Tiling& t, const FlipSite& site);

// Order, edge count and connectivity of the flip graph on the tilings of
// one type.
struct FlipGraphSummary {
    Int order = 0;
    Int size = 0;
    bool connected = false;
};

FlipGraphSummary flip_graph(const Basis& basis, TilingType type, Int cap = kDefaultEnumerationCap);
bool flip_connected(const Basis& basis, TilingType type, Int cap = kDefaultEnumerationCap);

}  // namespace lozenge
