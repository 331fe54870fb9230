#pragma once

#include <vector>

#include "lozenge/polyring.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

// Translate the tiling: result(x) = t(x + s).
Tiling shift_tiling(const Tiling& t, Vec2 s);

// The 180-degree involution: (I tau~)(x) = -tau~^{-1}(-x) for the matching
// bijection tau~(x) = x + xi(tau(x)).
Tiling involute(const Tiling& t);

// Partition of a tiling set into group orbits; each orbit sorted, orbits
// ordered by their minimal element.
struct OrbitSet {
    std::vector<std::vector<Tiling>> orbits;
};

OrbitSet shift_orbits(const std::vector<Tiling>& tilings);
OrbitSet shift_involution_orbits(const std::vector<Tiling>& tilings);

// One monomial per orbit, exponents = common type of the orbit.
Poly orbit_census(const OrbitSet& orbits);

// Generating functions of tilings modulo shifts (z1) and modulo shifts plus
// the involution (z2).
Poly z1(const Basis& basis, Int cap = kDefaultEnumerationCap);
Poly z2(const Basis& basis, Int cap = kDefaultEnumerationCap);

}  // namespace lozenge
