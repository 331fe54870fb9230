#pragma once

#include <array>
#include <vector>

#include "lozenge/tiling.hpp"

namespace lozenge {

// Change of the combined height along each unit step of the triangular lattice.
inline constexpr std::array<Vec2, 6> kSteps{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

// Height increment along step s when the corresponding lattice edge is present.
Int step_increment(Vec2 s);

// Is the edge from p to p+s present (not crossed by a lozenge)?
// Throws std::invalid_argument for a non-unit step.
bool edge_exists(const Tiling& t, Vec2 p, Vec2 s);

// Per-period change of the combined height, measured in a chosen basis.
struct Fingerprint {
    Int d1 = 0;
    Int d2 = 0;

    friend constexpr auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

// Combined height of a tiling: h(p) = base(cell) + m*e1 + n*e2 where
// p = cell + m*(a,0) + n*(c,b), normalised by h(0) = 0.
struct HeightField {
    HnfForm hnf;
    std::vector<Int> base;  // by linear cell index
    Int e1 = 0;             // holonomy along (a,0)
    Int e2 = 0;             // holonomy along (c,b)
    Fingerprint holonomy;   // (e1, e2) re-expressed in the requested basis

    Int at(Vec2 p) const {
        Decomposition d = decompose(hnf, p);
        return base[cell_linear(hnf, d.cell)] + d.m * e1 + d.n * e2;
    }
};

// Solve for the combined height of a valid tiling. The basis must generate
// the tiling's lattice (std::invalid_argument otherwise); an inconsistent
// tiling raises std::runtime_error("height not well-defined").
HeightField compute_heights(const Tiling& t, const Basis& basis);

Fingerprint fingerprint(const Tiling& t, const Basis& basis);

// Split h = H1+H2+H3 at a point into the three sheet coordinates.
std::array<Int, 3> coords3(Vec2 p, Int h);
std::array<Int, 3> coords3(const HeightField& f, Vec2 p);

// A tiling with the requested fingerprint in the given basis, if one exists.
// Throws std::invalid_argument("unrealizable fingerprint") otherwise.
Tiling tiling_for_fingerprint(const Basis& basis, Fingerprint target);

}  // namespace lozenge
