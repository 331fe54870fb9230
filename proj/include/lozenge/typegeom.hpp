#pragma once

#include <utility>
#include <vector>

#include "lozenge/heights.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

// Triangle in fingerprint space spanned by the three constant tilings.
struct FundamentalTriangle {
    Fingerprint vl;
    Fingerprint vd;
    Fingerprint vr;
};

FundamentalTriangle triangle(const Basis& basis);

// Closed / strict membership tests (exact integer arithmetic).
bool triangle_contains(const FundamentalTriangle& tri, Fingerprint p);
bool triangle_interior(const FundamentalTriangle& tri, Fingerprint p);

// Conversions between fingerprints and orientation-census types.
// fingerprint_to_type requires a realizable point (inside the closed
// triangle, congruent to vD mod 3, integral barycentric solution).
TilingType fingerprint_to_type(const Basis& basis, Fingerprint p);
Fingerprint type_to_fingerprint(const Basis& basis, TilingType t);

// All realizable (fingerprint, type) pairs, sorted by fingerprint.
std::vector<std::pair<Fingerprint, TilingType>> all_types(const Basis& basis);

// Lattice-point counts of the triangle: per-edge boundary points, interior
// points (Pick), and the total = number of generating-function monomials.
struct CountSummary {
    Int boundary_dl = 0;
    Int boundary_lr = 0;
    Int boundary_rd = 0;
    Int interior = 0;
    Int monomials = 0;
};

CountSummary count_summary(const Basis& basis);

// Binary necklace / bracelet counting (rotations; rotations + reflections).
long long necklace_count(Int d, Int i);
long long necklace_total(Int d);
long long bracelet_count(Int d, Int i);

}  // namespace lozenge
