#pragma once

#include <vector>

#include "lozenge/polyring.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

// Unsigned bipartite adjacency matrix: rows = up-triangles i*v + j*u,
// columns = down-triangles (i+1)*v + j*u, index r = i*a + j.
PolyMatrix build_m(const HnfForm& h);

// Signed matrix with the crossing weights omega1 = s1, omega2 = s2 already
// substituted (s1, s2 in {+1, -1}).
PolyMatrix build_m_prime(const HnfForm& h, int s1, int s2);

inline constexpr Int kDefaultGenfunCap = 16;

// Generating function Z(L,D,R) of the periodic tilings via the
// four-determinant combination; cap guards the 2^index determinant.
Poly genfun(const HnfForm& h, Int cap = kDefaultGenfunCap);
Poly genfun(const Basis& basis, Int cap = kDefaultGenfunCap);

// Closed form for the L-free part of Z: with L = 0 the signed matrix is
// R*Id + D*W for a weighted permutation W, so the determinant factors over
// the gcd(a,c) cycles. Works at any index.
Poly genfun_no_l(const HnfForm& h);
Poly genfun_no_l(const Basis& basis);

// Sum of one monomial per tiling, exponents = type.
Poly type_census(const std::vector<Tiling>& tilings);

}  // namespace lozenge
