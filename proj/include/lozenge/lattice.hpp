#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace lozenge {

using Int = long long;

// Integer point in triangular-lattice coordinates: p = x*u + y*v with
// u = (1,0) and v = (1/2, sqrt(3)/2) in the Euclidean plane.
struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend constexpr Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
    friend constexpr Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Vec2 operator-(Vec2 p) { return {-p.x, -p.y}; }
    friend constexpr Vec2 operator*(Int k, Vec2 p) { return {k * p.x, k * p.y}; }
    constexpr Vec2& operator+=(Vec2 q) { x += q.x; y += q.y; return *this; }
    constexpr Vec2& operator-=(Vec2 q) { x -= q.x; y -= q.y; return *this; }
    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

// Lattice basis given by two column vectors.
struct Basis {
    Vec2 a;
    Vec2 b;

    constexpr Int det() const { return a.x * b.y - b.x * a.y; }
    friend constexpr auto operator<=>(const Basis&, const Basis&) = default;
};

// Canonical (Hermite-style) form of a finite-index sublattice: generated by
// (a,0) and (c,b) with a > 0, b > 0, 0 <= c < a.
struct HnfForm {
    Int a = 1;
    Int b = 1;
    Int c = 0;

    constexpr Int index() const { return a * b; }
    constexpr Vec2 gen_a() const { return {a, 0}; }
    constexpr Vec2 gen_b() const { return {c, b}; }
    friend constexpr auto operator<=>(const HnfForm&, const HnfForm&) = default;
};

// Fundamental-domain cell: column j in [0,a), row i in [0,b).
struct Cell {
    Int j = 0;
    Int i = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Result of splitting a point into cell + lattice part: p = cell + m*(a,0) + n*(c,b).
struct Decomposition {
    Cell cell;
    Int m = 0;
    Int n = 0;
};

// Floor division / modulus (round toward -infinity), valid for d != 0.
constexpr Int floor_div(Int n, Int d) {
    Int q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}
constexpr Int mod_floor(Int n, Int d) { return n - d * floor_div(n, d); }

// Canonical form of the lattice spanned by the basis columns.
// Throws std::invalid_argument on a rank-deficient basis.
HnfForm hermite_normal_form(const Basis& basis);

// The canonical generators as a Basis.
Basis hnf_basis(const HnfForm& h);

// Representative of p modulo the lattice, as a cell / full decomposition.
Cell reduce(const HnfForm& h, Vec2 p);
Decomposition decompose(const HnfForm& h, Vec2 p);

// Cell <-> point / linear index conversions (index r = i*a + j).
constexpr Vec2 cell_point(Cell c) { return {c.j, c.i}; }
constexpr Int cell_linear(const HnfForm& h, Cell c) { return c.i * h.a + c.j; }
constexpr Cell cell_from_linear(const HnfForm& h, Int r) { return {r % h.a, r / h.a}; }

// Does the lattice of h contain p?
bool lattice_contains(const HnfForm& h, Vec2 p);

// Coordinates of lattice point p in the given basis (p = m*basis.a + n*basis.b).
// Throws std::invalid_argument if p is not an integer combination.
std::pair<Int, Int> lattice_coords(const Basis& basis, Vec2 p);

// All canonical forms with index in [1, max_index], sorted by (index, a, c).
std::vector<HnfForm> all_hnf_forms(Int max_index);

}  // namespace lozenge
