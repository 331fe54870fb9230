#include "lozenge/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace lozenge {

HnfForm hermite_normal_form(const Basis& basis) {
    if (basis.det() == 0) throw std::invalid_argument("rank-deficient lattice");
    Vec2 p = basis.a;
    Vec2 q = basis.b;
    // Euclid on the second components until q lies on the x-axis.
    while (q.y != 0) {
        Int t = floor_div(p.y, q.y);
        p -= t * q;
        std::swap(p, q);
    }
    HnfForm h;
    h.a = q.x < 0 ? -q.x : q.x;
    if (p.y < 0) p = -p;
    h.b = p.y;
    h.c = mod_floor(p.x, h.a);
    return h;
}

Basis hnf_basis(const HnfForm& h) { return {h.gen_a(), h.gen_b()}; }

Decomposition decompose(const HnfForm& h, Vec2 p) {
    Int n = floor_div(p.y, h.b);
    Int xp = p.x - n * h.c;
    Int i = p.y - n * h.b;
    Int j = mod_floor(xp, h.a);
    Int m = (xp - j) / h.a;
    return {{j, i}, m, n};
}

Cell reduce(const HnfForm& h, Vec2 p) { return decompose(h, p).cell; }

bool lattice_contains(const HnfForm& h, Vec2 p) {
    Cell c = reduce(h, p);
    return c.i == 0 && c.j == 0;
}

std::pair<Int, Int> lattice_coords(const Basis& basis, Vec2 p) {
    Int d = basis.det();
    if (d == 0) throw std::invalid_argument("rank-deficient lattice");
    // Cramer: p = m*a + n*b.
    Int mn = p.x * basis.b.y - basis.b.x * p.y;
    Int nn = basis.a.x * p.y - p.x * basis.a.y;
    if (mn % d != 0 || nn % d != 0)
        throw std::invalid_argument("point not in lattice");
    return {mn / d, nn / d};
}

std::vector<HnfForm> all_hnf_forms(Int max_index) {
    std::vector<HnfForm> out;
    for (Int idx = 1; idx <= max_index; ++idx)
        for (Int a = 1; a <= idx; ++a) {
            if (idx % a != 0) continue;
            Int b = idx / a;
            for (Int c = 0; c < a; ++c) out.push_back({a, b, c});
        }
    return out;
}

}  // namespace lozenge
