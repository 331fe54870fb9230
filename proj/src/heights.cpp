#include "lozenge/heights.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>
#include <optional>
#include <stdexcept>

#include "lozenge/typegeom.hpp"

namespace lozenge {

namespace {
constexpr Vec2 kU{1, 0};
constexpr Vec2 kV{0, 1};
}  // namespace

Int step_increment(Vec2 s) {
    if (s == kU) return -1;
    if (s == kV) return 1;
    if (s == kV - kU) return -1;
    if (s == -kU) return 1;
    if (s == -kV) return -1;
    if (s == kU - kV) return 1;
    throw std::invalid_argument("invalid step");
}

bool edge_exists(const Tiling& t, Vec2 p, Vec2 s) {
    if (s == kU) return t.at(p) != Orient::D;
    if (s == kV) return t.at(p) != Orient::L;
    if (s == kV - kU) return t.at(p - kU) != Orient::R;
    if (s == -kU) return t.at(p - kU) != Orient::D;
    if (s == -kV) return t.at(p - kV) != Orient::L;
    if (s == kU - kV) return t.at(p - kV) != Orient::R;
    throw std::invalid_argument("invalid step");
}

HeightField compute_heights(const Tiling& t, const Basis& basis) {
    const HnfForm& h = t.hnf;
    Int n = h.index();
    if (static_cast<Int>(t.cells.size()) != n)
        throw std::invalid_argument("tiling has wrong number of cells");
    if (hermite_normal_form(basis) != h)
        throw std::invalid_argument("basis does not generate the tiling's lattice");

    // Affine labels c0 + c1*e1 + c2*e2 in the unknown holonomies e1, e2
    // along the canonical generators; non-tree edges contribute constraints.
    struct Label { Int c0, c1, c2; };
    std::vector<Label> lab(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::array<Int, 3>> cons;  // a1*e1 + a2*e2 = b
    std::deque<Int> queue;
    lab[0] = {0, 0, 0};
    seen[0] = 1;
    queue.push_back(0);
    while (!queue.empty()) {
        Int r = queue.front();
        queue.pop_front();
        Vec2 p = cell_point(cell_from_linear(h, r));
        for (Vec2 s : kSteps) {
            if (!edge_exists(t, p, s)) continue;
            Decomposition dc = decompose(h, p + s);
            Int r2 = cell_linear(h, dc.cell);
            Label cand{lab[r].c0 + step_increment(s), lab[r].c1 - dc.m, lab[r].c2 - dc.n};
            if (!seen[static_cast<size_t>(r2)]) {
                lab[static_cast<size_t>(r2)] = cand;
                seen[static_cast<size_t>(r2)] = 1;
                queue.push_back(r2);
            } else {
                const Label& ex = lab[static_cast<size_t>(r2)];
                cons.push_back({cand.c1 - ex.c1, cand.c2 - ex.c2, ex.c0 - cand.c0});
            }
        }
    }
    for (Int r = 0; r < n; ++r)
        if (!seen[static_cast<size_t>(r)]) throw std::runtime_error("height not well-defined");

    Int e1 = 0, e2 = 0;
    bool solved = false;
    for (size_t i = 0; i < cons.size() && !solved; ++i)
        for (size_t j = i + 1; j < cons.size() && !solved; ++j) {
            Int det = cons[i][0] * cons[j][1] - cons[j][0] * cons[i][1];
            if (det == 0) continue;
            Int n1 = cons[i][2] * cons[j][1] - cons[j][2] * cons[i][1];
            Int n2 = cons[i][0] * cons[j][2] - cons[j][0] * cons[i][2];
            if (n1 % det != 0 || n2 % det != 0)
                throw std::runtime_error("height not well-defined");
            e1 = n1 / det;
            e2 = n2 / det;
            solved = true;
        }
    if (!solved) throw std::runtime_error("height not well-defined");
    for (const auto& c : cons)
        if (c[0] * e1 + c[1] * e2 != c[2]) throw std::runtime_error("height not well-defined");

    HeightField out{h, std::vector<Int>(static_cast<size_t>(n)), e1, e2, {}};
    for (Int r = 0; r < n; ++r) {
        const Label& l = lab[static_cast<size_t>(r)];
        out.base[static_cast<size_t>(r)] = l.c0 + l.c1 * e1 + l.c2 * e2;
    }
    auto [m1, n1] = lattice_coords(hnf_basis(h), basis.a);
    auto [m2, n2] = lattice_coords(hnf_basis(h), basis.b);
    out.holonomy = {m1 * e1 + n1 * e2, m2 * e1 + n2 * e2};
    return out;
}

Fingerprint fingerprint(const Tiling& t, const Basis& basis) {
    return compute_heights(t, basis).holonomy;
}

std::array<Int, 3> coords3(Vec2 p, Int h) {
    Int k = h - p.y + p.x;
    if (mod_floor(k, 3) != 0) throw std::invalid_argument("height incompatible with point");
    k = floor_div(k, 3);
    return {-p.x + k, k, p.y + k};
}

std::array<Int, 3> coords3(const HeightField& f, Vec2 p) { return coords3(p, f.at(p)); }

namespace {

// Maximal height surface with the requested holonomy: upper envelope of
// lattice translates of the three-sheet corner function.
std::optional<Tiling> construct_for_holonomy(const HnfForm& h, Int e1, Int e2) {
    if (mod_floor(e1 - 2 * h.a, 3) != 0 || mod_floor(e2 - 2 * h.c - h.b, 3) != 0)
        return std::nullopt;
    std::array<Int, 3> x1{(e1 - 2 * h.a) / 3, (e1 + h.a) / 3, (e1 + h.a) / 3};
    std::array<Int, 3> x2{(e2 - 2 * h.c - h.b) / 3, (e2 + h.c - h.b) / 3, (e2 + h.c + 2 * h.b) / 3};

    auto surf = [&](Vec2 p) -> Int {
        Int l1 = p.x, l2 = p.y;
        std::array<Int, 3> cc{l1, 0, -l2};
        Int n0 = llround(static_cast<double>(l2) / static_cast<double>(h.b));
        Int m0 = llround((static_cast<double>(l1) - static_cast<double>(n0 * h.c)) /
                         static_cast<double>(h.a));
        Int best = LLONG_MIN;
        for (Int m = m0 - 64; m <= m0 + 64; ++m)
            for (Int n = n0 - 64; n <= n0 + 64; ++n) {
                Int val = LLONG_MAX;
                for (int i = 0; i < 3; ++i)
                    val = std::min(val, m * x1[i] + n * x2[i] + cc[i]);
                best = std::max(best, val);
            }
        return 3 * best + l2 - l1;
    };

    Tiling t{h, std::vector<Orient>(static_cast<size_t>(h.index()))};
    for (Int i = 0; i < h.b; ++i)
        for (Int j = 0; j < h.a; ++j) {
            Vec2 p{j, i};
            Int hp = surf(p), hu = surf(p + kU), hv = surf(p + kV);
            int hits = 0;
            Orient o = Orient::L;
            if (hu - hp == 2) { o = Orient::D; ++hits; }
            if (hv - hp == -2) { o = Orient::L; ++hits; }
            if (hv - hu == 2) { o = Orient::R; ++hits; }
            if (hits != 1) return std::nullopt;
            t.cells[static_cast<size_t>(i * h.a + j)] = o;
        }
    if (!is_valid(t)) return std::nullopt;
    return t;
}

}  // namespace

Tiling tiling_for_fingerprint(const Basis& basis, Fingerprint target) {
    HnfForm h = hermite_normal_form(basis);
    Fingerprint vd{2 * basis.a.x + basis.a.y, 2 * basis.b.x + basis.b.y};
    if (mod_floor(target.d1 - vd.d1, 3) != 0 || mod_floor(target.d2 - vd.d2, 3) != 0)
        throw std::invalid_argument("unrealizable fingerprint");
    if (!triangle_contains(triangle(basis), target))
        throw std::invalid_argument("unrealizable fingerprint");

    // Transfer the holonomy to the canonical generators (unimodular change).
    Basis canon = hnf_basis(h);
    auto [p1, q1] = lattice_coords(canon, basis.a);
    auto [p2, q2] = lattice_coords(canon, basis.b);
    Int det = p1 * q2 - p2 * q1;
    Int e1 = (target.d1 * q2 - target.d2 * q1) / det;
    Int e2 = (p1 * target.d2 - p2 * target.d1) / det;

    if (auto t = construct_for_holonomy(h, e1, e2)) {
        if (fingerprint(*t, basis) == target) return *t;
    }
    for (const Tiling& t : enumerate_tilings(h))
        if (fingerprint(t, basis) == target) return t;
    throw std::invalid_argument("unrealizable fingerprint");
}

}  // namespace lozenge
