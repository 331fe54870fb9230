#include "lozenge/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lozenge {

char orient_char(Orient o) {
    switch (o) {
        case Orient::L: return 'L';
        case Orient::D: return 'D';
        default: return 'R';
    }
}

Orient orient_from_char(char ch) {
    switch (ch) {
        case 'L': return Orient::L;
        case 'D': return Orient::D;
        case 'R': return Orient::R;
        default: throw std::invalid_argument(std::string("invalid orientation character: ") + ch);
    }
}

std::string Tiling::cells_string() const {
    std::string s;
    s.reserve(cells.size());
    for (Orient o : cells) s.push_back(orient_char(o));
    return s;
}

namespace {

constexpr Vec2 kU{1, 0};
constexpr Vec2 kV{0, 1};

// Linear indices of the three up-triangles able to cover the down-triangle
// at cell y: via D, L, R respectively.
struct Coverers {
    Int via_d, via_l, via_r;
};

Coverers coverers_of(const HnfForm& h, Cell y) {
    Vec2 p = cell_point(y);
    return {cell_linear(h, reduce(h, p)),
            cell_linear(h, reduce(h, p + kU - kV)),
            cell_linear(h, reduce(h, p - kV))};
}

bool covers(Orient o, const Coverers& cov, Int r) {
    switch (o) {
        case Orient::D: return cov.via_d == r;
        case Orient::L: return cov.via_l == r;
        default: return cov.via_r == r;
    }
}

}  // namespace

bool is_valid(const Tiling& t) {
    Int n = t.hnf.index();
    if (static_cast<Int>(t.cells.size()) != n)
        throw std::invalid_argument("tiling has wrong number of cells");
    for (Int r = 0; r < n; ++r) {
        Coverers cov = coverers_of(t.hnf, cell_from_linear(t.hnf, r));
        int hits = 0;
        if (t.cells[cov.via_d] == Orient::D) ++hits;
        if (t.cells[cov.via_l] == Orient::L) ++hits;
        if (t.cells[cov.via_r] == Orient::R) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

Tiling constant_tiling(const HnfForm& h, Orient o) {
    return {h, std::vector<Orient>(static_cast<size_t>(h.index()), o)};
}

Tiling tiling_from_cells_string(const HnfForm& h, const std::string& s) {
    if (static_cast<Int>(s.size()) != h.index())
        throw std::invalid_argument("tiling has wrong number of cells");
    Tiling t{h, {}};
    t.cells.reserve(s.size());
    for (char ch : s) t.cells.push_back(orient_from_char(ch));
    return t;
}

TilingType type_of(const Tiling& t) {
    TilingType ty;
    for (Orient o : t.cells) {
        if (o == Orient::L) ++ty.l;
        else if (o == Orient::D) ++ty.d;
        else ++ty.r;
    }
    return ty;
}

std::vector<Tiling> enumerate_tilings(const HnfForm& h, Int cap) {
    Int n = h.index();
    if (n > cap)
        throw std::domain_error("enumeration cap (index <= " + std::to_string(cap) +
                                ") exceeded: index = " + std::to_string(n));

    // Down-triangle bookkeeping: who may cover each, and which down-triangles
    // become fully decided once cell r is assigned.
    std::vector<Coverers> cov(static_cast<size_t>(n));
    std::vector<std::vector<Int>> by_last(static_cast<size_t>(n));
    for (Int d = 0; d < n; ++d) {
        cov[d] = coverers_of(h, cell_from_linear(h, d));
        Int last = std::max({cov[d].via_d, cov[d].via_l, cov[d].via_r});
        by_last[last].push_back(d);
    }

    std::vector<Tiling> out;
    std::vector<Orient> cells(static_cast<size_t>(n), Orient::L);
    std::vector<int> covered(static_cast<size_t>(n), 0);

    auto rec = [&](auto&& self, Int r) -> void {
        if (r == n) {
            out.push_back({h, cells});
            return;
        }
        for (Orient o : {Orient::L, Orient::D, Orient::R}) {
            // Down-triangles newly covered by assigning tau(r) = o.
            Int hit = -1;
            for (Int d = 0; d < n; ++d)
                if (covers(o, cov[d], r)) {
                    if (covered[d]) { hit = -2; break; }
                    hit = d;
                }
            if (hit == -2) continue;
            cells[r] = o;
            std::vector<Int> marked;
            for (Int d = 0; d < n; ++d)
                if (covers(o, cov[d], r) && !covered[d]) {
                    covered[d] = 1;
                    marked.push_back(d);
                }
            bool ok = true;
            for (Int d : by_last[r])
                if (!covered[d]) { ok = false; break; }
            if (ok) self(self, r + 1);
            for (Int d : marked) covered[d] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Tiling> no_l_tilings(const HnfForm& h) {
    // Without L lozenges the matching axiom forces tau(y) = tau(y - v), so a
    // tiling is a binary D/R word of length d = gcd(a, c) read along the
    // u-axis: tau(j*u + i*v) = word[j mod d].
    Int d = std::gcd(h.a, h.c);
    if (d == 0) d = h.a;
    if (d > 20)
        throw std::domain_error("edge enumeration cap (gcd(a,c) <= 20) exceeded: gcd = " +
                                std::to_string(d));
    std::vector<Tiling> out;
    out.reserve(static_cast<size_t>(1) << d);
    for (Int mask = 0; mask < (Int(1) << d); ++mask) {
        Tiling t{h, std::vector<Orient>(static_cast<size_t>(h.index()))};
        for (Int i = 0; i < h.b; ++i)
            for (Int j = 0; j < h.a; ++j)
                t.cells[static_cast<size_t>(i * h.a + j)] =
                    (mask >> (j % d)) & 1 ? Orient::R : Orient::D;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lozenge
