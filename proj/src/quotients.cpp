#include "lozenge/quotients.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lozenge/kasteleyn.hpp"

namespace lozenge {

Tiling shift_tiling(const Tiling& t, Vec2 s) {
    const HnfForm& h = t.hnf;
    Tiling out{h, std::vector<Orient>(t.cells.size())};
    for (Int r = 0; r < h.index(); ++r)
        out.cells[static_cast<size_t>(r)] = t.at(cell_point(cell_from_linear(h, r)) + s);
    return out;
}

Tiling involute(const Tiling& t) {
    const HnfForm& h = t.hnf;
    Int n = h.index();
    // Invert the matching bijection cell -> covered down-triangle class.
    std::vector<Int> owner(static_cast<size_t>(n), -1);
    for (Int r = 0; r < n; ++r) {
        Vec2 p = cell_point(cell_from_linear(h, r));
        Int dw = cell_linear(h, reduce(h, p + xi(t.cells[static_cast<size_t>(r)])));
        owner[static_cast<size_t>(dw)] = r;
    }
    Tiling out{h, std::vector<Orient>(static_cast<size_t>(n))};
    for (Int r = 0; r < n; ++r) {
        Vec2 p = cell_point(cell_from_linear(h, r));
        Int w = owner[static_cast<size_t>(cell_linear(h, reduce(h, -p)))];
        out.cells[static_cast<size_t>(r)] = t.cells[static_cast<size_t>(w)];
    }
    return out;
}

namespace {

OrbitSet orbits_under(const std::vector<Tiling>& tilings, bool with_involution) {
    OrbitSet result;
    if (tilings.empty()) return result;
    const HnfForm& h = tilings.front().hnf;
    Int n = h.index();
    std::set<std::vector<Orient>> seen;
    std::vector<Tiling> sorted = tilings;
    std::sort(sorted.begin(), sorted.end());
    for (const Tiling& start : sorted) {
        if (seen.count(start.cells)) continue;
        std::set<std::vector<Orient>> orbit;
        std::deque<Tiling> queue{start};
        orbit.insert(start.cells);
        while (!queue.empty()) {
            Tiling cur = queue.front();
            queue.pop_front();
            auto visit = [&](Tiling next) {
                if (orbit.insert(next.cells).second) queue.push_back(std::move(next));
            };
            for (Int r = 0; r < n; ++r)
                visit(shift_tiling(cur, cell_point(cell_from_linear(h, r))));
            if (with_involution) visit(involute(cur));
        }
        std::vector<Tiling> members;
        members.reserve(orbit.size());
        for (const auto& cells : orbit) {
            seen.insert(cells);
            members.push_back({h, cells});
        }
        result.orbits.push_back(std::move(members));
    }
    return result;
}

}  // namespace

OrbitSet shift_orbits(const std::vector<Tiling>& tilings) {
    return orbits_under(tilings, false);
}

OrbitSet shift_involution_orbits(const std::vector<Tiling>& tilings) {
    return orbits_under(tilings, true);
}

Poly orbit_census(const OrbitSet& orbits) {
    Poly z;
    for (const auto& orbit : orbits.orbits) {
        TilingType ty = type_of(orbit.front());
        z.add_term({static_cast<int>(ty.l), static_cast<int>(ty.d), static_cast<int>(ty.r)}, 1);
    }
    return z;
}

Poly z1(const Basis& basis, Int cap) {
    return orbit_census(shift_orbits(enumerate_tilings(hermite_normal_form(basis), cap)));
}

Poly z2(const Basis& basis, Int cap) {
    return orbit_census(shift_involution_orbits(enumerate_tilings(hermite_normal_form(basis), cap)));
}

}  // namespace lozenge
