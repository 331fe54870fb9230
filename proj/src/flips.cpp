#include "lozenge/flips.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lozenge {

namespace {

constexpr Vec2 kU{1, 0};
constexpr Vec2 kV{0, 1};

struct SiteCells {
    Int c0, c1, c2;  // linear indices of m, m+u, m+u-v
    bool distinct;
};

SiteCells site_cells(const HnfForm& h, Cell m) {
    Vec2 p = cell_point(m);
    SiteCells s{cell_linear(h, reduce(h, p)), cell_linear(h, reduce(h, p + kU)),
                cell_linear(h, reduce(h, p + kU - kV)), false};
    s.distinct = s.c0 != s.c1 && s.c0 != s.c2 && s.c1 != s.c2;
    return s;
}

}  // namespace

std::vector<FlipSite> flip_sites(const Tiling& t) {
    const HnfForm& h = t.hnf;
    std::vector<FlipSite> out;
    for (Int r = 0; r < h.index(); ++r) {
        Cell m = cell_from_linear(h, r);
        SiteCells s = site_cells(h, m);
        if (!s.distinct) continue;
        Orient o0 = t.cells[static_cast<size_t>(s.c0)];
        Orient o1 = t.cells[static_cast<size_t>(s.c1)];
        Orient o2 = t.cells[static_cast<size_t>(s.c2)];
        if (o0 == Orient::D && o1 == Orient::L && o2 == Orient::R)
            out.push_back({m, FlipConfig::A});
        else if (o0 == Orient::R && o1 == Orient::D && o2 == Orient::L)
            out.push_back({m, FlipConfig::B});
    }
    return out;
}

Tiling apply_flip(const Tiling& t, const FlipSite& site) {
    const HnfForm& h = t.hnf;
    SiteCells s = site_cells(h, site.center);
    bool ok = s.distinct;
    if (ok) {
        Orient o0 = t.cells[static_cast<size_t>(s.c0)];
        Orient o1 = t.cells[static_cast<size_t>(s.c1)];
        Orient o2 = t.cells[static_cast<size_t>(s.c2)];
        if (site.config == FlipConfig::A)
            ok = o0 == Orient::D && o1 == Orient::L && o2 == Orient::R;
        else
            ok = o0 == Orient::R && o1 == Orient::D && o2 == Orient::L;
    }
    if (!ok) throw std::invalid_argument("stale flip site");
    Tiling out = t;
    if (site.config == FlipConfig::A) {
        out.cells[static_cast<size_t>(s.c0)] = Orient::R;
        out.cells[static_cast<size_t>(s.c1)] = Orient::D;
        out.cells[static_cast<size_t>(s.c2)] = Orient::L;
    } else {
        out.cells[static_cast<size_t>(s.c0)] = Orient::D;
        out.cells[static_cast<size_t>(s.c1)] = Orient::L;
        out.cells[static_cast<size_t>(s.c2)] = Orient::R;
    }
    return out;
}

FlipGraphSummary flip_graph(const Basis& basis, TilingType type, Int cap) {
    HnfForm h = hermite_normal_form(basis);
    std::vector<Tiling> fiber;
    for (const Tiling& t : enumerate_tilings(h, cap))
        if (type_of(t) == type) fiber.push_back(t);
    if (fiber.empty()) throw std::invalid_argument("unknown type: no tiling has it");

    std::map<std::vector<Orient>, Int> index;
    for (Int k = 0; k < static_cast<Int>(fiber.size()); ++k) index[fiber[k].cells] = k;

    FlipGraphSummary g;
    g.order = static_cast<Int>(fiber.size());
    std::vector<Int> comp(fiber.size(), -1);
    std::vector<Int> stack;
    Int components = 0;
    for (Int start = 0; start < g.order; ++start) {
        if (comp[static_cast<size_t>(start)] != -1) continue;
        ++components;
        comp[static_cast<size_t>(start)] = components;
        stack.push_back(start);
        while (!stack.empty()) {
            Int cur = stack.back();
            stack.pop_back();
            for (const FlipSite& site : flip_sites(fiber[static_cast<size_t>(cur)])) {
                Tiling next = apply_flip(fiber[static_cast<size_t>(cur)], site);
                Int nk = index.at(next.cells);
                if (nk > cur) ++g.size;  // count each undirected edge once
                if (comp[static_cast<size_t>(nk)] == -1) {
                    comp[static_cast<size_t>(nk)] = components;
                    stack.push_back(nk);
                }
            }
        }
    }
    g.connected = components == 1;
    return g;
}

bool flip_connected(const Basis& basis, TilingType type, Int cap) {
    return flip_graph(basis, type, cap).connected;
}

}  // namespace lozenge
