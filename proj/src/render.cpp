#include "lozenge/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lozenge {

namespace {

constexpr Vec2 kU{1, 0};
constexpr Vec2 kV{0, 1};

struct Pt {
    double x, y;
};

Pt embed(Vec2 p, double unit) {
    return {(p.x + 0.5 * p.y) * unit, -p.y * (std::sqrt(3.0) / 2.0) * unit};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::array<Vec2, 4> lozenge_corners(Vec2 x, Orient o) {
    switch (o) {
        case Orient::L: return {x + kU, x, x + kV - kU, x + kV};
        case Orient::D: return {x + kV, x, x + kU - kV, x + kU};
        default: return {x, x + kU, x + kU + kV, x + kV};
    }
}

}  // namespace

std::string render_svg(const Tiling& t, const RenderOptions& opts) {
    if (opts.reps < 1) throw std::invalid_argument("repetitions must be positive");
    const HnfForm& h = t.hnf;
    if (!is_valid(t)) throw std::invalid_argument("cannot render an invalid tiling");

    struct Quad {
        std::array<Pt, 4> pts;
        Orient o;
    };
    std::vector<Quad> quads;
    std::vector<std::array<Pt, 4>> outlines;
    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    auto touch = [&](Pt p) {
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
    };

    for (Int mrep = 0; mrep < opts.reps; ++mrep)
        for (Int nrep = 0; nrep < opts.reps; ++nrep) {
            Vec2 off = mrep * h.gen_a() + nrep * h.gen_b();
            for (Int r = 0; r < h.index(); ++r) {
                Vec2 x = cell_point(cell_from_linear(h, r)) + off;
                Orient o = t.cells[static_cast<size_t>(r)];
                Quad q{{}, o};
                auto corners = lozenge_corners(x, o);
                for (int k = 0; k < 4; ++k) {
                    q.pts[static_cast<size_t>(k)] = embed(corners[static_cast<size_t>(k)], opts.unit);
                    touch(q.pts[static_cast<size_t>(k)]);
                }
                quads.push_back(q);
            }
            if (opts.outline) {
                std::array<Vec2, 4> par{off, off + h.gen_a(), off + h.gen_a() + h.gen_b(),
                                        off + h.gen_b()};
                std::array<Pt, 4> ppts;
                for (int k = 0; k < 4; ++k) {
                    ppts[static_cast<size_t>(k)] = embed(par[static_cast<size_t>(k)], opts.unit);
                    touch(ppts[static_cast<size_t>(k)]);
                }
                outlines.push_back(ppts);
            }
        }

    double margin = opts.unit * 0.5;
    double ox = lo_x - margin, oy = lo_y - margin;
    double w = hi_x - lo_x + 2 * margin, ht = hi_y - lo_y + 2 * margin;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(ht) + "\" viewBox=\"" + fmt(ox) + " " + fmt(oy) + " " + fmt(w) +
           " " + fmt(ht) + "\">\n";
    for (const Quad& q : quads) {
        const std::string& fill = q.o == Orient::L   ? opts.color_l
                                  : q.o == Orient::D ? opts.color_d
                                                     : opts.color_r;
        svg += "<polygon points=\"";
        for (int k = 0; k < 4; ++k) {
            if (k) svg += " ";
            svg += fmt(q.pts[static_cast<size_t>(k)].x) + "," + fmt(q.pts[static_cast<size_t>(k)].y);
        }
        svg += "\" fill=\"" + fill + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    for (const auto& ppts : outlines) {
        svg += "<path d=\"";
        for (int k = 0; k < 4; ++k) {
            svg += (k == 0 ? "M" : "L");
            svg += fmt(ppts[static_cast<size_t>(k)].x) + " " + fmt(ppts[static_cast<size_t>(k)].y);
        }
        svg += "Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace lozenge
