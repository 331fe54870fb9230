#pragma once

#include <string>

#include "lozenge/tiling.hpp"

namespace lozenge {

struct RenderOptions {
    Int reps = 3;          // repetitions of the fundamental domain per axis
    double unit = 24.0;    // edge length in pixels
    bool outline = true;   // draw the fundamental-domain parallelograms
    std::string color_l = "#8da0cb";
    std::string color_d = "#fc8d62";
    std::string color_r = "#66c2a5";
};

// Deterministic SVG: one <polygon> per lozenge, reps x reps fundamental
// domains, plane embedding u = (1,0), v = (1/2, sqrt(3)/2), y axis flipped.
std::string render_svg(const Tiling& t, const RenderOptions& opts = {});

}  // namespace lozenge
