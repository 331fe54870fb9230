#pragma once

#include <string>
#include <vector>

#include "lozenge/lattice.hpp"

namespace lozenge {

// Lozenge orientation: which neighbouring down-triangle the up-triangle at a
// point is paired with. Order fixes all sorting/comparison of tilings.
enum class Orient : int { L = 0, D = 1, R = 2 };

char orient_char(Orient o);
Orient orient_from_char(char ch);

// Displacement from the up-triangle at x to the down-triangle it covers.
constexpr Vec2 xi(Orient o) {
    switch (o) {
        case Orient::L: return {-1, 1};
        case Orient::D: return {0, 0};
        default: return {0, 1};
    }
}

// Multiplicity vector (#L, #D, #R) of a tiling of the fundamental domain.
struct TilingType {
    Int l = 0;
    Int d = 0;
    Int r = 0;

    friend constexpr auto operator<=>(const TilingType&, const TilingType&) = default;
};

// Periodic lozenge tiling: one orientation per fundamental-domain cell,
// stored in linear cell order r = i*a + j.
struct Tiling {
    HnfForm hnf;
    std::vector<Orient> cells;

    Orient at(Vec2 p) const { return cells[cell_linear(hnf, reduce(hnf, p))]; }
    std::string cells_string() const;
    friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

// Matching axiom: every cell x satisfies exactly one of
// tau(x)=R, tau(x+u)=L, tau(x+v)=D.
// Throws std::invalid_argument if cells.size() != index.
bool is_valid(const Tiling& t);

Tiling constant_tiling(const HnfForm& h, Orient o);
Tiling tiling_from_cells_string(const HnfForm& h, const std::string& s);

TilingType type_of(const Tiling& t);

inline constexpr Int kDefaultEnumerationCap = 16;

// All valid tilings for the lattice, in lexicographic cell order (L < D < R).
// Throws std::domain_error naming the cap when index > cap.
std::vector<Tiling> enumerate_tilings(const HnfForm& h, Int cap = kDefaultEnumerationCap);

// All valid tilings using no L lozenge; works at any index.
std::vector<Tiling> no_l_tilings(const HnfForm& h);

}  // namespace lozenge
