#include <doctest.h>

#include <set>
#include <stdexcept>

#include "lozenge/lattice.hpp"
#include "oracles.hpp"

using namespace lozenge;

TEST_CASE("floor division rounds toward minus infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(mod_floor(-7, 2) == 1);
    CHECK(mod_floor(7, -2) == -1);
    CHECK(mod_floor(-6, 3) == 0);
}

TEST_CASE("canonical form fixtures") {
    CHECK(hermite_normal_form({{1, 0}, {0, 1}}) == HnfForm{1, 1, 0});
    CHECK(hermite_normal_form({{2, 0}, {0, 1}}) == HnfForm{2, 1, 0});
    CHECK(hermite_normal_form({{2, 2}, {-2, 4}}) == HnfForm{6, 2, 2});
    // Column order and signs do not change the lattice.
    CHECK(hermite_normal_form({{-2, 4}, {2, 2}}) == HnfForm{6, 2, 2});
    CHECK(hermite_normal_form({{-2, -2}, {2, -4}}) == HnfForm{6, 2, 2});
    CHECK(hermite_normal_form({{0, 3}, {2, 0}}) == HnfForm{2, 3, 0});
    CHECK_THROWS_AS(hermite_normal_form({{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(hermite_normal_form({{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("canonical form preserves the lattice both ways") {
    for (const Basis& b : oracle::random_bases(50, 40, 20240901u)) {
        HnfForm h = hermite_normal_form(b);
        CHECK(h.index() == (b.det() < 0 ? -b.det() : b.det()));
        CHECK(h.c >= 0);
        CHECK(h.c < h.a);
        // Each generator of one description lies in the other lattice.
        CHECK(lattice_contains(h, b.a));
        CHECK(lattice_contains(h, b.b));
        CHECK_NOTHROW(lattice_coords(b, h.gen_a()));
        CHECK_NOTHROW(lattice_coords(b, h.gen_b()));
    }
}

TEST_CASE("reduce and decompose") {
    CHECK(reduce({2, 1, 0}, {-1, 0}) == Cell{1, 0});
    CHECK(reduce({6, 2, 2}, {0, 2}) == Cell{4, 0});
    CHECK(reduce({1, 1, 0}, {7, -5}) == Cell{0, 0});

    HnfForm h{3, 4, 2};
    for (Int x = -9; x <= 9; x += 3)
        for (Int y = -8; y <= 8; y += 2) {
            Decomposition d = decompose(h, {x, y});
            CHECK(d.cell.j >= 0);
            CHECK(d.cell.j < h.a);
            CHECK(d.cell.i >= 0);
            CHECK(d.cell.i < h.b);
            Vec2 back = cell_point(d.cell) + d.m * h.gen_a() + d.n * h.gen_b();
            CHECK(back == Vec2{x, y});
        }
}

TEST_CASE("cell linear index round trip") {
    HnfForm h{4, 3, 1};
    for (Int r = 0; r < h.index(); ++r) {
        Cell c = cell_from_linear(h, r);
        CHECK(cell_linear(h, c) == r);
    }
    CHECK(cell_linear(h, {2, 1}) == 6);
}

TEST_CASE("lattice membership and coordinates") {
    HnfForm h{6, 2, 2};
    CHECK(lattice_contains(h, {6, 0}));
    CHECK(lattice_contains(h, {2, 2}));   // (2,2) = (2,2) basis column
    CHECK(lattice_contains(h, {-2, 4}));
    CHECK_FALSE(lattice_contains(h, {1, 0}));
    CHECK_FALSE(lattice_contains(h, {2, 1}));

    Basis b{{2, 2}, {-2, 4}};
    auto [m, n] = lattice_coords(b, {6, 0});
    CHECK(m * b.a + n * b.b == Vec2{6, 0});
    CHECK_THROWS_AS(lattice_coords(b, {1, 0}), std::invalid_argument);
}

TEST_CASE("all canonical forms up to an index") {
    std::vector<HnfForm> forms = all_hnf_forms(9);
    CHECK(forms.size() == 69);  // sum over n <= 9 of sigma(n)
    CHECK(forms.front() == HnfForm{1, 1, 0});
    std::set<HnfForm> seen;
    Int last_index = 0;
    for (const HnfForm& h : forms) {
        CHECK(h.index() <= 9);
        CHECK(h.c >= 0);
        CHECK(h.c < h.a);
        CHECK(h.index() >= last_index);
        last_index = h.index();
        CHECK(seen.insert(h).second);
        CHECK(hermite_normal_form({h.gen_a(), h.gen_b()}) == h);
    }
}
