#include <doctest.h>

#include <map>
#include <stdexcept>

#include "lozenge/typegeom.hpp"
#include "oracles.hpp"

using namespace lozenge;

namespace {

const Basis kIndex12{{2, 2}, {-2, 4}};

}  // namespace

TEST_CASE("triangle fixtures") {
    FundamentalTriangle tri = triangle(kIndex12);
    CHECK(tri.vl == Fingerprint{-6, -6});
    CHECK(tri.vd == Fingerprint{6, 0});
    CHECK(tri.vr == Fingerprint{0, 6});

    FundamentalTriangle id = triangle({{1, 0}, {0, 1}});
    CHECK(id.vl == Fingerprint{-1, -2});
    CHECK(id.vd == Fingerprint{2, 1});
    CHECK(id.vr == Fingerprint{-1, 1});
}

TEST_CASE("triangle membership") {
    FundamentalTriangle tri = triangle(kIndex12);
    for (Fingerprint v : {tri.vl, tri.vd, tri.vr}) {
        CHECK(triangle_contains(tri, v));
        CHECK_FALSE(triangle_interior(tri, v));
    }
    CHECK(triangle_contains(tri, {0, 0}));
    CHECK(triangle_interior(tri, {0, 0}));
    CHECK_FALSE(triangle_contains(tri, {7, 0}));
    CHECK_FALSE(triangle_contains(tri, {-6, 6}));
}

TEST_CASE("fingerprint-type conversion fixtures") {
    CHECK(fingerprint_to_type(kIndex12, {-6, -6}) == TilingType{12, 0, 0});
    CHECK(fingerprint_to_type(kIndex12, {6, 0}) == TilingType{0, 12, 0});
    CHECK(fingerprint_to_type(kIndex12, {0, 6}) == TilingType{0, 0, 12});
    CHECK(fingerprint_to_type(kIndex12, {0, 0}) == TilingType{4, 4, 4});
    CHECK(fingerprint_to_type(kIndex12, {-3, -3}) == TilingType{8, 2, 2});
    CHECK(fingerprint_to_type(kIndex12, {3, 0}) == TilingType{2, 8, 2});
    CHECK(fingerprint_to_type(kIndex12, {0, 3}) == TilingType{2, 2, 8});

    CHECK(type_to_fingerprint(kIndex12, {4, 4, 4}) == Fingerprint{0, 0});
    CHECK(type_to_fingerprint(kIndex12, {2, 2, 8}) == Fingerprint{0, 3});

    // Midpoint of the D-L edge.
    CHECK(type_to_fingerprint(kIndex12, {6, 6, 0}) == Fingerprint{0, -3});

    CHECK_THROWS_AS(fingerprint_to_type(kIndex12, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fingerprint_to_type(kIndex12, {9, 0}), std::invalid_argument);
    CHECK_THROWS_AS(type_to_fingerprint(kIndex12, {5, 7, 0}), std::invalid_argument);
    CHECK_THROWS_AS(type_to_fingerprint(kIndex12, {-1, 1, 12}), std::invalid_argument);
    CHECK_THROWS_AS(type_to_fingerprint(kIndex12, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("conversions are inverse on all realizable points") {
    for (const Basis& b : oracle::random_bases(25, 20, 77u)) {
        for (const auto& [fp, ty] : all_types(b)) {
            CHECK(ty.l >= 0);
            CHECK(ty.d >= 0);
            CHECK(ty.r >= 0);
            CHECK(ty.l + ty.d + ty.r == hermite_normal_form(b).index());
            CHECK(fingerprint_to_type(b, fp) == ty);
            CHECK(type_to_fingerprint(b, ty) == fp);
        }
    }
}

TEST_CASE("realizable type list fixtures") {
    auto list = all_types({{2, 0}, {0, 1}});
    REQUIRE(list.size() == 4);
    CHECK(list[0] == std::pair<Fingerprint, TilingType>{{-2, -2}, {2, 0, 0}});
    CHECK(list[1] == std::pair<Fingerprint, TilingType>{{-2, 1}, {0, 0, 2}});
    CHECK(list[2] == std::pair<Fingerprint, TilingType>{{1, 1}, {0, 1, 1}});
    CHECK(list[3] == std::pair<Fingerprint, TilingType>{{4, 1}, {0, 2, 0}});

    CHECK(all_types(kIndex12).size() == 10);
}

TEST_CASE("count summary fixtures") {
    CountSummary cs = count_summary(kIndex12);
    CHECK(cs.boundary_dl == 3);
    CHECK(cs.boundary_lr == 3);
    CHECK(cs.boundary_rd == 3);
    CHECK(cs.interior == 4);
    CHECK(cs.monomials == 10);

    CountSummary cs2 = count_summary({{2, 0}, {0, 1}});
    CHECK(cs2.boundary_dl == 2);
    CHECK(cs2.boundary_lr == 2);
    CHECK(cs2.boundary_rd == 3);
    CHECK(cs2.interior == 0);
    CHECK(cs2.monomials == 4);

    // The total always matches the actual number of realizable points.
    for (const Basis& b : oracle::random_bases(25, 20, 99u))
        CHECK(count_summary(b).monomials == static_cast<Int>(all_types(b).size()));
}

TEST_CASE("necklace and bracelet fixtures") {
    CHECK(necklace_count(1, 0) == 1);
    CHECK(necklace_count(2, 1) == 1);
    CHECK(necklace_count(4, 2) == 2);
    CHECK(necklace_count(6, 3) == 4);
    CHECK(necklace_total(2) == 3);
    CHECK(necklace_total(3) == 4);
    CHECK(necklace_total(16) == 4116);
    CHECK(bracelet_count(4, 2) == 2);
    CHECK(bracelet_count(6, 3) == 3);
    CHECK_THROWS_AS(necklace_count(0, 0), std::out_of_range);
    CHECK_THROWS_AS(necklace_count(3, 4), std::out_of_range);
    CHECK_THROWS_AS(necklace_count(3, -1), std::out_of_range);
    CHECK_THROWS_AS(necklace_count(61, 0), std::domain_error);
    CHECK_THROWS_AS(necklace_total(61), std::domain_error);
    CHECK_THROWS_AS(bracelet_count(61, 0), std::domain_error);
}

TEST_CASE("orbit counting matches explicit orbit enumeration") {
    for (Int d = 1; d <= 12; ++d) {
        long long total = 0;
        for (Int i = 0; i <= d; ++i) {
            CHECK(necklace_count(d, i) == oracle::necklaces_brute(d, i));
            CHECK(bracelet_count(d, i) == oracle::bracelets_brute(d, i));
            total += necklace_count(d, i);
        }
        CHECK(necklace_total(d) == total);
    }
}
