#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lozenge/kasteleyn.hpp"
#include "lozenge/typegeom.hpp"
#include "oracles.hpp"

using namespace lozenge;

namespace {

Poly census_of(const HnfForm& h) { return type_census(enumerate_tilings(h)); }

}  // namespace

TEST_CASE("adjacency matrix fixtures") {
    PolyMatrix m1 = build_m({1, 1, 0});
    REQUIRE(m1.n == 1);
    CHECK(m1.at(0, 0) == Poly::L() + Poly::D() + Poly::R());

    PolyMatrix m2 = build_m({2, 1, 0});
    REQUIRE(m2.n == 2);
    CHECK(m2.at(0, 0) == Poly::R() + Poly::D());
    CHECK(m2.at(0, 1) == Poly::L());
    CHECK(m2.at(1, 0) == Poly::L());
    CHECK(m2.at(1, 1) == Poly::R() + Poly::D());

    // Row sums always equal L + D + R: each up-triangle has three neighbours.
    for (const HnfForm& h : all_hnf_forms(8)) {
        PolyMatrix m = build_m(h);
        for (Int r = 0; r < m.n; ++r) {
            Poly sum;
            for (Int c = 0; c < m.n; ++c) sum += m.at(r, c);
            CHECK(sum == Poly::L() + Poly::D() + Poly::R());
        }
    }
}

TEST_CASE("signed matrix fixtures") {
    PolyMatrix p = build_m_prime({1, 1, 0}, 1, 1);
    CHECK(p.at(0, 0) == Poly::R() + Poly::L() + Poly::D());
    PolyMatrix q = build_m_prime({1, 1, 0}, -1, 1);
    CHECK(q.at(0, 0) == Poly::R() - Poly::L() + Poly::D());
    PolyMatrix w = build_m_prime({1, 1, 0}, 1, -1);
    CHECK(w.at(0, 0) == Poly::R() + Poly::L() - Poly::D());

    // Up to the sign substitutions, the support matches the unsigned matrix.
    for (const HnfForm& h : all_hnf_forms(8))
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                PolyMatrix a = build_m(h);
                PolyMatrix b = build_m_prime(h, s1, s2);
                for (Int r = 0; r < a.n; ++r)
                    for (Int c = 0; c < a.n; ++c)
                        for (const auto& [mono, coeff] : a.at(r, c).terms()) {
                            BigInt sc = b.at(r, c).coeff(mono);
                            CHECK((sc == coeff || sc == -coeff));
                            CHECK(sc != 0);
                        }
            }
}

TEST_CASE("generating function fixtures") {
    CHECK(genfun(HnfForm{1, 1, 0}) == Poly::L() + Poly::D() + Poly::R());
    Poly two = genfun(HnfForm{2, 1, 0});
    CHECK(two == census_of({2, 1, 0}));
    CHECK(two.coeff({2, 0, 0}) == 1);
    CHECK(two.coeff({0, 1, 1}) == 2);
    CHECK(two.eval_ones() == 5);
    CHECK(genfun(HnfForm{1, 2, 0}) == census_of({1, 2, 0}));
    CHECK_THROWS_AS(genfun(HnfForm{5, 4, 0}), std::domain_error);
}

TEST_CASE("generating function equals permanent and census") {
    for (const HnfForm& h : all_hnf_forms(8)) {
        Poly z = genfun(h);
        CHECK(z == permanent(build_m(h)));
        CHECK(z == census_of(h));
    }
}

TEST_CASE("generating function is basis invariant") {
    std::mt19937 rng(171717u);
    for (const Basis& b : oracle::random_bases(8, 12, 31337u)) {
        Poly z = genfun(b);
        for (int k = 0; k < 3; ++k) {
            oracle::Unimodular u = oracle::random_unimodular(rng);
            CHECK(genfun(oracle::apply_unimodular(b, u)) == z);
        }
    }
}

TEST_CASE("closed form for tilings without left lozenges") {
    CHECK(genfun_no_l(HnfForm{1, 1, 0}) == Poly::D() + Poly::R());
    Poly p2 = genfun_no_l(HnfForm{2, 1, 0});
    CHECK(p2 == (Poly::D() + Poly::R()) * (Poly::D() + Poly::R()));
    CHECK(genfun_no_l(HnfForm{1, 2, 0}) == Poly::D() * Poly::D() + Poly::R() * Poly::R());
    Poly p4 = genfun_no_l(HnfForm{2, 2, 1});
    CHECK(p4 == Poly::monomial({0, 4, 0}) + Poly::monomial({0, 0, 4}));

    for (const HnfForm& h : all_hnf_forms(9)) CHECK(genfun_no_l(h) == no_l_part(genfun(h)));

    // Far beyond the enumeration cap: binomial coefficients on the edge.
    HnfForm big{10, 10, 5};  // index 100, gcd(a,c) = 5
    Poly edge = genfun_no_l(big);
    CHECK(edge.eval_ones() == 32);
    for (Int i = 0; i <= 5; ++i) {
        long long want = 1;
        for (Int t = 1; t <= i; ++t) want = want * (5 - i + t) / t;
        CHECK(edge.coeff({0, static_cast<int>(20 * i), static_cast<int>(100 - 20 * i)}) == want);
    }
}

TEST_CASE("census of an explicit list") {
    Poly c = type_census(enumerate_tilings({2, 1, 0}));
    CHECK(c.coeff({2, 0, 0}) == 1);
    CHECK(c.coeff({0, 2, 0}) == 1);
    CHECK(c.coeff({0, 0, 2}) == 1);
    CHECK(c.coeff({0, 1, 1}) == 2);
    CHECK(type_census(std::vector<Tiling>{}).is_zero());
}
