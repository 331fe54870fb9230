#include "lozenge/kasteleyn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace lozenge {

PolyMatrix build_m(const HnfForm& h) {
    Int a = h.a, b = h.b, c = h.c;
    PolyMatrix m = PolyMatrix::zero(a * b);
    for (Int i = 0; i < b; ++i)
        for (Int j = 0; j < a; ++j) {
            Int r = i * a + j;
            m.at(r, r) += Poly::R();
            m.at(r, i * a + mod_floor(j - 1, a)) += Poly::L();
            if (i >= 1)
                m.at(r, (i - 1) * a + j) += Poly::D();
            else
                m.at(r, (b - 1) * a + (j + c) % a) += Poly::D();
        }
    return m;
}

PolyMatrix build_m_prime(const HnfForm& h, int s1, int s2) {
    Int a = h.a, b = h.b, c = h.c;
    int bsign = b % 2 == 0 ? 1 : -1;  // (-1)^b
    PolyMatrix m = PolyMatrix::zero(a * b);
    for (Int i = 0; i < b; ++i)
        for (Int j = 0; j < a; ++j) {
            Int r = i * a + j;
            m.at(r, r) += Poly::R();
            if (j >= 1)
                m.at(r, i * a + (j - 1)) -= Poly::L();
            else
                m.at(r, i * a + (a - 1)) += Poly::monomial({1, 0, 0}, s1);
            if (i >= 1) {
                m.at(r, (i - 1) * a + j) += Poly::D();
            } else {
                int w = j < a - c ? -bsign * s2 : bsign * s1 * s2;
                m.at(r, (b - 1) * a + (j + c) % a) += Poly::monomial({0, 1, 0}, w);
            }
        }
    return m;
}

namespace {

Poly combine_four(const Poly& g11, const Poly& g1m, const Poly& gm1, const Poly& gmm) {
    Poly combined = g11 + g1m + gm1 - gmm;
    Poly z;
    for (const auto& [mono, coeff] : combined.terms()) {
        if (coeff % 2 != 0)
            throw std::runtime_error("generating-function combination has an odd coefficient");
        BigInt half = coeff / 2;
        if (half < 0)
            throw std::runtime_error("generating-function combination has a negative coefficient");
        z.add_term(mono, half);
    }
    return z;
}

}  // namespace

Poly genfun(const HnfForm& h, Int cap) {
    if (h.index() > cap)
        throw std::domain_error("generating-function cap (index <= " + std::to_string(cap) +
                                ") exceeded: index = " + std::to_string(h.index()));
    return combine_four(determinant(build_m_prime(h, 1, 1)),
                        determinant(build_m_prime(h, 1, -1)),
                        determinant(build_m_prime(h, -1, 1)),
                        determinant(build_m_prime(h, -1, -1)));
}

Poly genfun(const Basis& basis, Int cap) { return genfun(hermite_normal_form(basis), cap); }

namespace {

// det(R*Id + D*W) for the L = 0 restriction of the signed matrix: W sends
// row (i,j) to (i-1,j), wrapping row 0 to (b-1,(j+c) mod a) with the
// crossing weight, so the determinant factors over the column residues
// modulo gcd(a,c).
Poly genfun_no_l_eval(const HnfForm& h, int s1, int s2) {
    Int a = h.a, b = h.b, c = h.c;
    Int d = std::gcd(a, c);
    Int len = (a / d) * b;
    int bsign = b % 2 == 0 ? 1 : -1;
    Poly prod = Poly::constant(1);
    for (Int j0 = 0; j0 < d; ++j0) {
        int w = 1;
        for (Int j = j0; j < a; j += d) w *= j < a - c ? -bsign * s2 : bsign * s1 * s2;
        // Cycle factor R^len + (-1)^(len+1) * w * D^len.
        int cyc = len % 2 == 0 ? -1 : 1;
        Poly factor = Poly::monomial({0, 0, static_cast<int>(len)});
        factor.add_term({0, static_cast<int>(len), 0}, cyc * w);
        prod *= factor;
    }
    return prod;
}

}  // namespace

Poly genfun_no_l(const HnfForm& h) {
    return combine_four(genfun_no_l_eval(h, 1, 1), genfun_no_l_eval(h, 1, -1),
                        genfun_no_l_eval(h, -1, 1), genfun_no_l_eval(h, -1, -1));
}

Poly genfun_no_l(const Basis& basis) { return genfun_no_l(hermite_normal_form(basis)); }

Poly type_census(const std::vector<Tiling>& tilings) {
    Poly z;
    for (const Tiling& t : tilings) {
        TilingType ty = type_of(t);
        z.add_term({static_cast<int>(ty.l), static_cast<int>(ty.d), static_cast<int>(ty.r)}, 1);
    }
    return z;
}

}  // namespace lozenge
