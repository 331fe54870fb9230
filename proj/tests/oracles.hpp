#pragma once

// Brute-force reference implementations, kept deliberately independent of the
// library's algorithms: permutation-sum determinants/permanents, exhaustive
// 3^n tiling search, bitmask necklace/bracelet orbit counting.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lozenge/lattice.hpp"
#include "lozenge/polyring.hpp"
#include "lozenge/tiling.hpp"

namespace oracle {

using lozenge::Basis;
using lozenge::HnfForm;
using lozenge::Int;
using lozenge::Poly;
using lozenge::PolyMatrix;

inline Poly permutation_sum(const PolyMatrix& m, bool with_signs) {
    std::vector<Int> perm(static_cast<size_t>(m.n));
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inversions = 0;
        for (Int i = 0; i < m.n; ++i)
            for (Int j = i + 1; j < m.n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        Poly term = Poly::constant(with_signs && (inversions % 2) ? -1 : 1);
        for (Int i = 0; i < m.n; ++i) term *= m.at(i, perm[static_cast<size_t>(i)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Poly det_brute(const PolyMatrix& m) { return permutation_sum(m, true); }
inline Poly perm_brute(const PolyMatrix& m) { return permutation_sum(m, false); }

// All valid cell assignments by exhaustive base-3 search. The matching axiom
// is checked directly: each cell x satisfies exactly one of tau(x) = R,
// tau(x+u) = L, tau(x+v) = D.
inline std::vector<std::string> tilings_brute(const HnfForm& h) {
    using lozenge::Orient;
    const Int n = h.index();
    const char letters[3] = {'L', 'D', 'R'};
    std::vector<int> word(static_cast<size_t>(n), 0);
    std::vector<std::string> out;
    for (;;) {
        auto at = [&](lozenge::Vec2 p) {
            return word[static_cast<size_t>(cell_linear(h, reduce(h, p)))];
        };
        bool ok = true;
        for (Int r = 0; r < n && ok; ++r) {
            lozenge::Vec2 x = cell_point(cell_from_linear(h, r));
            int hits = (at(x) == 2) + (at(x + lozenge::Vec2{1, 0}) == 0) +
                       (at(x + lozenge::Vec2{0, 1}) == 1);
            ok = hits == 1;
        }
        if (ok) {
            std::string s;
            for (int digit : word) s += letters[digit];
            out.push_back(s);
        }
        Int pos = n - 1;
        while (pos >= 0 && word[static_cast<size_t>(pos)] == 2) word[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++word[static_cast<size_t>(pos)];
    }
    return out;
}

// Orbit counts of binary words under rotation (necklaces) and under rotation
// plus reflection (bracelets), by canonical-representative enumeration.
inline long long necklaces_brute(Int d, Int i) {
    auto min_rotation = [d](unsigned w) {
        unsigned best = w;
        const unsigned mask = (1u << d) - 1;
        for (Int k = 1; k < d; ++k) best = std::min(best, ((w >> k) | (w << (d - k))) & mask);
        return best;
    };
    long long count = 0;
    for (unsigned w = 0; w < (1u << d); ++w)
        if (__builtin_popcount(w) == i && min_rotation(w) == w) ++count;
    return count;
}

inline long long bracelets_brute(Int d, Int i) {
    const unsigned mask = (1u << d) - 1;
    auto min_rotation = [d, mask](unsigned w) {
        unsigned best = w;
        for (Int k = 1; k < d; ++k) best = std::min(best, ((w >> k) | (w << (d - k))) & mask);
        return best;
    };
    auto reversed = [d](unsigned w) {
        unsigned r = 0;
        for (Int k = 0; k < d; ++k)
            if (w & (1u << k)) r |= 1u << (d - 1 - k);
        return r;
    };
    long long count = 0;
    for (unsigned w = 0; w < (1u << d); ++w)
        if (__builtin_popcount(w) == static_cast<int>(i) &&
            std::min(min_rotation(w), min_rotation(reversed(w))) == w)
            ++count;
    return count;
}

// Deterministic random full-rank bases with entries in [-6,6] and
// 1 <= |det| <= max_det.
inline std::vector<Basis> random_bases(int count, Int max_det, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Int> entry(-6, 6);
    std::vector<Basis> out;
    while (static_cast<int>(out.size()) < count) {
        Basis b{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
        Int det = b.det();
        if (det < 0) det = -det;
        if (det >= 1 && det <= max_det) out.push_back(b);
    }
    return out;
}

// Random GL2(Z) matrix (det = +-1) as a product of elementary column moves.
struct Unimodular {
    Int u11 = 1, u12 = 0, u21 = 0, u22 = 1;
};

inline Unimodular random_unimodular(std::mt19937& rng, int moves = 6) {
    Unimodular u;
    std::uniform_int_distribution<Int> shear(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int k = 0; k < moves; ++k) {
        switch (kind(rng)) {
            case 0: {  // col1 += t * col2
                Int t = shear(rng);
                u.u11 += t * u.u12;
                u.u21 += t * u.u22;
                break;
            }
            case 1: {  // col2 += t * col1
                Int t = shear(rng);
                u.u12 += t * u.u11;
                u.u22 += t * u.u21;
                break;
            }
            default: {  // swap columns
                std::swap(u.u11, u.u12);
                std::swap(u.u21, u.u22);
                break;
            }
        }
    }
    return u;
}

// B * U: columns of the result are integer combinations of the columns of B.
inline Basis apply_unimodular(const Basis& b, const Unimodular& u) {
    return {{u.u11 * b.a.x + u.u21 * b.b.x, u.u11 * b.a.y + u.u21 * b.b.y},
            {u.u12 * b.a.x + u.u22 * b.b.x, u.u12 * b.a.y + u.u22 * b.b.y}};
}

}  // namespace oracle
