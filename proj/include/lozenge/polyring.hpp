#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lozenge/lattice.hpp"

namespace lozenge {

using BigInt = boost::multiprecision::cpp_int;

// Exponent triple of a monomial L^l * D^d * R^r.
struct Mono {
    int l = 0;
    int d = 0;
    int r = 0;

    friend constexpr auto operator<=>(const Mono&, const Mono&) = default;
};

// Sparse polynomial in Z[L,D,R]; canonical: no zero coefficients, terms
// ordered lexicographically by exponent triple.
class Poly {
public:
    Poly() = default;

    static Poly constant(const BigInt& c);
    static Poly monomial(Mono m, const BigInt& c = 1);
    static Poly L();
    static Poly D();
    static Poly R();

    const std::map<Mono, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(Mono m) const;
    void add_term(Mono m, const BigInt& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly&, const Poly&) = default;

    BigInt eval_ones() const;
    std::string text() const;

private:
    std::map<Mono, BigInt> terms_;
};

// Terms of p without any L factor.
Poly no_l_part(const Poly& p);

// Square matrix over the polynomial ring, row-major.
struct PolyMatrix {
    Int n = 0;
    std::vector<Poly> entries;

    static PolyMatrix zero(Int n) {
        return {n, std::vector<Poly>(static_cast<size_t>(n * n))};
    }
    Poly& at(Int r, Int c) { return entries[static_cast<size_t>(r * n + c)]; }
    const Poly& at(Int r, Int c) const { return entries[static_cast<size_t>(r * n + c)]; }
};

inline constexpr Int kDeterminantSizeCap = 20;
inline constexpr Int kDefaultPermanentCap = 14;

// Exact determinant / permanent by subset dynamic programming (2^n * n ring
// operations). The size guard throws std::domain_error naming the cap.
Poly determinant(const PolyMatrix& m);
Poly permanent(const PolyMatrix& m, Int cap = kDefaultPermanentCap);

}  // namespace lozenge
