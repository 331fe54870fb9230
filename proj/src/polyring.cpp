#include "lozenge/polyring.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace lozenge {

Poly Poly::constant(const BigInt& c) { return monomial({0, 0, 0}, c); }

Poly Poly::monomial(Mono m, const BigInt& c) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

Poly Poly::L() { return monomial({1, 0, 0}); }
Poly Poly::D() { return monomial({0, 1, 0}); }
Poly Poly::R() { return monomial({0, 0, 1}); }

BigInt Poly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly::add_term(Mono m, const BigInt& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma.l + mb.l, ma.d + mb.d, ma.r + mb.r}, ca * cb);
    return out;
}

BigInt Poly::eval_ones() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::string Poly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        auto append_var = [&vars](const char* name, int e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        append_var("L", m.l);
        append_var("D", m.d);
        append_var("R", m.r);
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += vars;
        }
    }
    return out;
}

Poly no_l_part(const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms())
        if (m.l == 0) out.add_term(m, c);
    return out;
}

namespace {

// Shared subset-DP engine: f[mask] = det/perm of the submatrix formed by the
// first popcount(mask) rows and the columns in mask.
Poly subset_dp(const PolyMatrix& m, bool use_signs) {
    Int n = m.n;
    if (n == 0) return Poly::constant(1);
    std::vector<Poly> f(size_t{1} << n);
    f[0] = Poly::constant(1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Int row = std::popcount(mask) - 1;
        Poly acc;
        int pos = 0;
        for (Int c = 0; c < n; ++c) {
            if (!(mask >> c & 1)) continue;
            const Poly& entry = m.at(row, c);
            if (!entry.is_zero()) {
                Poly term = f[mask ^ (std::uint64_t{1} << c)] * entry;
                if (use_signs && ((row + pos) & 1))
                    acc -= term;
                else
                    acc += term;
            }
            ++pos;
        }
        f[mask] = std::move(acc);
    }
    return f[(std::uint64_t{1} << n) - 1];
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
    if (m.n > kDeterminantSizeCap)
        throw std::domain_error("determinant size cap (n <= " +
                                std::to_string(kDeterminantSizeCap) +
                                ") exceeded: n = " + std::to_string(m.n));
    return subset_dp(m, true);
}

Poly permanent(const PolyMatrix& m, Int cap) {
    Int limit = cap < kDeterminantSizeCap ? cap : kDeterminantSizeCap;
    if (m.n > limit)
        throw std::domain_error("permanent cap (n <= " + std::to_string(limit) +
                                ") exceeded: n = " + std::to_string(m.n));
    return subset_dp(m, false);
}

}  // namespace lozenge
