#include "lozenge/typegeom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lozenge {

namespace {

// Doubled signed area of the triangle (p, q, r).
Int d3(Fingerprint p, Fingerprint q, Fingerprint r) {
    return (q.d1 - p.d1) * (r.d2 - p.d2) - (r.d1 - p.d1) * (q.d2 - p.d2);
}

int sign(Int x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

Int abs_gcd(Int x, Int y) { return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y); }

}  // namespace

FundamentalTriangle triangle(const Basis& basis) {
    const Vec2& a = basis.a;
    const Vec2& b = basis.b;
    return {{-a.x - 2 * a.y, -b.x - 2 * b.y},
            {2 * a.x + a.y, 2 * b.x + b.y},
            {-a.x + a.y, -b.x + b.y}};
}

bool triangle_contains(const FundamentalTriangle& tri, Fingerprint p) {
    int s0 = sign(d3(tri.vl, tri.vd, tri.vr));
    return sign(d3(p, tri.vd, tri.vr)) * s0 >= 0 &&
           sign(d3(tri.vl, p, tri.vr)) * s0 >= 0 &&
           sign(d3(tri.vl, tri.vd, p)) * s0 >= 0;
}

bool triangle_interior(const FundamentalTriangle& tri, Fingerprint p) {
    int s0 = sign(d3(tri.vl, tri.vd, tri.vr));
    return sign(d3(p, tri.vd, tri.vr)) * s0 > 0 &&
           sign(d3(tri.vl, p, tri.vr)) * s0 > 0 &&
           sign(d3(tri.vl, tri.vd, p)) * s0 > 0;
}

TilingType fingerprint_to_type(const Basis& basis, Fingerprint p) {
    FundamentalTriangle tri = triangle(basis);
    if (mod_floor(p.d1 - tri.vd.d1, 3) != 0 || mod_floor(p.d2 - tri.vd.d2, 3) != 0)
        throw std::invalid_argument("fingerprint has wrong residue mod 3");
    if (!triangle_contains(tri, p))
        throw std::invalid_argument("fingerprint outside fundamental triangle");
    Int d0 = d3(tri.vl, tri.vd, tri.vr);
    Int n = basis.det() < 0 ? -basis.det() : basis.det();
    Int nums[3] = {n * d3(p, tri.vd, tri.vr), n * d3(tri.vl, p, tri.vr),
                   n * d3(tri.vl, tri.vd, p)};
    Int parts[3];
    for (int k = 0; k < 3; ++k) {
        if (nums[k] % d0 != 0)
            throw std::invalid_argument("fingerprint is not a realizable lattice point");
        parts[k] = nums[k] / d0;
    }
    return {parts[0], parts[1], parts[2]};
}

Fingerprint type_to_fingerprint(const Basis& basis, TilingType t) {
    Int n = basis.det() < 0 ? -basis.det() : basis.det();
    if (t.l + t.d + t.r != n || t.l < 0 || t.d < 0 || t.r < 0)
        throw std::invalid_argument("type components must be nonnegative and sum to the index");
    FundamentalTriangle tri = triangle(basis);
    Int num1 = t.l * tri.vl.d1 + t.d * tri.vd.d1 + t.r * tri.vr.d1;
    Int num2 = t.l * tri.vl.d2 + t.d * tri.vd.d2 + t.r * tri.vr.d2;
    if (num1 % n != 0 || num2 % n != 0)
        throw std::invalid_argument("unrealizable type");
    return {num1 / n, num2 / n};
}

std::vector<std::pair<Fingerprint, TilingType>> all_types(const Basis& basis) {
    FundamentalTriangle tri = triangle(basis);
    Int lo1 = std::min({tri.vl.d1, tri.vd.d1, tri.vr.d1});
    Int hi1 = std::max({tri.vl.d1, tri.vd.d1, tri.vr.d1});
    Int lo2 = std::min({tri.vl.d2, tri.vd.d2, tri.vr.d2});
    Int hi2 = std::max({tri.vl.d2, tri.vd.d2, tri.vr.d2});
    std::vector<std::pair<Fingerprint, TilingType>> out;
    for (Int x = lo1 + mod_floor(tri.vd.d1 - lo1, 3); x <= hi1; x += 3)
        for (Int y = lo2 + mod_floor(tri.vd.d2 - lo2, 3); y <= hi2; y += 3) {
            Fingerprint p{x, y};
            if (!triangle_contains(tri, p)) continue;
            out.emplace_back(p, fingerprint_to_type(basis, p));
        }
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
        return u.first < v.first;
    });
    return out;
}

CountSummary count_summary(const Basis& basis) {
    const Vec2& a = basis.a;
    const Vec2& b = basis.b;
    Int n = basis.det() < 0 ? -basis.det() : basis.det();
    if (n == 0) throw std::invalid_argument("rank-deficient lattice");
    Int g_rd = abs_gcd(a.x, b.x);
    Int g_lr = abs_gcd(a.y, b.y);
    Int g_dl = abs_gcd(a.x + a.y, b.x + b.y);
    Int sum = g_rd + g_lr + g_dl;
    CountSummary s;
    s.boundary_dl = g_dl + 1;
    s.boundary_lr = g_lr + 1;
    s.boundary_rd = g_rd + 1;
    s.interior = (n - sum) / 2 + 1;
    s.monomials = (n + sum) / 2 + 1;
    return s;
}

namespace {

constexpr Int kNecklaceCap = 60;

void check_necklace_args(Int d, Int i) {
    if (d < 1 || i < 0 || i > d) throw std::out_of_range("necklace arguments out of range");
    if (d > kNecklaceCap)
        throw std::domain_error("necklace cap (d <= " + std::to_string(kNecklaceCap) +
                                ") exceeded: d = " + std::to_string(d));
}

long long binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // n <= 60 keeps every intermediate value within long long.
    long long r = 1;
    for (Int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

Int euler_phi(Int n) {
    Int result = n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Number of binary words with i ones that are constant on each cycle of a
// permutation with the given cycle lengths.
long long fixed_words(const std::vector<Int>& cycles, Int i) {
    std::vector<long long> dp(static_cast<size_t>(i) + 1, 0);
    dp[0] = 1;
    for (Int len : cycles)
        for (Int w = i; w >= len; --w) dp[static_cast<size_t>(w)] += dp[static_cast<size_t>(w - len)];
    return dp[static_cast<size_t>(i)];
}

std::vector<Int> cycle_lengths(Int d, const std::vector<Int>& perm) {
    std::vector<char> seen(static_cast<size_t>(d), 0);
    std::vector<Int> out;
    for (Int s = 0; s < d; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        Int len = 0;
        for (Int x = s; !seen[static_cast<size_t>(x)]; x = perm[static_cast<size_t>(x)]) {
            seen[static_cast<size_t>(x)] = 1;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

}  // namespace

long long necklace_count(Int d, Int i) {
    check_necklace_args(d, i);
    Int g = std::gcd(i, d);
    if (g == 0) g = d;  // i == 0
    long long sum = 0;
    for (Int k = 1; k <= g; ++k) {
        if (g % k != 0 || d % k != 0) continue;
        sum += static_cast<long long>(euler_phi(k)) * binomial(d / k, i / k);
    }
    return sum / d;
}

long long necklace_total(Int d) {
    check_necklace_args(d, 0);
    long long sum = 0;
    for (Int k = 1; k <= d; ++k) {
        if (d % k != 0) continue;
        sum += static_cast<long long>(euler_phi(k)) * (1LL << (d / k));
    }
    return sum / d;
}

long long bracelet_count(Int d, Int i) {
    check_necklace_args(d, i);
    // Burnside over the dihedral group acting on d positions.
    long long total = 0;
    std::vector<Int> perm(static_cast<size_t>(d));
    for (Int k = 0; k < d; ++k) {
        for (Int j = 0; j < d; ++j) perm[static_cast<size_t>(j)] = (j + k) % d;
        total += fixed_words(cycle_lengths(d, perm), i);
    }
    for (Int s = 0; s < d; ++s) {
        for (Int j = 0; j < d; ++j) perm[static_cast<size_t>(j)] = mod_floor(s - j, d);
        total += fixed_words(cycle_lengths(d, perm), i);
    }
    return total / (2 * d);
}

}  // namespace lozenge
