#pragma once

// Counting and enumerating Hurwitz quaternions by norm.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "gpfree/hurwitz.hpp"
#include "gpfree/rational.hpp"

namespace gpfree {

/// Sum of the odd divisors of n, by trial division.
inline std::int64_t odd_divisor_sum(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("odd_divisor_sum: n must be positive");
    while (n % 2 == 0) n /= 2;
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            sum += d;
            if (d != n / d) sum += n / d;
        }
    }
    return sum;
}

/// Number of Hurwitz quaternions of norm exactly n: 24 * (sum of odd divisors of n).
inline std::int64_t count_norm_exact(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("count_norm_exact: norm must be >= 1");
    return 24 * odd_divisor_sum(n);
}

/// Integer square root, floor.
inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// All Hurwitz quaternions of norm n, in lexicographic doubled-coordinate order.
inline std::vector<HurwitzInt> enumerate_norm(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("enumerate_norm: norm must be >= 1");
    const std::int64_t target = 4 * n;
    const std::int64_t bound = isqrt(target);
    std::vector<HurwitzInt> out;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        const std::int64_t ra = target - a * a;
        const std::int64_t bb = isqrt(ra);
        for (std::int64_t b = -bb; b <= bb; ++b) {
            if ((a ^ b) & 1) continue;
            const std::int64_t rb = ra - b * b;
            const std::int64_t cb = isqrt(rb);
            for (std::int64_t c = -cb; c <= cb; ++c) {
                if ((a ^ c) & 1) continue;
                const std::int64_t rc = rb - c * c;
                const std::int64_t d = isqrt(rc);
                if (d * d != rc || ((a ^ d) & 1)) continue;
                if (d == 0) {
                    out.push_back(HurwitzInt::from_doubled(a, b, c, 0));
                } else {
                    out.push_back(HurwitzInt::from_doubled(a, b, c, -d));
                    out.push_back(HurwitzInt::from_doubled(a, b, c, d));
                }
            }
        }
    }
    return out;
}

/// Exact S(M): the number of nonzero Hurwitz quaternions with norm <= M.
///
/// Swapping the divisor sum gives S(M) = 24 * sum_{d <= M} ceil(floor(M/d) / 2)^2,
/// since the odd numbers up to m sum to ceil(m/2)^2.
inline std::int64_t count_upto(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("count_upto: bound must be >= 1");
    std::int64_t total = 0;
    for (std::int64_t d = 1; d <= m; ++d) {
        const std::int64_t odd_count = (m / d + 1) / 2;
        total += odd_count * odd_count;
    }
    return 24 * total;
}

/// Per-norm and cumulative counts for norms 1..max_norm.
struct NormCount {
    std::int64_t max_norm = 0;
    std::vector<std::int64_t> per_norm;    // per_norm[N], index 0 unused
    std::vector<std::int64_t> cumulative;  // cumulative[M] = S(M), cumulative[0] = 0

    std::int64_t count(std::int64_t n) const { return per_norm.at(static_cast<std::size_t>(n)); }
    std::int64_t upto(std::int64_t m) const { return cumulative.at(static_cast<std::size_t>(m)); }

    void write_csv(std::ostream& os) const {
        os << "norm,count,cumulative\n";
        for (std::int64_t n = 1; n <= max_norm; ++n)
            os << n << ',' << per_norm[static_cast<std::size_t>(n)] << ','
               << cumulative[static_cast<std::size_t>(n)] << '\n';
    }
};

/// Builds the table with an odd-divisor sieve, O(M log M).
inline NormCount build_norm_count(std::int64_t max_norm) {
    if (max_norm < 1) throw std::invalid_argument("build_norm_count: bound must be >= 1");
    const auto size = static_cast<std::size_t>(max_norm) + 1;
    std::vector<std::int64_t> sigma(size, 0);
    for (std::int64_t d = 1; d <= max_norm; d += 2)
        for (std::int64_t k = d; k <= max_norm; k += d) sigma[static_cast<std::size_t>(k)] += d;

    NormCount nc;
    nc.max_norm = max_norm;
    nc.per_norm.assign(size, 0);
    nc.cumulative.assign(size, 0);
    for (std::size_t n = 1; n < size; ++n) {
        nc.per_norm[n] = 24 * sigma[n];
        nc.cumulative[n] = nc.cumulative[n - 1] + nc.per_norm[n];
    }
    return nc;
}

/// Asymptotic proportion of Hurwitz quaternions whose norm is divisible by
/// p^n but not p^(n+1).
inline Rational proportion_exact_ppower(std::int64_t p, unsigned n) {
    if (!is_rational_prime(p)) throw std::invalid_argument("proportion_exact_ppower: p must be prime");
    if (p == 2) return Rational(BigInt(3), 4 * ipow(BigInt(2), 2 * n));
    const BigInt bp(p);
    const BigInt num = ipow(bp, n + 3) - ipow(bp, n + 2) - bp * bp + 1;
    const BigInt den = (bp - 1) * bp * bp * ipow(bp, 2 * n);
    return Rational(num, den);
}

/// Closed form of sum_{k >= n} proportion_exact_ppower(p, k), from the
/// geometric series.
inline Rational proportion_tail(std::int64_t p, unsigned n) {
    if (!is_rational_prime(p)) throw std::invalid_argument("proportion_tail: p must be prime");
    if (p == 2) return Rational(BigInt(1), ipow(BigInt(4), n));
    // Each term is p^-k - (p+1) p^-(2k+2).
    const BigInt bp(p);
    return Rational(bp, (bp - 1) * ipow(bp, n)) - Rational(BigInt(1), (bp - 1) * ipow(bp, 2 * n));
}

/// p-adic valuation of n > 0.
inline unsigned valuation(std::int64_t n, std::int64_t p) {
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Fraction of quaternions with norm <= M whose norm has p-adic valuation exactly n.
inline double empirical_ppower_fraction(const NormCount& nc, std::int64_t p, unsigned n) {
    std::int64_t hits = 0;
    for (std::int64_t k = 1; k <= nc.max_norm; ++k)
        if (valuation(k, p) == n) hits += nc.count(k);
    return static_cast<double>(hits) / static_cast<double>(nc.upto(nc.max_norm));
}

}  // namespace gpfree
