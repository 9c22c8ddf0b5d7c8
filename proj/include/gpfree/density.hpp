#pragma once

// Density bounds for 3-term GP-free subsets of the Hurwitz order, the
// Rankin-set density product, and membership in A3*(Z) and G3*(Z).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpfree/enumeration.hpp"
#include "gpfree/factorization.hpp"
#include "gpfree/hurwitz.hpp"
#include "gpfree/rational.hpp"
#include "gpfree/ternary.hpp"

namespace gpfree {

// ---------------------------------------------------------------------------
// Annuli lower bound

/// Union of norm intervals (M/lo, M/hi] taken at scales N_1 = 1,
/// N_i = base^2 * N_{i-1}^2.
struct AnnuliSpec {
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
    std::int64_t scale_base = 48;

    static AnnuliSpec standard() {
        return AnnuliSpec{{{48, 45}, {40, 36}, {32, 27}, {24, 12}, {9, 8}, {4, 1}}, 48};
    }

    /// True iff (M/lo, M/hi] holds n for some listed interval.
    bool in_block(std::int64_t m, std::int64_t n) const {
        for (const auto& [lo, hi] : intervals)
            if (m < lo * n && hi * n <= m) return true;
        return false;
    }

    /// Scales N_i whose block reaches into [1, max_norm].
    std::vector<std::int64_t> scales_upto(std::int64_t max_norm) const {
        std::vector<std::int64_t> out;
        std::int64_t lowest_divisor = 1;
        for (const auto& iv : intervals) lowest_divisor = std::max(lowest_divisor, iv.first);
        for (std::int64_t m = 1;;) {
            if (m / lowest_divisor >= max_norm) break;
            out.push_back(m);
            const std::int64_t factor = scale_base * scale_base * m;
            if (m > std::numeric_limits<std::int64_t>::max() / factor) break;
            m *= factor;
        }
        return out;
    }

    /// Intervals pairwise disjoint, lo > hi >= 1.
    bool well_formed() const {
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            const auto [lo, hi] = intervals[i];
            if (hi < 1 || lo <= hi) return false;
            for (std::size_t j = i + 1; j < intervals.size(); ++j) {
                const auto [lo2, hi2] = intervals[j];
                // (1/lo, 1/hi] and (1/lo2, 1/hi2] overlap iff lo2 > hi and lo > hi2.
                if (lo2 > hi && lo > hi2) return false;
            }
        }
        return true;
    }
};

/// Membership table over 0..max_norm of the norms covered by every block.
inline std::vector<bool> annuli_norm_set(std::int64_t max_norm, const AnnuliSpec& spec = AnnuliSpec::standard()) {
    std::vector<bool> in_set(static_cast<std::size_t>(max_norm) + 1, false);
    for (auto m : spec.scales_upto(max_norm))
        for (std::int64_t n = 1; n <= max_norm; ++n)
            if (spec.in_block(m, n)) in_set[static_cast<std::size_t>(n)] = true;
    return in_set;
}

/// A norm triple (n, nk, nk^2), k >= 2, inside a set, or nullopt if none exists.
inline std::optional<std::pair<std::int64_t, std::int64_t>> find_norm_progression(const std::vector<bool>& in_set) {
    const auto max = static_cast<std::int64_t>(in_set.size()) - 1;
    for (std::int64_t n = 1; n <= max; ++n) {
        if (!in_set[static_cast<std::size_t>(n)]) continue;
        for (std::int64_t k = 2; n * k * k <= max; ++k)
            if (in_set[static_cast<std::size_t>(n * k)] && in_set[static_cast<std::size_t>(n * k * k)])
                return std::make_pair(n, k);
    }
    return std::nullopt;
}

inline bool verify_annuli_gp_free(std::int64_t max_norm, const AnnuliSpec& spec = AnnuliSpec::standard()) {
    if (max_norm < 1) throw std::invalid_argument("verify_annuli_gp_free: max_norm must be positive");
    return !find_norm_progression(annuli_norm_set(max_norm, spec)).has_value();
}

/// Limit of |T_M| / |S(M)|: each interval (M/lo, M/hi] contributes 1/hi^2 - 1/lo^2.
inline Rational lower_bound_density(const AnnuliSpec& spec = AnnuliSpec::standard()) {
    Rational total = 0;
    for (const auto& [lo, hi] : spec.intervals)
        total += Rational(1, BigInt(hi) * hi) - Rational(1, BigInt(lo) * lo);
    return total;
}

/// 1 - (3/4) sum_{i < terms} 2^-(4+6i); nullopt terms means the full series, 20/21.
inline Rational upper_bound_density(std::optional<unsigned> terms) {
    if (!terms) return Rational(20, 21);
    if (*terms < 1) throw std::invalid_argument("upper_bound_density: terms must be >= 1");
    Rational series = 0;
    for (unsigned i = 0; i < *terms; ++i) series += Rational(BigInt(1), ipow(BigInt(2), 4 + 6 * i));
    return 1 - Rational(3, 4) * series;
}

// ---------------------------------------------------------------------------
// A3*(Z) and G3*(Z)

/// No digit 2 in base 3.
inline bool a3star_contains(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("a3star_contains: n must be non-negative");
    for (; n > 0; n /= 3)
        if (n % 3 == 2) return false;
    return true;
}

/// Every prime exponent of n lies in A3*(Z).
inline bool g3star_contains(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("g3star_contains: n must be positive");
    for (std::int64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (!a3star_contains(e)) return false;
    }
    return true;  // leftover n is 1 or a prime to the first power
}

inline bool q_ran_contains(const HurwitzInt& q) {
    if (q.is_zero()) throw std::invalid_argument("q_ran_contains: zero quaternion");
    return g3star_contains(norm(q));
}

// ---------------------------------------------------------------------------
// Rankin product

enum class Direction { under, over, exact };

inline const char* to_string(Direction d) {
    switch (d) {
        case Direction::under: return "under";
        case Direction::over: return "over";
        case Direction::exact: return "exact";
    }
    return "?";
}

struct Truncation {
    std::int64_t max_prime = 0;
    unsigned max_exponent = 0;
};

struct DensityEstimate {
    Decimal50 value;
    std::optional<Rational> exact;         // set when the value is an exact rational
    std::optional<Truncation> truncation;  // nullopt means exact
    Direction direction = Direction::exact;
    std::int64_t factors = 0;              // Euler factors multiplied in
};

inline std::vector<unsigned> a3star_upto(unsigned max_exponent) {
    std::vector<unsigned> out;
    for (unsigned n = 0; n <= max_exponent; ++n)
        if (a3star_contains(n)) out.push_back(n);
    return out;
}

inline std::vector<std::int64_t> primes_upto(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::int64_t k = p * p; k <= limit; k += p) composite[static_cast<std::size_t>(k)] = true;
    }
    return out;
}

/// sum_{n in A3*, n <= max_exponent} 3 / (4 * 2^(2n)).
inline Rational rankin_two_factor(unsigned max_exponent) {
    Rational sum = 0;
    for (auto n : a3star_upto(max_exponent)) sum += Rational(BigInt(3), 4 * ipow(BigInt(2), 2 * n));
    return sum;
}

/// sum_{n in A3*, n <= max_exponent} (p^(n+3) - p^(n+2) - p^2 + 1) / (p^2 (p-1) p^(2n)), for odd prime p.
///
/// Each term equals p^-n - (p+1) p^-(2n+2), so the sum is assembled over the
/// common denominator p^(2E+2) without per-term gcd reductions.
inline std::pair<BigInt, BigInt> rankin_odd_factor_fraction(std::int64_t p, unsigned max_exponent) {
    if (p < 3 || !is_rational_prime(p)) throw std::invalid_argument("rankin_odd_factor: p must be an odd prime");
    const auto exponents = a3star_upto(max_exponent);
    const unsigned top = 2 * exponents.back() + 2;
    std::vector<BigInt> powers(top + 1);
    powers[0] = 1;
    for (unsigned i = 1; i <= top; ++i) powers[i] = powers[i - 1] * p;
    BigInt num = 0;
    for (auto n : exponents) {
        num += powers[top - n];
        num -= (p + 1) * powers[top - 2 - 2 * n];
    }
    return {num, powers[top]};
}

inline Rational rankin_odd_factor(std::int64_t p, unsigned max_exponent) {
    const auto [num, den] = rankin_odd_factor_fraction(p, max_exponent);
    return Rational(num, den);
}

/// Truncated Euler product for the density of Q_Ran.
///
/// Missing primes each contribute a factor below 1, so the truncated value
/// sits above the full product; the exponent cut-off is below 1e-24 per factor.
inline DensityEstimate rankin_density(std::int64_t max_prime, unsigned max_exponent) {
    if (max_prime < 3) throw std::invalid_argument("rankin_density: max_prime must be >= 3");
    if (max_exponent < 1) throw std::invalid_argument("rankin_density: max_exponent must be >= 1");
    DensityEstimate est;
    est.value = to_decimal(rankin_two_factor(max_exponent));
    est.factors = 1;
    for (auto p : primes_upto(max_prime)) {
        if (p == 2) continue;
        const auto [num, den] = rankin_odd_factor_fraction(p, max_exponent);
        est.value *= Decimal50(num) / Decimal50(den);
        ++est.factors;
    }
    est.truncation = Truncation{max_prime, max_exponent};
    est.direction = Direction::over;
    return est;
}

}  // namespace gpfree
