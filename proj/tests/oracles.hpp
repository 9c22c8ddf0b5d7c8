#pragma once

// Slow, independent reference computations. None of these call into the
// library's counting, greedy or characterization code.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gpfree/hurwitz.hpp"

namespace oracle {

/// Points of norm n: integer quadruples with sum of squares n, plus
/// all-odd quadruples with sum of squares 4n.
inline std::int64_t norm_shell_size(std::int64_t n) {
    std::int64_t count = 0;
    auto r = [](std::int64_t v) { std::int64_t s = 0; while (s * s <= v) ++s; return s - 1; };
    const std::int64_t b1 = r(n);
    for (std::int64_t a = -b1; a <= b1; ++a)
        for (std::int64_t b = -b1; b <= b1; ++b)
            for (std::int64_t c = -b1; c <= b1; ++c) {
                const std::int64_t rest = n - a * a - b * b - c * c;
                if (rest < 0) continue;
                const std::int64_t d = r(rest);
                if (d * d == rest) count += d == 0 ? 1 : 2;
            }
    const std::int64_t b2 = r(4 * n);
    for (std::int64_t a = -b2; a <= b2; a += 1) {
        if (a % 2 == 0) continue;
        for (std::int64_t b = -b2; b <= b2; ++b) {
            if (b % 2 == 0) continue;
            for (std::int64_t c = -b2; c <= b2; ++c) {
                if (c % 2 == 0) continue;
                const std::int64_t rest = 4 * n - a * a - b * b - c * c;
                if (rest <= 0) continue;
                const std::int64_t d = r(rest);
                if (d * d == rest && d % 2 == 1) count += 2;
            }
        }
    }
    return count;
}

/// Greedy 3-AP-free subset of {0, ..., limit}, scanned upward.
inline std::set<std::int64_t> greedy_ap_free(std::int64_t limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
    std::set<std::int64_t> out;
    for (std::int64_t z = 0; z <= limit; ++z) {
        bool blocked = false;
        for (std::int64_t y : out) {
            const std::int64_t x = 2 * y - z;
            if (x >= 0 && x < y && in[static_cast<std::size_t>(x)]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            in[static_cast<std::size_t>(z)] = true;
            out.insert(z);
        }
    }
    return out;
}

/// Greedy 3-GP-free subset of {1, ..., limit} (rational ratios), scanned upward:
/// z is rejected when x < y < z are admitted with y^2 = x z.
inline std::vector<bool> greedy_gp_free(std::int64_t limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> members;
    for (std::int64_t z = 1; z <= limit; ++z) {
        bool blocked = false;
        for (std::int64_t y : members) {
            const std::int64_t sq = y * y;
            if (sq % z != 0) continue;
            const std::int64_t x = sq / z;
            if (x < y && in[static_cast<std::size_t>(x)]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            in[static_cast<std::size_t>(z)] = true;
            members.push_back(z);
        }
    }
    return in;
}

/// Random Hurwitz quaternion with doubled coordinates in [-2 bound, 2 bound].
class QuatGen {
public:
    explicit QuatGen(std::uint64_t seed) : rng_(seed) {}

    gpfree::HurwitzInt operator()(std::int64_t bound) {
        std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
        const bool half = std::bernoulli_distribution(0.5)(rng_);
        auto pick = [&] { return 2 * coord(rng_) + (half ? 1 : 0); };
        const auto a = pick(), b = pick(), c = pick(), d = pick();
        return gpfree::HurwitzInt::from_doubled(a, b, c, d);
    }

    gpfree::HurwitzInt nonzero(std::int64_t bound) {
        for (;;) {
            const auto q = (*this)(bound);
            if (!q.is_zero()) return q;
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
