#pragma once

// The greedy 3-term-GP-free set of Hurwitz quaternions, built by increasing norm.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gpfree/enumeration.hpp"
#include "gpfree/hurwitz.hpp"

namespace gpfree {

struct GpWitness {
    HurwitzInt first;   // a
    HurwitzInt second;  // a r
    HurwitzInt ratio;   // r
};

struct GreedyReport {
    std::int64_t max_norm = 0;
    std::vector<HurwitzInt> included;  // in processing order
    std::vector<std::pair<HurwitzInt, GpWitness>> excluded;

    std::size_t included_with_norm(std::int64_t n) const {
        return static_cast<std::size_t>(
            std::count_if(included.begin(), included.end(), [n](const HurwitzInt& q) { return norm(q) == n; }));
    }
};

/// Caches enumerate_norm results, which build_greedy asks for repeatedly.
class NormShells {
public:
    const std::vector<HurwitzInt>& operator()(std::int64_t n) {
        auto it = cache_.find(n);
        if (it == cache_.end()) it = cache_.emplace(n, enumerate_norm(n)).first;
        return it->second;
    }

private:
    std::map<std::int64_t, std::vector<HurwitzInt>> cache_;
};

/// Reorders the elements of one norm shell before they are processed.
using ShellOrder = std::function<void(std::vector<HurwitzInt>&)>;

/// Greedy set over norms 1..max_norm.
///
/// A progression (a, ar, ar^2) has norms (s, s t, s t^2) with t = Norm(r) >= 2, so
/// a candidate of norm N can only be the last term, and for every split
/// N = s t^2 we test each included a of norm s against each r of norm t.
/// The other two terms always have smaller norm, which is why the order within
/// a shell cannot change the result.
inline GreedyReport build_greedy(std::int64_t max_norm, const ShellOrder& reorder = {}) {
    if (max_norm < 1) throw std::invalid_argument("build_greedy: max_norm must be >= 1");
    GreedyReport report;
    report.max_norm = max_norm;
    NormShells shells;
    std::unordered_set<HurwitzInt> members;
    std::map<std::int64_t, std::vector<HurwitzInt>> members_by_norm;

    for (std::int64_t n = 1; n <= max_norm; ++n) {
        std::vector<HurwitzInt> shell = shells(n);
        if (reorder) reorder(shell);
        std::vector<HurwitzInt> admitted;
        for (const auto& c : shell) {
            std::optional<GpWitness> witness;
            for (std::int64_t t = 2; t * t <= n && !witness; ++t) {
                if (n % (t * t) != 0) continue;
                const std::int64_t s = n / (t * t);
                const auto found = members_by_norm.find(s);
                if (found == members_by_norm.end()) continue;
                for (const auto& a : found->second) {
                    for (const auto& r : shells(t)) {
                        const HurwitzInt b = a * r;
                        if (b * r == c && members.contains(b)) {
                            witness = GpWitness{a, b, r};
                            break;
                        }
                    }
                    if (witness) break;
                }
            }
            if (witness) {
                report.excluded.emplace_back(c, *witness);
            } else {
                admitted.push_back(c);
                report.included.push_back(c);
            }
        }
        // Admissions only take effect for later norms; nothing in this shell can
        // pair with another element of the same norm.
        for (const auto& c : admitted) members.insert(c);
        if (!admitted.empty()) members_by_norm.emplace(n, std::move(admitted));
    }
    return report;
}

/// Shell order given by a seeded shuffle.
inline ShellOrder shuffled_shells(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](std::vector<HurwitzInt>& shell) { std::shuffle(shell.begin(), shell.end(), *rng); };
}

struct UnitSquare {
    HurwitzInt unit;
    HurwitzInt root;
};

/// Some (U, R) with q = U R^2, U a unit, Norm(R)^2 = Norm(q), if one exists.
inline std::optional<UnitSquare> is_unit_square_representable(const HurwitzInt& q) {
    const std::int64_t n = norm(q);
    const std::int64_t m = isqrt(n);
    if (n < 1 || m * m != n) throw std::invalid_argument("is_unit_square_representable: norm is not a nonzero square");
    for (const auto& r : enumerate_norm(m)) {
        const HurwitzInt square = r * r;
        for (const auto& u : units())
            if (u * square == q) return UnitSquare{u, r};
    }
    return std::nullopt;
}

struct GapCheck {
    std::int64_t lhs;  // 24 * S({n})
    std::int64_t rhs;  // S({n^2})
    bool holds;        // lhs < rhs
};

/// Compares the number of products U R^2 (Norm(R) = n) with the size of the norm-n^2 shell.
inline GapCheck lemma52_gap(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("lemma52_gap: n must be >= 1");
    const std::int64_t lhs = 24 * count_norm_exact(n);
    const std::int64_t rhs = count_norm_exact(n * n);
    return GapCheck{lhs, rhs, lhs < rhs};
}

inline std::int64_t greatest_odd_divisor(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("greatest_odd_divisor: n must be >= 1");
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace gpfree
