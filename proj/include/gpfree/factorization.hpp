#pragma once

// Factorization of a Hurwitz quaternion modelled on an ordering of its
// norm's prime factorization.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gpfree/enumeration.hpp"
#include "gpfree/hurwitz.hpp"

namespace gpfree {

struct ModelledFactorization {
    std::vector<std::int64_t> prime_norms;
    std::vector<HurwitzInt> factors;

    HurwitzInt product() const {
        HurwitzInt acc = HurwitzInt::integral(1);
        for (const auto& f : factors) acc = acc * f;
        return acc;
    }
};

/// Rational prime factors of n in ascending order, with multiplicity.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("prime_factors: n must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

/// Writes q = P_0 ... P_k with Norm(P_i) = prime_norms[i].
///
/// Each P_i is the lexicographically first norm-p_i quaternion that left-divides
/// what remains, so the representative of the unit-migration class is fixed.
inline ModelledFactorization factor_modelled(const HurwitzInt& q, const std::vector<std::int64_t>& prime_norms) {
    if (q.is_zero()) throw std::invalid_argument("factor_modelled: cannot factor zero");
    std::int64_t prod = 1;
    for (auto p : prime_norms) {
        if (!is_rational_prime(p)) throw std::invalid_argument("factor_modelled: model contains a non-prime");
        prod *= p;
    }
    if (prod != norm(q)) throw std::invalid_argument("factor_modelled: model does not multiply to Norm(q)");

    if (prime_norms.empty()) throw std::invalid_argument("factor_modelled: units have no prime factorization");

    ModelledFactorization out;
    out.prime_norms = prime_norms;

    HurwitzInt rest = q;
    for (std::size_t i = 0; i + 1 < prime_norms.size(); ++i) {
        bool found = false;
        for (const auto& candidate : enumerate_norm(prime_norms[i])) {
            if (auto quotient = left_divide(candidate, rest)) {
                out.factors.push_back(candidate);
                rest = *quotient;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("factor_modelled: no prime left factor of the modelled norm");
    }
    out.factors.push_back(rest);
    return out;
}

}  // namespace gpfree
