#pragma once

// Exact arithmetic on the Hurwitz order of quaternions.
//
// A Hurwitz quaternion (a + bi + cj + dk) has a, b, c, d all in Z or all in
// Z + 1/2. We store the doubled coordinates (2a, 2b, 2c, 2d), which are
// integers sharing one parity, so products and norms never leave Z.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpfree {

class HurwitzInt {
public:
    using coord_t = std::int64_t;

    constexpr HurwitzInt() = default;

    /// Builds from doubled coordinates; throws if their parities differ.
    static HurwitzInt from_doubled(coord_t da, coord_t db, coord_t dc, coord_t dd) {
        if (((da ^ db) & 1) || ((da ^ dc) & 1) || ((da ^ dd) & 1)) {
            throw std::invalid_argument("HurwitzInt: doubled coordinates must share one parity");
        }
        return HurwitzInt(da, db, dc, dd);
    }

    /// The Lipschitz element a + bi + cj + dk.
    static constexpr HurwitzInt integral(coord_t a, coord_t b = 0, coord_t c = 0, coord_t d = 0) {
        return HurwitzInt(2 * a, 2 * b, 2 * c, 2 * d);
    }

    constexpr coord_t da() const { return d_[0]; }
    constexpr coord_t db() const { return d_[1]; }
    constexpr coord_t dc() const { return d_[2]; }
    constexpr coord_t dd() const { return d_[3]; }
    constexpr const std::array<coord_t, 4>& doubled() const { return d_; }

    constexpr bool is_zero() const { return d_[0] == 0 && d_[1] == 0 && d_[2] == 0 && d_[3] == 0; }
    constexpr bool is_half_integral() const { return (d_[0] & 1) != 0; }

    constexpr HurwitzInt conj() const { return HurwitzInt(d_[0], -d_[1], -d_[2], -d_[3]); }
    constexpr HurwitzInt operator-() const { return HurwitzInt(-d_[0], -d_[1], -d_[2], -d_[3]); }

    friend constexpr HurwitzInt operator+(const HurwitzInt& p, const HurwitzInt& q) {
        return HurwitzInt(p.d_[0] + q.d_[0], p.d_[1] + q.d_[1], p.d_[2] + q.d_[2], p.d_[3] + q.d_[3]);
    }

    friend constexpr HurwitzInt operator-(const HurwitzInt& p, const HurwitzInt& q) { return p + (-q); }

    // (P/2)(Q/2) = (PQ/2)/2, and PQ/2 is integral because the order is closed.
    friend constexpr HurwitzInt operator*(const HurwitzInt& p, const HurwitzInt& q) {
        const auto [a1, b1, c1, d1] = p.d_;
        const auto [a2, b2, c2, d2] = q.d_;
        return HurwitzInt((a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2) / 2,
                          (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2) / 2,
                          (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2) / 2,
                          (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2) / 2);
    }

    friend constexpr bool operator==(const HurwitzInt&, const HurwitzInt&) = default;
    /// Lexicographic on doubled coordinates; this is the enumeration order everywhere.
    friend constexpr auto operator<=>(const HurwitzInt&, const HurwitzInt&) = default;

    /// Canonical text form "(da,db,dc,dd)/2".
    std::string to_string() const {
        return "(" + std::to_string(d_[0]) + "," + std::to_string(d_[1]) + "," + std::to_string(d_[2]) +
               "," + std::to_string(d_[3]) + ")/2";
    }

    friend std::ostream& operator<<(std::ostream& os, const HurwitzInt& q) { return os << q.to_string(); }

private:
    constexpr HurwitzInt(coord_t a, coord_t b, coord_t c, coord_t d) : d_{a, b, c, d} {}

    std::array<coord_t, 4> d_{0, 0, 0, 0};
};

inline constexpr HurwitzInt mul(const HurwitzInt& p, const HurwitzInt& q) { return p * q; }

/// a^2 + b^2 + c^2 + d^2 of the undoubled coordinates.
inline constexpr std::int64_t norm(const HurwitzInt& q) {
    const auto& d = q.doubled();
    return (d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]) / 4;
}

inline constexpr bool is_unit(const HurwitzInt& q) { return norm(q) == 1; }

/// The 24 units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2, in lexicographic order.
inline const std::vector<HurwitzInt>& units() {
    static const std::vector<HurwitzInt> table = [] {
        std::vector<HurwitzInt> out;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int c = -2; c <= 2; ++c)
                    for (int d = -2; d <= 2; ++d)
                        if (a * a + b * b + c * c + d * d == 4 && ((a ^ b) & 1) == 0 && ((a ^ c) & 1) == 0 &&
                            ((a ^ d) & 1) == 0)
                            out.push_back(HurwitzInt::from_doubled(a, b, c, d));
        return out;
    }();
    return table;
}

/// Units invert to their conjugates.
inline constexpr HurwitzInt unit_inverse(const HurwitzInt& u) { return u.conj(); }

/// Returns r with a * r == b when such r lies in the Hurwitz order.
inline std::optional<HurwitzInt> left_divide(const HurwitzInt& a, const HurwitzInt& b) {
    if (a.is_zero()) throw std::domain_error("left_divide: zero divisor");
    const std::int64_t n = norm(a);
    // conj(a) * b doubled; r = conj(a) b / Norm(a).
    const HurwitzInt num = a.conj() * b;
    std::array<std::int64_t, 4> r{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (num.doubled()[i] % n != 0) return std::nullopt;
        r[i] = num.doubled()[i] / n;
    }
    if (((r[0] ^ r[1]) & 1) || ((r[0] ^ r[2]) & 1) || ((r[0] ^ r[3]) & 1)) return std::nullopt;
    return HurwitzInt::from_doubled(r[0], r[1], r[2], r[3]);
}

inline constexpr bool is_rational_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// A Hurwitz quaternion is prime iff its norm is a rational prime.
inline constexpr bool is_prime(const HurwitzInt& q) { return is_rational_prime(norm(q)); }

/// True iff (a, b, c) = (a, ar, ar^2) for some non-unit, nonzero Hurwitz r.
inline bool is_gp_triple(const HurwitzInt& a, const HurwitzInt& b, const HurwitzInt& c) {
    if (a.is_zero()) return false;
    const auto r = left_divide(a, b);
    if (!r || norm(*r) < 2) return false;
    return b * *r == c;
}

}  // namespace gpfree

template <>
struct std::hash<gpfree::HurwitzInt> {
    std::size_t operator()(const gpfree::HurwitzInt& q) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : q.doubled()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
