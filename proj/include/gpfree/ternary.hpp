#pragma once

// Base-3 digit helpers. Digits are stored least significant first; the sign
// of a negative number is tracked separately and digits describe |n|.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpfree {

inline std::vector<int> ternary_digits(std::int64_t n) {
    if (n < 0) n = -n;
    std::vector<int> digits;
    while (n > 0) {
        digits.push_back(static_cast<int>(n % 3));
        n /= 3;
    }
    return digits;
}

inline std::int64_t from_ternary_digits(const std::vector<int>& digits) {
    std::int64_t value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = 3 * value + *it;
    return value;
}

/// Most significant digit first, "-" prefix for negatives, "0" for zero.
inline std::string to_ternary_string(std::int64_t n) {
    if (n == 0) return "0";
    std::string out = n < 0 ? "-" : "";
    const auto digits = ternary_digits(n);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += static_cast<char>('0' + *it);
    return out;
}

/// Parses "[-]ddd" in base 3; leading zeros are allowed.
inline std::int64_t parse_ternary(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("parse_ternary: empty digit string");
    std::int64_t value = 0;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch < '0' || ch > '2') throw std::invalid_argument("parse_ternary: bad digit in '" + text + "'");
        value = 3 * value + (ch - '0');
    }
    return negative ? -value : value;
}

inline std::int64_t pow3(unsigned k) {
    std::int64_t v = 1;
    while (k-- > 0) v *= 3;
    return v;
}

}  // namespace gpfree
