#pragma once

// The group W = <x, y : x^2 = y^2 = 1>, its even-length subgroup W2 = Z, the
// greedy progression-free sets G (in W) and A (in Z), and the explicit
// progressions that exclude each n outside A.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gpfree/rational.hpp"
#include "gpfree/ternary.hpp"

namespace gpfree {

enum class Letter { none, x, y };

inline Letter other(Letter l) {
    switch (l) {
        case Letter::x: return Letter::y;
        case Letter::y: return Letter::x;
        case Letter::none: break;
    }
    throw std::invalid_argument("other: identity has no letter");
}

/// Reduced word in W: the alternating string of `length` letters starting at `leading`.
class Word {
public:
    constexpr Word() = default;

    static Word identity() { return Word(); }

    static Word alternating(Letter leading, std::uint64_t length) {
        if ((length == 0) != (leading == Letter::none))
            throw std::invalid_argument("Word: leading letter must be none exactly when length is 0");
        Word w;
        w.leading_ = leading;
        w.length_ = length;
        return w;
    }

    /// Parses "I" or an alternating string over {x, y}.
    static Word parse(const std::string& text) {
        if (text == "I" || text.empty()) return identity();
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != 'x' && text[i] != 'y') throw std::invalid_argument("Word: bad letter in '" + text + "'");
            if (i > 0 && text[i] == text[i - 1]) throw std::invalid_argument("Word: '" + text + "' is not reduced");
        }
        return alternating(text[0] == 'x' ? Letter::x : Letter::y, text.size());
    }

    Letter leading() const { return leading_; }
    std::uint64_t length() const { return length_; }
    bool is_identity() const { return length_ == 0; }

    /// Letter at 0-based position i.
    Letter letter_at(std::uint64_t i) const {
        if (i >= length_) throw std::out_of_range("Word::letter_at");
        return i % 2 == 0 ? leading_ : other(leading_);
    }

    Letter trailing() const { return is_identity() ? Letter::none : letter_at(length_ - 1); }

    /// Reversal; odd-length words are involutions.
    Word inverse() const { return is_identity() ? *this : alternating(trailing(), length_); }

    std::string to_string() const {
        if (is_identity()) return "I";
        std::string out;
        out.reserve(length_);
        for (std::uint64_t i = 0; i < length_; ++i) out += letter_at(i) == Letter::x ? 'x' : 'y';
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    Letter leading_ = Letter::none;
    std::uint64_t length_ = 0;
};

/// Concatenation with cancellation of adjacent equal letters.
inline Word word_mul(const Word& u, const Word& v) {
    if (u.is_identity()) return v;
    if (v.is_identity()) return u;
    if (u.trailing() != v.leading()) return Word::alternating(u.leading(), u.length() + v.length());
    // Equal letters keep meeting until one side runs out.
    if (u.length() > v.length()) return Word::alternating(u.leading(), u.length() - v.length());
    if (v.length() > u.length()) return Word::alternating(v.letter_at(u.length()), v.length() - u.length());
    return Word::identity();
}

inline Word operator*(const Word& u, const Word& v) { return word_mul(u, v); }

/// Position in (I, x, y, xy, yx, xyx, ...), 1-based.
inline std::uint64_t index_of(const Word& w) {
    if (w.is_identity()) return 1;
    return 2 * w.length() + (w.leading() == Letter::y ? 1 : 0);
}

inline Word word_at(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("word_at: index must be >= 1");
    if (n == 1) return Word::identity();
    return Word::alternating(n % 2 == 0 ? Letter::x : Letter::y, n / 2);
}

inline std::strong_ordering operator<=>(const Word& u, const Word& v) { return index_of(u) <=> index_of(v); }

/// Position in Z_A = (0, 1, -1, 2, -2, ...), 1-based.
inline std::uint64_t alt_index(std::int64_t z) {
    if (z == 0) return 1;
    return z > 0 ? 2 * static_cast<std::uint64_t>(z) : 2 * static_cast<std::uint64_t>(-z) + 1;
}

inline std::int64_t alt_at(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("alt_at: index must be >= 1");
    if (n == 1) return 0;
    const auto k = static_cast<std::int64_t>(n / 2);
    return n % 2 == 0 ? k : -k;
}

/// W2 -> Z generated by xy -> 1.
inline std::int64_t w2_to_int(const Word& w) {
    if (w.length() % 2 != 0) throw std::invalid_argument("w2_to_int: word has odd length");
    const auto half = static_cast<std::int64_t>(w.length() / 2);
    return w.leading() == Letter::y ? -half : half;
}

inline Word int_to_w2(std::int64_t z) {
    if (z == 0) return Word::identity();
    const auto len = 2 * static_cast<std::uint64_t>(z > 0 ? z : -z);
    return Word::alternating(z > 0 ? Letter::x : Letter::y, len);
}

// ---------------------------------------------------------------------------
// The greedy AP-free set A

/// Zero; positive n whose ternary form has one 1 and only 0s after it; negative
/// n whose ternary form has no 1.
inline bool a_contains(std::int64_t n) {
    if (n == 0) return true;
    const auto digits = ternary_digits(n);
    if (n < 0) {
        for (int d : digits)
            if (d == 1) return false;
        return true;
    }
    std::size_t i = 0;
    while (digits[i] == 0) ++i;
    if (digits[i] != 1) return false;
    for (++i; i < digits.size(); ++i)
        if (digits[i] == 1) return false;
    return true;
}

/// Greedy scan of 0, 1, -1, 2, -2, ... up to |z| <= max_abs, admitting z unless it
/// completes a 3-term AP (in any position, nonzero difference) with two admitted values.
inline std::set<std::int64_t> greedy_a_bruteforce(std::int64_t max_abs) {
    if (max_abs < 0) throw std::invalid_argument("greedy_a_bruteforce: max_abs must be >= 0");
    std::set<std::int64_t> admitted;
    std::vector<std::int64_t> order;
    for (std::uint64_t idx = 1; idx <= 2 * static_cast<std::uint64_t>(max_abs) + 1; ++idx) {
        const std::int64_t z = alt_at(idx);
        bool blocked = false;
        for (auto x : order) {
            // z last or first: partner 2x - z; z middle: partner 2z - x.
            if (admitted.contains(2 * x - z) || admitted.contains(2 * z - x)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            admitted.insert(z);
            order.push_back(z);
        }
    }
    return admitted;
}

/// Greedy scan of W up to length max_len, admitting w unless some (a, ar, ar^2),
/// r != I, has w as a term and every other term already admitted. Terms may repeat.
inline std::set<Word> greedy_g_bruteforce(std::uint64_t max_len) {
    std::set<Word> admitted;
    std::unordered_set<std::uint64_t> admitted_idx;
    for (std::uint64_t idx = 1; idx <= 2 * max_len + 1; ++idx) {
        const Word c = word_at(idx);
        std::vector<Word> pool(admitted.begin(), admitted.end());
        pool.push_back(c);
        auto in_pool = [&](const Word& w) { return w == c || admitted_idx.contains(index_of(w)); };
        bool blocked = false;
        for (const auto& a : pool) {
            const Word a_inv = a.inverse();
            for (const auto& b : pool) {
                const Word r = a_inv * b;
                if (r.is_identity()) continue;
                const Word d = b * r;
                if (!in_pool(d)) continue;
                if (a == c || b == c || d == c) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) break;
        }
        if (!blocked) {
            admitted.insert(c);
            admitted_idx.insert(idx);
        }
    }
    return admitted;
}

/// Fraction of words of length <= 2 * 3^n that lie in G: 2^(n+1) / (1 + 4 * 3^n).
inline Rational density_ratio_g(unsigned n) {
    return Rational(ipow(BigInt(2), n + 1), 1 + 4 * ipow(BigInt(3), n));
}

/// Fraction of integers with |m| <= 3^n that lie in A: 2^(n+1) / (1 + 2 * 3^n).
inline Rational density_ratio_a(unsigned n) {
    return Rational(ipow(BigInt(2), n + 1), 1 + 2 * ipow(BigInt(3), n));
}

// ---------------------------------------------------------------------------
// Exclusion witnesses

/// Which of the five inclusion/exclusion cases n falls in: 1 and 2 are kept in
/// A, 3 to 5 are excluded. Zero is reported as 0.
inline int ternary_case(std::int64_t n) {
    if (n == 0) return 0;
    const auto digits = ternary_digits(n);
    bool has_one = false;
    for (int d : digits) has_one = has_one || d == 1;
    if (n < 0) return has_one ? 5 : 2;
    if (!has_one) return 3;
    return a_contains(n) ? 1 : 4;
}

enum class WitnessSource { digit_rule, carry_search };

/// An arithmetic progression (a, b, n) with common difference r = b - a = n - b.
struct Witness {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t r = 0;
    int exclusion_case = 0;
    WitnessSource source = WitnessSource::digit_rule;
};

/// Both terms lie in A and come before n in the alternating order.
inline bool witness_is_valid(std::int64_t n, std::int64_t a, std::int64_t b) {
    return b - a == n - b && b != a && a_contains(a) && a_contains(b) && alt_index(a) < alt_index(n) &&
           alt_index(b) < alt_index(n);
}

namespace detail {

/// Ternary places (0-based) holding a 1, lowest first.
inline std::vector<std::size_t> one_places(const std::vector<int>& digits) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] == 1) out.push_back(i);
    return out;
}

/// The middle term b from the per-case digit rules, for excluded n.
inline std::int64_t digit_rule_middle(std::int64_t n) {
    const auto c = ternary_digits(n);
    const auto ones = one_places(c);
    std::vector<int> b(c.size(), 0);
    switch (ternary_case(n)) {
        case 3: {
            // n = ...2 0..0; the progression is n - 2m, n - m, n with m = n with that 2 lowered to 1.
            std::size_t low = 0;
            while (c[low] == 0) ++low;
            return pow3(static_cast<unsigned>(low));
        }
        case 4:
            if (ones.size() % 2 == 1) {
                // b keeps n's leading 0/2 digits, has a 1 at the lowest 1 of n and
                // 2s from each even-numbered 1 of n up to the next one.
                b[ones[0]] = 1;
                for (std::size_t q = 1; q + 1 < ones.size(); q += 2)
                    for (std::size_t i = ones[q]; i < ones[q + 1]; ++i) b[i] = 2;
                for (std::size_t i = ones.back() + 1; i < c.size(); ++i) b[i] = c[i];
            } else {
                b[ones[0]] = 1;
                for (std::size_t q = 2; q < ones.size(); q += 2) b[ones[q]] = 2;
                for (std::size_t i = ones[0] + 1; i < c.size(); ++i)
                    if (c[i] == 2) b[i] = 2;
            }
            return from_ternary_digits(b);
        case 5:
            if (ones.size() % 2 == 0) {
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (c[i] == 2) b[i] = 2;
                for (std::size_t q = 0; q + 1 < ones.size(); q += 2)
                    for (std::size_t i = ones[q]; i < ones[q + 1]; ++i) b[i] = 2;
            } else {
                for (std::size_t i = 0; i < ones.back(); ++i)
                    if (c[i] == 2) b[i] = 2;
                for (std::size_t q = 1; q < ones.size(); q += 2) b[ones[q]] = 2;
            }
            return -from_ternary_digits(b);
        default:
            throw std::invalid_argument("digit_rule_middle: n is not excluded");
    }
}

/// Searches digit strings of |a| and |b| from the least significant place,
/// carrying through 2b - a = n, with each string constrained to A's digit pattern
/// and to precede n in the alternating order. Runs in O(log |n|).
class CarrySearch {
public:
    explicit CarrySearch(std::int64_t n) : n_(n), digits_(ternary_digits(n)) {}

    std::optional<std::pair<std::int64_t, std::int64_t>> run() {
        // Sign classes: positive members end in 1 0..0 (read upward: 0* 1 {0,2}*),
        // non-positive members are -(digits in {0, 2}).
        for (bool a_pos : {true, false})
            for (bool b_pos : {true, false}) {
                a_pos_ = a_pos;
                b_pos_ = b_pos;
                failed_.clear();
                a_digits_.assign(digits_.size(), 0);
                b_digits_.assign(digits_.size(), 0);
                if (search(0, 0, false, false, kEqual, kEqual)) {
                    const std::int64_t a = from_ternary_digits(a_digits_);
                    const std::int64_t b = from_ternary_digits(b_digits_);
                    return std::make_pair(a_pos ? a : -a, b_pos ? b : -b);
                }
            }
        return std::nullopt;
    }

private:
    static constexpr int kLess = 0, kEqual = 1, kGreater = 2;

    static int compare_step(int mine, int theirs, int prev) {
        if (mine < theirs) return kLess;
        if (mine > theirs) return kGreater;
        return prev;
    }

    // Allowed value for a term of magnitude m with comparison cmp against |n|.
    bool precedes(bool positive, bool nonzero, int cmp) const {
        if (cmp == kLess) return true;
        if (cmp == kGreater) return false;
        // |term| == |n|: only -n's mirror counts, and it precedes n iff it is positive.
        return nonzero && positive && n_ < 0;
    }

    bool search(std::size_t pos, int carry, bool a_seen_one, bool b_seen_one, int a_cmp, int b_cmp) {
        if (pos == digits_.size()) {
            if (carry != 0) return false;
            if (a_pos_ && !a_seen_one) return false;
            if (b_pos_ && !b_seen_one) return false;
            const bool a_nonzero = a_pos_ || any_nonzero(a_digits_);
            const bool b_nonzero = b_pos_ || any_nonzero(b_digits_);
            return precedes(a_pos_, a_nonzero, a_cmp) && precedes(b_pos_, b_nonzero, b_cmp);
        }
        const auto key = std::array<int, 6>{static_cast<int>(pos), carry, a_seen_one, b_seen_one, a_cmp, b_cmp};
        if (failed_.contains(key)) return false;

        const int sign_n = n_ < 0 ? -1 : 1;
        const int coef_b = 2 * (b_pos_ ? 1 : -1) * sign_n;
        const int coef_a = (a_pos_ ? 1 : -1) * sign_n;
        for (int bd = 0; bd <= 2; ++bd) {
            bool b_one = b_seen_one;
            if (!digit_allowed(b_pos_, bd, b_one)) continue;
            for (int ad = 0; ad <= 2; ++ad) {
                bool a_one = a_seen_one;
                if (!digit_allowed(a_pos_, ad, a_one)) continue;
                const int total = coef_b * bd - coef_a * ad + carry - digits_[pos];
                if (total % 3 != 0) continue;
                a_digits_[pos] = ad;
                b_digits_[pos] = bd;
                if (search(pos + 1, total / 3, a_one, b_one, compare_step(ad, digits_[pos], a_cmp),
                           compare_step(bd, digits_[pos], b_cmp)))
                    return true;
            }
        }
        a_digits_[pos] = b_digits_[pos] = 0;
        failed_.insert(key);
        return false;
    }

    // Advances the digit-pattern automaton; seen_one is updated in place.
    static bool digit_allowed(bool positive, int d, bool& seen_one) {
        if (!positive) return d != 1;
        if (!seen_one) {
            if (d == 2) return false;
            if (d == 1) seen_one = true;
            return true;
        }
        return d != 1;
    }

    static bool any_nonzero(const std::vector<int>& ds) {
        for (int d : ds)
            if (d != 0) return true;
        return false;
    }

    std::int64_t n_;
    std::vector<int> digits_;
    bool a_pos_ = true;
    bool b_pos_ = true;
    std::vector<int> a_digits_;
    std::vector<int> b_digits_;
    std::set<std::array<int, 6>> failed_;
};

}  // namespace detail

/// For n outside A, a progression (a, b, n) with a, b in A ahead of n; nullopt for n in A.
///
/// The per-case digit rules are tried first. Where they do not produce a valid
/// progression (some interior-2 patterns in the odd positive case), the
/// carry search supplies one.
inline std::optional<Witness> witness_progression(std::int64_t n) {
    const int kind = ternary_case(n);
    if (kind <= 2) return std::nullopt;
    const std::int64_t b = detail::digit_rule_middle(n);
    const std::int64_t a = 2 * b - n;
    if (witness_is_valid(n, a, b)) return Witness{a, b, b - a, kind, WitnessSource::digit_rule};
    const auto found = detail::CarrySearch(n).run();
    if (!found || !witness_is_valid(n, found->first, found->second))
        throw std::logic_error("witness_progression: no progression found for " + std::to_string(n));
    return Witness{found->first, found->second, found->second - found->first, kind, WitnessSource::carry_search};
}

}  // namespace gpfree
