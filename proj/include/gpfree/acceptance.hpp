#pragma once

// The acceptance criteria as runnable checks. Shared by the acceptance test
// binary and `gpfree verify-all`.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gpfree/density.hpp"
#include "gpfree/enumeration.hpp"
#include "gpfree/freegroup.hpp"
#include "gpfree/greedy.hpp"
#include "gpfree/hurwitz.hpp"
#include "gpfree/rational.hpp"

namespace gpfree::acceptance {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Check {
    int id = 0;
    std::string name;
    double time_limit_s = 0;  // 0: no limit
    std::function<Outcome()> run;
};

struct Options {
    bool quick = false;                          // skip the norm-343 greedy run
    AnnuliSpec annuli = AnnuliSpec::standard();  // replaced by mutation runs
};

namespace detail {

inline std::string six_places(const Rational& r) { return fixed_decimal(to_decimal(r), 6); }

inline bool same_set(const std::set<std::int64_t>& got, std::int64_t max_abs) {
    for (std::int64_t n = -max_abs; n <= max_abs; ++n)
        if (got.contains(n) != a_contains(n)) return false;
    return true;
}

}  // namespace detail

inline Outcome check_bounds() {
    // The six bracketed differences, written out term by term.
    const Rational display = (Rational(1) - Rational(1, 16)) + (Rational(1, 64) - Rational(1, 81)) +
                             (Rational(1, 144) - Rational(1, 576)) + (Rational(1, 729) - Rational(1, 1024)) +
                             (Rational(1, 1296) - Rational(1, 1600)) + (Rational(1, 2025) - Rational(1, 2304));
    const Rational lower = lower_bound_density();
    const Rational upper = upper_bound_density(std::nullopt);
    const bool ok = lower == display && upper == Rational(20, 21) && detail::six_places(lower) == "0.946589" &&
                    detail::six_places(upper) == "0.952381" && lower < upper;
    return {ok, "lower=" + detail::six_places(lower) + " (" + to_fraction_string(lower) + "), upper=" +
                    detail::six_places(upper) + " (" + to_fraction_string(upper) + ")"};
}

inline Outcome check_norm_counts() {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const auto listed = static_cast<std::int64_t>(enumerate_norm(n).size());
        if (listed != 24 * odd_divisor_sum(n))
            return {false, "enumeration disagrees at N=" + std::to_string(n)};
    }
    const double ratio = static_cast<double>(count_upto(10000)) / (std::numbers::pi * std::numbers::pi * 1e8);
    std::ostringstream os;
    os.precision(8);
    os << "N<=200 enumeration ok; S(10^4)/(pi^2 10^8)=" << ratio;
    return {ratio >= 0.99 && ratio <= 1.01, os.str()};
}

inline Outcome check_ppower_proportions() {
    const auto table = build_norm_count(5000);
    double worst = 0;
    for (std::int64_t p : {2, 3})
        for (unsigned n = 0; n <= 2; ++n)
            worst = std::max(worst, std::abs(empirical_ppower_fraction(table, p, n) -
                                             to_double(proportion_exact_ppower(p, n))));
    bool tails = true;
    for (std::int64_t p : {2, 3, 5, 7})
        for (unsigned cut : {1u, 5u, 20u}) {
            Rational sum = 0;
            for (unsigned n = 0; n < cut; ++n) sum += proportion_exact_ppower(p, n);
            tails = tails && sum + proportion_tail(p, cut) == 1;
        }
    std::ostringstream os;
    os << "max |empirical - exact| = " << worst << " at M=5000; exact tails sum to 1: " << (tails ? "yes" : "no");
    return {worst <= 0.02 && tails, os.str()};
}

inline Outcome check_rankin() {
    const auto est = rankin_density(1000000, 40);
    const double v = static_cast<double>(est.value);
    std::ostringstream os;
    os.precision(10);
    os << "d(Q_Ran) truncated at p<=10^6, n<=40: " << v;
    return {v >= 0.7707 && v <= 0.7717 && v > 0.719745, os.str()};
}

inline Outcome check_annuli(const AnnuliSpec& spec) {
    const bool standard_free = verify_annuli_gp_free(48 * 48, spec);
    AnnuliSpec widened = spec;
    for (auto& iv : widened.intervals)
        if (iv == std::pair<std::int64_t, std::int64_t>{4, 1}) iv = {5, 1};
    const bool mutant_caught = !verify_annuli_gp_free(48 * 48, widened);
    return {standard_free && mutant_caught, std::string("GP-free through max_norm 2304: ") +
                                                (standard_free ? "yes" : "no") +
                                                "; widened (5,1) mutant rejected: " + (mutant_caught ? "yes" : "no")};
}

inline Outcome check_sevens() {
    std::vector<HurwitzInt> sevens;
    for (int s : {1, -1}) {
        sevens.push_back(HurwitzInt::integral(7 * s));
        sevens.push_back(HurwitzInt::integral(0, 7 * s));
        sevens.push_back(HurwitzInt::integral(0, 0, 7 * s));
        sevens.push_back(HurwitzInt::integral(0, 0, 0, 7 * s));
    }
    for (const auto& q : sevens)
        if (is_unit_square_representable(q)) return {false, q.to_string() + " is U R^2"};
    const bool two_i = is_unit_square_representable(HurwitzInt::integral(0, 2)).has_value();
    return {two_i, std::string("no U R^2 form for +-7, +-7i, +-7j, +-7k; 2i representable: ") + (two_i ? "yes" : "no")};
}

inline Outcome check_norm_square_gap() {
    int swept = 0;
    for (std::int64_t n = 1; n <= 500; ++n) {
        if (greatest_odd_divisor(n) <= 23) continue;
        ++swept;
        if (!lemma52_gap(n).holds) return {false, "24 S({n}) >= S({n^2}) at n=" + std::to_string(n)};
    }
    return {true, "24 S({n}) < S({n^2}) for all " + std::to_string(swept) + " n <= 500 with odd part > 23"};
}

inline Outcome check_greedy_hurwitz() {
    const auto base = build_greedy(49);
    std::set<HurwitzInt> reference(base.included.begin(), base.included.end());
    for (int s : {1, -1})
        for (const auto& q : {HurwitzInt::integral(7 * s), HurwitzInt::integral(0, 7 * s),
                              HurwitzInt::integral(0, 0, 7 * s), HurwitzInt::integral(0, 0, 0, 7 * s)})
            if (!reference.contains(q)) return {false, q.to_string() + " missing from the greedy set"};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto shuffled = build_greedy(49, shuffled_shells(seed));
        if (std::set<HurwitzInt>(shuffled.included.begin(), shuffled.included.end()) != reference)
            return {false, "shuffle seed " + std::to_string(seed) + " changed the greedy set"};
    }
    return {true, "norm<=49: " + std::to_string(reference.size()) +
                      " included, +-7/+-7i/+-7j/+-7k present, 10 shuffles agree"};
}

/// Not an acceptance criterion: the longer greedy run, skipped by --quick.
inline Outcome check_greedy_hurwitz_343() {
    const auto big = build_greedy(343);
    std::set<HurwitzInt> members(big.included.begin(), big.included.end());
    for (const auto& [c, w] : big.excluded)
        if (!is_gp_triple(w.first, w.second, c) || !members.contains(w.first) || !members.contains(w.second))
            return {false, "bad witness for " + c.to_string()};
    return {true, "norm<=343: " + std::to_string(big.included.size()) + " included, " +
                      std::to_string(big.excluded.size()) + " excluded, witnesses valid"};
}

inline Outcome check_greedy_a() {
    const auto greedy = greedy_a_bruteforce(729);
    if (!detail::same_set(greedy, 729)) return {false, "greedy A differs from the ternary characterization"};
    int checked = 0;
    for (std::int64_t n = -243; n <= 243; ++n) {
        const auto w = witness_progression(n);
        if (greedy.contains(n)) {
            if (w) return {false, "witness returned for included " + std::to_string(n)};
            continue;
        }
        ++checked;
        if (!w || w->b - w->a != n - w->b || !greedy.contains(w->a) || !greedy.contains(w->b))
            return {false, "bad witness for " + std::to_string(n)};
    }
    const auto w95 = witness_progression(95);
    const auto w47 = witness_progression(-47);
    const bool examples = w95 && w95->a == 55 && w95->b == 75 && w95->r == 20 && w47 && w47->a == 7 &&
                          w47->b == -20 && w47->r == -27;
    return {examples, "A up to 729 matches; " + std::to_string(checked) +
                          " exclusion witnesses valid; n=95 and n=-47 reproduce (55,75,20), (7,-20,-27): " +
                          (examples ? "yes" : "no")};
}

inline Outcome check_greedy_g() {
    std::string detail;
    for (unsigned n = 0; n <= 4; ++n) {
        const std::int64_t bound = pow3(n);
        const auto g = greedy_g_bruteforce(static_cast<std::uint64_t>(2 * bound));
        const std::int64_t words = 2 * (2 * bound) + 1;
        if (static_cast<std::int64_t>(g.size()) != (std::int64_t{1} << (n + 1)) || words != 1 + 4 * bound)
            return {false, "count mismatch at n=" + std::to_string(n)};
        std::set<std::int64_t> image;
        for (const auto& w : g) image.insert(w2_to_int(w));
        if (image != greedy_a_bruteforce(bound)) return {false, "W2 image differs from A at n=" + std::to_string(n)};
        detail += (detail.empty() ? "" : ", ") + std::to_string(g.size()) + "/" + std::to_string(words);
    }
    return {true, "included/words for n=0..4: " + detail + "; images equal A"};
}

inline Outcome check_decay_bracket() {
    std::ostringstream os;
    os.precision(6);
    bool ok = true;
    for (unsigned n = 0; n <= 12; ++n) {
        const double scaled = to_double(density_ratio_a(n)) * std::pow(1.5, n);
        ok = ok && scaled >= 1.3 && scaled <= 2.1;
        if (n == 0 || n == 12) os << "n=" << n << ": " << scaled << (n == 0 ? ", " : "");
    }
    os << " (required in [1.3, 2.1])";
    return {ok, os.str()};
}

/// The eleven acceptance criteria, plus the extended greedy run unless quick.
inline std::vector<Check> checks(const Options& opts = {}) {
    std::vector<Check> out{
        {1, "density bounds 0.946589 / 0.952381", 1.0, check_bounds},
        {2, "norm counts and S(M) asymptotics", 30.0, check_norm_counts},
        {3, "exact p^n divisibility proportions", 0, check_ppower_proportions},
        {4, "Rankin density product", 300.0, check_rankin},
        {5, "annuli GP-freeness and mutation", 60.0, [spec = opts.annuli] { return check_annuli(spec); }},
        {6, "7, 7i, 7j, 7k are not U R^2", 1.0, check_sevens},
        {7, "norm-square gap sweep", 10.0, check_norm_square_gap},
        {8, "greedy Hurwitz set and shuffle invariance", 120.0, check_greedy_hurwitz},
        {9, "greedy AP-free set A and exclusion witnesses", 60.0, check_greedy_a},
        {10, "greedy set G in <x,y> and W2 image", 60.0, check_greedy_g},
        {11, "decay bracket for |A| ratios", 0, check_decay_bracket},
    };
    if (!opts.quick) out.push_back({12, "greedy Hurwitz set through norm 343", 0, check_greedy_hurwitz_343});
    return out;
}

struct Result {
    int id;
    std::string name;
    bool passed;
    double seconds;
    std::string detail;
};

inline Result run_check(const Check& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = c.run();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
        out.passed = false;
        out.detail += " [over time limit " + std::to_string(c.time_limit_s) + " s]";
    }
    return {c.id, c.name, out.passed, secs, out.detail};
}

inline void print_result(std::ostream& os, const Result& r) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f", r.seconds);
    os << (r.passed ? "PASS" : "FAIL") << "  C" << (r.id < 10 ? "0" : "") << r.id << "  " << r.name << "  (" << timing
       << " s)  " << r.detail << '\n';
}

}  // namespace gpfree::acceptance
