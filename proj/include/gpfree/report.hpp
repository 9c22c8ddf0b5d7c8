#pragma once

// JSON and CSV renderings of every computation. Keys keep insertion order and
// decimals carry at most 12 significant digits, so identical inputs give
// byte-identical output.

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpfree/density.hpp"
#include "gpfree/enumeration.hpp"
#include "gpfree/freegroup.hpp"
#include "gpfree/greedy.hpp"
#include "gpfree/hurwitz.hpp"
#include "gpfree/rational.hpp"
#include "gpfree/ternary.hpp"

namespace gpfree::report {

using json = nlohmann::ordered_json;

inline double decimal12(const Rational& r) { return round_significant(to_double(r)); }
inline double decimal12(const Decimal50& x) { return round_significant(static_cast<double>(x)); }

inline json rational_json(const Rational& r) {
    json j;
    j["decimal"] = decimal12(r);
    j["exact"] = to_fraction_string(r);
    return j;
}

inline json envelope(json inputs, const std::string& provenance) {
    json j;
    j["inputs"] = std::move(inputs);
    j["provenance"] = provenance;
    return j;
}

inline json count_report(std::int64_t norm_value) {
    json j = envelope({{"norm", norm_value}}, "norm shell count: 24 x sum of odd divisors");
    j["count"] = count_norm_exact(norm_value);
    j["odd_divisor_sum"] = odd_divisor_sum(norm_value);
    return j;
}

inline json count_upto_report(std::int64_t bound) {
    json j = envelope({{"upto", bound}}, "cumulative count S(M) ~ pi^2 M^2");
    const auto total = count_upto(bound);
    const double scale = 9.869604401089358 * static_cast<double>(bound) * static_cast<double>(bound);
    j["count"] = total;
    j["ratio_to_pi2_m2"] = round_significant(static_cast<double>(total) / scale);
    return j;
}

inline json enumerate_report(std::int64_t norm_value) {
    const auto elements = enumerate_norm(norm_value);
    json j = envelope({{"norm", norm_value}}, "lattice enumeration of one norm shell");
    j["count"] = elements.size();
    json list = json::array();
    for (const auto& q : elements) list.push_back(q.to_string());
    j["elements"] = std::move(list);
    return j;
}

inline json bounds_report() {
    json j = envelope(json::object(), "annuli lower bound and norm-2 chain upper bound on m_Hur");
    const Rational lower = lower_bound_density();
    const Rational upper = upper_bound_density(std::nullopt);
    const Rational upper_two = upper_bound_density(2u);
    j["lower"] = decimal12(lower);
    j["upper"] = decimal12(upper);
    j["lower_exact"] = to_fraction_string(lower);
    j["upper_exact"] = to_fraction_string(upper);
    j["upper_two_terms"] = rational_json(upper_two);
    return j;
}

inline json density_estimate_json(const DensityEstimate& est) {
    json j;
    j["value"] = decimal12(est.value);
    j["value_50"] = fixed_decimal(est.value, 48);
    if (est.truncation) {
        j["truncation"] = {{"max_prime", est.truncation->max_prime}, {"max_exponent", est.truncation->max_exponent}};
    } else {
        j["truncation"] = "exact";
    }
    j["direction"] = to_string(est.direction);
    if (est.exact) j["exact"] = to_fraction_string(*est.exact);
    j["factors"] = est.factors;
    return j;
}

inline json rankin_report(std::int64_t max_prime, unsigned max_exponent) {
    json j = envelope({{"max_prime", max_prime}, {"max_exponent", max_exponent}}, "Euler product for the density of Q_Ran");
    const auto est = rankin_density(max_prime, max_exponent);
    const json body = density_estimate_json(est);
    for (const auto& [key, value] : body.items()) j[key] = value;
    j["two_factor"] = rational_json(rankin_two_factor(max_exponent));
    return j;
}

inline std::string intervals_string(const AnnuliSpec& spec) {
    std::string out;
    for (const auto& [lo, hi] : spec.intervals) {
        if (!out.empty()) out += ",";
        out += std::to_string(lo) + ":" + std::to_string(hi);
    }
    return out;
}

inline json annuli_report(std::int64_t max_norm, const AnnuliSpec& spec) {
    json j = envelope({{"max_norm", max_norm}, {"intervals", intervals_string(spec)}}, "GP-freeness of the annuli norm set");
    const auto members = annuli_norm_set(max_norm, spec);
    const auto hit = find_norm_progression(members);
    json scales = json::array();
    for (auto m : spec.scales_upto(max_norm)) scales.push_back(m);
    j["scales"] = std::move(scales);
    std::int64_t covered = 0;
    for (bool b : members) covered += b ? 1 : 0;
    j["norms_in_set"] = covered;
    j["gp_free"] = !hit.has_value();
    if (hit) {
        const auto [n, k] = *hit;
        j["counterexample"] = {n, n * k, n * k * k};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

inline json greedy_report_json(const GreedyReport& report) {
    json j = envelope({{"max_norm", report.max_norm}}, "greedy GP-free set of Hurwitz quaternions");
    json per_norm = json::array();
    for (std::int64_t n = 1; n <= report.max_norm; ++n) {
        json entry;
        entry["norm"] = n;
        json members = json::array();
        for (const auto& q : report.included)
            if (norm(q) == n) members.push_back(q.to_string());
        entry["included_count"] = members.size();
        entry["included"] = std::move(members);
        per_norm.push_back(std::move(entry));
    }
    j["included_total"] = report.included.size();
    j["excluded_total"] = report.excluded.size();
    j["by_norm"] = std::move(per_norm);
    json excluded = json::array();
    for (const auto& [q, w] : report.excluded)
        excluded.push_back({{"element", q.to_string()},
                            {"a", w.first.to_string()},
                            {"b", w.second.to_string()},
                            {"ratio", w.ratio.to_string()}});
    j["excluded"] = std::move(excluded);
    return j;
}

inline void greedy_report_csv(const GreedyReport& report, std::ostream& os) {
    os << "norm,element,status,a,b,ratio\n";
    std::size_t inc = 0, exc = 0;
    // Merge the two lists back into processing order (norm, then lexicographic).
    while (inc < report.included.size() || exc < report.excluded.size()) {
        const bool take_inc =
            exc >= report.excluded.size() ||
            (inc < report.included.size() &&
             std::make_pair(norm(report.included[inc]), report.included[inc]) <
                 std::make_pair(norm(report.excluded[exc].first), report.excluded[exc].first));
        if (take_inc) {
            const auto& q = report.included[inc++];
            os << norm(q) << ",\"" << q << "\",included,,,\n";
        } else {
            const auto& [q, w] = report.excluded[exc++];
            os << norm(q) << ",\"" << q << "\",excluded,\"" << w.first << "\",\"" << w.second << "\",\""
               << w.ratio << "\"\n";
        }
    }
}

inline json freegroup_greedy_report(std::uint64_t max_len) {
    json j = envelope({{"max_len", max_len}}, "greedy GP-free set in <x, y : x^2 = y^2 = 1>");
    const auto g = greedy_g_bruteforce(max_len);
    json words = json::array();
    json images = json::array();
    for (const auto& w : g) {
        words.push_back(w.to_string());
        images.push_back(w2_to_int(w));
    }
    j["word_count"] = 2 * max_len + 1;
    j["included_count"] = g.size();
    j["included"] = std::move(words);
    j["w2_images"] = std::move(images);
    return j;
}

inline json freegroup_density_report(unsigned n) {
    json j = envelope({{"n", n}}, "counting ratios of the greedy sets G and A");
    j["ratio_g"] = rational_json(density_ratio_g(n));
    j["ratio_a"] = rational_json(density_ratio_a(n));
    j["length_bound"] = 2 * pow3(n);
    return j;
}

inline const char* to_string(WitnessSource s) { return s == WitnessSource::digit_rule ? "digit_rule" : "carry_search"; }

inline json freegroup_witness_report(std::int64_t n) {
    json j = envelope({{"n", n}, {"n_ternary", to_ternary_string(n)}}, "exclusion progression for the greedy AP-free set A");
    j["case"] = ternary_case(n);
    j["in_A"] = a_contains(n);
    const auto w = witness_progression(n);
    if (!w) {
        j["witness"] = nullptr;
        return j;
    }
    j["witness"] = {{"a", w->a},
                    {"b", w->b},
                    {"r", w->r},
                    {"a_ternary", to_ternary_string(w->a)},
                    {"b_ternary", to_ternary_string(w->b)},
                    {"r_ternary", to_ternary_string(w->r)},
                    {"source", to_string(w->source)}};
    return j;
}

}  // namespace gpfree::report
