#include <set>

#include <gtest/gtest.h>

#include "gpfree/freegroup.hpp"
#include "gpfree/ternary.hpp"

using namespace gpfree;

TEST(Ternary, RoundTrip) {
    for (std::int64_t n = -3000; n <= 3000; ++n) EXPECT_EQ(parse_ternary(to_ternary_string(n)), n);
    EXPECT_EQ(to_ternary_string(95), "10112");
    EXPECT_EQ(to_ternary_string(-47), "-1202");
    EXPECT_EQ(parse_ternary("-22010211"), -5935);
}

TEST(Words, MultiplicationCancels) {
    const auto x = Word::parse("x"), y = Word::parse("y");
    EXPECT_EQ(x * x, Word::identity());
    EXPECT_EQ(Word::parse("xy") * Word::parse("yx"), Word::identity());
    EXPECT_EQ(Word::parse("xyx") * Word::parse("xy"), x);
    EXPECT_EQ(Word::parse("xy") * Word::parse("xy"), Word::parse("xyxy"));
    EXPECT_EQ((x * y).to_string(), "xy");
    EXPECT_THROW(Word::parse("xx"), std::invalid_argument);
}

TEST(Words, EnumerationOrder) {
    const char* expected[] = {"I", "x", "y", "xy", "yx", "xyx", "yxy"};
    for (std::uint64_t i = 1; i <= 7; ++i) {
        EXPECT_EQ(word_at(i).to_string(), expected[i - 1]);
        EXPECT_EQ(index_of(word_at(i)), i);
    }
}

TEST(Words, W2IsIsomorphicToIntegers) {
    // Even-length words up to length 40 against Z, and the product maps to the sum.
    std::vector<Word> even;
    for (std::uint64_t i = 1; i <= 81; ++i)
        if (word_at(i).length() % 2 == 0) even.push_back(word_at(i));
    for (const auto& u : even) {
        EXPECT_EQ(int_to_w2(w2_to_int(u)), u);
        for (const auto& v : even) EXPECT_EQ(w2_to_int(u * v), w2_to_int(u) + w2_to_int(v));
    }
    EXPECT_THROW(w2_to_int(Word::parse("xyx")), std::invalid_argument);
}

TEST(Words, AlternatingIndex) {
    for (std::uint64_t i = 1; i <= 200; ++i) EXPECT_EQ(alt_index(alt_at(i)), i);
}

TEST(GreedyA, MatchesCharacterization) {
    const auto a = greedy_a_bruteforce(729);
    for (std::int64_t n = -729; n <= 729; ++n) EXPECT_EQ(a.contains(n), a_contains(n)) << n;
}

TEST(GreedyG, OddWordsAreExcluded) {
    const auto g = greedy_g_bruteforce(40);
    for (const auto& w : g) EXPECT_EQ(w.length() % 2, 0u) << w.to_string();
}

TEST(GreedyG, ImageIsA) {
    for (unsigned n = 0; n <= 3; ++n) {
        const auto bound = pow3(n);
        const auto g = greedy_g_bruteforce(static_cast<std::uint64_t>(2 * bound));
        std::set<std::int64_t> image;
        for (const auto& w : g) image.insert(w2_to_int(w));
        EXPECT_EQ(image, greedy_a_bruteforce(bound)) << n;
        EXPECT_EQ(Rational(static_cast<std::int64_t>(g.size()), 1 + 4 * bound), density_ratio_g(n));
    }
}

TEST(Density, ClosedForms) {
    EXPECT_EQ(density_ratio_g(1), Rational(4, 13));
    EXPECT_EQ(density_ratio_a(1), Rational(4, 7));
    for (unsigned n = 0; n <= 6; ++n) {
        const auto a = greedy_a_bruteforce(pow3(n));
        EXPECT_EQ(Rational(static_cast<std::int64_t>(a.size()), 1 + 2 * pow3(n)), density_ratio_a(n)) << n;
    }
}

TEST(Density, DecayBound) {
    // |A|-ratio times (3/2)^n stays within [0.6, 1].
    Rational scale = 1;
    for (unsigned n = 0; n <= 30; ++n) {
        const Rational scaled = density_ratio_a(n) * scale;
        EXPECT_GE(scaled, Rational(3, 5)) << n;
        EXPECT_LE(scaled, 1) << n;
        scale *= Rational(3, 2);
    }
}

TEST(Witness, WorkedExamples) {
    const auto w95 = witness_progression(95);
    ASSERT_TRUE(w95);
    EXPECT_EQ(w95->a, 55);
    EXPECT_EQ(w95->b, 75);
    EXPECT_EQ(w95->r, 20);
    const auto w47 = witness_progression(-47);
    ASSERT_TRUE(w47);
    EXPECT_EQ(w47->a, 7);
    EXPECT_EQ(w47->b, -20);
    EXPECT_EQ(w47->r, -27);
    for (const char* text : {"11011", "1112111", "112", "-2201221", "-22010211", "120101", "110111"}) {
        const auto n = parse_ternary(text);
        EXPECT_FALSE(a_contains(n)) << text;
        const auto w = witness_progression(n);
        ASSERT_TRUE(w) << text;
        EXPECT_TRUE(witness_is_valid(n, w->a, w->b)) << text;
        EXPECT_GE(w->exclusion_case, 3) << text;
    }
}

TEST(Witness, EveryExcludedIntegerUpToTwentyThousand) {
    const auto reference = greedy_a_bruteforce(2187);
    for (std::int64_t n = -20000; n <= 20000; ++n) {
        const auto w = witness_progression(n);
        if (a_contains(n)) {
            ASSERT_FALSE(w) << n;
            continue;
        }
        ASSERT_TRUE(w) << n;
        ASSERT_TRUE(witness_is_valid(n, w->a, w->b)) << n;
        if (n >= -2187 && n <= 2187) {
            ASSERT_TRUE(reference.contains(w->a));
            ASSERT_TRUE(reference.contains(w->b));
        }
    }
}

TEST(Witness, IncludedCases) {
    for (std::int64_t n : {0, 1, 3, 9, 7, -2, -8, -6}) {
        EXPECT_TRUE(a_contains(n)) << n;
        EXPECT_FALSE(witness_progression(n).has_value()) << n;
        EXPECT_LE(ternary_case(n), 2) << n;
    }
}
