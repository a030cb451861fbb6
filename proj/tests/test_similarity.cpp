#include <gtest/gtest.h>

#include <random>

#include "ontomatch/error.hpp"
#include "ontomatch/similarity.hpp"
#include "support/oracles.hpp"

using namespace ontomatch;

namespace {

std::string random_string(std::mt19937& rng, std::string_view alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alphabet.size() - 1);
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
    return s;
}

} // namespace

TEST(Levenshtein, Edits) {
    EXPECT_EQ(levenshtein_edits("car", "cars"), 1u);
    EXPECT_EQ(levenshtein_edits("car", "car"), 0u);
    EXPECT_EQ(levenshtein_edits("kitten", "sitting"), 3u);
    EXPECT_EQ(levenshtein_edits("", "abc"), 3u);
    EXPECT_EQ(levenshtein_edits("café", "cafe"), 1u);
}

TEST(Levenshtein, AgreesWithLatticeOracleOnShortStrings) {
    std::vector<std::string> words{""};
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<std::string> next;
        for (const auto& w : words) {
            if (w.size() != len - 1) continue;
            for (char c : {'a', 'b', 'c'}) next.push_back(w + c);
        }
        words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& x : words) {
        for (const auto& y : words) {
            ASSERT_EQ(levenshtein_edits(x, y), test_support::lattice_edit_distance(x, y)) << x << " / " << y;
        }
    }
}

TEST(Levenshtein, TriangleInequality) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto x = random_string(rng, "abcd", 8);
        const auto y = random_string(rng, "abcd", 8);
        const auto z = random_string(rng, "abcd", 8);
        EXPECT_LE(levenshtein_edits(x, z), levenshtein_edits(x, y) + levenshtein_edits(y, z));
    }
}

TEST(Levenshtein, Similarity) {
    EXPECT_DOUBLE_EQ(levenshtein_similarity("car", "cars"), 0.75);
    EXPECT_DOUBLE_EQ(levenshtein_similarity("ab", "cd"), 0.0);
    EXPECT_DOUBLE_EQ(levenshtein_similarity("", ""), 1.0);
    EXPECT_DOUBLE_EQ(levenshtein_similarity("blood pressure", "blood pressure"), 1.0);
}

TEST(Qgrams, Similarity) {
    EXPECT_DOUBLE_EQ(qgram_similarity("car", "cars"), 0.8);
    EXPECT_DOUBLE_EQ(qgram_similarity("ab", "xy"), 0.0);
    EXPECT_DOUBLE_EQ(qgram_similarity("", ""), 1.0);
    EXPECT_DOUBLE_EQ(qgram_similarity("a", "b"), 1.0);  // both below q: two empty multisets
    EXPECT_DOUBLE_EQ(qgram_similarity("a", "ab"), 0.0);
    // multiset semantics: "aaa" -> {aa, aa}, "aa" -> {aa}
    EXPECT_DOUBLE_EQ(qgram_similarity("aaa", "aa"), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(qgram_similarity("cars", "bars", 3), 0.5);
    EXPECT_THROW(qgram_similarity("a", "b", 0), Error);
}

TEST(SmithWaterman, Similarity) {
    EXPECT_DOUBLE_EQ(smith_waterman_similarity("car", "cars"), 1.0);
    EXPECT_DOUBLE_EQ(smith_waterman_similarity("aaa", "bbb"), 0.0);
    EXPECT_DOUBLE_EQ(smith_waterman_similarity("", ""), 1.0);
    EXPECT_DOUBLE_EQ(smith_waterman_similarity("", "a"), 0.0);
    // best local alignment "ab" scores 4 out of 2*3
    EXPECT_DOUBLE_EQ(smith_waterman_similarity("abx", "zab"), 4.0 / 6.0);
    // "acb" vs "ab": a-match, gap, b-match = 2 - 1 + 2 = 3 out of 4
    EXPECT_DOUBLE_EQ(smith_waterman_similarity("acb", "ab"), 3.0 / 4.0);
}

TEST(Jaccard, Similarity) {
    EXPECT_DOUBLE_EQ(jaccard_similarity("blood pressure", "blood sugar"), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(jaccard_similarity("alpha", "beta"), 0.0);
    EXPECT_DOUBLE_EQ(jaccard_similarity("", ""), 1.0);
    EXPECT_DOUBLE_EQ(jaccard_similarity("a b a", "b a"), 1.0);
}

TEST(Metrics, ById) {
    EXPECT_DOUBLE_EQ(metric_by_id(MetricId::Levenshtein)("car", "cars"), 0.75);
    EXPECT_DOUBLE_EQ(metric_by_id(MetricId::Jaccard)("same words", "same words"), 1.0);
    EXPECT_DOUBLE_EQ(metric_by_id(MetricId::Qgrams)("car", "cars"), 0.8);
    EXPECT_DOUBLE_EQ(metric_by_id(MetricId::Qgrams, {3})("car", "cars"), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(metric_by_id(MetricId::SmithWaterman)("car", "cars"), 1.0);
    EXPECT_THROW(metric_by_id(MetricId::Qgrams, {0}), Error);
}

TEST(Metrics, Names) {
    for (MetricId id : kAllMetrics) EXPECT_EQ(metric_from_name(metric_name(id)), id);
    EXPECT_EQ(metric_name(MetricId::SmithWaterman), std::string("smithwaterman"));
    EXPECT_FALSE(metric_from_name("cosine").has_value());
}

TEST(Metrics, RangeSymmetryIdentity) {
    std::mt19937 rng(17);
    for (MetricId id : kAllMetrics) {
        const auto sim = metric_by_id(id);
        for (int trial = 0; trial < 2000; ++trial) {
            const auto x = random_string(rng, "abc de", 10);
            const auto y = random_string(rng, "abc de", 10);
            const double s = sim(x, y);
            ASSERT_GE(s, 0.0) << metric_name(id);
            ASSERT_LE(s, 1.0) << metric_name(id);
            ASSERT_NEAR(s, sim(y, x), 1e-9) << metric_name(id) << " '" << x << "' '" << y << "'";
            ASSERT_NEAR(sim(x, x), 1.0, 1e-9) << metric_name(id) << " '" << x << "'";
        }
    }
}
