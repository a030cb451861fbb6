#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace ontomatch {

enum class MetricId { Levenshtein, Qgrams, SmithWaterman, Jaccard };

inline constexpr MetricId kAllMetrics[] = {MetricId::Levenshtein, MetricId::Qgrams, MetricId::SmithWaterman,
                                           MetricId::Jaccard};

/// Command-line name: levenshtein, qgrams, smithwaterman, jaccard.
const char* metric_name(MetricId id) noexcept;
std::optional<MetricId> metric_from_name(std::string_view name);

// All metrics take UTF-8 labels and compare Unicode code points.

/// Minimum number of single-character insertions, deletions and substitutions.
std::size_t levenshtein_edits(std::string_view x, std::string_view y);

/// 1 - edits / max(len(x), len(y)); 1 when both are empty.
double levenshtein_similarity(std::string_view x, std::string_view y);

/// Dice coefficient over the unpadded q-gram multisets:
/// 2 |G(x) & G(y)| / (|G(x)| + |G(y)|); 1 when both multisets are empty.
double qgram_similarity(std::string_view x, std::string_view y, std::size_t q = 2);

/// Best local alignment score (match +2, mismatch -1, gap -1) divided by
/// 2 * min(len(x), len(y)).
double smith_waterman_similarity(std::string_view x, std::string_view y);

/// Jaccard index of the whitespace-separated token sets.
double jaccard_similarity(std::string_view x, std::string_view y);

using SimilarityFn = std::function<double(std::string_view, std::string_view)>;

struct MetricOptions {
    std::size_t qgram_size = 2;
};

SimilarityFn metric_by_id(MetricId id, MetricOptions options = {});

} // namespace ontomatch
