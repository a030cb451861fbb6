#include "ontomatch/similarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "ontomatch/error.hpp"

namespace ontomatch {

namespace {

// Lenient UTF-8 decoding: a malformed byte decodes to itself.
std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        std::size_t len = 1;
        char32_t cp = b0;
        if (b0 >= 0xC0 && b0 < 0xE0) { len = 2; cp = b0 & 0x1F; }
        else if (b0 >= 0xE0 && b0 < 0xF0) { len = 3; cp = b0 & 0x0F; }
        else if (b0 >= 0xF0 && b0 < 0xF8) { len = 4; cp = b0 & 0x07; }
        bool ok = len > 1 && i + len <= s.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) ok = false;
            else cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok) { len = 1; cp = b0; }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::size_t edit_distance(const std::u32string& a, const std::u32string& b) {
    const std::u32string& shorter = a.size() < b.size() ? a : b;
    const std::u32string& longer = a.size() < b.size() ? b : a;
    std::vector<std::size_t> row(shorter.size() + 1);
    for (std::size_t j = 0; j <= shorter.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= longer.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= shorter.size(); ++j) {
            const std::size_t up = row[j];
            const std::size_t sub = diag + (longer[i - 1] == shorter[j - 1] ? 0 : 1);
            row[j] = std::min({up + 1, row[j - 1] + 1, sub});
            diag = up;
        }
    }
    return row[shorter.size()];
}

std::map<std::u32string, std::size_t> qgrams(const std::u32string& s, std::size_t q) {
    std::map<std::u32string, std::size_t> grams;
    if (s.size() < q) return grams;
    for (std::size_t i = 0; i + q <= s.size(); ++i) ++grams[s.substr(i, q)];
    return grams;
}

std::set<std::string> tokens(std::string_view s) {
    std::set<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string t; in >> t;) out.insert(std::move(t));
    return out;
}

} // namespace

const char* metric_name(MetricId id) noexcept {
    switch (id) {
    case MetricId::Levenshtein: return "levenshtein";
    case MetricId::Qgrams: return "qgrams";
    case MetricId::SmithWaterman: return "smithwaterman";
    case MetricId::Jaccard: return "jaccard";
    }
    return "?";
}

std::optional<MetricId> metric_from_name(std::string_view name) {
    for (MetricId id : kAllMetrics) {
        if (name == metric_name(id)) return id;
    }
    return std::nullopt;
}

std::size_t levenshtein_edits(std::string_view x, std::string_view y) {
    return edit_distance(decode_utf8(x), decode_utf8(y));
}

double levenshtein_similarity(std::string_view x, std::string_view y) {
    const auto a = decode_utf8(x);
    const auto b = decode_utf8(y);
    const std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

double qgram_similarity(std::string_view x, std::string_view y, std::size_t q) {
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "q-gram size must be positive");
    const auto gx = qgrams(decode_utf8(x), q);
    const auto gy = qgrams(decode_utf8(y), q);
    std::size_t total = 0, shared = 0;
    for (const auto& [gram, count] : gx) {
        total += count;
        if (auto it = gy.find(gram); it != gy.end()) shared += std::min(count, it->second);
    }
    for (const auto& [gram, count] : gy) total += count;
    if (total == 0) return 1.0;
    return 2.0 * static_cast<double>(shared) / static_cast<double>(total);
}

double smith_waterman_similarity(std::string_view x, std::string_view y) {
    constexpr long kMatch = 2, kMismatch = -1, kGap = -1;
    const auto a = decode_utf8(x);
    const auto b = decode_utf8(y);
    if (a.empty() || b.empty()) return a.empty() && b.empty() ? 1.0 : 0.0;

    std::vector<long> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    long best = 0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const long diag = prev[j - 1] + (a[i - 1] == b[j - 1] ? kMatch : kMismatch);
            cur[j] = std::max({0L, diag, prev[j] + kGap, cur[j - 1] + kGap});
            best = std::max(best, cur[j]);
        }
        std::swap(prev, cur);
    }
    const auto bound = kMatch * static_cast<long>(std::min(a.size(), b.size()));
    return static_cast<double>(best) / static_cast<double>(bound);
}

double jaccard_similarity(std::string_view x, std::string_view y) {
    const auto tx = tokens(x);
    const auto ty = tokens(y);
    if (tx.empty() && ty.empty()) return 1.0;
    std::size_t shared = 0;
    for (const auto& t : tx) shared += ty.count(t);
    const std::size_t unioned = tx.size() + ty.size() - shared;
    return static_cast<double>(shared) / static_cast<double>(unioned);
}

SimilarityFn metric_by_id(MetricId id, MetricOptions options) {
    switch (id) {
    case MetricId::Levenshtein: return levenshtein_similarity;
    case MetricId::Qgrams: {
        if (options.qgram_size == 0) throw Error(ErrorCode::InvalidArgument, "q-gram size must be positive");
        return [q = options.qgram_size](std::string_view x, std::string_view y) { return qgram_similarity(x, y, q); };
    }
    case MetricId::SmithWaterman: return smith_waterman_similarity;
    case MetricId::Jaccard: return jaccard_similarity;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown metric");
}

} // namespace ontomatch
