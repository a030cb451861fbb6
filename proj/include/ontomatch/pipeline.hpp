#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ontomatch/alignment_io.hpp"
#include "ontomatch/entity_graph.hpp"
#include "ontomatch/mapping_engine.hpp"
#include "ontomatch/similarity.hpp"

namespace ontomatch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitEmptyInput = 2;
inline constexpr int kExitWriteError = 3;

struct MatchConfig {
    std::filesystem::path source;
    std::filesystem::path target;
    MetricId metric = MetricId::Levenshtein;
    double threshold = 0.5;
    std::size_t qgram_size = 2;
    /// Empty means standard output.
    std::filesystem::path output;
    std::optional<std::filesystem::path> debug_dump_dir;
};

struct MatchOutcome {
    ScoreMatrix scores;
    Assignment assignment;
    std::vector<Mapping> mappings;
};

/// score -> assign -> filter -> alignment, on already parsed graphs.
MatchOutcome match_graphs(const EntityGraph& source, const EntityGraph& target, MetricId metric,
                          MetricOptions options, double threshold);

/// Identifier written into the alignment header for a graph loaded from `path`.
std::string ontology_identifier(const EntityGraph& graph, const std::filesystem::path& path);

/// Exit 0 on success, 1 on unreadable or malformed input, 2 when an
/// ontology has no entities, 3 when an output cannot be written.
int run_match(const MatchConfig& config, std::ostream& out, std::ostream& err);

/// Prints the table and record line for `system` against `reference`.
/// Exit 1 on unreadable or malformed alignments, 2 on an empty reference.
int run_eval(const std::filesystem::path& system, const std::filesystem::path& reference, bool strict_relation,
             std::ostream& out, std::ostream& err);

/// Parses one ontology and prints (or writes) its debug dump.
int run_dump(const std::filesystem::path& input, const std::filesystem::path& output, std::ostream& out,
             std::ostream& err);

} // namespace ontomatch
