#include "ontomatch/pipeline.hpp"

#include <fstream>
#include <future>
#include <ostream>

#include "ontomatch/error.hpp"
#include "ontomatch/evaluation.hpp"
#include "ontomatch/ontology_ingest.hpp"

namespace ontomatch {

namespace {

bool write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return false;
    file << text;
    file.flush();
    return static_cast<bool>(file);
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::EmptyOntology:
    case ErrorCode::EmptyReference: return kExitEmptyInput;
    default: return kExitParseError;
    }
}

} // namespace

MatchOutcome match_graphs(const EntityGraph& source, const EntityGraph& target, MetricId metric,
                          MetricOptions options, double threshold) {
    MatchOutcome outcome;
    outcome.scores = build_score_matrix(source, target, metric, options);
    outcome.assignment = kuhn_munkres(outcome.scores.values);
    outcome.mappings = mappings_from_assignment(outcome.scores, outcome.assignment, metric, threshold);
    return outcome;
}

std::string ontology_identifier(const EntityGraph& graph, const std::filesystem::path& path) {
    if (!graph.ontology_uri().empty()) return graph.ontology_uri();
    return path.generic_string();
}

int run_match(const MatchConfig& config, std::ostream& out, std::ostream& err) {
    if (config.threshold < 0.0 || config.threshold > 1.0) {
        err << "ontomatch: threshold must lie in [0, 1]\n";
        return kExitParseError;
    }
    EntityGraph source, target;
    {
        auto source_job = std::async(std::launch::async, [&] { return load_ontology(config.source); });
        auto target_job = std::async(std::launch::async, [&] { return load_ontology(config.target); });
        const auto collect = [&](std::future<EntityGraph>& job, const std::filesystem::path& path,
                                 EntityGraph& slot) -> int {
            try {
                slot = job.get();
                return kExitOk;
            } catch (const Error& e) {
                err << "ontomatch: " << path.string() << ": " << e.what() << '\n';
                return kExitParseError;
            }
        };
        const int source_status = collect(source_job, config.source, source);
        const int target_status = collect(target_job, config.target, target);
        if (source_status != kExitOk) return source_status;
        if (target_status != kExitOk) return target_status;
    }

    if (config.debug_dump_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*config.debug_dump_dir, ec);
        if (ec || !write_text(*config.debug_dump_dir / "source.dump.txt", dump_debug(source)) ||
            !write_text(*config.debug_dump_dir / "target.dump.txt", dump_debug(target))) {
            err << "ontomatch: cannot write debug dumps to " << config.debug_dump_dir->string() << '\n';
            return kExitWriteError;
        }
    }

    MatchOutcome outcome;
    try {
        outcome = match_graphs(source, target, config.metric, MetricOptions{config.qgram_size}, config.threshold);
    } catch (const Error& e) {
        err << "ontomatch: " << e.what() << '\n';
        return exit_code_for(e);
    }
    const std::string doc = write_alignment(outcome.mappings, ontology_identifier(source, config.source),
                                            ontology_identifier(target, config.target));
    if (config.output.empty()) {
        out << doc;
        return out ? kExitOk : kExitWriteError;
    }
    if (!write_text(config.output, doc)) {
        err << "ontomatch: cannot write " << config.output.string() << '\n';
        return kExitWriteError;
    }
    return kExitOk;
}

int run_eval(const std::filesystem::path& system, const std::filesystem::path& reference, bool strict_relation,
             std::ostream& out, std::ostream& err) {
    Alignment sys, ref;
    for (auto [path, slot] : {std::pair{&system, &sys}, std::pair{&reference, &ref}}) {
        try {
            *slot = read_alignment(read_file(*path));
        } catch (const Error& e) {
            err << "ontomatch: " << path->string() << ": " << e.what() << '\n';
            return kExitParseError;
        }
    }
    try {
        const EvalReport report = evaluate(sys, ref, EvalOptions{strict_relation});
        const std::vector<OntologyReport> rows{{system.stem().string(), WeightClass::Light, report}};
        out << render_table(rows) << render_records(rows);
    } catch (const Error& e) {
        err << "ontomatch: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitOk;
}

int run_dump(const std::filesystem::path& input, const std::filesystem::path& output, std::ostream& out,
             std::ostream& err) {
    std::string text;
    try {
        text = dump_debug(load_ontology(input));
    } catch (const Error& e) {
        err << "ontomatch: " << input.string() << ": " << e.what() << '\n';
        return kExitParseError;
    }
    if (output.empty()) {
        out << text;
        return kExitOk;
    }
    if (!write_text(output, text)) {
        err << "ontomatch: cannot write " << output.string() << '\n';
        return kExitWriteError;
    }
    return kExitOk;
}

} // namespace ontomatch
