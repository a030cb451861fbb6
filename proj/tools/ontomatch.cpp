#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ontomatch/pipeline.hpp"

int main(int argc, char** argv) {
    using namespace ontomatch;

    CLI::App app{"Align two ontologies by label similarity and maximum-weight assignment"};
    app.require_subcommand(1);

    MatchConfig match;
    std::string output, dump_dir;
    std::map<std::string, MetricId> metrics;
    for (MetricId id : kAllMetrics) metrics.emplace(metric_name(id), id);

    auto* match_cmd = app.add_subcommand("match", "Match a source ontology against a target ontology");
    match_cmd->add_option("--source", match.source, "Source ontology (OWL, RDF/XML or XML)")->required();
    match_cmd->add_option("--target", match.target, "Target ontology (OWL, RDF/XML or XML)")->required();
    match_cmd->add_option("--metric", match.metric, "Similarity metric")
        ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case))
        ->default_str("levenshtein");
    match_cmd->add_option("--threshold", match.threshold, "Minimum similarity of an emitted cell")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    match_cmd->add_option("--qgram-size", match.qgram_size, "q for the q-gram metric")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    match_cmd->add_option("--output", output, "Alignment file (default: standard output)");
    match_cmd->add_option("--debug-dump", dump_dir, "Directory receiving entity graph dumps");

    std::string system, reference;
    bool strict = false;
    auto* eval_cmd = app.add_subcommand("eval", "Score a system alignment against a reference alignment");
    eval_cmd->add_option("--system", system, "System alignment")->required();
    eval_cmd->add_option("--reference", reference, "Reference alignment")->required();
    eval_cmd->add_flag("--strict-relation", strict, "Require matching relation symbols");

    std::string dump_input, dump_output;
    auto* dump_cmd = app.add_subcommand("dump", "Parse one ontology and print its entity graph");
    dump_cmd->add_option("--input", dump_input, "Ontology file")->required();
    dump_cmd->add_option("--output", dump_output, "Destination (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*match_cmd) {
        match.output = output;
        if (!dump_dir.empty()) match.debug_dump_dir = dump_dir;
        return run_match(match, std::cout, std::cerr);
    }
    if (*eval_cmd) return run_eval(system, reference, strict, std::cout, std::cerr);
    return run_dump(dump_input, dump_output, std::cout, std::cerr);
}
