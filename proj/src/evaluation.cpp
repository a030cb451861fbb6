#include "ontomatch/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <tuple>

#include "ontomatch/error.hpp"

namespace ontomatch {

std::size_t correct_mappings(const Alignment& system, const Alignment& reference, EvalOptions options) {
    std::set<std::tuple<std::string, std::string, std::string>> wanted;
    for (const auto& c : reference.cells) {
        wanted.emplace(c.entity1, c.entity2, options.strict_relation ? c.relation : std::string());
    }
    std::set<std::tuple<std::string, std::string, std::string>> counted;
    for (const auto& c : system.cells) {
        auto key = std::make_tuple(c.entity1, c.entity2, options.strict_relation ? c.relation : std::string());
        if (wanted.contains(key)) counted.insert(std::move(key));
    }
    return counted.size();
}

double precision(std::size_t correct, std::size_t system_total) {
    if (correct > system_total) throw Error(ErrorCode::InvalidArgument, "more correct mappings than produced");
    if (system_total == 0) return 0.0;
    return static_cast<double>(correct) / static_cast<double>(system_total);
}

double recall(std::size_t correct, std::size_t reference_total) {
    if (reference_total == 0) throw Error(ErrorCode::EmptyReference, "reference alignment has no cells");
    if (correct > reference_total) throw Error(ErrorCode::InvalidArgument, "more correct mappings than expected");
    return static_cast<double>(correct) / static_cast<double>(reference_total);
}

double f_measure(double p, double r) {
    if (p + r == 0.0) return 0.0;
    return 2.0 * p * r / (p + r);
}

EvalReport evaluate(const Alignment& system, const Alignment& reference, EvalOptions options) {
    EvalReport rep;
    rep.correct = correct_mappings(system, reference, options);
    rep.system_total = system.cells.size();
    rep.reference_total = reference.cells.size();
    rep.recall = recall(rep.correct, rep.reference_total);
    rep.precision = precision(rep.correct, rep.system_total);
    rep.f_measure = f_measure(rep.precision, rep.recall);
    return rep;
}

CategoryAverage category_average(const std::vector<OntologyReport>& reports, Category category) {
    CategoryAverage avg;
    std::size_t count = 0;
    for (const auto& r : reports) {
        const bool selected = category == Category::All ||
                              (category == Category::Light && r.weight == WeightClass::Light) ||
                              (category == Category::Heavy && r.weight == WeightClass::Heavy);
        if (!selected) continue;
        avg.precision += r.report.precision;
        avg.recall += r.report.recall;
        avg.f_measure += r.report.f_measure;
        ++count;
    }
    if (count == 0) throw Error(ErrorCode::EmptyCategory, "no ontology falls in the requested category");
    const auto n = static_cast<double>(count);
    avg.precision /= n;
    avg.recall /= n;
    avg.f_measure /= n;
    return avg;
}

std::string render_table(const std::vector<OntologyReport>& reports) {
    std::size_t width = 8;
    for (const auto& r : reports) width = std::max(width, r.ontology.size());
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-*s  %-7s  %-7s  %-7s\n", static_cast<int>(width), "ontology", "P", "R", "F");
    out += buf;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%-*s  %.5f  %.5f  %.5f\n", static_cast<int>(width), r.ontology.c_str(),
                      r.report.precision, r.report.recall, r.report.f_measure);
        out += buf;
    }
    return out;
}

std::string render_records(const std::vector<OntologyReport>& reports) {
    std::string out;
    char buf[128];
    for (const auto& r : reports) {
        out += "ontology=" + r.ontology;
        std::snprintf(buf, sizeof buf, " correct=%zu system=%zu reference=%zu precision=%.5f recall=%.5f f_measure=%.5f\n",
                      r.report.correct, r.report.system_total, r.report.reference_total, r.report.precision,
                      r.report.recall, r.report.f_measure);
        out += buf;
    }
    return out;
}

} // namespace ontomatch
