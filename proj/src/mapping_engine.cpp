#include "ontomatch/mapping_engine.hpp"

#include <algorithm>

#include "ontomatch/error.hpp"

namespace ontomatch {

const char* to_string(Relation relation) noexcept {
    switch (relation) {
    case Relation::Equivalence: return "equivalence";
    case Relation::Isa: return "isa";
    case Relation::General: return "general";
    }
    return "?";
}

std::optional<Relation> classify_correspondence(EntityKind source, EntityKind target) noexcept {
    if (source == target) return Relation::Equivalence;
    if (is_class_like(source) && is_class_like(target)) return Relation::Isa;
    if ((source == EntityKind::Property && is_class_like(target)) ||
        (target == EntityKind::Property && is_class_like(source))) {
        return Relation::General;
    }
    return std::nullopt;
}

ScoreMatrix build_score_matrix(const EntityGraph& source, const EntityGraph& target, MetricId metric,
                               MetricOptions options) {
    if (source.empty() || target.empty()) {
        throw Error(ErrorCode::EmptyOntology, "cannot score an ontology without entities");
    }
    const SimilarityFn sim = metric_by_id(metric, options);
    ScoreMatrix s;
    s.rows = source.entities();
    s.cols = target.entities();
    s.values = Matrix<double>(s.rows.size(), s.cols.size(), 0.0);
    s.relations = Matrix<std::optional<Relation>>(s.rows.size(), s.cols.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        for (std::size_t j = 0; j < s.cols.size(); ++j) {
            const auto relation = classify_correspondence(s.rows[i].kind, s.cols[j].kind);
            if (!relation) continue;
            s.relations(i, j) = relation;
            s.values(i, j) = sim(s.rows[i].label, s.cols[j].label);
        }
    }
    return s;
}

std::vector<Mapping> mappings_from_assignment(const ScoreMatrix& scores, const Assignment& assignment,
                                              MetricId metric, double threshold) {
    std::vector<Mapping> out;
    for (const auto& [i, j] : assignment.pairs) {
        const auto& relation = scores.relations(i, j);
        const double score = scores.values(i, j);
        if (!relation || score < threshold) continue;
        out.push_back(Mapping{scores.rows[i], scores.cols[j], *relation, metric, score});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Mapping& a, const Mapping& b) { return a.source.id < b.source.id; });
    return out;
}

} // namespace ontomatch
