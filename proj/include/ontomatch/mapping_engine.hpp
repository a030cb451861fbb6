#pragma once

#include <optional>
#include <vector>

#include "ontomatch/assignment.hpp"
#include "ontomatch/entity_graph.hpp"
#include "ontomatch/matrix.hpp"
#include "ontomatch/similarity.hpp"

namespace ontomatch {

enum class Relation { Equivalence, Isa, General };

const char* to_string(Relation relation) noexcept;

/// Equivalence for equal kinds, Isa for SubConcept against Concept (either
/// side), General for Property against a class-like kind (either side),
/// nullopt for every other pairing.
std::optional<Relation> classify_correspondence(EntityKind source, EntityKind target) noexcept;

/// One correspondence (x, y, r, t) plus its similarity.
struct Mapping {
    Entity source;
    Entity target;
    Relation relation = Relation::Equivalence;
    MetricId metric = MetricId::Levenshtein;
    double score = 0.0;

    friend bool operator==(const Mapping&, const Mapping&) = default;
};

/// Rows are source entities, columns target entities, both in graph order.
/// Cells whose kinds have no correspondence relation hold 0 and nullopt.
struct ScoreMatrix {
    std::vector<Entity> rows;
    std::vector<Entity> cols;
    Matrix<double> values;
    Matrix<std::optional<Relation>> relations;
};

/// Throws Error(EmptyOntology) when either graph has no entities.
ScoreMatrix build_score_matrix(const EntityGraph& source, const EntityGraph& target, MetricId metric,
                               MetricOptions options = {});

/// Keeps the assigned cells scoring at least `threshold` that carry a
/// relation, in source order.
std::vector<Mapping> mappings_from_assignment(const ScoreMatrix& scores, const Assignment& assignment,
                                              MetricId metric, double threshold);

} // namespace ontomatch
