#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ontomatch/matrix.hpp"

namespace ontomatch {

enum class EntityKind { Concept, SubConcept, Property, Instance };

enum class ArcKind { Isa, InstanceOf, HasProperty };

const char* to_string(EntityKind kind) noexcept;
const char* to_string(ArcKind kind) noexcept;

inline bool is_class_like(EntityKind kind) noexcept {
    return kind == EntityKind::Concept || kind == EntityKind::SubConcept;
}

/// Position of an entity inside its graph. Stable for the lifetime of the graph.
struct EntityId {
    std::size_t value = 0;

    friend auto operator<=>(const EntityId&, const EntityId&) = default;
};

struct Entity {
    EntityId id;
    std::string uri;
    std::string label;
    EntityKind kind = EntityKind::Concept;

    friend bool operator==(const Entity&, const Entity&) = default;
};

struct Arc {
    EntityId source;
    ArcKind kind = ArcKind::Isa;
    EntityId target;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Typed graph of one ontology. Immutable once built; construct through
/// EntityGraphBuilder, which enforces the structural invariants.
class EntityGraph {
public:
    EntityGraph() = default;

    const std::vector<Entity>& entities() const noexcept { return entities_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::string& ontology_uri() const noexcept { return ontology_uri_; }

    std::size_t size() const noexcept { return entities_.size(); }
    bool empty() const noexcept { return entities_.empty(); }

    const Entity& entity(EntityId id) const { return entities_.at(id.value); }
    std::optional<EntityId> find_by_uri(std::string_view uri) const;

private:
    friend class EntityGraphBuilder;

    std::string ontology_uri_;
    std::vector<Entity> entities_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::string, std::size_t> by_uri_;
};

/// Accumulates declarations in document order. Class-like nodes are
/// classified as Concept or SubConcept in build() from their Isa arcs.
class EntityGraphBuilder {
public:
    explicit EntityGraphBuilder(std::string ontology_uri = {});

    EntityId add_class(std::string uri, std::string label);
    EntityId add_property(std::string uri, std::string label);
    EntityId add_instance(std::string uri, std::string label);

    /// Repeated arcs are ignored.
    void add_arc(EntityId source, ArcKind kind, EntityId target);

    std::optional<EntityId> find_by_uri(std::string_view uri) const;
    std::size_t size() const noexcept { return graph_.entities_.size(); }

    /// Throws Error(InvalidArc) on mistyped arcs and Error(IsaCycle) on a
    /// cycle of Isa arcs.
    EntityGraph build() &&;

private:
    EntityId add(std::string uri, std::string label, EntityKind kind);

    EntityGraph graph_;
    std::set<std::tuple<std::size_t, int, std::size_t>> seen_arcs_;
};

/// Re-checks every graph invariant. Throws Error on the first violation.
void validate(const EntityGraph& graph);

/// matrix(i, j) == 1 iff some arc runs from entity i to entity j.
Matrix<std::uint8_t> adjacency_matrix(const EntityGraph& graph);

std::vector<Entity> entities_of_kind(const EntityGraph& graph, EntityKind kind);

/// Line-oriented text rendering used for manual inspection:
///
///   CONCEPT <label> <uri>
///   SUBCONCEPT <label> <uri> ISA <parent-label>
///   PROPERTY <label> <uri> OF <owner-label>
///   INSTANCE <label> <uri> INSTANCEOF <concept-label>
///   ARC <src-label> <ISA|INSTANCEOF|HASPROPERTY> <dst-label>
///
/// Spaces inside labels are written as '_' (normalized labels never contain
/// '_'), spaces inside URIs as "%20". A property with no domain omits the
/// trailing "OF <owner-label>".
std::string dump_debug(const EntityGraph& graph);

/// Inverse of dump_debug. ARC endpoints are resolved to the first entity
/// carrying the label, so graphs with repeated labels may not survive a
/// round trip unchanged.
EntityGraph parse_debug_dump(std::string_view text);

} // namespace ontomatch
