#include "ontomatch/entity_graph.hpp"

#include <algorithm>
#include <sstream>

#include "ontomatch/error.hpp"

namespace ontomatch {

const char* to_string(EntityKind kind) noexcept {
    switch (kind) {
    case EntityKind::Concept: return "CONCEPT";
    case EntityKind::SubConcept: return "SUBCONCEPT";
    case EntityKind::Property: return "PROPERTY";
    case EntityKind::Instance: return "INSTANCE";
    }
    return "?";
}

const char* to_string(ArcKind kind) noexcept {
    switch (kind) {
    case ArcKind::Isa: return "ISA";
    case ArcKind::InstanceOf: return "INSTANCEOF";
    case ArcKind::HasProperty: return "HASPROPERTY";
    }
    return "?";
}

std::optional<EntityId> EntityGraph::find_by_uri(std::string_view uri) const {
    auto it = by_uri_.find(std::string(uri));
    if (it == by_uri_.end()) return std::nullopt;
    return EntityId{it->second};
}

EntityGraphBuilder::EntityGraphBuilder(std::string ontology_uri) {
    graph_.ontology_uri_ = std::move(ontology_uri);
}

EntityId EntityGraphBuilder::add(std::string uri, std::string label, EntityKind kind) {
    if (label.empty()) {
        throw Error(ErrorCode::EmptyLabel, "entity has an empty label: " + uri);
    }
    if (graph_.by_uri_.contains(uri)) {
        throw Error(ErrorCode::DuplicateEntity, "entity declared twice: " + uri);
    }
    const EntityId id{graph_.entities_.size()};
    graph_.by_uri_.emplace(uri, id.value);
    graph_.entities_.push_back(Entity{id, std::move(uri), std::move(label), kind});
    return id;
}

EntityId EntityGraphBuilder::add_class(std::string uri, std::string label) {
    return add(std::move(uri), std::move(label), EntityKind::Concept);
}

EntityId EntityGraphBuilder::add_property(std::string uri, std::string label) {
    return add(std::move(uri), std::move(label), EntityKind::Property);
}

EntityId EntityGraphBuilder::add_instance(std::string uri, std::string label) {
    return add(std::move(uri), std::move(label), EntityKind::Instance);
}

void EntityGraphBuilder::add_arc(EntityId source, ArcKind kind, EntityId target) {
    const auto n = graph_.entities_.size();
    if (source.value >= n || target.value >= n) {
        throw Error(ErrorCode::UnknownReference, "arc endpoint does not name an entity");
    }
    if (seen_arcs_.emplace(source.value, static_cast<int>(kind), target.value).second) {
        graph_.arcs_.push_back(Arc{source, kind, target});
    }
}

std::optional<EntityId> EntityGraphBuilder::find_by_uri(std::string_view uri) const {
    return graph_.find_by_uri(uri);
}

EntityGraph EntityGraphBuilder::build() && {
    for (const Arc& arc : graph_.arcs_) {
        if (arc.kind == ArcKind::Isa) {
            graph_.entities_[arc.source.value].kind = EntityKind::SubConcept;
        }
    }
    validate(graph_);
    seen_arcs_.clear();
    return std::move(graph_);
}

namespace {

void check_arc_typing(const EntityGraph& graph, const Arc& arc) {
    const Entity& src = graph.entity(arc.source);
    const Entity& dst = graph.entity(arc.target);
    bool ok = false;
    switch (arc.kind) {
    case ArcKind::Isa:
        ok = src.kind == EntityKind::SubConcept && is_class_like(dst.kind);
        break;
    case ArcKind::InstanceOf:
        ok = src.kind == EntityKind::Instance && is_class_like(dst.kind);
        break;
    case ArcKind::HasProperty:
        ok = is_class_like(src.kind) && dst.kind == EntityKind::Property;
        break;
    }
    if (!ok) {
        throw Error(ErrorCode::InvalidArc, std::string("ill-typed ") + to_string(arc.kind) + " arc from " +
                                               src.uri + " to " + dst.uri);
    }
}

void check_isa_acyclic(const EntityGraph& graph) {
    const std::size_t n = graph.size();
    std::vector<std::vector<std::size_t>> parents(n);
    for (const Arc& arc : graph.arcs()) {
        if (arc.kind == ArcKind::Isa) parents[arc.source.value].push_back(arc.target.value);
    }
    // 0 = unvisited, 1 = on stack, 2 = finished
    std::vector<std::uint8_t> state(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        stack.emplace_back(start, 0);
        state[start] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < parents[node].size()) {
                const std::size_t parent = parents[node][next++];
                if (state[parent] == 1) {
                    throw Error(ErrorCode::IsaCycle,
                                "subclass cycle through " + graph.entities()[parent].uri);
                }
                if (state[parent] == 0) {
                    state[parent] = 1;
                    stack.emplace_back(parent, 0);
                }
            } else {
                state[node] = 2;
                stack.pop_back();
            }
        }
    }
}

} // namespace

void validate(const EntityGraph& graph) {
    const auto& entities = graph.entities();
    for (std::size_t i = 0; i < entities.size(); ++i) {
        if (entities[i].id.value != i) {
            throw Error(ErrorCode::InvalidArgument, "entity id out of sequence: " + entities[i].uri);
        }
        if (entities[i].label.empty()) {
            throw Error(ErrorCode::EmptyLabel, "entity has an empty label: " + entities[i].uri);
        }
    }
    std::set<std::tuple<std::size_t, int, std::size_t>> seen;
    std::vector<bool> has_isa(entities.size(), false);
    for (const Arc& arc : graph.arcs()) {
        if (arc.source.value >= entities.size() || arc.target.value >= entities.size()) {
            throw Error(ErrorCode::UnknownReference, "arc endpoint does not name an entity");
        }
        if (!seen.emplace(arc.source.value, static_cast<int>(arc.kind), arc.target.value).second) {
            throw Error(ErrorCode::InvalidArc, "duplicate arc from " + graph.entity(arc.source).uri);
        }
        if (arc.kind == ArcKind::Isa) has_isa[arc.source.value] = true;
        check_arc_typing(graph, arc);
    }
    for (const Entity& e : entities) {
        if (e.kind == EntityKind::SubConcept && !has_isa[e.id.value]) {
            throw Error(ErrorCode::InvalidArc, "sub-concept without a parent: " + e.uri);
        }
    }
    check_isa_acyclic(graph);
}

Matrix<std::uint8_t> adjacency_matrix(const EntityGraph& graph) {
    Matrix<std::uint8_t> m(graph.size(), graph.size(), 0);
    for (const Arc& arc : graph.arcs()) m(arc.source.value, arc.target.value) = 1;
    return m;
}

std::vector<Entity> entities_of_kind(const EntityGraph& graph, EntityKind kind) {
    std::vector<Entity> out;
    for (const Entity& e : graph.entities()) {
        if (e.kind == kind) out.push_back(e);
    }
    return out;
}

namespace {

std::string encode_label(std::string_view label) {
    std::string out(label);
    std::replace(out.begin(), out.end(), ' ', '_');
    return out;
}

std::string decode_label(std::string_view token) {
    std::string out(token);
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

std::string encode_uri(std::string_view uri) {
    std::string out;
    out.reserve(uri.size());
    for (char c : uri) {
        if (c == ' ') out += "%20";
        else out += c;
    }
    return out;
}

std::optional<EntityId> first_target(const EntityGraph& graph, EntityId source, ArcKind kind) {
    for (const Arc& arc : graph.arcs()) {
        if (arc.source == source && arc.kind == kind) return arc.target;
    }
    return std::nullopt;
}

} // namespace

std::string dump_debug(const EntityGraph& graph) {
    std::ostringstream out;
    for (const Entity& e : graph.entities()) {
        out << to_string(e.kind) << ' ' << encode_label(e.label) << ' ' << encode_uri(e.uri);
        std::optional<EntityId> link;
        const char* keyword = nullptr;
        switch (e.kind) {
        case EntityKind::Concept:
            break;
        case EntityKind::SubConcept:
            link = first_target(graph, e.id, ArcKind::Isa);
            keyword = "ISA";
            break;
        case EntityKind::Instance:
            link = first_target(graph, e.id, ArcKind::InstanceOf);
            keyword = "INSTANCEOF";
            break;
        case EntityKind::Property:
            // Owner is the source of a HasProperty arc into this property.
            for (const Arc& arc : graph.arcs()) {
                if (arc.kind == ArcKind::HasProperty && arc.target == e.id) {
                    link = arc.source;
                    break;
                }
            }
            keyword = "OF";
            break;
        }
        if (link) out << ' ' << keyword << ' ' << encode_label(graph.entity(*link).label);
        out << '\n';
    }
    for (const Arc& arc : graph.arcs()) {
        out << "ARC " << encode_label(graph.entity(arc.source).label) << ' ' << to_string(arc.kind) << ' '
            << encode_label(graph.entity(arc.target).label) << '\n';
    }
    return out.str();
}

EntityGraph parse_debug_dump(std::string_view text) {
    EntityGraphBuilder builder;
    std::unordered_map<std::string, EntityId> by_label;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(std::move(t));
        const auto fail = [&](const std::string& why) {
            return Error(ErrorCode::InvalidArgument,
                         "debug dump line " + std::to_string(line_no) + ": " + why);
        };
        if (tok[0] == "ARC") {
            if (tok.size() != 4) throw fail("expected ARC <src> <kind> <dst>");
            const auto src = by_label.find(decode_label(tok[1]));
            const auto dst = by_label.find(decode_label(tok[3]));
            if (src == by_label.end() || dst == by_label.end()) throw fail("unknown arc endpoint");
            ArcKind kind;
            if (tok[2] == "ISA") kind = ArcKind::Isa;
            else if (tok[2] == "INSTANCEOF") kind = ArcKind::InstanceOf;
            else if (tok[2] == "HASPROPERTY") kind = ArcKind::HasProperty;
            else throw fail("unknown arc kind " + tok[2]);
            builder.add_arc(src->second, kind, dst->second);
            continue;
        }
        if (tok.size() != 3 && tok.size() != 5) throw fail("unexpected field count");
        std::string label = decode_label(tok[1]);
        EntityId id;
        if (tok[0] == "CONCEPT" || tok[0] == "SUBCONCEPT") id = builder.add_class(tok[2], label);
        else if (tok[0] == "PROPERTY") id = builder.add_property(tok[2], label);
        else if (tok[0] == "INSTANCE") id = builder.add_instance(tok[2], label);
        else throw fail("unknown record " + tok[0]);
        by_label.try_emplace(std::move(label), id);
    }
    return std::move(builder).build();
}

} // namespace ontomatch
