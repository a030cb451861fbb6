#include "ontomatch/ontology_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "ontomatch/error.hpp"

namespace ontomatch {

const char* to_string(FormatKind format) noexcept {
    switch (format) {
    case FormatKind::OwlRdfXml: return "owl";
    case FormatKind::RdfXml: return "rdf";
    case FormatKind::GenericXml: return "xml";
    }
    return "?";
}

FormatKind detect_format(const xml::Document& doc) {
    if (doc.declares(ns::kOwl)) return FormatKind::OwlRdfXml;
    if (doc.declares(ns::kRdf)) return FormatKind::RdfXml;
    return FormatKind::GenericXml;
}

FormatKind detect_format(std::string_view doc) {
    return detect_format(xml::parse(doc));
}

std::string normalize_label(std::string_view raw) {
    const auto cut = raw.find_last_of("#/");
    const std::string_view local = cut == std::string_view::npos ? raw : raw.substr(cut + 1);

    std::string out;
    bool pending_space = false;
    const auto is_upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
    const auto is_lower = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
    const auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    for (std::size_t i = 0; i < local.size(); ++i) {
        const char c = local[i];
        if (c == '_' || c == '-' || std::isspace(static_cast<unsigned char>(c))) {
            pending_space = true;
            continue;
        }
        if (is_upper(c) && i > 0) {
            const char prev = local[i - 1];
            const bool next_lower = i + 1 < local.size() && is_lower(local[i + 1]);
            if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && next_lower)) pending_space = true;
        }
        if (pending_space && !out.empty()) out += ' ';
        pending_space = false;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

namespace {

bool has_scheme(std::string_view ref) {
    if (ref.empty() || !std::isalpha(static_cast<unsigned char>(ref[0]))) return false;
    for (std::size_t i = 1; i < ref.size(); ++i) {
        const char c = ref[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '.' && c != '-') return false;
    }
    return false;
}

std::string strip_fragment(std::string_view uri) {
    return std::string(uri.substr(0, uri.find('#')));
}

std::string resolve(std::string_view ref, std::string_view base) {
    if (has_scheme(ref) || base.empty()) return std::string(ref);
    if (ref.empty()) return strip_fragment(base);
    if (ref.front() == '#') return strip_fragment(base) + std::string(ref);
    const std::string doc = strip_fragment(base);
    const auto slash = doc.rfind('/');
    return (slash == std::string::npos ? std::string() : doc.substr(0, slash + 1)) + std::string(ref);
}

const xml::Attribute* rdf_attr(const xml::Element& el, std::string_view local) {
    return el.find_attribute(ns::kRdf, local);
}

std::string element_base(const xml::Element& el, const std::string& inherited) {
    if (const auto* b = el.find_attribute(xml::kXmlNamespace, "base")) return resolve(b->value, inherited);
    return inherited;
}

// ---------------------------------------------------------------- RDF/XML

struct Description {
    std::string uri;
    std::vector<std::string> types;
    std::vector<std::string> superclasses;
    std::vector<std::string> domains;
};

class RdfCollector {
public:
    explicit RdfCollector(std::string base) : base_(std::move(base)) {}

    void collect(const xml::Element& root) {
        if (root.name.is(ns::kRdf, "RDF")) {
            const std::string base = element_base(root, base_);
            for (const auto& child : root.children) node(child, base);
        } else {
            node(root, base_);
        }
    }

    std::vector<Description>& descriptions() { return descriptions_; }

private:
    // Returns the subject URI of a node element, or nullopt for blank nodes.
    std::optional<std::string> node(const xml::Element& el, const std::string& inherited) {
        const std::string base = element_base(el, inherited);
        std::optional<std::string> subject;
        if (const auto* about = rdf_attr(el, "about")) {
            subject = resolve(about->value, base);
        } else if (const auto* id = rdf_attr(el, "ID")) {
            subject = strip_fragment(base) + "#" + id->value;
        }
        if (!subject) return std::nullopt;
        if (el.name.is(ns::kOwl, "Ontology")) return subject;

        Description& d = describe(*subject);
        if (!el.name.is(ns::kRdf, "Description")) d.types.push_back(el.name.expanded());
        if (const auto* type = rdf_attr(el, "type")) d.types.push_back(resolve(type->value, base));

        for (const auto& prop : el.children) {
            const std::string prop_base = element_base(prop, base);
            std::optional<std::string> object;
            if (const auto* res = rdf_attr(prop, "resource")) {
                object = resolve(res->value, prop_base);
            } else if (rdf_attr(prop, "parseType") == nullptr) {
                for (const auto& nested : prop.children) {
                    auto nested_subject = node(nested, prop_base);
                    if (nested_subject && !object) object = std::move(nested_subject);
                }
            }
            if (!object) continue;
            // describe() may have grown the vector; re-fetch the entry.
            Description& cur = descriptions_[index_.at(*subject)];
            if (prop.name.is(ns::kRdf, "type")) cur.types.push_back(*object);
            else if (prop.name.is(ns::kRdfs, "subClassOf")) cur.superclasses.push_back(*object);
            else if (prop.name.is(ns::kRdfs, "domain")) cur.domains.push_back(*object);
        }
        return subject;
    }

    Description& describe(const std::string& uri) {
        auto [it, inserted] = index_.try_emplace(uri, descriptions_.size());
        if (inserted) descriptions_.push_back(Description{uri, {}, {}, {}});
        return descriptions_[it->second];
    }

    std::string base_;
    std::vector<Description> descriptions_;
    std::unordered_map<std::string, std::size_t> index_;
};

std::optional<std::string> find_ontology_uri(const xml::Element& root, const std::string& base) {
    const auto visit = [&](const xml::Element& el) -> std::optional<std::string> {
        if (!el.name.is(ns::kOwl, "Ontology")) return std::nullopt;
        if (const auto* about = rdf_attr(el, "about")) return resolve(about->value, base);
        return std::nullopt;
    };
    if (auto found = visit(root)) return found;
    for (const auto& child : root.children) {
        if (auto found = visit(child)) return found;
    }
    return std::nullopt;
}

bool is_top_class(std::string_view uri) {
    return uri == std::string(ns::kOwl) + "Thing" || uri == std::string(ns::kRdfs) + "Resource";
}

EntityGraph parse_rdf(const xml::Document& doc) {
    std::string base;
    if (const auto* b = doc.root.find_attribute(xml::kXmlNamespace, "base")) base = b->value;
    const auto ontology = find_ontology_uri(doc.root, base);
    if (base.empty() && ontology && has_scheme(*ontology)) base = *ontology;

    RdfCollector collector(base);
    collector.collect(doc.root);
    auto& descriptions = collector.descriptions();

    const std::string owl(ns::kOwl), rdf(ns::kRdf), rdfs(ns::kRdfs);
    const auto has_type = [](const Description& d, std::initializer_list<std::string> wanted) {
        return std::any_of(d.types.begin(), d.types.end(), [&](const std::string& t) {
            return std::find(wanted.begin(), wanted.end(), t) != wanted.end();
        });
    };

    enum class Role { None, Class, Property, Instance };
    std::vector<Role> roles(descriptions.size(), Role::None);
    std::unordered_map<std::string, std::size_t> class_index;
    for (std::size_t i = 0; i < descriptions.size(); ++i) {
        const auto& d = descriptions[i];
        if (is_top_class(d.uri)) continue;
        if (has_type(d, {owl + "Class", rdfs + "Class"}) || !d.superclasses.empty()) {
            roles[i] = Role::Class;
            class_index.emplace(d.uri, i);
        } else if (has_type(d, {owl + "ObjectProperty", owl + "DatatypeProperty", rdf + "Property"})) {
            roles[i] = Role::Property;
        }
    }
    for (std::size_t i = 0; i < descriptions.size(); ++i) {
        if (roles[i] != Role::None) continue;
        const auto& types = descriptions[i].types;
        if (std::any_of(types.begin(), types.end(), [&](const auto& t) { return class_index.contains(t); })) {
            roles[i] = Role::Instance;
        }
    }

    EntityGraphBuilder builder(ontology.value_or(base));
    std::vector<std::optional<EntityId>> ids(descriptions.size());
    for (std::size_t i = 0; i < descriptions.size(); ++i) {
        const auto& d = descriptions[i];
        std::string label = normalize_label(d.uri);
        switch (roles[i]) {
        case Role::Class: ids[i] = builder.add_class(d.uri, std::move(label)); break;
        case Role::Property: ids[i] = builder.add_property(d.uri, std::move(label)); break;
        case Role::Instance: ids[i] = builder.add_instance(d.uri, std::move(label)); break;
        case Role::None: break;
        }
    }

    const auto class_id = [&](const std::string& uri, const std::string& referrer) -> EntityId {
        auto it = class_index.find(uri);
        if (it == class_index.end()) {
            throw Error(ErrorCode::UnknownReference, "undeclared class " + uri + " referenced by " + referrer);
        }
        return *ids[it->second];
    };

    for (std::size_t i = 0; i < descriptions.size(); ++i) {
        const auto& d = descriptions[i];
        switch (roles[i]) {
        case Role::Class:
            for (const auto& super : d.superclasses) {
                if (is_top_class(super)) continue;
                builder.add_arc(*ids[i], ArcKind::Isa, class_id(super, d.uri));
            }
            break;
        case Role::Property:
            for (const auto& domain : d.domains) {
                if (is_top_class(domain)) continue;
                builder.add_arc(class_id(domain, d.uri), ArcKind::HasProperty, *ids[i]);
            }
            break;
        case Role::Instance:
            for (const auto& type : d.types) {
                if (class_index.contains(type)) builder.add_arc(*ids[i], ArcKind::InstanceOf, class_id(type, d.uri));
            }
            break;
        case Role::None: break;
        }
    }
    return std::move(builder).build();
}

// ------------------------------------------------------------ generic XML

struct XmlNameInfo {
    bool is_property = false;
    bool class_like = false;
    std::vector<std::string> parents;  // element names, first-seen order
    std::vector<std::string> owners;   // for properties
};

class XmlCollector {
public:
    void collect(const xml::Element& root) { visit(root, nullptr); }

    std::vector<std::string>& order() { return order_; }
    std::map<std::string, XmlNameInfo>& info() { return info_; }

private:
    static std::string property_key(const std::string& name) { return "@" + name; }

    XmlNameInfo& entry(const std::string& key) {
        auto [it, inserted] = info_.try_emplace(key);
        if (inserted) order_.push_back(key);
        return it->second;
    }

    static bool skipped_attribute(const xml::Attribute& a) {
        return a.name.ns == xml::kXmlNamespace || a.name.ns == "http://www.w3.org/2001/XMLSchema-instance";
    }

    void visit(const xml::Element& el, const std::string* parent) {
        const std::string name = el.name.local;
        const bool has_attrs = std::any_of(el.attributes.begin(), el.attributes.end(),
                                           [](const auto& a) { return !skipped_attribute(a); });
        const bool text_leaf = parent != nullptr && el.children.empty() && !has_attrs && el.has_text();
        {
            XmlNameInfo& self = entry(name);
            if (!text_leaf) self.class_like = true;
            if (parent != nullptr && *parent != name &&
                std::find(self.parents.begin(), self.parents.end(), *parent) == self.parents.end()) {
                self.parents.push_back(*parent);
            }
        }
        for (const auto& a : el.attributes) {
            if (skipped_attribute(a)) continue;
            XmlNameInfo& prop = entry(property_key(a.name.local));
            prop.is_property = true;
            if (std::find(prop.owners.begin(), prop.owners.end(), name) == prop.owners.end()) {
                prop.owners.push_back(name);
            }
        }
        for (const auto& child : el.children) visit(child, &name);
    }

    std::vector<std::string> order_;
    std::map<std::string, XmlNameInfo> info_;
};

std::string join_uri(std::string_view base, std::string_view name) {
    if (!base.empty() && (base.back() == '#' || base.back() == '/')) return std::string(base) + std::string(name);
    return std::string(base) + "#" + std::string(name);
}

EntityGraph parse_generic_xml(const xml::Document& doc) {
    const auto& root = doc.root;
    std::string ontology_uri;
    if (const auto* b = root.find_attribute(xml::kXmlNamespace, "base")) ontology_uri = b->value;
    else if (!root.name.ns.empty()) ontology_uri = root.name.ns;
    else ontology_uri = "urn:xml:" + root.name.local;

    std::string trimmed = ontology_uri;
    while (!trimmed.empty() && (trimmed.back() == '#' || trimmed.back() == '/')) trimmed.pop_back();
    const std::string attribute_base = trimmed + "/attribute#";

    XmlCollector collector;
    collector.collect(root);

    EntityGraphBuilder builder(ontology_uri);
    std::unordered_map<std::string, EntityId> ids;
    for (const auto& key : collector.order()) {
        const XmlNameInfo& info = collector.info().at(key);
        if (info.is_property) {
            const std::string name = key.substr(1);
            ids.emplace(key, builder.add_property(attribute_base + name, normalize_label(name)));
        } else if (info.class_like) {
            ids.emplace(key, builder.add_class(join_uri(ontology_uri, key), normalize_label(key)));
        } else {
            ids.emplace(key, builder.add_instance(join_uri(ontology_uri, key), normalize_label(key)));
        }
    }
    for (const auto& key : collector.order()) {
        const XmlNameInfo& info = collector.info().at(key);
        const EntityId self = ids.at(key);
        if (info.is_property) {
            for (const auto& owner : info.owners) builder.add_arc(ids.at(owner), ArcKind::HasProperty, self);
        } else {
            const ArcKind kind = info.class_like ? ArcKind::Isa : ArcKind::InstanceOf;
            for (const auto& parent : info.parents) builder.add_arc(self, kind, ids.at(parent));
        }
    }
    return std::move(builder).build();
}

} // namespace

EntityGraph parse_ontology(const xml::Document& doc, FormatKind format) {
    switch (format) {
    case FormatKind::OwlRdfXml:
    case FormatKind::RdfXml: return parse_rdf(doc);
    case FormatKind::GenericXml: return parse_generic_xml(doc);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown format");
}

EntityGraph parse_ontology(std::string_view doc, FormatKind format) {
    return parse_ontology(xml::parse(doc), format);
}

EntityGraph parse_ontology(std::string_view doc) {
    const xml::Document parsed = xml::parse(doc);
    return parse_ontology(parsed, detect_format(parsed));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path.string());
    return buf.str();
}

EntityGraph load_ontology(const std::filesystem::path& path) {
    return parse_ontology(read_file(path));
}

} // namespace ontomatch
