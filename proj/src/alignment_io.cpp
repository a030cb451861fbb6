#include "ontomatch/alignment_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include "ontomatch/error.hpp"
#include "ontomatch/ontology_ingest.hpp"
#include "ontomatch/xml_document.hpp"

namespace ontomatch {

std::string relation_symbol(const Mapping& mapping) {
    switch (mapping.relation) {
    case Relation::Equivalence: return "=";
    case Relation::General: return "%";
    case Relation::Isa: return mapping.source.kind == EntityKind::SubConcept ? "<" : ">";
    }
    return "=";
}

Alignment to_alignment(const std::vector<Mapping>& mappings, std::string uri1, std::string uri2) {
    Alignment a;
    a.header.uri1 = std::move(uri1);
    a.header.uri2 = std::move(uri2);
    a.cells.reserve(mappings.size());
    for (const Mapping& m : mappings) {
        a.cells.push_back(AlignmentCell{m.source.uri, m.target.uri, m.score, relation_symbol(m)});
    }
    return a;
}

std::string format_measure(double measure) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", measure);
    std::string s(buf);
    while (s.size() > 2 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
    return s;
}

std::string write_alignment(const Alignment& alignment) {
    const auto& h = alignment.header;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n"
        << "<rdf:RDF xmlns=\"" << kAlignmentNamespace << "\"\n"
        << "         xmlns:rdf=\"" << ns::kRdf << "\"\n"
        << "         xmlns:xsd=\"http://www.w3.org/2001/XMLSchema#\"\n"
        << "         xml:base=\"" << kAlignmentNamespace << "\">\n"
        << "<Alignment>\n"
        << "  <xml>" << xml::escape(h.xml) << "</xml>\n"
        << "  <level>" << xml::escape(h.level) << "</level>\n"
        << "  <type>" << xml::escape(h.type) << "</type>\n"
        << "  <method>" << xml::escape(h.method) << "</method>\n"
        << "  <onto1></onto1>\n"
        << "  <onto2></onto2>\n"
        << "  <uri1>" << xml::escape(h.uri1) << "</uri1>\n"
        << "  <uri2>" << xml::escape(h.uri2) << "</uri2>\n";
    for (const AlignmentCell& c : alignment.cells) {
        out << "  <map>\n"
            << "    <Cell>\n"
            << "      <entity1 rdf:resource=\"" << xml::escape(c.entity1) << "\"/>\n"
            << "      <entity2 rdf:resource=\"" << xml::escape(c.entity2) << "\"/>\n"
            << "      <measure rdf:datatype=\"" << kFloatDatatype << "\">" << format_measure(c.measure)
            << "</measure>\n"
            << "      <relation>" << xml::escape(c.relation) << "</relation>\n"
            << "    </Cell>\n"
            << "  </map>\n";
    }
    out << "</Alignment>\n"
        << "</rdf:RDF>\n";
    return out.str();
}

std::string write_alignment(const std::vector<Mapping>& mappings, std::string uri1, std::string uri2) {
    return write_alignment(to_alignment(mappings, std::move(uri1), std::move(uri2)));
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

const xml::Element* find_alignment(const xml::Element& el) {
    if (el.name.local == "Alignment") return &el;
    for (const auto& child : el.children) {
        if (const auto* found = find_alignment(child)) return found;
    }
    return nullptr;
}

std::string entity_uri(const xml::Element& el) {
    if (const auto* res = el.find_attribute("resource")) return res->value;
    return trim(el.text);
}

double parse_measure(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw Error(ErrorCode::MeasureOutOfRange, "measure '" + text + "' is not a number in [0, 1]");
    }
    return value;
}

AlignmentCell read_cell(const xml::Element& cell) {
    std::optional<std::string> e1, e2, relation;
    std::optional<double> measure;
    for (const auto& field : cell.children) {
        const auto& name = field.name.local;
        if (name == "entity1") e1 = entity_uri(field);
        else if (name == "entity2") e2 = entity_uri(field);
        else if (name == "measure") measure = parse_measure(trim(field.text));
        else if (name == "relation") relation = trim(field.text);
    }
    const auto missing = [&](const char* what) {
        return Error(ErrorCode::MissingHeaderField,
                     std::string("cell at line ") + std::to_string(cell.line) + " has no " + what);
    };
    if (!e1) throw missing("entity1");
    if (!e2) throw missing("entity2");
    if (!relation) throw missing("relation");
    static const std::set<std::string> kSymbols = {"=", "<", ">", "%"};
    if (!kSymbols.contains(*relation)) {
        throw Error(ErrorCode::UnknownRelation, "unknown relation symbol '" + *relation + "'");
    }
    return AlignmentCell{std::move(*e1), std::move(*e2), measure.value_or(1.0), std::move(*relation)};
}

void collect_cells(const xml::Element& el, std::vector<const xml::Element*>& out) {
    for (const auto& child : el.children) {
        if (child.name.local == "Cell") out.push_back(&child);
        else if (child.name.local == "map") collect_cells(child, out);
    }
}

} // namespace

Alignment read_alignment(std::string_view doc) {
    const xml::Document parsed = xml::parse(doc);
    const xml::Element* root = find_alignment(parsed.root);
    if (root == nullptr) throw Error(ErrorCode::MissingHeaderField, "document has no Alignment element");

    Alignment a;
    struct Field {
        const char* name;
        std::string* slot;
        bool seen = false;
    };
    Field fields[] = {{"xml", &a.header.xml}, {"level", &a.header.level}, {"type", &a.header.type},
                      {"method", &a.header.method}, {"uri1", &a.header.uri1}, {"uri2", &a.header.uri2}};
    for (const auto& child : root->children) {
        for (Field& f : fields) {
            if (child.name.local != f.name) continue;
            if (f.seen) throw Error(ErrorCode::DuplicateHeaderField, std::string("header field repeated: ") + f.name);
            f.seen = true;
            *f.slot = trim(child.text);
        }
    }
    for (const Field& f : fields) {
        if (!f.seen) throw Error(ErrorCode::MissingHeaderField, std::string("header field missing: ") + f.name);
    }

    std::vector<const xml::Element*> cells;
    collect_cells(*root, cells);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto* el : cells) {
        AlignmentCell cell = read_cell(*el);
        if (!seen.emplace(cell.entity1, cell.entity2).second) {
            throw Error(ErrorCode::DuplicateCell, "duplicate cell " + cell.entity1 + " -> " + cell.entity2);
        }
        a.cells.push_back(std::move(cell));
    }
    return a;
}

} // namespace ontomatch
