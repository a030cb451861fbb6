#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ontomatch/entity_graph.hpp"
#include "ontomatch/xml_document.hpp"

namespace ontomatch {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
} // namespace ns

enum class FormatKind { OwlRdfXml, RdfXml, GenericXml };

const char* to_string(FormatKind format) noexcept;

/// Decided from the namespaces the document binds, never from a file name:
/// OWL bound -> OwlRdfXml, RDF bound without OWL -> RdfXml, otherwise GenericXml.
FormatKind detect_format(std::string_view doc);
FormatKind detect_format(const xml::Document& doc);

/// Builds the entity graph of one ontology document.
///
/// RDF/XML (with or without OWL):
///   - owl:Class / rdfs:Class, or any resource carrying rdfs:subClassOf,
///     becomes a class-like entity with Isa arcs to its superclasses.
///   - owl:ObjectProperty / owl:DatatypeProperty / rdf:Property becomes a
///     Property, linked by HasProperty from every rdfs:domain class.
///   - a resource typed with a declared class becomes an Instance.
///   - blank nodes and restriction bodies are skipped; owl:Thing and
///     rdfs:Resource as superclass or domain are ignored.
///
/// Generic XML: the root element is a Concept, nested element names are
/// SubConcepts of their enclosing element, attributes are Properties of
/// their element, and text-only leaves are Instances of their parent.
/// Repeated names merge into one entity.
///
/// Throws ParseError for malformed XML and Error with IsaCycle, EmptyLabel
/// or UnknownReference naming the offending URI.
EntityGraph parse_ontology(std::string_view doc, FormatKind format);
EntityGraph parse_ontology(const xml::Document& doc, FormatKind format);

/// detect_format followed by parse_ontology.
EntityGraph parse_ontology(std::string_view doc);

std::string read_file(const std::filesystem::path& path);

EntityGraph load_ontology(const std::filesystem::path& path);

/// Local name of a URI (text after the last '#' or '/'), split at camelCase
/// humps, '_' and '-', lower-cased, single-spaced. Empty when nothing remains.
std::string normalize_label(std::string_view raw);

} // namespace ontomatch
