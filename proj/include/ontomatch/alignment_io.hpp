#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontomatch/mapping_engine.hpp"

namespace ontomatch {

inline constexpr std::string_view kAlignmentNamespace = "http://knowledgeweb.semanticweb.org/heterogeneity/alignment#";
inline constexpr std::string_view kFloatDatatype = "http://www.w3.org/2001/XMLSchema#float";
inline constexpr std::string_view kDefaultMethod = "Automated generated";

struct AlignmentHeader {
    std::string xml = "yes";
    std::string level = "0";
    std::string type = "11";
    std::string method = std::string(kDefaultMethod);
    std::string uri1;
    std::string uri2;

    friend bool operator==(const AlignmentHeader&, const AlignmentHeader&) = default;
};

struct AlignmentCell {
    std::string entity1;
    std::string entity2;
    double measure = 0.0;
    /// One of "=", "<", ">", "%".
    std::string relation;

    friend bool operator==(const AlignmentCell&, const AlignmentCell&) = default;
};

struct Alignment {
    AlignmentHeader header;
    std::vector<AlignmentCell> cells;

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// "=" for Equivalence, "%" for General; Isa is "<" when the source is the
/// sub-concept and ">" when the target is.
std::string relation_symbol(const Mapping& mapping);

Alignment to_alignment(const std::vector<Mapping>& mappings, std::string uri1, std::string uri2);

/// Shortest decimal with at most six fractional digits, always keeping one
/// ("1.0", "0.75", "0.666667").
std::string format_measure(double measure);

std::string write_alignment(const Alignment& alignment);
std::string write_alignment(const std::vector<Mapping>& mappings, std::string uri1, std::string uri2);

/// Accepts any document whose elements carry the alignment local names,
/// regardless of their namespace. Throws ParseError for malformed XML and
/// Error with MissingHeaderField, DuplicateHeaderField, MeasureOutOfRange,
/// UnknownRelation or DuplicateCell.
Alignment read_alignment(std::string_view doc);

} // namespace ontomatch
