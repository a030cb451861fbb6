#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontomatch::xml {

inline constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

/// Namespace-resolved name. `ns` is empty for names without a namespace.
struct QName {
    std::string ns;
    std::string local;

    bool is(std::string_view namespace_uri, std::string_view local_name) const {
        return ns == namespace_uri && local == local_name;
    }
    std::string expanded() const { return ns + local; }

    friend bool operator==(const QName&, const QName&) = default;
};

struct Attribute {
    QName name;
    std::string value;
};

struct Element {
    QName name;
    std::vector<Attribute> attributes;
    std::vector<Element> children;
    /// Character data appearing directly inside this element, concatenated.
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;

    const Attribute* find_attribute(std::string_view ns, std::string_view local) const;
    /// Looks an attribute up by local name, ignoring its namespace.
    const Attribute* find_attribute(std::string_view local) const;
    bool has_text() const;
};

struct Document {
    Element root;
    /// Every namespace URI bound anywhere in the document, in declaration order.
    std::vector<std::string> declared_namespaces;

    bool declares(std::string_view ns) const;
};

/// Parses a well-formed XML document. Throws ParseError(MalformedXml) with
/// the expat position on syntax errors and ParseError(EmptyDocument) when
/// the input holds no element at all.
Document parse(std::string_view bytes);

/// Escapes the five predefined entities.
std::string escape(std::string_view text);

} // namespace ontomatch::xml
