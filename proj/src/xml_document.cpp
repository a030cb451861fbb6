#include "ontomatch/xml_document.hpp"

#include <algorithm>
#include <memory>

#include <expat.h>

#include "ontomatch/error.hpp"

namespace ontomatch::xml {

namespace {

constexpr char kSeparator = '\x1f';

QName split_name(const XML_Char* raw) {
    std::string_view name(raw);
    const auto sep = name.find(kSeparator);
    if (sep == std::string_view::npos) return QName{{}, std::string(name)};
    return QName{std::string(name.substr(0, sep)), std::string(name.substr(sep + 1))};
}

struct ParserState {
    XML_Parser parser = nullptr;
    Document doc;
    bool have_root = false;
    std::vector<Element*> open;
};

void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
    auto* st = static_cast<ParserState*>(user);
    Element el;
    el.name = split_name(name);
    el.line = XML_GetCurrentLineNumber(st->parser);
    el.column = XML_GetCurrentColumnNumber(st->parser) + 1;
    for (const XML_Char** a = attrs; *a != nullptr; a += 2) {
        el.attributes.push_back(Attribute{split_name(a[0]), std::string(a[1])});
    }
    Element* slot = nullptr;
    if (st->open.empty()) {
        st->doc.root = std::move(el);
        st->have_root = true;
        slot = &st->doc.root;
    } else {
        auto& siblings = st->open.back()->children;
        siblings.push_back(std::move(el));
        slot = &siblings.back();
    }
    st->open.push_back(slot);
}

void on_end(void* user, const XML_Char*) {
    static_cast<ParserState*>(user)->open.pop_back();
}

void on_text(void* user, const XML_Char* s, int len) {
    auto* st = static_cast<ParserState*>(user);
    if (!st->open.empty()) st->open.back()->text.append(s, static_cast<std::size_t>(len));
}

void on_namespace(void* user, const XML_Char*, const XML_Char* uri) {
    auto* st = static_cast<ParserState*>(user);
    if (uri == nullptr) return;
    std::string ns(uri);
    auto& declared = st->doc.declared_namespaces;
    if (std::find(declared.begin(), declared.end(), ns) == declared.end()) declared.push_back(std::move(ns));
}

struct ParserDeleter {
    void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

} // namespace

const Attribute* Element::find_attribute(std::string_view ns, std::string_view local) const {
    for (const auto& a : attributes) {
        if (a.name.ns == ns && a.name.local == local) return &a;
    }
    return nullptr;
}

const Attribute* Element::find_attribute(std::string_view local) const {
    for (const auto& a : attributes) {
        if (a.name.local == local) return &a;
    }
    return nullptr;
}

bool Element::has_text() const {
    return std::any_of(text.begin(), text.end(),
                       [](unsigned char c) { return c != ' ' && c != '\t' && c != '\n' && c != '\r'; });
}

bool Document::declares(std::string_view ns) const {
    return std::find(declared_namespaces.begin(), declared_namespaces.end(), ns) != declared_namespaces.end();
}

Document parse(std::string_view bytes) {
    const bool blank = std::all_of(bytes.begin(), bytes.end(), [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    });
    if (blank) throw ParseError(ErrorCode::EmptyDocument, "document is empty", 1, 1);

    std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreateNS(nullptr, kSeparator));
    if (!parser) throw Error(ErrorCode::Io, "unable to allocate XML parser");

    ParserState st;
    st.parser = parser.get();
    XML_SetUserData(parser.get(), &st);
    XML_SetElementHandler(parser.get(), on_start, on_end);
    XML_SetCharacterDataHandler(parser.get(), on_text);
    XML_SetStartNamespaceDeclHandler(parser.get(), on_namespace);

    // Feed in chunks so inputs larger than INT_MAX are still accepted.
    constexpr std::size_t kChunk = 1 << 20;
    std::size_t offset = 0;
    do {
        const std::size_t len = std::min(kChunk, bytes.size() - offset);
        const bool final = offset + len == bytes.size();
        if (XML_Parse(parser.get(), bytes.data() + offset, static_cast<int>(len), final) == XML_STATUS_ERROR) {
            throw ParseError(ErrorCode::MalformedXml, XML_ErrorString(XML_GetErrorCode(parser.get())),
                             XML_GetCurrentLineNumber(parser.get()),
                             XML_GetCurrentColumnNumber(parser.get()) + 1);
        }
        offset += len;
    } while (offset < bytes.size());

    if (!st.have_root) throw ParseError(ErrorCode::EmptyDocument, "document has no root element", 1, 1);
    return std::move(st.doc);
}

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace ontomatch::xml
