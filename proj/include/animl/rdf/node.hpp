#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace animl::rdf {

// Namespace IRIs for the vocabularies the toolkit traffics in. `odp` is the
// collection-pattern namespace used for membership; it is bound in exactly
// one place (here) so it can be re-pointed if a deployment uses a different
// collection ODP IRI.
namespace ns {
inline constexpr std::string_view aml = "http://www.w3id.org/animl/ontology/";
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view odp =
    "http://www.ontologydesignpatterns.org/cp/owl/collectionentity.owl#";
inline constexpr std::string_view skos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view shacl = "http://www.w3.org/ns/shacl#";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace ns

enum class TermKind { Literal, Iri, Blank };

/// Escapes a string for use inside a double-quoted N-Triples literal.
inline std::string escape_literal(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (unsigned char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    static const char* hex = "0123456789ABCDEF";
                    out += "\\u00";
                    out += hex[(c >> 4) & 0xF];
                    out += hex[c & 0xF];
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

/// One RDF term: an IRI, a labelled (skolemized) blank node, or a literal.
///
/// Nodes are immutable values. Ordering is lexicographic over the canonical
/// N-Triples rendering, which is precomputed at construction; this makes every
/// sorted container of nodes or triples come out in serialization order.
class Node {
    struct Raw {};
    explicit Node(Raw) {}

public:
    Node() : kind_(TermKind::Iri), value_("urn:animl:uninitialized"),
             repr_("<urn:animl:uninitialized>") {}

    static Node iri(std::string value) {
        if (value.find(':') == std::string::npos) {
            throw std::invalid_argument("IRI is not absolute (no scheme separator): " + value);
        }
        Node n{Raw{}};
        n.kind_ = TermKind::Iri;
        n.value_ = std::move(value);
        n.repr_ = "<" + n.value_ + ">";
        return n;
    }

    static Node blank(std::string label) {
        if (label.empty()) {
            throw std::invalid_argument("blank node label must not be empty");
        }
        Node n{Raw{}};
        n.kind_ = TermKind::Blank;
        n.value_ = std::move(label);
        n.repr_ = "_:" + n.value_;
        return n;
    }

    static Node literal(std::string lexical, std::string datatype = std::string(ns::xsd_string)) {
        if (datatype == ns::rdf_lang_string) {
            throw std::invalid_argument("language-string literal requires a language tag");
        }
        Node n{Raw{}};
        n.kind_ = TermKind::Literal;
        n.value_ = std::move(lexical);
        n.datatype_ = std::move(datatype);
        n.repr_ = "\"" + escape_literal(n.value_) + "\"";
        if (n.datatype_ != ns::xsd_string) {
            n.repr_ += "^^<" + n.datatype_ + ">";
        }
        return n;
    }

    static Node lang_literal(std::string lexical, std::string language) {
        if (language.empty()) {
            throw std::invalid_argument("language tag must not be empty");
        }
        Node n{Raw{}};
        n.kind_ = TermKind::Literal;
        n.value_ = std::move(lexical);
        n.datatype_ = ns::rdf_lang_string;
        n.language_ = std::move(language);
        n.repr_ = "\"" + escape_literal(n.value_) + "\"@" + n.language_;
        return n;
    }

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_blank() const { return kind_ == TermKind::Blank; }
    bool is_literal() const { return kind_ == TermKind::Literal; }

    /// IRI string, blank label, or literal lexical form depending on kind.
    const std::string& value() const { return value_; }
    /// Datatype IRI; meaningful for literals only.
    const std::string& datatype() const { return datatype_; }
    /// Language tag; non-empty only for rdf:langString literals.
    const std::string& language() const { return language_; }

    /// Canonical N-Triples rendering (xsd:string datatype left implicit).
    const std::string& ntriples() const { return repr_; }

    friend bool operator==(const Node& a, const Node& b) { return a.repr_ == b.repr_; }
    friend std::strong_ordering operator<=>(const Node& a, const Node& b) {
        return a.repr_ <=> b.repr_;
    }

private:
    TermKind kind_ = TermKind::Iri;
    std::string value_;
    std::string datatype_;
    std::string language_;
    std::string repr_;
};

struct Triple {
    Node subject;
    Node predicate;
    Node object;

    std::string ntriples() const {
        return subject.ntriples() + " " + predicate.ntriples() + " " + object.ntriples() + " .";
    }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Match pattern; an unset position is a wildcard.
struct TriplePattern {
    std::optional<Node> subject;
    std::optional<Node> predicate;
    std::optional<Node> object;
};

}  // namespace animl::rdf
