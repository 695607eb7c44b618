#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "animl/diag.hpp"
#include "animl/rdf/graph.hpp"

namespace animl::rdf {

enum class Format { Turtle, NTriples };

namespace detail {

inline bool pname_local_ok(std::string_view local) {
    if (local.empty()) return false;
    auto head = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto tail = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    };
    if (!head(local.front())) return false;
    for (char c : local.substr(1)) {
        if (!tail(c)) return false;
    }
    return local.back() != '.';
}

/// Renders an IRI as a prefixed name when some bound namespace covers it and
/// the remainder is a safe local name; falls back to <...> otherwise.
inline std::string turtle_iri(const std::string& iri, const Graph& g) {
    const std::string* best_ns = nullptr;
    const std::string* best_prefix = nullptr;
    for (const auto& [prefix, ns_iri] : g.prefixes()) {
        if (ns_iri.empty() || iri.size() <= ns_iri.size()) continue;
        if (iri.compare(0, ns_iri.size(), ns_iri) != 0) continue;
        if (best_ns && ns_iri.size() <= best_ns->size()) continue;
        if (!pname_local_ok(std::string_view(iri).substr(ns_iri.size()))) continue;
        best_ns = &ns_iri;
        best_prefix = &prefix;
    }
    if (best_ns) {
        return *best_prefix + ":" + iri.substr(best_ns->size());
    }
    return "<" + iri + ">";
}

inline std::string turtle_term(const Node& n, const Graph& g) {
    switch (n.kind()) {
        case TermKind::Iri:
            return turtle_iri(n.value(), g);
        case TermKind::Blank:
            return n.ntriples();
        case TermKind::Literal:
            if (n.datatype() == ns::xsd_string || !n.language().empty()) {
                return n.ntriples();
            }
            return "\"" + escape_literal(n.value()) + "\"^^" + turtle_iri(n.datatype(), g);
    }
    return n.ntriples();
}

}  // namespace detail

/// Deterministic serialization: triples in canonical order, one per line.
/// Identical graphs produce byte-identical output.
inline std::string serialize(const Graph& g, Format format) {
    std::string out;
    if (format == Format::NTriples) {
        for (const Triple& t : g.triples()) {
            out += t.ntriples();
            out += '\n';
        }
        return out;
    }
    static const std::string rdf_type = std::string(ns::rdf) + "type";
    for (const auto& [prefix, iri] : g.prefixes()) {
        out += "@prefix " + prefix + ": <" + iri + "> .\n";
    }
    if (!g.prefixes().empty() && !g.triples().empty()) {
        out += '\n';
    }
    for (const Triple& t : g.triples()) {
        out += detail::turtle_term(t.subject, g);
        out += ' ';
        if (t.predicate.is_iri() && t.predicate.value() == rdf_type) {
            out += 'a';
        } else {
            out += detail::turtle_term(t.predicate, g);
        }
        out += ' ';
        out += detail::turtle_term(t.object, g);
        out += " .\n";
    }
    return out;
}

namespace detail {

/// Recursive-descent reader for the Turtle subset used by the toolkit:
/// @prefix directives, IRIs, prefixed names, labelled blank nodes, the `a`
/// keyword, predicate-object and object lists, string literals with datatype
/// or language tag, and bare numeric/boolean literals. N-Triples documents
/// are a syntactic subset and go through the same machinery.
class TurtleReader {
public:
    TurtleReader(std::string_view text, Graph& out) : text_(text), out_(out) {}

    void run() {
        skip_ws();
        while (!eof()) {
            if (peek() == '@') {
                directive();
            } else {
                statement();
            }
            skip_ws();
        }
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        get();
    }

    void directive() {
        // Only @prefix is part of the subset.
        std::string word;
        get();  // '@'
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            word += get();
        }
        if (word != "prefix") {
            fail("unsupported directive '@" + word + "'");
        }
        skip_ws();
        std::string prefix;
        while (!eof() && peek() != ':') {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) break;
            prefix += get();
        }
        expect(':');
        skip_ws();
        if (eof() || peek() != '<') fail("expected IRI in @prefix");
        std::string iri = iriref();
        expect('.');
        out_.bind_prefix(prefix, iri);
    }

    std::string iriref() {
        get();  // '<'
        std::string iri;
        while (true) {
            if (eof()) fail("unterminated IRI");
            char c = get();
            if (c == '>') break;
            if (c == '\n') fail("newline inside IRI");
            iri += c;
        }
        return iri;
    }

    Node pname() {
        std::string prefix;
        while (!eof() && peek() != ':') {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '#') {
                fail("expected ':' in prefixed name");
            }
            prefix += get();
        }
        if (eof()) fail("expected ':' in prefixed name");
        get();  // ':'
        std::string local;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == '.') {
                // A '.' directly before whitespace/EOF terminates the statement.
                if (c == '.') {
                    std::size_t next = pos_ + 1;
                    if (next >= text_.size() ||
                        !(std::isalnum(static_cast<unsigned char>(text_[next])) ||
                          text_[next] == '_' || text_[next] == '-' || text_[next] == '.')) {
                        break;
                    }
                }
                local += get();
            } else {
                break;
            }
        }
        auto it = out_.prefixes().find(prefix);
        if (it == out_.prefixes().end()) {
            fail("undefined prefix '" + prefix + "'");
        }
        return Node::iri(it->second + local);
    }

    Node blank() {
        get();  // '_'
        if (eof() || peek() != ':') fail("expected ':' after '_' in blank node");
        get();
        std::string label;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                label += get();
            } else {
                break;
            }
        }
        if (label.empty()) fail("empty blank node label");
        return Node::blank(label);
    }

    std::string quoted_string() {
        get();  // '"'
        std::string s;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = get();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("dangling escape in string literal");
                char e = get();
                switch (e) {
                    case 't': s += '\t'; break;
                    case 'n': s += '\n'; break;
                    case 'r': s += '\r'; break;
                    case 'b': s += '\b'; break;
                    case 'f': s += '\f'; break;
                    case '"': s += '"'; break;
                    case '\'': s += '\''; break;
                    case '\\': s += '\\'; break;
                    case 'u': s += unicode_escape(4); break;
                    case 'U': s += unicode_escape(8); break;
                    default: fail(std::string("unknown escape '\\") + e + "'");
                }
            } else {
                s += c;
            }
        }
        return s;
    }

    std::string unicode_escape(int digits) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof()) fail("truncated unicode escape");
            char c = get();
            cp <<= 4;
            if (c >= '0' && c <= '9') cp |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') cp |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') cp |= static_cast<std::uint32_t>(c - 'A' + 10);
            else fail("invalid hex digit in unicode escape");
        }
        // UTF-8 encode.
        std::string s;
        if (cp < 0x80) {
            s += static_cast<char>(cp);
        } else if (cp < 0x800) {
            s += static_cast<char>(0xC0 | (cp >> 6));
            s += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            s += static_cast<char>(0xE0 | (cp >> 12));
            s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            s += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            s += static_cast<char>(0xF0 | (cp >> 18));
            s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            s += static_cast<char>(0x80 | (cp & 0x3F));
        }
        return s;
    }

    Node literal() {
        std::string lex = quoted_string();
        if (!eof() && peek() == '@') {
            get();
            std::string lang;
            while (!eof()) {
                char c = peek();
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
                    lang += get();
                } else {
                    break;
                }
            }
            if (lang.empty()) fail("empty language tag");
            return Node::lang_literal(lex, lang);
        }
        if (pos_ + 1 < text_.size() && peek() == '^' && text_[pos_ + 1] == '^') {
            get();
            get();
            skip_ws();
            if (eof()) fail("expected datatype after '^^'");
            Node dt = peek() == '<' ? Node::iri(iriref()) : pname();
            return Node::literal(lex, dt.value());
        }
        return Node::literal(lex);
    }

    bool number_start() const {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if ((c == '+' || c == '-') && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            return true;
        }
        return false;
    }

    Node numeric_literal() {
        std::string lex;
        bool has_dot = false;
        bool has_exp = false;
        if (peek() == '+' || peek() == '-') lex += get();
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lex += get();
            } else if (c == '.' && !has_dot && !has_exp && pos_ + 1 < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                has_dot = true;
                lex += get();
            } else if ((c == 'e' || c == 'E') && !has_exp) {
                has_exp = true;
                lex += get();
                if (!eof() && (peek() == '+' || peek() == '-')) lex += get();
            } else {
                break;
            }
        }
        std::string_view dt = has_exp ? "http://www.w3.org/2001/XMLSchema#double"
                              : has_dot ? "http://www.w3.org/2001/XMLSchema#decimal"
                                        : "http://www.w3.org/2001/XMLSchema#integer";
        return Node::literal(lex, std::string(dt));
    }

    bool keyword_ahead(std::string_view word) const {
        if (text_.size() - pos_ < word.size()) return false;
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        std::size_t after = pos_ + word.size();
        if (after < text_.size()) {
            char c = text_[after];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':') return false;
        }
        return true;
    }

    Node term(bool object_position) {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        char c = peek();
        if (c == '<') return Node::iri(iriref());
        if (c == '_') return blank();
        if (object_position) {
            if (c == '"') return literal();
            if (number_start()) return numeric_literal();
            if (keyword_ahead("true") || keyword_ahead("false")) {
                bool t = peek() == 't';
                for (std::size_t i = 0, n = t ? 4 : 5; i < n; ++i) get();
                return Node::literal(t ? "true" : "false",
                                     "http://www.w3.org/2001/XMLSchema#boolean");
            }
        }
        if (c == '[' || c == '(') {
            fail("anonymous blank nodes and collections are not supported");
        }
        return pname();
    }

    Node verb() {
        skip_ws();
        if (eof()) fail("expected predicate");
        if (keyword_ahead("a")) {
            get();
            return Node::iri(std::string(ns::rdf) + "type");
        }
        if (peek() == '<') return Node::iri(iriref());
        return pname();
    }

    void statement() {
        Node subject = term(/*object_position=*/false);
        while (true) {
            Node predicate = verb();
            while (true) {
                Node object = term(/*object_position=*/true);
                out_.insert(Triple{subject, predicate, object});
                skip_ws();
                if (!eof() && peek() == ',') {
                    get();
                    continue;
                }
                break;
            }
            skip_ws();
            if (!eof() && peek() == ';') {
                get();
                skip_ws();
                // A ';' may be followed directly by '.' per Turtle grammar.
                if (!eof() && peek() == '.') break;
                continue;
            }
            break;
        }
        expect('.');
    }

    std::string_view text_;
    Graph& out_;
    std::size_t pos_ = 0;
    std::uint64_t line_ = 1;
    std::uint64_t column_ = 1;
};

}  // namespace detail

/// Parses Turtle (subset) or N-Triples into a fresh graph. The default
/// prefixes are pre-bound; a document may add its own with @prefix.
inline Graph parse(std::string_view text, Format format = Format::Turtle) {
    (void)format;  // N-Triples is a syntactic subset of the Turtle reader.
    Graph g;
    detail::TurtleReader reader(text, g);
    reader.run();
    return g;
}

}  // namespace animl::rdf
