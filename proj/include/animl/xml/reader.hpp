#pragma once

#include <cctype>
#include <cstdint>
#include <cstring>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "animl/diag.hpp"

namespace animl::xml {

struct Attribute {
    std::string name;
    std::string value;
};

/// Streaming pull parser over a byte stream.
///
/// The reader never buffers more than one chunk of input plus the current
/// tag, so documents with very large character-data runs can be traversed in
/// flat memory: a Text event is reported *before* its content is consumed,
/// and a caller that advances past it without calling text() discards the
/// bytes as they stream by. Byte offsets (offset(), tag_begin()) let callers
/// record spans of skipped payload for deferred decoding.
///
/// Supported: elements, attributes (both quote styles), character data,
/// CDATA sections, comments, processing instructions, DOCTYPE (skipped), and
/// the five predefined entities plus numeric character references.
class Reader {
public:
    enum class Event { StartElement, EndElement, Text, Eof };

    explicit Reader(std::istream& in) : in_(in) { buf_.resize(kChunk); }

    Event next() {
        if (pending_end_) {
            pending_end_ = false;
            current_ = Event::EndElement;
            name_ = stack_.back();
            stack_.pop_back();
            return current_;
        }
        if (current_ == Event::Text && !text_consumed_) {
            discard_text();
        }
        while (true) {
            int c = peek();
            if (c < 0) {
                if (!stack_.empty()) {
                    fail("unexpected end of input; unclosed element '" + stack_.back() + "'");
                }
                current_ = Event::Eof;
                return current_;
            }
            if (c != '<') {
                if (stack_.empty()) {
                    // Whitespace is legal outside the root; anything else is not.
                    if (!is_space(static_cast<char>(c))) {
                        fail("character data outside of the root element");
                    }
                    get();
                    continue;
                }
                text_consumed_ = false;
                current_ = Event::Text;
                return current_;
            }
            tag_begin_ = offset_;
            get();  // '<'
            int c2 = peek();
            if (c2 == '!') {
                if (!skip_bang()) continue;  // comment, CDATA-as-text handled in text()
                continue;
            }
            if (c2 == '?') {
                skip_processing_instruction();
                continue;
            }
            if (c2 == '/') {
                get();
                name_ = read_name();
                skip_space();
                if (peek() != '>') fail("malformed end tag </" + name_ + "");
                get();
                if (stack_.empty() || stack_.back() != name_) {
                    fail("mismatched end tag </" + name_ + ">");
                }
                stack_.pop_back();
                current_ = Event::EndElement;
                return current_;
            }
            parse_start_tag();
            current_ = Event::StartElement;
            return current_;
        }
    }

    /// Element name of the current Start/End event.
    const std::string& name() const { return name_; }

    const std::vector<Attribute>& attributes() const { return attributes_; }

    std::optional<std::string> attribute(std::string_view attr) const {
        for (const Attribute& a : attributes_) {
            if (a.name == attr) return a.value;
        }
        return std::nullopt;
    }

    /// Consumes and returns the pending Text run, entities decoded. Adjacent
    /// CDATA sections and comments are folded into the run.
    std::string text() {
        std::string out;
        while (true) {
            int c = peek();
            if (c < 0) break;
            if (c == '<') {
                if (!cdata_or_comment_ahead(&out)) break;
                continue;
            }
            if (c == '&') {
                out += entity();
            } else {
                out += static_cast<char>(get());
            }
        }
        text_consumed_ = true;
        return out;
    }

    /// Consumes the rest of the current element (the one whose StartElement
    /// event was just reported), discarding everything inside.
    void skip_element() {
        if (current_ != Event::StartElement) {
            fail("skip_element outside of a start tag");
        }
        if (pending_end_) {
            next();  // synthesized end of a self-closing element
            return;
        }
        std::size_t target_depth = stack_.size() - 1;
        while (stack_.size() > target_depth) {
            if (next() == Event::Eof) break;
        }
    }

    std::uint64_t offset() const { return offset_; }
    /// Byte offset of the '<' that opened the current tag event.
    std::uint64_t tag_begin() const { return tag_begin_; }
    std::uint64_t line() const { return line_; }
    std::uint64_t column() const { return column_; }
    std::size_t depth() const { return stack_.size(); }

private:
    static constexpr std::size_t kChunk = 64 * 1024;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, column_);
    }

    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    static bool name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
    }
    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-' ||
               c == '.';
    }

    void refill() {
        if (pos_ < len_) return;
        in_.read(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        len_ = static_cast<std::size_t>(in_.gcount());
        pos_ = 0;
    }

    int peek() {
        refill();
        if (pos_ >= len_) return -1;
        return static_cast<unsigned char>(buf_[pos_]);
    }

    int get() {
        int c = peek();
        if (c < 0) return c;
        ++pos_;
        ++offset_;
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    bool ahead(std::string_view token) {
        // Only called right after '<' or similar; token fits one chunk.
        while (len_ - pos_ < token.size() && in_) {
            std::size_t keep = len_ - pos_;
            std::memmove(buf_.data(), buf_.data() + pos_, keep);
            pos_ = 0;
            len_ = keep;
            in_.read(buf_.data() + len_, static_cast<std::streamsize>(buf_.size() - len_));
            std::size_t got = static_cast<std::size_t>(in_.gcount());
            if (got == 0) break;
            len_ += got;
        }
        if (len_ - pos_ < token.size()) return false;
        return std::string_view(buf_.data() + pos_, token.size()) == token;
    }

    void expect_consume(std::string_view token) {
        for (char expected : token) {
            int c = get();
            if (c < 0 || static_cast<char>(c) != expected) {
                fail("malformed markup, expected '" + std::string(token) + "'");
            }
        }
    }

    std::string read_name() {
        int c = peek();
        if (c < 0 || !name_start(static_cast<char>(c))) fail("expected a name");
        std::string name;
        name += static_cast<char>(get());
        while ((c = peek()) >= 0 && name_char(static_cast<char>(c))) {
            name += static_cast<char>(get());
        }
        return name;
    }

    void skip_space() {
        while (peek() >= 0 && is_space(static_cast<char>(peek()))) get();
    }

    std::string entity() {
        get();  // '&'
        std::string body;
        int c;
        while ((c = peek()) >= 0 && c != ';') {
            body += static_cast<char>(get());
            if (body.size() > 12) fail("unterminated entity reference");
        }
        if (c < 0) fail("unterminated entity reference");
        get();  // ';'
        if (body == "amp") return "&";
        if (body == "lt") return "<";
        if (body == "gt") return ">";
        if (body == "apos") return "'";
        if (body == "quot") return "\"";
        if (!body.empty() && body[0] == '#') {
            std::uint32_t cp = 0;
            bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
            for (std::size_t i = hex ? 2 : 1; i < body.size(); ++i) {
                char d = body[i];
                std::uint32_t digit;
                if (d >= '0' && d <= '9') digit = static_cast<std::uint32_t>(d - '0');
                else if (hex && d >= 'a' && d <= 'f') digit = static_cast<std::uint32_t>(d - 'a' + 10);
                else if (hex && d >= 'A' && d <= 'F') digit = static_cast<std::uint32_t>(d - 'A' + 10);
                else fail("bad character reference &" + body + ";");
                cp = cp * (hex ? 16 : 10) + digit;
            }
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
        fail("unknown entity &" + body + ";");
    }

    void parse_start_tag() {
        name_ = read_name();
        attributes_.clear();
        while (true) {
            skip_space();
            int c = peek();
            if (c < 0) fail("unexpected end of input inside tag <" + name_ + ">");
            if (c == '>') {
                get();
                stack_.push_back(name_);
                pending_end_ = false;
                return;
            }
            if (c == '/') {
                get();
                if (peek() != '>') fail("malformed empty-element tag");
                get();
                stack_.push_back(name_);
                pending_end_ = true;  // synthesize the EndElement on the next call
                return;
            }
            Attribute a;
            a.name = read_name();
            skip_space();
            if (peek() != '=') fail("expected '=' after attribute " + a.name);
            get();
            skip_space();
            int quote = peek();
            if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
            get();
            while (true) {
                int v = peek();
                if (v < 0) fail("unterminated attribute value");
                if (v == quote) {
                    get();
                    break;
                }
                if (v == '&') {
                    a.value += entity();
                } else {
                    a.value += static_cast<char>(get());
                }
            }
            attributes_.push_back(std::move(a));
        }
    }

    /// Consumes '<!...' constructs. Returns true when fully skipped here.
    bool skip_bang() {
        // peek() == '!'
        if (ahead("!--")) {
            expect_consume("!--");
            int prev2 = 0, prev1 = 0;
            while (true) {
                int c = get();
                if (c < 0) fail("unterminated comment");
                if (prev2 == '-' && prev1 == '-' && c == '>') return true;
                prev2 = prev1;
                prev1 = c;
            }
        }
        if (ahead("![CDATA[")) {
            fail("CDATA section outside character data");
        }
        // DOCTYPE and friends: skip to the matching '>' (internal subsets
        // bracketed with [...] are balanced).
        int bracket = 0;
        while (true) {
            int c = get();
            if (c < 0) fail("unterminated <! markup");
            if (c == '[') ++bracket;
            else if (c == ']') --bracket;
            else if (c == '>' && bracket <= 0) return true;
        }
    }

    void skip_processing_instruction() {
        get();  // '?'
        int prev = 0;
        while (true) {
            int c = get();
            if (c < 0) fail("unterminated processing instruction");
            if (prev == '?' && c == '>') return;
            prev = c;
        }
    }

    /// At a '<' inside character data: folds CDATA/comments into `out` and
    /// returns true, or returns false when a real tag follows.
    bool cdata_or_comment_ahead(std::string* out) {
        if (ahead("<![CDATA[")) {
            expect_consume("<![CDATA[");
            int p2 = 0, p1 = 0;
            while (true) {
                int c = get();
                if (c < 0) fail("unterminated CDATA section");
                if (p2 == ']' && p1 == ']' && c == '>') {
                    if (out) {
                        out->pop_back();
                        out->pop_back();
                    }
                    return true;
                }
                if (out) *out += static_cast<char>(c);
                p2 = p1;
                p1 = c;
            }
        }
        if (ahead("<!--")) {
            expect_consume("<!--");
            int p2 = 0, p1 = 0;
            while (true) {
                int c = get();
                if (c < 0) fail("unterminated comment");
                if (p2 == '-' && p1 == '-' && c == '>') return true;
                p2 = p1;
                p1 = c;
            }
        }
        return false;
    }

    /// Streams past the pending text run without retaining it.
    void discard_text() {
        while (true) {
            int c = peek();
            if (c < 0) break;
            if (c == '<') {
                if (!cdata_or_comment_ahead(nullptr)) break;
                continue;
            }
            get();
        }
        text_consumed_ = true;
    }

    std::istream& in_;
    std::vector<char> buf_;
    std::size_t pos_ = 0;
    std::size_t len_ = 0;
    std::uint64_t offset_ = 0;
    std::uint64_t line_ = 1;
    std::uint64_t column_ = 1;
    std::uint64_t tag_begin_ = 0;

    Event current_ = Event::Eof;
    std::string name_;
    std::vector<Attribute> attributes_;
    std::vector<std::string> stack_;
    bool pending_end_ = false;
    bool text_consumed_ = true;
};

}  // namespace animl::xml
