#include "xml.hpp"

#include "tabula/rational.hpp"

#include <cctype>

namespace tabula::xml {

const std::string* Element::attr(std::string_view key) const {
    for (const auto& [k, v] : attrs) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

std::string escape_attr(std::string_view value) {
    std::string out;
    out.reserve(value.size());
    for (char c : value) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\n': out += "&#10;"; break;
            case '\r': out += "&#13;"; break;
            case '\t': out += "&#9;"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

class Reader {
public:
    explicit Reader(std::string text) : text_(std::move(text)) {}

    Element parse_document() {
        skip_prolog();
        Element root = parse_element();
        skip_misc();
        if (pos_ < text_.size()) {
            fail("content after root element");
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& detail) const {
        throw Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                    ": " + detail);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void expect(char c, const char* what) {
        if (eof() || peek() != c) {
            fail(std::string("expected ") + what);
        }
        advance();
    }

    bool consume(std::string_view token) {
        if (text_.compare(pos_, token.size(), token) != 0) {
            return false;
        }
        for (std::size_t i = 0; i < token.size(); ++i) {
            advance();
        }
        return true;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    void skip_comment() {
        // positioned after "<!--"
        while (!consume("-->")) {
            if (eof()) {
                fail("unterminated comment");
            }
            advance();
        }
    }

    void skip_misc() {
        for (;;) {
            skip_ws();
            if (consume("<!--")) {
                skip_comment();
                continue;
            }
            return;
        }
    }

    void skip_prolog() {
        skip_ws();
        if (consume("<?xml")) {
            while (!consume("?>")) {
                if (eof()) {
                    fail("unterminated XML declaration");
                }
                advance();
            }
        }
        skip_misc();
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ||
               c == ':';
    }

    std::string parse_name() {
        if (eof() || !name_char(peek())) {
            fail("expected a name");
        }
        std::string name;
        while (!eof() && name_char(peek())) {
            name += advance();
        }
        return name;
    }

    std::string parse_entity() {
        // positioned after '&'
        std::string entity;
        while (!eof() && peek() != ';') {
            entity += advance();
            if (entity.size() > 8) {
                fail("bad entity reference");
            }
        }
        expect(';', "';'");
        if (entity == "amp") return "&";
        if (entity == "lt") return "<";
        if (entity == "gt") return ">";
        if (entity == "quot") return "\"";
        if (entity == "apos") return "'";
        if (!entity.empty() && entity[0] == '#') {
            bool hex = entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X');
            long code = 0;
            std::size_t i = hex ? 2 : 1;
            if (i >= entity.size()) {
                fail("bad character reference");
            }
            for (; i < entity.size(); ++i) {
                char c = entity[i];
                int digit;
                if (c >= '0' && c <= '9') {
                    digit = c - '0';
                } else if (hex && c >= 'a' && c <= 'f') {
                    digit = c - 'a' + 10;
                } else if (hex && c >= 'A' && c <= 'F') {
                    digit = c - 'A' + 10;
                } else {
                    fail("bad character reference");
                }
                code = code * (hex ? 16 : 10) + digit;
                if (code > 0x10FFFF) {
                    fail("character reference out of range");
                }
            }
            // encode as UTF-8
            std::string out;
            if (code < 0x80) {
                out += static_cast<char>(code);
            } else if (code < 0x800) {
                out += static_cast<char>(0xC0 | (code >> 6));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else if (code < 0x10000) {
                out += static_cast<char>(0xE0 | (code >> 12));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else {
                out += static_cast<char>(0xF0 | (code >> 18));
                out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            }
            return out;
        }
        fail("unknown entity &" + entity + ";");
    }

    std::string parse_attr_value() {
        if (eof() || (peek() != '"' && peek() != '\'')) {
            fail("expected a quoted attribute value");
        }
        char quote = advance();
        std::string value;
        for (;;) {
            if (eof()) {
                fail("unterminated attribute value");
            }
            char c = peek();
            if (c == quote) {
                advance();
                return value;
            }
            if (c == '<') {
                fail("'<' in attribute value");
            }
            if (c == '&') {
                advance();
                value += parse_entity();
            } else {
                value += advance();
            }
        }
    }

    Element parse_element() {
        expect('<', "'<'");
        Element element;
        element.line = line_;
        element.col = col_ - 1;
        element.name = parse_name();
        for (;;) {
            bool had_ws = !eof() && std::isspace(static_cast<unsigned char>(peek()));
            skip_ws();
            if (eof()) {
                fail("unterminated element");
            }
            if (consume("/>")) {
                return element;
            }
            if (peek() == '>') {
                advance();
                break;
            }
            if (!had_ws) {
                fail("expected whitespace before attribute");
            }
            std::string key = parse_name();
            skip_ws();
            expect('=', "'='");
            skip_ws();
            std::string value = parse_attr_value();
            if (element.attr(key)) {
                fail("duplicate attribute " + key);
            }
            element.attrs.emplace_back(std::move(key), std::move(value));
        }
        // children until the matching end tag
        for (;;) {
            skip_ws();
            if (eof()) {
                fail("missing </" + element.name + ">");
            }
            if (consume("<!--")) {
                skip_comment();
                continue;
            }
            if (text_.compare(pos_, 2, "</") == 0) {
                consume("</");
                std::string closing = parse_name();
                if (closing != element.name) {
                    fail("mismatched end tag </" + closing + ">, expected </" + element.name + ">");
                }
                skip_ws();
                expect('>', "'>'");
                return element;
            }
            if (peek() == '<') {
                element.children.push_back(parse_element());
                continue;
            }
            fail("unexpected text content");
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Element parse(std::string_view text) {
    // normalize Windows line endings before position tracking
    std::string normalized;
    normalized.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            if (i + 1 < text.size() && text[i + 1] == '\n') {
                continue;
            }
            normalized += '\n';
        } else {
            normalized += text[i];
        }
    }
    return Reader(std::move(normalized)).parse_document();
}

}  // namespace tabula::xml
