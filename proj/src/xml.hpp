#pragma once

// Minimal XML reader for the TFF vocabulary: elements, attributes and the
// five named entities plus numeric character references. No text content
// (TFF carries data in attributes), no namespaces, no DTD. Kept private to
// the serialization layer; positions are tracked for diagnostics.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tabula::xml {

struct Element {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Element> children;
    int line = 0;
    int col = 0;

    const std::string* attr(std::string_view key) const;
    bool has_attr(std::string_view key) const { return attr(key) != nullptr; }
};

/// Parses one document (optional XML declaration, comments, one root
/// element). Line endings are normalized to \n first. Throws tabula::Error
/// with "syntax error at line:col: ..." on malformed input.
Element parse(std::string_view text);

/// Escapes a value for double-quoted attribute context; newlines, tabs and
/// carriage returns become numeric references so they survive round trips.
std::string escape_attr(std::string_view value);

}  // namespace tabula::xml
