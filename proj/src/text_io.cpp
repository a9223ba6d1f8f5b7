#include "tabula/tff.hpp"

#include <cctype>
#include <sstream>

namespace tabula {

namespace {

bool numeric_token(const std::string& token) {
    std::size_t i = token.size() > 1 && token[0] == '-' ? 1 : 0;
    if (i >= token.size()) {
        return false;
    }
    bool slash_seen = false;
    bool digit_since_slash = false;
    for (; i < token.size(); ++i) {
        char c = token[i];
        if (c == '/') {
            if (slash_seen || !digit_since_slash) {
                return false;
            }
            slash_seen = true;
            digit_since_slash = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_since_slash = true;
        } else {
            return false;
        }
    }
    return digit_since_slash;
}

std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::string current;
    std::vector<std::string> tokens;
    auto flush_token = [&] {
        if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    };
    auto flush_line = [&] {
        flush_token();
        if (!tokens.empty()) {
            lines.push_back(std::move(tokens));
            tokens.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush_line();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush_token();
        } else {
            current += c;
        }
    }
    flush_line();
    return lines;
}

}  // namespace

Grid ingest_text_grid(std::string_view text, IngestMode mode) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) {
        throw Error("empty text");
    }
    std::vector<std::vector<CellValue>> rows;
    rows.reserve(lines.size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (mode == IngestMode::triangle_centered && lines[r].size() != r + 1) {
            throw Error("row " + std::to_string(r) + ": expected " + std::to_string(r + 1) +
                        " tokens, found " + std::to_string(lines[r].size()));
        }
        std::vector<CellValue> row;
        row.reserve(lines[r].size());
        for (std::string& token : lines[r]) {
            if (numeric_token(token)) {
                row.emplace_back(Rational::parse(token));
            } else {
                row.emplace_back(std::move(token));
            }
        }
        rows.push_back(std::move(row));
    }
    if (mode == IngestMode::triangle_centered) {
        Grid grid(Orientation::triangle_apex_up);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                Position pos{static_cast<int>(r), static_cast<int>(c)};
                grid.add_cell(Cell{cell_id_for(pos), pos, rows[r][c], std::nullopt});
            }
        }
        return grid;
    }
    return grid_from_rows(rows);
}

std::string export_delimited(const Grid& grid, char delimiter) {
    std::ostringstream out;
    for (int r = 0; r < grid.row_count(); ++r) {
        if (r > 0) {
            out << '\n';
        }
        auto cells = grid.row(r);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out << delimiter;
            }
            if (!is_rational(cells[i]->value)) {
                const std::string& token = as_token(cells[i]->value);
                if (token.find(delimiter) != std::string::npos) {
                    throw Error("delimiter collision");
                }
                out << token;
            } else {
                out << as_rational(cells[i]->value).str();
            }
        }
    }
    return out.str();
}

}  // namespace tabula
