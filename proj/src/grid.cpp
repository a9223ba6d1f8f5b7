#include "tabula/grid.hpp"

#include <algorithm>

namespace tabula {

std::string value_str(const CellValue& v) {
    if (is_rational(v)) {
        return as_rational(v).str();
    }
    return as_token(v);
}

std::string orientation_name(Orientation o) {
    switch (o) {
        case Orientation::rectangular: return "rectangular";
        case Orientation::triangle_apex_up: return "triangle-apex-up";
        case Orientation::triangle_apex_down: return "triangle-apex-down";
    }
    return "rectangular";
}

std::optional<Orientation> orientation_from_name(std::string_view name) {
    if (name == "rectangular") return Orientation::rectangular;
    if (name == "triangle-apex-up") return Orientation::triangle_apex_up;
    if (name == "triangle-apex-down") return Orientation::triangle_apex_down;
    return std::nullopt;
}

void Grid::add_cell(Cell cell) {
    if (cell.pos.row < 0 || cell.pos.col < 0) {
        throw Error("negative position");
    }
    if (by_pos_.count(cell.pos)) {
        throw Error("duplicate position (" + std::to_string(cell.pos.row) + "," +
                    std::to_string(cell.pos.col) + ")");
    }
    if (by_id_.count(cell.id)) {
        throw Error("duplicate cell id " + cell.id);
    }
    row_count_ = std::max(row_count_, cell.pos.row + 1);
    by_pos_[cell.pos] = cells_.size();
    by_id_[cell.id] = cells_.size();
    cells_.push_back(std::move(cell));
}

const Cell* Grid::find(const Position& pos) const {
    auto it = by_pos_.find(pos);
    return it == by_pos_.end() ? nullptr : &cells_[it->second];
}

const Cell* Grid::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &cells_[it->second];
}

const Cell& Grid::at(const Position& pos) const {
    const Cell* c = find(pos);
    if (!c) {
        throw Error("no cell at (" + std::to_string(pos.row) + "," + std::to_string(pos.col) + ")");
    }
    return *c;
}

std::vector<const Cell*> Grid::row(int r) const {
    std::vector<const Cell*> out;
    auto it = by_pos_.lower_bound(Position{r, 0});
    for (; it != by_pos_.end() && it->first.row == r; ++it) {
        out.push_back(&cells_[it->second]);
    }
    return out;
}

int Grid::row_length(int r) const {
    int n = 0;
    auto it = by_pos_.lower_bound(Position{r, 0});
    for (; it != by_pos_.end() && it->first.row == r; ++it) {
        ++n;
    }
    return n;
}

int Grid::max_row_length() const {
    int best = 0;
    for (int r = 0; r < row_count_; ++r) {
        best = std::max(best, row_length(r));
    }
    return best;
}

void Grid::check_shape() const {
    std::vector<int> lengths(row_count_, 0);
    for (const Cell& c : cells_) {
        lengths[c.pos.row]++;
    }
    for (int r = 0; r < row_count_; ++r) {
        // every row must be contiguous from col 0
        for (int c = 0; c < lengths[r]; ++c) {
            if (!find(Position{r, c})) {
                throw Error("row " + std::to_string(r) + " has a gap at col " + std::to_string(c));
            }
        }
        if (lengths[r] == 0) {
            throw Error("row " + std::to_string(r) + " is empty");
        }
    }
    switch (orientation_) {
        case Orientation::rectangular:
            break;
        case Orientation::triangle_apex_up:
            for (int r = 0; r < row_count_; ++r) {
                if (lengths[r] != r + 1) {
                    throw Error("triangle row " + std::to_string(r) + " expects " +
                                std::to_string(r + 1) + " cells, found " + std::to_string(lengths[r]));
                }
            }
            break;
        case Orientation::triangle_apex_down:
            for (int r = 1; r < row_count_; ++r) {
                if (lengths[r] != lengths[r - 1] - 1) {
                    throw Error("triangle row " + std::to_string(r) + " expects " +
                                std::to_string(lengths[r - 1] - 1) + " cells, found " +
                                std::to_string(lengths[r]));
                }
            }
            break;
    }
}

bool cell_value_equal(const CellValue& a, const CellValue& b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (is_rational(a)) {
        return as_rational(a) == as_rational(b);
    }
    return as_token(a) == as_token(b);
}

bool grid_equal(const Grid& a, const Grid& b) {
    if (a.orientation() != b.orientation() || a.size() != b.size()) {
        return false;
    }
    for (const Cell& cell : a.cells()) {
        const Cell* other = b.find(cell.pos);
        if (!other || !cell_value_equal(cell.value, other->value)) {
            return false;
        }
    }
    return true;
}

std::string concat_tokens(const std::string& vertical, const std::string& horizontal) {
    return vertical + horizontal;
}

std::string cell_id_for(const Position& pos) {
    return "c" + std::to_string(pos.row) + "_" + std::to_string(pos.col);
}

Grid grid_from_segments(const std::vector<std::string>& horizontal,
                        const std::vector<std::string>& vertical,
                        const CombineFn& combine) {
    if (horizontal.empty() || vertical.empty()) {
        throw Error("empty segment");
    }
    Grid grid(Orientation::rectangular);
    for (std::size_t r = 0; r < vertical.size(); ++r) {
        for (std::size_t c = 0; c < horizontal.size(); ++c) {
            Position pos{static_cast<int>(r), static_cast<int>(c)};
            grid.add_cell(Cell{cell_id_for(pos), pos, combine(vertical[r], horizontal[c]), std::nullopt});
        }
    }
    return grid;
}

Orientation infer_orientation(const std::vector<std::size_t>& row_lengths) {
    if (row_lengths.size() < 2) {
        return Orientation::rectangular;
    }
    bool apex_up = row_lengths[0] == 1;
    bool apex_down = true;
    for (std::size_t r = 0; r < row_lengths.size(); ++r) {
        if (row_lengths[r] != r + 1) {
            apex_up = false;
        }
        if (r > 0 && row_lengths[r] + 1 != row_lengths[r - 1]) {
            apex_down = false;
        }
    }
    if (apex_up) return Orientation::triangle_apex_up;
    if (apex_down) return Orientation::triangle_apex_down;
    return Orientation::rectangular;
}

Grid grid_from_rows(const std::vector<std::vector<CellValue>>& rows) {
    if (rows.empty()) {
        throw Error("empty progression");
    }
    std::vector<std::size_t> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.empty()) {
            throw Error("empty progression");
        }
        lengths.push_back(row.size());
    }
    Grid grid(infer_orientation(lengths));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            Position pos{static_cast<int>(r), static_cast<int>(c)};
            grid.add_cell(Cell{cell_id_for(pos), pos, rows[r][c], std::nullopt});
        }
    }
    return grid;
}

std::vector<CellValue> row_values(const Grid& grid, int r) {
    auto cells = grid.row(r);
    if (cells.empty()) {
        throw Error("no row " + std::to_string(r));
    }
    std::vector<CellValue> out;
    out.reserve(cells.size());
    for (const Cell* c : cells) {
        out.push_back(c->value);
    }
    return out;
}

std::vector<Rational> row_rationals(const Grid& grid, int r) {
    std::vector<Rational> out;
    for (const CellValue& v : row_values(grid, r)) {
        if (!is_rational(v)) {
            throw Error("non-numeric cell");
        }
        out.push_back(as_rational(v));
    }
    return out;
}

}  // namespace tabula
