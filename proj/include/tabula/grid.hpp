#pragma once

#include "tabula/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tabula {

/// A cell holds either an exact value or an opaque symbolic token
/// (tokens are never computed with).
using CellValue = std::variant<Rational, std::string>;

inline bool is_rational(const CellValue& v) { return std::holds_alternative<Rational>(v); }
inline const Rational& as_rational(const CellValue& v) { return std::get<Rational>(v); }
inline const std::string& as_token(const CellValue& v) { return std::get<std::string>(v); }

/// Renders a value the way the delimited exporter does: canonical rational
/// text for numbers, the raw token otherwise.
std::string value_str(const CellValue& v);

enum class Orientation {
    rectangular,       ///< rows of cells, cols 0..len-1; rows may be ragged
    triangle_apex_up,  ///< row r has cols 0..r; row 0 is the apex
    triangle_apex_down ///< row 0 is the base; each row one cell shorter
};

std::string orientation_name(Orientation o);
std::optional<Orientation> orientation_from_name(std::string_view name);

struct Position {
    int row = 0;
    int col = 0;

    friend bool operator==(const Position& a, const Position& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator<(const Position& a, const Position& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

/// The paper's 1-based "rank" of a row. Every rank-weighted formula is
/// written through this helper so it reads like the prose.
inline int rank(const Position& pos) { return pos.row + 1; }
inline int rank(int row) { return row + 1; }

struct Cell {
    std::string id;
    Position pos;
    CellValue value;
    std::optional<std::string> layer;
};

/// The flat substrate every reading points at: positioned cells plus an
/// orientation. Cells keep their insertion order (the document order used
/// by serialization); position and id lookups are indexed.
class Grid {
public:
    explicit Grid(Orientation orientation = Orientation::rectangular, std::string comment = "")
        : orientation_(orientation), comment_(std::move(comment)) {}

    Orientation orientation() const { return orientation_; }
    const std::string& comment() const { return comment_; }

    /// Throws on a duplicate position or duplicate cell id.
    void add_cell(Cell cell);

    const std::vector<Cell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }

    const Cell* find(const Position& pos) const;
    const Cell* find(const std::string& id) const;
    const Cell& at(const Position& pos) const;

    /// Number of rows (max row index + 1); 0 for an empty grid.
    int row_count() const { return row_count_; }
    /// Cells of row `r` ordered by column.
    std::vector<const Cell*> row(int r) const;
    int row_length(int r) const;
    int max_row_length() const;

    /// Checks the shape contract of the stored orientation:
    /// triangle-apex-up rows must be 0..r, triangle-apex-down rows must
    /// shrink by exactly one cell, rectangular rows must be contiguous
    /// from column 0. Throws Error on violation.
    void check_shape() const;

private:
    Orientation orientation_;
    std::string comment_;
    std::vector<Cell> cells_;
    std::map<Position, std::size_t> by_pos_;
    std::map<std::string, std::size_t> by_id_;
    int row_count_ = 0;
};

/// Structural equality: same orientation and identical position -> value
/// maps. Cell ids and layers are ignored, so regenerated tables compare
/// equal to parsed ones.
bool grid_equal(const Grid& a, const Grid& b);

bool cell_value_equal(const CellValue& a, const CellValue& b);

/// Pairing rule for the synthetic "list of lists" rectangle construction.
using CombineFn = std::function<std::string(const std::string& vertical, const std::string& horizontal)>;

/// The canonical synthetic construction: translates the horizontal segment
/// along the vertical one, producing |vertical| rows x |horizontal| cols of
/// symbolic tokens combine(vertical[r], horizontal[c]).
Grid grid_from_segments(const std::vector<std::string>& horizontal,
                        const std::vector<std::string>& vertical,
                        const CombineFn& combine);

/// Default pairing: vertical token followed by horizontal token.
std::string concat_tokens(const std::string& vertical, const std::string& horizontal);

/// Deterministic cell id for generated grids: "c<row>_<col>".
std::string cell_id_for(const Position& pos);

/// Orientation inferred from row lengths: 1,2,3,... reads as a triangle
/// apex-up, n,n-1,... as apex-down, anything else (including ragged) as
/// rectangular. Single rows are rectangular.
Orientation infer_orientation(const std::vector<std::size_t>& row_lengths);

/// Builds a grid from rows of values, generating ids and inferring the
/// orientation with infer_orientation.
Grid grid_from_rows(const std::vector<std::vector<CellValue>>& rows);

/// Values of row `r` ordered by column; throws if the row is absent.
std::vector<CellValue> row_values(const Grid& grid, int r);

/// Rationals of row `r`; throws Error("non-numeric cell") on tokens.
std::vector<Rational> row_rationals(const Grid& grid, int r);

}  // namespace tabula
