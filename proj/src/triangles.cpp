#include "tabula/triangles.hpp"

namespace tabula {

std::string direction_name(Direction d) {
    return d == Direction::sum_of_two_above ? "sum-of-two-above" : "sum-of-two-below";
}

std::string weight_name(Weight w) {
    return w == Weight::unweighted ? "unweighted" : "rank-ratio";
}

namespace {

Grid grid_from_rational_rows(Orientation orientation,
                             const std::vector<std::vector<Rational>>& rows) {
    Grid grid(orientation);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            Position pos{static_cast<int>(r), static_cast<int>(c)};
            grid.add_cell(Cell{cell_id_for(pos), pos, rows[r][c], std::nullopt});
        }
    }
    return grid;
}

}  // namespace

Grid difference_triangle(const std::vector<Rational>& base) {
    if (base.empty()) {
        throw Error("empty progression");
    }
    std::vector<std::vector<Rational>> rows{base};
    while (rows.back().size() > 1) {
        const auto& prev = rows.back();
        std::vector<Rational> next;
        next.reserve(prev.size() - 1);
        for (std::size_t k = 0; k + 1 < prev.size(); ++k) {
            next.push_back(prev[k + 1] - prev[k]);
        }
        rows.push_back(std::move(next));
    }
    return grid_from_rational_rows(Orientation::triangle_apex_down, rows);
}

std::vector<Rational> anti_difference(const Grid& triangle) {
    int rows = triangle.row_count();
    if (rows == 0) {
        throw Error("not a difference triangle");
    }
    std::vector<std::vector<Rational>> stored;
    stored.reserve(rows);
    for (int r = 0; r < rows; ++r) {
        auto cells = triangle.row(r);
        std::vector<Rational> row;
        row.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c]->pos.col != static_cast<int>(c)) {
                throw Error("not a difference triangle");
            }
            if (!is_rational(cells[c]->value)) {
                throw Error("non-numeric cell");
            }
            row.push_back(as_rational(cells[c]->value));
        }
        if (r > 0 && row.size() + 1 != stored[r - 1].size()) {
            throw Error("not a difference triangle");
        }
        stored.push_back(std::move(row));
    }
    if (stored.back().size() != 1) {
        throw Error("not a difference triangle");
    }
    // Rebuild every row from the left edge: row[d][k+1] = row[d][k] + row[d+1][k].
    std::vector<Rational> below{stored[rows - 1][0]};
    for (int d = rows - 2; d >= 0; --d) {
        std::vector<Rational> row{stored[d][0]};
        for (std::size_t k = 0; k + 1 < stored[d].size(); ++k) {
            row.push_back(row[k] + below[k]);
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] != stored[d][k]) {
                throw Error("not a difference triangle");
            }
        }
        below = std::move(row);
    }
    return below;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

Grid arithmetic_triangle(int depth) {
    if (depth < 1) {
        throw Error("depth must be positive");
    }
    std::vector<std::vector<Rational>> rows(depth);
    for (int n = 0; n < depth; ++n) {
        for (int k = 0; k <= n; ++k) {
            rows[n].emplace_back(Rational(binomial(n, k), 1));
        }
    }
    return grid_from_rational_rows(Orientation::triangle_apex_up, rows);
}

Grid inverse_triangle(int depth) {
    if (depth < 1) {
        throw Error("depth must be positive");
    }
    std::vector<std::vector<Rational>> rows(depth);
    for (int n = 0; n < depth; ++n) {
        for (int k = 0; k <= n; ++k) {
            rows[n].emplace_back(Rational(1, binomial(n, k)));
        }
    }
    return grid_from_rational_rows(Orientation::triangle_apex_up, rows);
}

Grid harmonic_triangle(int depth) {
    if (depth < 1) {
        throw Error("depth must be positive");
    }
    std::vector<std::vector<Rational>> rows(depth);
    for (int n = 0; n < depth; ++n) {
        for (int k = 0; k <= n; ++k) {
            rows[n].emplace_back(Rational(1, rank(n) * binomial(n, k)));
        }
    }
    return grid_from_rational_rows(Orientation::triangle_apex_up, rows);
}

Grid generate_triangle(TriangleKind kind, int depth) {
    switch (kind) {
        case TriangleKind::arithmetic: return arithmetic_triangle(depth);
        case TriangleKind::inverse: return inverse_triangle(depth);
        case TriangleKind::harmonic: return harmonic_triangle(depth);
        case TriangleKind::difference:
            throw Error("difference triangles are generated from a progression");
    }
    throw Error("unknown triangle kind");
}

RecurrenceReport validate_recurrence(const Grid& triangle, const RecurrenceRule& rule) {
    int rows = triangle.row_count();
    std::vector<std::vector<Rational>> t(rows);
    for (int n = 0; n < rows; ++n) {
        auto cells = triangle.row(n);
        if (static_cast<int>(cells.size()) != n + 1) {
            throw Error("not triangular: row " + std::to_string(n) + " has " +
                        std::to_string(cells.size()) + " cells");
        }
        for (const Cell* c : cells) {
            if (!is_rational(c->value)) {
                throw Error("non-numeric cell");
            }
            t[n].push_back(as_rational(c->value));
        }
    }
    RecurrenceReport report;
    for (int n = 0; n < rows; ++n) {
        for (int k = 1; k < n; ++k) {  // edge cells (k=0, k=n) are exempt
            Rational sum;
            int neighbour_row;
            if (rule.direction == Direction::sum_of_two_above) {
                neighbour_row = n - 1;
                sum = t[n - 1][k - 1] + t[n - 1][k];
            } else {
                if (n + 1 >= rows) {
                    continue;  // last row has nothing below it
                }
                neighbour_row = n + 1;
                sum = t[n + 1][k] + t[n + 1][k + 1];
            }
            if (rule.weight == Weight::rank_ratio) {
                sum = sum * Rational(rank(n), rank(neighbour_row));
            }
            if (sum != t[n][k]) {
                report.violations.push_back(Violation{Position{n, k}, sum, t[n][k]});
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

RecurrenceRule reverse_rule(const RecurrenceRule& rule) {
    RecurrenceRule flipped = rule;
    flipped.direction = rule.direction == Direction::sum_of_two_above
                            ? Direction::sum_of_two_below
                            : Direction::sum_of_two_above;
    return flipped;
}

Grid solve_reversed(const std::vector<Rational>& edge) {
    if (edge.empty()) {
        throw Error("empty progression");
    }
    std::vector<std::vector<Rational>> rows(edge.size());
    for (std::size_t n = 0; n < edge.size(); ++n) {
        rows[n].push_back(edge[n]);
        for (std::size_t k = 0; k < n; ++k) {
            rows[n].push_back(rows[n - 1][k] - rows[n][k]);
        }
    }
    return grid_from_rational_rows(Orientation::triangle_apex_up, rows);
}

}  // namespace tabula
