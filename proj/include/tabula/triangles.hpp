#pragma once

#include "tabula/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tabula {

enum class Direction { sum_of_two_above, sum_of_two_below };
enum class Weight { unweighted, rank_ratio };

/// A local rule a triangle satisfies or violates: each cell against the sum
/// of its two neighbours in the given direction, optionally multiplied by
/// rank(cell row) / rank(neighbour row).
struct RecurrenceRule {
    Direction direction = Direction::sum_of_two_above;
    Weight weight = Weight::unweighted;

    friend bool operator==(const RecurrenceRule& a, const RecurrenceRule& b) {
        return a.direction == b.direction && a.weight == b.weight;
    }
};

std::string direction_name(Direction d);
std::string weight_name(Weight w);

enum class TriangleKind { arithmetic, inverse, harmonic, difference };

/// Descriptor for the generated test-case family; `ratio` documents the
/// common ratio of geometric difference-triangle bases.
struct TriangleSpec {
    TriangleKind kind = TriangleKind::arithmetic;
    int depth = 1;
    std::optional<Rational> ratio;
};

/// Successive pairwise differences of a progression, stored base-first
/// (row 0 = the progression, the way the figure reads bottom-up) and
/// narrowing by one cell per row up to the single apex.
Grid difference_triangle(const std::vector<Rational>& base);

/// Reconstructs the base of a difference triangle from its left edge by
/// cumulative sums and checks the reconstruction against every stored row.
/// Throws Error("not a difference triangle") on shape or value mismatch.
std::vector<Rational> anti_difference(const Grid& triangle);

/// Pascal's triangle: cell (n,k) = C(n,k), apex-up, `depth` rows.
Grid arithmetic_triangle(int depth);

/// Cell (n,k) = 1/C(n,k) — the unpublished version of the harmonic table.
Grid inverse_triangle(int depth);

/// Cell (n,k) = 1/(rank(n) * C(n,k)) — the edited version: the inverse
/// triangle with each row divided by the rank of that row.
Grid harmonic_triangle(int depth);

Grid generate_triangle(TriangleKind kind, int depth);

struct Violation {
    Position pos;
    Rational expected;  // what the rule demands (the weighted neighbour sum)
    Rational found;     // the stored value
};

struct RecurrenceReport {
    bool holds = true;
    std::vector<Violation> violations;
};

/// Checks every interior cell of an apex-up triangle against the rule.
/// Edge cells (k = 0 or k = n) carry only one neighbour in either
/// direction and are exempt; sum-of-two-below additionally skips the last
/// row. Requires all-rational cells (Error("non-numeric cell")) and the
/// complete triangle shape.
RecurrenceReport validate_recurrence(const Grid& triangle, const RecurrenceRule& rule);

/// Flips the direction, keeps the weight. Involution.
RecurrenceRule reverse_rule(const RecurrenceRule& rule);

/// Builds the unique apex-up triangle of depth |edge| satisfying
/// sum-of-two-below/unweighted whose column 0 is the given edge, via the
/// subtraction fill T(n,k+1) = T(n-1,k) - T(n,k).
Grid solve_reversed(const std::vector<Rational>& edge);

/// C(n,k) as an exact big integer (0 outside 0 <= k <= n).
BigInt binomial(int n, int k);

}  // namespace tabula
