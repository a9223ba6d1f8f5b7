#pragma once

#include "tabula/grid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tabula {

enum class TreeKind { symbolic, iconic };
enum class Strategy { list_of_lists, double_entry, other };
enum class Relation { identity, genetic_succession, other };
enum class Pattern { rows, columns, diag_falling, diag_rising };

std::string tree_kind_name(TreeKind k);
std::optional<TreeKind> tree_kind_from_name(std::string_view name);
std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);
std::string relation_name(Relation r);
std::optional<Relation> relation_from_name(std::string_view name);
std::string pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);

/// One node of a reading tree. Internal nodes carry an id, a label and at
/// least one child; leaves carry only the id of the grid cell they read
/// (their identity is that cell, so they have no id of their own).
struct Node {
    std::string id;
    std::string label;
    std::vector<Node> children;
    std::optional<std::string> cell;

    bool is_leaf() const { return cell.has_value(); }

    static Node leaf(std::string cell_id) {
        Node n;
        n.cell = std::move(cell_id);
        return n;
    }
    static Node internal(std::string id, std::string label, std::vector<Node> children = {}) {
        Node n;
        n.id = std::move(id);
        n.label = std::move(label);
        n.children = std::move(children);
        return n;
    }
};

/// One rooted reading of the table.
struct ReadingTree {
    std::string id;
    TreeKind kind = TreeKind::symbolic;
    Strategy strategy = Strategy::other;
    Node root;
};

/// Typed cross-tree relation between two internal nodes. Attributes are
/// inert metadata stored verbatim, in order.
struct Link {
    std::string from_tree;
    std::string from_node;
    std::string to_tree;
    std::string to_node;
    Relation relation = Relation::identity;
    std::vector<std::pair<std::string, std::string>> attrs;
};

/// The edition structure: one grid, several overlapping readings of it,
/// and typed links between readings. Value-semantic; mutation-style
/// operations return updated forests.
struct Forest {
    Grid grid;
    std::vector<ReadingTree> trees;
    std::vector<Link> links;

    const ReadingTree* find_tree(const std::string& id) const;
};

/// Pre-order walk of the internal nodes of a tree; returns the first node
/// whose id matches, or nullptr.
const Node* find_internal_node(const Node& root, const std::string& id);

/// Structural check of one tree against the grid: internal nodes have ids,
/// labels may repeat, leaves reference existing cells and no cell is read
/// twice within the tree. Throws Error on violation.
void check_tree(const ReadingTree& tree, const Grid& grid);

/// One internal node per line of the pattern (ordered by index), leaves in
/// traversal order of the line; every grid cell appears exactly once.
/// Diagonal patterns are defined for triangle orientations only.
ReadingTree build_reading(const Grid& grid, Pattern pattern, TreeKind kind, Strategy strategy,
                          const std::string& tree_id);

/// Values of the leaves below the internal node with the given label
/// (pre-order first match), in order. Error("no such reading line") if the
/// label is absent.
std::vector<CellValue> extract_sequence(const Grid& grid, const ReadingTree& tree,
                                        const std::string& label);

struct NodeRef {
    std::string tree;
    std::string node;
    std::string label;
};

struct EmbeddabilityReport {
    bool embeddable = true;
    std::optional<std::pair<NodeRef, NodeRef>> witness;
};

/// True iff the leaf cell-sets of every pair of internal nodes across all
/// trees are nested or disjoint — the condition under which one rooted
/// markup tree could carry every reading. When false, the witness is the
/// first overlapping non-nested pair in document order.
EmbeddabilityReport is_single_tree_embeddable(const Forest& forest);

/// Appends a link after validating that both endpoints name existing
/// internal nodes and that identity links cross trees.
Forest add_link(Forest forest, Link link);

/// "List of lists": the grid is synthesized from an ordered succession of
/// progressions; a single rows-hierarchy tree records that conception.
Forest encode_list_of_lists(const std::vector<std::vector<CellValue>>& rows);

/// "Double entry": terms first, readings derived from the table along
/// several axes. Rectangular grids get rows + columns; triangular grids
/// get rows + both diagonal readings (the constant-column diagonal plays
/// the column role there). No links are emitted; interactions are opt-in.
Forest encode_double_entry(Grid grid);

/// Projection back to the shared substrate; readings and links never
/// alter it.
const Grid& render(const Forest& forest);

}  // namespace tabula
