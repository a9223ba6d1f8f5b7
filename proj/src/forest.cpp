#include "tabula/forest.hpp"

#include <algorithm>
#include <set>

namespace tabula {

std::string tree_kind_name(TreeKind k) {
    return k == TreeKind::symbolic ? "symbolic" : "iconic";
}

std::optional<TreeKind> tree_kind_from_name(std::string_view name) {
    if (name == "symbolic") return TreeKind::symbolic;
    if (name == "iconic") return TreeKind::iconic;
    return std::nullopt;
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::list_of_lists: return "list-of-lists";
        case Strategy::double_entry: return "double-entry";
        case Strategy::other: return "other";
    }
    return "other";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    if (name == "list-of-lists") return Strategy::list_of_lists;
    if (name == "double-entry") return Strategy::double_entry;
    if (name == "other") return Strategy::other;
    return std::nullopt;
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::identity: return "identity";
        case Relation::genetic_succession: return "genetic-succession";
        case Relation::other: return "other";
    }
    return "other";
}

std::optional<Relation> relation_from_name(std::string_view name) {
    if (name == "identity") return Relation::identity;
    if (name == "genetic-succession") return Relation::genetic_succession;
    if (name == "other") return Relation::other;
    return std::nullopt;
}

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::rows: return "rows";
        case Pattern::columns: return "columns";
        case Pattern::diag_falling: return "diag-falling";
        case Pattern::diag_rising: return "diag-rising";
    }
    return "rows";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
    if (name == "rows") return Pattern::rows;
    if (name == "columns") return Pattern::columns;
    if (name == "diag-falling") return Pattern::diag_falling;
    if (name == "diag-rising") return Pattern::diag_rising;
    return std::nullopt;
}

const ReadingTree* Forest::find_tree(const std::string& id) const {
    for (const ReadingTree& t : trees) {
        if (t.id == id) {
            return &t;
        }
    }
    return nullptr;
}

const Node* find_internal_node(const Node& root, const std::string& id) {
    if (root.is_leaf()) {
        return nullptr;
    }
    if (root.id == id) {
        return &root;
    }
    for (const Node& child : root.children) {
        if (const Node* hit = find_internal_node(child, id)) {
            return hit;
        }
    }
    return nullptr;
}

namespace {

void collect_leaf_cells(const Node& node, std::vector<std::string>& out) {
    if (node.is_leaf()) {
        out.push_back(*node.cell);
        return;
    }
    for (const Node& child : node.children) {
        collect_leaf_cells(child, out);
    }
}

void check_node(const Node& node, const Grid& grid, std::set<std::string>& node_ids,
                std::set<std::string>& cells_seen) {
    if (node.is_leaf()) {
        if (!node.children.empty()) {
            throw Error("leaf with children");
        }
        if (!grid.find(*node.cell)) {
            throw Error("unknown id " + *node.cell);
        }
        if (!cells_seen.insert(*node.cell).second) {
            throw Error("cell " + *node.cell + " read twice in one tree");
        }
        return;
    }
    if (node.id.empty()) {
        throw Error("internal node without id");
    }
    if (!node_ids.insert(node.id).second) {
        throw Error("duplicate node id " + node.id);
    }
    if (node.children.empty()) {
        throw Error("internal node " + node.id + " without children");
    }
    for (const Node& child : node.children) {
        check_node(child, grid, node_ids, cells_seen);
    }
}

}  // namespace

void check_tree(const ReadingTree& tree, const Grid& grid) {
    if (tree.id.empty()) {
        throw Error("tree without id");
    }
    std::set<std::string> node_ids;
    std::set<std::string> cells_seen;
    check_node(tree.root, grid, node_ids, cells_seen);
}

namespace {

/// The lines of a pattern as ordered cell lists, with their labels.
std::vector<std::pair<std::string, std::vector<const Cell*>>> pattern_lines(const Grid& grid,
                                                                            Pattern pattern) {
    std::vector<std::pair<std::string, std::vector<const Cell*>>> lines;
    const Orientation o = grid.orientation();
    const bool triangular =
        o == Orientation::triangle_apex_up || o == Orientation::triangle_apex_down;
    switch (pattern) {
        case Pattern::rows:
            for (int r = 0; r < grid.row_count(); ++r) {
                auto cells = grid.row(r);
                if (!cells.empty()) {
                    lines.emplace_back("row " + std::to_string(r), std::move(cells));
                }
            }
            break;
        case Pattern::columns: {
            int width = grid.max_row_length();
            for (int c = 0; c < width; ++c) {
                std::vector<const Cell*> cells;
                for (int r = 0; r < grid.row_count(); ++r) {
                    if (const Cell* cell = grid.find(Position{r, c})) {
                        cells.push_back(cell);
                    }
                }
                if (!cells.empty()) {
                    lines.emplace_back("col " + std::to_string(c), std::move(cells));
                }
            }
            break;
        }
        case Pattern::diag_falling: {
            if (!triangular) {
                throw Error("pattern/orientation mismatch");
            }
            // constant column: in a triangle the k-th falling diagonal is col k
            int width = grid.max_row_length();
            for (int k = 0; k < width; ++k) {
                std::vector<const Cell*> cells;
                for (int r = 0; r < grid.row_count(); ++r) {
                    if (const Cell* cell = grid.find(Position{r, k})) {
                        cells.push_back(cell);
                    }
                }
                if (!cells.empty()) {
                    lines.emplace_back("diag k=" + std::to_string(k), std::move(cells));
                }
            }
            break;
        }
        case Pattern::diag_rising: {
            if (!triangular) {
                throw Error("pattern/orientation mismatch");
            }
            if (o == Orientation::triangle_apex_up) {
                // k-th rising diagonal collects (n, n-k)
                for (int k = 0; k < grid.row_count(); ++k) {
                    std::vector<const Cell*> cells;
                    for (int n = k; n < grid.row_count(); ++n) {
                        if (const Cell* cell = grid.find(Position{n, n - k})) {
                            cells.push_back(cell);
                        }
                    }
                    if (!cells.empty()) {
                        lines.emplace_back("diag k=" + std::to_string(k), std::move(cells));
                    }
                }
            } else {
                // base-first storage: the k-th rising diagonal is n + c = W-1-k
                int width = grid.max_row_length();
                for (int k = 0; k < width; ++k) {
                    std::vector<const Cell*> cells;
                    for (int n = 0; n < grid.row_count(); ++n) {
                        int c = width - 1 - k - n;
                        if (c < 0) {
                            break;
                        }
                        if (const Cell* cell = grid.find(Position{n, c})) {
                            cells.push_back(cell);
                        }
                    }
                    if (!cells.empty()) {
                        lines.emplace_back("diag k=" + std::to_string(k), std::move(cells));
                    }
                }
            }
            break;
        }
    }
    return lines;
}

}  // namespace

ReadingTree build_reading(const Grid& grid, Pattern pattern, TreeKind kind, Strategy strategy,
                          const std::string& tree_id) {
    if (grid.empty()) {
        throw Error("empty grid");
    }
    auto lines = pattern_lines(grid, pattern);
    ReadingTree tree;
    tree.id = tree_id;
    tree.kind = kind;
    tree.strategy = strategy;
    tree.root = Node::internal("n0", pattern_name(pattern));
    int next_node = 1;
    for (auto& [label, cells] : lines) {
        Node line = Node::internal("n" + std::to_string(next_node++), label);
        for (const Cell* cell : cells) {
            line.children.push_back(Node::leaf(cell->id));
        }
        tree.root.children.push_back(std::move(line));
    }
    return tree;
}

std::vector<CellValue> extract_sequence(const Grid& grid, const ReadingTree& tree,
                                        const std::string& label) {
    const Node* target = nullptr;
    auto search = [&](auto&& self, const Node& node) -> void {
        if (target || node.is_leaf()) {
            return;
        }
        if (node.label == label) {
            target = &node;
            return;
        }
        for (const Node& child : node.children) {
            self(self, child);
        }
    };
    search(search, tree.root);
    if (!target) {
        throw Error("no such reading line");
    }
    std::vector<std::string> cell_ids;
    collect_leaf_cells(*target, cell_ids);
    std::vector<CellValue> values;
    values.reserve(cell_ids.size());
    for (const std::string& id : cell_ids) {
        const Cell* cell = grid.find(id);
        if (!cell) {
            throw Error("unknown id " + id);
        }
        values.push_back(cell->value);
    }
    return values;
}

namespace {

struct InternalNodeSet {
    NodeRef ref;
    std::set<std::string> cells;
};

void collect_internal_sets(const std::string& tree_id, const Node& node,
                           std::vector<InternalNodeSet>& out) {
    if (node.is_leaf()) {
        return;
    }
    std::vector<std::string> cells;
    collect_leaf_cells(node, cells);
    out.push_back(InternalNodeSet{NodeRef{tree_id, node.id, node.label},
                                  std::set<std::string>(cells.begin(), cells.end())});
    for (const Node& child : node.children) {
        collect_internal_sets(tree_id, child, out);
    }
}

bool nested_or_disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::size_t common = 0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const std::string& id : small) {
        if (large.count(id)) {
            ++common;
        }
    }
    return common == 0 || common == small.size();
}

}  // namespace

EmbeddabilityReport is_single_tree_embeddable(const Forest& forest) {
    std::vector<InternalNodeSet> sets;
    for (const ReadingTree& tree : forest.trees) {
        collect_internal_sets(tree.id, tree.root, sets);
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (!nested_or_disjoint(sets[i].cells, sets[j].cells)) {
                return EmbeddabilityReport{false, std::make_pair(sets[i].ref, sets[j].ref)};
            }
        }
    }
    return EmbeddabilityReport{true, std::nullopt};
}

Forest add_link(Forest forest, Link link) {
    const ReadingTree* from = forest.find_tree(link.from_tree);
    const ReadingTree* to = forest.find_tree(link.to_tree);
    if (!from || !to) {
        throw Error("unknown node");
    }
    if (!find_internal_node(from->root, link.from_node) ||
        !find_internal_node(to->root, link.to_node)) {
        throw Error("unknown node");
    }
    if (link.relation == Relation::identity && link.from_tree == link.to_tree) {
        throw Error("identity must cross trees");
    }
    forest.links.push_back(std::move(link));
    return forest;
}

Forest encode_list_of_lists(const std::vector<std::vector<CellValue>>& rows) {
    Forest forest{grid_from_rows(rows), {}, {}};
    forest.trees.push_back(
        build_reading(forest.grid, Pattern::rows, TreeKind::symbolic, Strategy::list_of_lists, "t0"));
    return forest;
}

Forest encode_double_entry(Grid grid) {
    if (grid.empty()) {
        throw Error("empty grid");
    }
    Forest forest{std::move(grid), {}, {}};
    const bool triangular = forest.grid.orientation() != Orientation::rectangular;
    std::vector<Pattern> patterns =
        triangular ? std::vector<Pattern>{Pattern::rows, Pattern::diag_falling, Pattern::diag_rising}
                   : std::vector<Pattern>{Pattern::rows, Pattern::columns};
    int next = 0;
    for (Pattern p : patterns) {
        forest.trees.push_back(build_reading(forest.grid, p, TreeKind::symbolic,
                                             Strategy::double_entry, "t" + std::to_string(next++)));
    }
    return forest;
}

const Grid& render(const Forest& forest) {
    return forest.grid;
}

}  // namespace tabula
