#include "tabula/tff.hpp"

#include "xml.hpp"

#include <cctype>

namespace tabula {

namespace {

using xml::Element;

[[noreturn]] void fail_at(const Element& e, const std::string& detail) {
    throw Error("invalid <" + e.name + "> at " + std::to_string(e.line) + ":" +
                std::to_string(e.col) + ": " + detail);
}

const std::string& require_attr(const Element& e, std::string_view key) {
    const std::string* value = e.attr(key);
    if (!value) {
        fail_at(e, "missing attribute " + std::string(key));
    }
    return *value;
}

void allow_attrs(const Element& e, std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : e.attrs) {
        (void)value;
        bool known = false;
        for (std::string_view k : keys) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail_at(e, "unknown attribute " + key);
        }
    }
}

int parse_nonneg_int(const Element& e, std::string_view key) {
    const std::string& text = require_attr(e, key);
    if (text.empty() || text.size() > 9) {
        fail_at(e, "bad " + std::string(key) + " \"" + text + "\"");
    }
    int value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            fail_at(e, "bad " + std::string(key) + " \"" + text + "\"");
        }
        value = value * 10 + (c - '0');
    }
    if (text.size() > 1 && text[0] == '0') {
        fail_at(e, "bad " + std::string(key) + " \"" + text + "\"");
    }
    return value;
}

Grid parse_grid(const Element& e) {
    allow_attrs(e, {"orientation"});
    auto orientation = orientation_from_name(require_attr(e, "orientation"));
    if (!orientation) {
        fail_at(e, "unknown orientation \"" + require_attr(e, "orientation") + "\"");
    }
    Grid grid(*orientation);
    for (const Element& child : e.children) {
        if (child.name != "cell") {
            fail_at(child, "expected <cell>");
        }
        allow_attrs(child, {"id", "row", "col", "value", "token", "layer"});
        Cell cell;
        cell.id = require_attr(child, "id");
        cell.pos.row = parse_nonneg_int(child, "row");
        cell.pos.col = parse_nonneg_int(child, "col");
        const std::string* value = child.attr("value");
        const std::string* token = child.attr("token");
        if ((value == nullptr) == (token == nullptr)) {
            fail_at(child, "exactly one of value/token required");
        }
        if (value) {
            if (!Rational::is_canonical_text(*value)) {
                throw Error("non-canonical rational \"" + *value + "\"");
            }
            cell.value = Rational::parse(*value);
        } else {
            cell.value = *token;
        }
        if (const std::string* layer = child.attr("layer")) {
            cell.layer = *layer;
        }
        grid.add_cell(std::move(cell));
    }
    return grid;
}

Node parse_node(const Element& e) {
    if (e.name == "leaf") {
        allow_attrs(e, {"cell"});
        if (!e.children.empty()) {
            fail_at(e, "leaf with children");
        }
        return Node::leaf(require_attr(e, "cell"));
    }
    if (e.name != "node") {
        fail_at(e, "expected <node> or <leaf>");
    }
    allow_attrs(e, {"id", "label"});
    Node node = Node::internal(require_attr(e, "id"), require_attr(e, "label"));
    if (e.children.empty()) {
        fail_at(e, "internal node without children");
    }
    for (const Element& child : e.children) {
        node.children.push_back(parse_node(child));
    }
    return node;
}

ReadingTree parse_tree(const Element& e) {
    allow_attrs(e, {"id", "kind", "strategy"});
    ReadingTree tree;
    tree.id = require_attr(e, "id");
    auto kind = tree_kind_from_name(require_attr(e, "kind"));
    if (!kind) {
        fail_at(e, "unknown kind \"" + require_attr(e, "kind") + "\"");
    }
    tree.kind = *kind;
    auto strategy = strategy_from_name(require_attr(e, "strategy"));
    if (!strategy) {
        fail_at(e, "unknown strategy \"" + require_attr(e, "strategy") + "\"");
    }
    tree.strategy = *strategy;
    if (e.children.size() != 1) {
        fail_at(e, "tree requires exactly one root node");
    }
    tree.root = parse_node(e.children[0]);
    if (tree.root.is_leaf()) {
        fail_at(e, "tree root must be an internal node");
    }
    return tree;
}

Link parse_link(const Element& e) {
    allow_attrs(e, {"from-tree", "from-node", "to-tree", "to-node", "relation"});
    Link link;
    link.from_tree = require_attr(e, "from-tree");
    link.from_node = require_attr(e, "from-node");
    link.to_tree = require_attr(e, "to-tree");
    link.to_node = require_attr(e, "to-node");
    auto relation = relation_from_name(require_attr(e, "relation"));
    if (!relation) {
        fail_at(e, "unknown relation \"" + require_attr(e, "relation") + "\"");
    }
    link.relation = *relation;
    for (const Element& child : e.children) {
        if (child.name != "attr") {
            fail_at(child, "expected <attr>");
        }
        allow_attrs(child, {"key", "value"});
        link.attrs.emplace_back(require_attr(child, "key"), require_attr(child, "value"));
    }
    return link;
}

Layer parse_layer(const Element& e) {
    allow_attrs(e, {"id", "order", "evidence"});
    Layer layer;
    layer.id = require_attr(e, "id");
    layer.order = parse_nonneg_int(e, "order");
    layer.evidence = require_attr(e, "evidence");
    return layer;
}

Stratification parse_stratification(const Element& e) {
    allow_attrs(e, {"id"});
    Stratification s;
    s.id = require_attr(e, "id");
    for (const Element& child : e.children) {
        if (child.name == "assign") {
            allow_attrs(child, {"cell", "layer"});
            s.assignment.emplace_back(require_attr(child, "cell"), require_attr(child, "layer"));
        } else if (child.name == "dep") {
            allow_attrs(child, {"earlier", "later"});
            s.dependencies.emplace_back(require_attr(child, "earlier"),
                                        require_attr(child, "later"));
        } else {
            fail_at(child, "expected <assign> or <dep>");
        }
    }
    return s;
}

}  // namespace

Document parse_tff(std::string_view text) {
    Element root = xml::parse(text);
    if (root.name != "tff") {
        fail_at(root, "expected <tff>");
    }
    allow_attrs(root, {"version"});
    Document doc;
    doc.version = require_attr(root, "version");

    bool have_grid = false;
    std::size_t section = 0;  // 1=grid, 2=readings, 3=links, 4=genetic
    for (const Element& child : root.children) {
        if (child.name == "grid") {
            if (section >= 1) {
                fail_at(child, "misplaced <grid>");
            }
            section = 1;
            have_grid = true;
            doc.forest.grid = parse_grid(child);
        } else if (child.name == "readings") {
            if (section < 1 || section >= 2) {
                fail_at(child, "misplaced <readings>");
            }
            section = 2;
            for (const Element& tree : child.children) {
                if (tree.name != "tree") {
                    fail_at(tree, "expected <tree>");
                }
                doc.forest.trees.push_back(parse_tree(tree));
            }
        } else if (child.name == "links") {
            if (section < 1 || section >= 3) {
                fail_at(child, "misplaced <links>");
            }
            section = 3;
            for (const Element& link : child.children) {
                if (link.name != "link") {
                    fail_at(link, "expected <link>");
                }
                doc.forest.links.push_back(parse_link(link));
            }
        } else if (child.name == "genetic") {
            if (section < 1 || section >= 4) {
                fail_at(child, "misplaced <genetic>");
            }
            section = 4;
            for (const Element& item : child.children) {
                if (item.name == "layer") {
                    if (!doc.stratifications.empty()) {
                        fail_at(item, "layers must precede stratifications");
                    }
                    doc.layers.push_back(parse_layer(item));
                } else if (item.name == "stratification") {
                    doc.stratifications.push_back(parse_stratification(item));
                } else {
                    fail_at(item, "expected <layer> or <stratification>");
                }
            }
        } else {
            fail_at(child, "unknown section <" + child.name + ">");
        }
    }
    if (!have_grid) {
        fail_at(root, "missing <grid>");
    }

    validate_document(doc);
    return doc;
}

}  // namespace tabula
