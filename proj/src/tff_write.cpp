#include "tabula/tff.hpp"

#include "xml.hpp"

#include <map>
#include <set>

namespace tabula {

namespace {

void check_layer_ref(const std::string& layer, const std::vector<Layer>& layers) {
    for (const Layer& l : layers) {
        if (l.id == layer) {
            return;
        }
    }
    throw Error("unknown layer " + layer);
}

}  // namespace

void validate_document(const Document& doc) {
    if (doc.version != "1.0") {
        throw Error("unsupported version " + doc.version);
    }
    const Grid& grid = doc.forest.grid;
    grid.check_shape();

    std::set<std::string> layer_ids;
    for (const Layer& layer : doc.layers) {
        if (layer.order < 0) {
            throw Error("negative layer order");
        }
        if (!layer_ids.insert(layer.id).second) {
            throw Error("duplicate layer id " + layer.id);
        }
    }
    for (const Cell& cell : grid.cells()) {
        if (cell.layer) {
            check_layer_ref(*cell.layer, doc.layers);
        }
    }

    std::set<std::string> tree_ids;
    for (const ReadingTree& tree : doc.forest.trees) {
        if (!tree_ids.insert(tree.id).second) {
            throw Error("duplicate tree id " + tree.id);
        }
        check_tree(tree, grid);
    }

    for (const Link& link : doc.forest.links) {
        const ReadingTree* from = doc.forest.find_tree(link.from_tree);
        const ReadingTree* to = doc.forest.find_tree(link.to_tree);
        if (!from) {
            throw Error("unknown id " + link.from_tree);
        }
        if (!to) {
            throw Error("unknown id " + link.to_tree);
        }
        if (!find_internal_node(from->root, link.from_node)) {
            throw Error("unknown id " + link.from_node);
        }
        if (!find_internal_node(to->root, link.to_node)) {
            throw Error("unknown id " + link.to_node);
        }
        if (link.relation == Relation::identity && link.from_tree == link.to_tree) {
            throw Error("identity must cross trees");
        }
        std::set<std::string> keys;
        for (const auto& [key, value] : link.attrs) {
            (void)value;
            if (!keys.insert(key).second) {
                throw Error("duplicate link attribute " + key);
            }
        }
    }

    std::set<std::string> strat_ids;
    for (const Stratification& s : doc.stratifications) {
        if (!strat_ids.insert(s.id).second) {
            throw Error("duplicate stratification id " + s.id);
        }
        std::set<std::string> domain;
        for (const auto& [cell, layer] : s.assignment) {
            if (!grid.find(cell)) {
                throw Error("unknown cell " + cell);
            }
            if (!domain.insert(cell).second) {
                throw Error("cell " + cell + " assigned twice in " + s.id);
            }
            check_layer_ref(layer, doc.layers);
        }
        for (const auto& [earlier, later] : s.dependencies) {
            if (!domain.count(earlier)) {
                throw Error("unknown cell " + earlier);
            }
            if (!domain.count(later)) {
                throw Error("unknown cell " + later);
            }
        }
    }
}

namespace {

class TffWriter {
public:
    explicit TffWriter(const Document& doc) : doc_(doc) {}

    std::string run() {
        out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        open_line("<tff version=\"" + esc(doc_.version) + "\">");
        write_grid();
        write_readings();
        write_links();
        write_genetic();
        close_line("</tff>");
        return out_;
    }

private:
    static std::string esc(std::string_view v) { return xml::escape_attr(v); }

    void line(const std::string& text) {
        out_.append(indent_ * 2, ' ');
        out_ += text;
        out_ += '\n';
    }
    void open_line(const std::string& text) {
        line(text);
        ++indent_;
    }
    void close_line(const std::string& text) {
        --indent_;
        line(text);
    }

    void write_grid() {
        const Grid& grid = doc_.forest.grid;
        std::string open = "<grid orientation=\"" + orientation_name(grid.orientation()) + "\"";
        if (grid.cells().empty()) {
            line(open + "/>");
            return;
        }
        open_line(open + ">");
        for (const Cell& cell : grid.cells()) {
            std::string s = "<cell id=\"" + esc(cell.id) + "\" row=\"" +
                            std::to_string(cell.pos.row) + "\" col=\"" +
                            std::to_string(cell.pos.col) + "\"";
            if (is_rational(cell.value)) {
                s += " value=\"" + as_rational(cell.value).str() + "\"";
            } else {
                s += " token=\"" + esc(as_token(cell.value)) + "\"";
            }
            if (cell.layer) {
                s += " layer=\"" + esc(*cell.layer) + "\"";
            }
            line(s + "/>");
        }
        close_line("</grid>");
    }

    void write_node(const Node& node) {
        if (node.is_leaf()) {
            line("<leaf cell=\"" + esc(*node.cell) + "\"/>");
            return;
        }
        open_line("<node id=\"" + esc(node.id) + "\" label=\"" + esc(node.label) + "\">");
        for (const Node& child : node.children) {
            write_node(child);
        }
        close_line("</node>");
    }

    void write_readings() {
        if (doc_.forest.trees.empty()) {
            return;
        }
        open_line("<readings>");
        for (const ReadingTree& tree : doc_.forest.trees) {
            open_line("<tree id=\"" + esc(tree.id) + "\" kind=\"" + tree_kind_name(tree.kind) +
                      "\" strategy=\"" + strategy_name(tree.strategy) + "\">");
            write_node(tree.root);
            close_line("</tree>");
        }
        close_line("</readings>");
    }

    void write_links() {
        if (doc_.forest.links.empty()) {
            return;
        }
        open_line("<links>");
        for (const Link& link : doc_.forest.links) {
            std::string s = "<link from-tree=\"" + esc(link.from_tree) + "\" from-node=\"" +
                            esc(link.from_node) + "\" to-tree=\"" + esc(link.to_tree) +
                            "\" to-node=\"" + esc(link.to_node) + "\" relation=\"" +
                            relation_name(link.relation) + "\"";
            if (link.attrs.empty()) {
                line(s + "/>");
                continue;
            }
            open_line(s + ">");
            for (const auto& [key, value] : link.attrs) {
                line("<attr key=\"" + esc(key) + "\" value=\"" + esc(value) + "\"/>");
            }
            close_line("</link>");
        }
        close_line("</links>");
    }

    void write_genetic() {
        if (doc_.layers.empty() && doc_.stratifications.empty()) {
            return;
        }
        open_line("<genetic>");
        for (const Layer& layer : doc_.layers) {
            line("<layer id=\"" + esc(layer.id) + "\" order=\"" + std::to_string(layer.order) +
                 "\" evidence=\"" + esc(layer.evidence) + "\"/>");
        }
        for (const Stratification& s : doc_.stratifications) {
            if (s.assignment.empty() && s.dependencies.empty()) {
                line("<stratification id=\"" + esc(s.id) + "\"/>");
                continue;
            }
            open_line("<stratification id=\"" + esc(s.id) + "\">");
            for (const auto& [cell, layer] : s.assignment) {
                line("<assign cell=\"" + esc(cell) + "\" layer=\"" + esc(layer) + "\"/>");
            }
            for (const auto& [earlier, later] : s.dependencies) {
                line("<dep earlier=\"" + esc(earlier) + "\" later=\"" + esc(later) + "\"/>");
            }
            close_line("</stratification>");
        }
        close_line("</genetic>");
    }

    const Document& doc_;
    std::string out_;
    int indent_ = 0;
};

}  // namespace

std::string write_tff(const Document& doc) {
    validate_document(doc);
    return TffWriter(doc).run();
}

Document attach_stratification(Document doc, Stratification s) {
    std::set<std::string> domain;
    for (const auto& [cell, layer] : s.assignment) {
        if (!doc.forest.grid.find(cell)) {
            throw Error("unknown cell " + cell);
        }
        domain.insert(cell);
        check_layer_ref(layer, doc.layers);
    }
    for (const auto& [earlier, later] : s.dependencies) {
        if (!domain.count(earlier)) {
            throw Error("unknown cell " + earlier);
        }
        if (!domain.count(later)) {
            throw Error("unknown cell " + later);
        }
    }
    doc.stratifications.push_back(std::move(s));
    return doc;
}

Document support_alternatives(Document doc, std::vector<Stratification> strats) {
    for (Stratification& s : strats) {
        doc = attach_stratification(std::move(doc), std::move(s));
    }
    return doc;
}

}  // namespace tabula
