// tabula — generate, encode, validate and interrogate table documents.
//
// Exit codes: 0 success / positive verdict, 1 well-formed negative verdict,
// 2 input or usage error. Verdicts go to stdout, diagnostics to stderr.

#include "tabula/tff.hpp"
#include "tabula/triangles.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tabula;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << content;
    if (!out) {
        throw Error("cannot write " + path);
    }
}

struct OutputOptions {
    std::string path;
    std::string format = "tff";
    char delimiter = ' ';
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("-o,--output", opts.path, "output file (stdout when omitted)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"tff", "delimited"}));
    cmd->add_option("--delimiter", opts.delimiter, "cell delimiter for delimited output");
}

/// Grid plus a rows reading, the default shape of generated documents.
Document document_for(Grid grid) {
    Document doc;
    doc.forest.grid = std::move(grid);
    doc.forest.trees.push_back(build_reading(doc.forest.grid, Pattern::rows, TreeKind::symbolic,
                                             Strategy::list_of_lists, "t0"));
    return doc;
}

void emit(const Document& doc, const OutputOptions& opts) {
    std::string payload = opts.format == "delimited"
                              ? export_delimited(doc.forest.grid, opts.delimiter) + "\n"
                              : write_tff(doc);
    if (opts.path.empty()) {
        std::cout << payload;
    } else {
        write_file(opts.path, payload);
    }
}

std::string violation_line(const Violation& v) {
    return "(" + std::to_string(v.pos.row) + "," + std::to_string(v.pos.col) + ") expected " +
           v.expected.str() + " found " + v.found.str();
}

int cmd_generate(const std::string& kind_name, int depth, const OutputOptions& opts) {
    TriangleKind kind;
    if (kind_name == "arithmetic") {
        kind = TriangleKind::arithmetic;
    } else if (kind_name == "inverse") {
        kind = TriangleKind::inverse;
    } else {
        kind = TriangleKind::harmonic;
    }
    emit(document_for(generate_triangle(kind, depth)), opts);
    return 0;
}

int cmd_diff(const std::vector<std::string>& tokens, const std::string& input,
             const OutputOptions& opts) {
    std::vector<std::string> raw = tokens;
    if (!input.empty()) {
        std::istringstream in(read_file(input));
        std::string token;
        while (in >> token) {
            raw.push_back(token);
        }
    }
    if (raw.empty()) {
        throw Error("empty progression");
    }
    std::vector<Rational> base;
    base.reserve(raw.size());
    for (const std::string& token : raw) {
        base.push_back(Rational::parse(token));
    }
    Grid triangle = difference_triangle(base);
    const Rational apex = as_rational(triangle.at(Position{triangle.row_count() - 1, 0}).value);
    if (!opts.path.empty() || opts.format == "delimited") {
        emit(document_for(std::move(triangle)), opts);
    }
    std::cout << apex.str() << "\n";
    return 0;
}

int cmd_validate(const std::string& file, const std::string& rule_name,
                 const std::string& weight_name) {
    Document doc = parse_tff(read_file(file));
    RecurrenceRule rule;
    rule.direction =
        rule_name == "above" ? Direction::sum_of_two_above : Direction::sum_of_two_below;
    rule.weight = weight_name == "rank-ratio" ? Weight::rank_ratio : Weight::unweighted;
    RecurrenceReport report = validate_recurrence(doc.forest.grid, rule);
    if (report.holds) {
        std::cout << "holds\n";
        return 0;
    }
    std::cout << "violated\n";
    for (const Violation& v : report.violations) {
        std::cout << violation_line(v) << "\n";
    }
    return 1;
}

void list_labels(const Node& node, bool root, std::ostream& out) {
    if (node.is_leaf()) {
        return;
    }
    if (!root) {
        out << "  " << node.label << "\n";
    }
    for (const Node& child : node.children) {
        list_labels(child, false, out);
    }
}

int cmd_readings(const std::string& file, const std::string& action, const std::string& label) {
    Document doc = parse_tff(read_file(file));
    const Forest& forest = doc.forest;
    if (action == "list") {
        if (forest.trees.empty()) {
            std::cout << "no readings\n";
            return 0;
        }
        for (const ReadingTree& tree : forest.trees) {
            std::cout << "tree " << tree.id << " kind=" << tree_kind_name(tree.kind)
                      << " strategy=" << strategy_name(tree.strategy) << "\n";
            list_labels(tree.root, true, std::cout);
        }
        return 0;
    }
    if (action == "extract") {
        for (const ReadingTree& tree : forest.trees) {
            try {
                std::vector<CellValue> values = extract_sequence(forest.grid, tree, label);
                for (std::size_t i = 0; i < values.size(); ++i) {
                    std::cout << (i ? " " : "") << value_str(values[i]);
                }
                std::cout << "\n";
                return 0;
            } catch (const Error&) {
                // try the next tree
            }
        }
        throw Error("no such reading line");
    }
    // check-embeddable
    EmbeddabilityReport report = is_single_tree_embeddable(forest);
    if (report.embeddable) {
        std::cout << "embeddable\n";
        return 0;
    }
    const auto& [a, b] = *report.witness;
    std::cout << "NOT embeddable\n";
    std::cout << "witness: " << a.tree << "/" << a.node << " \"" << a.label << "\" overlaps "
              << b.tree << "/" << b.node << " \"" << b.label << "\"\n";
    return 1;
}

int cmd_encode(const std::string& file, const std::string& mode_name,
               const std::string& strategy, const OutputOptions& opts) {
    IngestMode mode = mode_name == "triangle-centered" ? IngestMode::triangle_centered
                                                       : IngestMode::whitespace_columns;
    Grid grid = ingest_text_grid(read_file(file), mode);
    Document doc;
    if (strategy == "double-entry") {
        doc.forest = encode_double_entry(std::move(grid));
    } else {
        std::vector<std::vector<CellValue>> rows;
        for (int r = 0; r < grid.row_count(); ++r) {
            rows.push_back(row_values(grid, r));
        }
        doc.forest = encode_list_of_lists(rows);
    }
    emit(doc, opts);
    return 0;
}

int cmd_strata(const std::string& file, const std::string& action) {
    Document doc = parse_tff(read_file(file));
    if (doc.stratifications.empty()) {
        throw Error("no genetic section in " + file);
    }
    if (action == "validate") {
        bool all_consistent = true;
        for (const Stratification& s : doc.stratifications) {
            StratificationReport report = validate_stratification(s, doc.layers);
            if (report.consistent) {
                std::cout << s.id << ": consistent\n";
            } else {
                all_consistent = false;
                std::cout << s.id << ": inconsistent\n";
                for (const auto& [earlier, later] : report.violations) {
                    std::cout << "  " << earlier << " -> " << later << "\n";
                }
            }
        }
        return all_consistent ? 0 : 1;
    }
    // minimize
    for (const Stratification& s : doc.stratifications) {
        std::vector<std::string> cells;
        cells.reserve(s.assignment.size());
        for (const auto& [cell, layer] : s.assignment) {
            (void)layer;
            cells.push_back(cell);
        }
        Layering layering = minimal_layering(cells, s.dependencies);
        std::cout << s.id << ": " << layering.layer_count << " layers\n";
        for (const auto& [cell, order] : layering.assignment) {
            std::cout << "  " << cell << ": " << order << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tables as grids, reading forests and genetic layers"};
    app.require_subcommand(1);

    std::string kind;
    int depth = 1;
    OutputOptions gen_out;
    CLI::App* generate = app.add_subcommand("generate", "generate a triangle document");
    generate->add_option("--kind", kind, "triangle kind")
        ->required()
        ->check(CLI::IsMember({"arithmetic", "inverse", "harmonic"}));
    generate->add_option("--depth", depth, "number of rows")->required()->check(CLI::PositiveNumber);
    add_output_options(generate, gen_out);

    std::vector<std::string> diff_tokens;
    std::string diff_input;
    OutputOptions diff_out;
    CLI::App* diff = app.add_subcommand("diff", "difference triangle of a progression");
    diff->add_option("terms", diff_tokens, "progression terms (integers or p/q)");
    diff->add_option("-i,--input", diff_input, "read the progression from a file");
    add_output_options(diff, diff_out);

    std::string validate_file, rule_name = "above", weight = "unweighted";
    CLI::App* validate = app.add_subcommand("validate", "check a recurrence rule");
    validate->add_option("file", validate_file, "TFF document")->required();
    validate->add_option("--rule", rule_name, "recurrence direction")
        ->check(CLI::IsMember({"above", "below"}));
    validate->add_option("--weight", weight, "recurrence weight")
        ->check(CLI::IsMember({"unweighted", "rank-ratio"}));

    std::string readings_file, readings_action, readings_label;
    CLI::App* readings = app.add_subcommand("readings", "inspect the reading forest");
    readings->add_option("file", readings_file, "TFF document")->required();
    readings->add_option("action", readings_action, "list | extract | check-embeddable")
        ->required()
        ->check(CLI::IsMember({"list", "extract", "check-embeddable"}));
    readings->add_option("label", readings_label, "reading line label (for extract)");

    std::string encode_file, encode_mode = "whitespace-columns", encode_strategy = "list-of-lists";
    OutputOptions encode_out;
    CLI::App* encode = app.add_subcommand("encode", "encode a plain-text table");
    encode->add_option("file", encode_file, "text file")->required();
    encode->add_option("--mode", encode_mode, "ingestion mode")
        ->check(CLI::IsMember({"whitespace-columns", "triangle-centered"}));
    encode->add_option("--strategy", encode_strategy, "encoding strategy")
        ->check(CLI::IsMember({"list-of-lists", "double-entry"}));
    add_output_options(encode, encode_out);

    std::string strata_file, strata_action;
    CLI::App* strata = app.add_subcommand("strata", "genetic stratification tools");
    strata->add_option("file", strata_file, "TFF document")->required();
    strata->add_option("action", strata_action, "validate | minimize")
        ->required()
        ->check(CLI::IsMember({"validate", "minimize"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(kind, depth, gen_out);
        }
        if (diff->parsed()) {
            return cmd_diff(diff_tokens, diff_input, diff_out);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_file, rule_name, weight);
        }
        if (readings->parsed()) {
            if (readings_action == "extract" && readings_label.empty()) {
                throw Error("extract requires a label");
            }
            return cmd_readings(readings_file, readings_action, readings_label);
        }
        if (encode->parsed()) {
            return cmd_encode(encode_file, encode_mode, encode_strategy, encode_out);
        }
        if (strata->parsed()) {
            return cmd_strata(strata_file, strata_action);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
