#pragma once

#include "tabula/forest.hpp"
#include "tabula/genetic.hpp"

#include <string>
#include <vector>

namespace tabula {

/// A complete Tabular Forest Format document: the forest plus its genetic
/// apparatus. parse_tff(write_tff(doc)) reproduces the document exactly —
/// ids, child order and attributes included.
struct Document {
    std::string version = "1.0";
    Forest forest;
    std::vector<Layer> layers;
    std::vector<Stratification> stratifications;
};

/// Checks every invariant a TFF document promises: grid shape, tree
/// structure, link endpoints, layer references, stratification domains.
/// Throws Error on the first violation.
void validate_document(const Document& doc);

/// Serializes to TFF XML (UTF-8, Unix newlines, fixed attribute order).
/// Validates first; nothing is emitted for an invalid document.
std::string write_tff(const Document& doc);

/// Parses TFF XML, validating syntax ("syntax error at line:col"),
/// referential integrity ("unknown id ..."), and canonical rationals
/// ("non-canonical rational ...") before returning.
Document parse_tff(std::string_view text);

enum class IngestMode { whitespace_columns, triangle_centered };

/// Plain-text grid ingestion. whitespace-columns: one row per line, tokens
/// split on whitespace, numeric tokens ("p", "p/q") become rationals and
/// everything else stays symbolic; orientation is inferred from the row
/// lengths. triangle-centered: row n must carry n+1 tokens and the result
/// is apex-up triangular.
Grid ingest_text_grid(std::string_view text, IngestMode mode);

/// One line per row, cells joined by the delimiter, rationals in canonical
/// text. Error("delimiter collision") if a symbolic token contains the
/// delimiter.
std::string export_delimited(const Grid& grid, char delimiter);

/// Attaches a stratification as inert metadata after checking that its
/// cells exist in the grid and its layers are declared. Contradictory
/// alternatives coexist; nothing is merged.
Document attach_stratification(Document doc, Stratification s);

/// Attaches several alternative stratifications in order.
Document support_alternatives(Document doc, std::vector<Stratification> strats);

}  // namespace tabula
