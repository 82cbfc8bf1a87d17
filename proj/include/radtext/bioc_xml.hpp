#pragma once

// BioC XML reader/writer. The element vocabulary is fixed (collection,
// source, date, key, infon, document, id, passage, sentence, offset, text,
// annotation, location, relation, node); anything else is rejected.
// Serialization is deterministic: 2-space indentation, LF line endings,
// stable attribute order, and infons emitted in insertion order.

#include "radtext/bioc.hpp"

#include <string>

namespace radtext {

// Throws ParseError (malformed XML, with line/column) or DataError
// (schema problems: unknown elements, non-numeric offsets, duplicate
// infon keys).
BiocCollection parse_bioc_xml(const std::string& xml);

// Validates first and throws DataError listing the violations when the
// collection breaks a model invariant.
std::string serialize_bioc_xml(const BiocCollection& collection);

BiocCollection load_bioc_file(const std::string& path);
void save_bioc_file(const BiocCollection& collection, const std::string& path);

} // namespace radtext
