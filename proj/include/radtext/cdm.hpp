#pragma once

// Conversion between BioC collections and NOTE_NLP-style CSV tables, plus
// raw-corpus ingestion from CSV. The row type carries the 14 NOTE_NLP
// columns; conversion is lossless in the bioc2cdm(cdm2bioc(rows)) direction
// for every field (see the carrier-infon conventions in cdm.cpp).

#include "radtext/bioc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radtext {

struct CdmNoteNlpRow {
    std::string note_nlp_id; // "<note_id>.<annotation id>"
    std::string note_id;
    std::string section_concept_id;
    std::string snippet;
    int64_t offset = 0;
    std::string lexical_variant;
    std::string note_nlp_concept_id;
    std::string note_nlp_source_concept_id;
    std::string nlp_system;
    std::string nlp_date;
    std::string nlp_datetime;
    std::string term_exists; // "True" | "False" | ""
    std::string term_temporal;
    std::string term_modifiers;

    bool operator==(const CdmNoteNlpRow&) const = default;
};

struct NoteRow {
    std::string note_id;
    std::string note_text;

    bool operator==(const NoteRow&) const = default;
};

// The 14 NOTE_NLP column names, in table order.
const std::vector<std::string>& note_nlp_columns();

// One row per annotation (passage- and sentence-level). Throws DataError
// when an annotation has no location.
std::vector<CdmNoteNlpRow> bioc2cdm(const BiocCollection& collection);

// One document per distinct note_id, one passage each (the note text when
// notes are supplied, else empty text with annotations carrying their own
// text). Throws DataError on duplicate note_nlp_id, unknown note_id, or an
// out-of-bounds offset when notes are supplied.
BiocCollection cdm2bioc(const std::vector<CdmNoteNlpRow>& rows,
                        const std::optional<std::vector<NoteRow>>& notes = std::nullopt);

// CSV corpus ingestion: one document per data row, single passage at
// offset 0. Throws ConfigError when a named column is missing.
BiocCollection csv2bioc(const std::string& csv_text, const std::string& id_column,
                        const std::string& text_column, const std::string& date = "");

// NOTE_NLP table (14 columns) <-> CSV.
std::string write_note_nlp_csv(const std::vector<CdmNoteNlpRow>& rows);
std::vector<CdmNoteNlpRow> parse_note_nlp_csv(const std::string& csv_text);

std::vector<NoteRow> parse_notes_csv(const std::string& csv_text);

} // namespace radtext
