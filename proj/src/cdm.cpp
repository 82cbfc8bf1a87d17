#include "radtext/cdm.hpp"

#include "radtext/csv.hpp"
#include "radtext/errors.hpp"
#include "radtext/unicode.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace radtext {

namespace {

// Annotation infons that map to dedicated NOTE_NLP columns. Everything else
// is packed into term_modifiers as "key=value" pairs joined by "; ";
// an infon literally named "modifiers" contributes its raw value.
const std::set<std::string>& mapped_keys() {
    static const std::set<std::string> keys = {
        "lemma",      "source_concept_id", "exists",   "temporal", "snippet",
        "section_concept_id", "nlp_system", "nlp_date", "nlp_datetime",
    };
    return keys;
}

std::string pack_modifiers(const Infons& infons) {
    std::string out;
    for (const auto& [key, value] : infons.entries()) {
        if (mapped_keys().count(key)) continue;
        if (!out.empty()) out += "; ";
        if (key == "modifiers")
            out += value;
        else
            out += key + "=" + value;
    }
    return out;
}

// Splits a term_modifiers string back into infons when it is in the exact
// canonical form pack_modifiers emits; otherwise the whole string is kept
// opaque under the "modifiers" key so a later pack reproduces it verbatim.
// `reject_negation` guards the term_exists fallback: an unpacked negation
// infon must never invent a term_exists value the row did not carry.
std::vector<Infons::Entry> unpack_modifiers(const std::string& raw, bool reject_negation) {
    std::vector<Infons::Entry> entries;
    if (raw.empty()) return entries;

    auto opaque = [&] {
        return std::vector<Infons::Entry>{{"modifiers", raw}};
    };

    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (true) {
        std::size_t sep = raw.find("; ", start);
        if (sep == std::string::npos) {
            pieces.push_back(raw.substr(start));
            break;
        }
        pieces.push_back(raw.substr(start, sep - start));
        start = sep + 2;
    }
    std::set<std::string> seen;
    for (const std::string& piece : pieces) {
        std::size_t eq = piece.find('=');
        if (eq == std::string::npos || eq == 0) return opaque();
        std::string key = piece.substr(0, eq);
        std::string value = piece.substr(eq + 1);
        if (mapped_keys().count(key) || key == "modifiers") return opaque();
        if (reject_negation && key == "negation") return opaque();
        if (!seen.insert(key).second) return opaque();
        entries.emplace_back(std::move(key), std::move(value));
    }
    // Round-trip check: only accept if repacking reproduces the input.
    std::string repacked;
    for (const auto& [k, v] : entries) {
        if (!repacked.empty()) repacked += "; ";
        repacked += k + "=" + v;
    }
    if (repacked != raw) return opaque();
    return entries;
}

CdmNoteNlpRow annotation_to_row(const BiocCollection& collection, const BiocDocument& doc,
                                const BiocPassage& passage, const BiocSentence* sentence,
                                const BiocAnnotation& a) {
    if (a.locations.empty())
        throw DataError("annotation \"" + a.id + "\" in document \"" + doc.id +
                        "\" has no location");
    CdmNoteNlpRow row;
    const std::string prefix = doc.id + ".";
    row.note_nlp_id = a.id.rfind(prefix, 0) == 0 ? a.id : prefix + a.id;
    row.note_id = doc.id;
    row.section_concept_id = a.infons.has("section_concept_id")
                                 ? a.infons.get("section_concept_id")
                                 : passage.infons.get("section_concept_id");
    row.offset = a.location().offset;
    row.lexical_variant = a.text;
    row.note_nlp_concept_id = a.infons.get("lemma");
    row.note_nlp_source_concept_id = a.infons.get("source_concept_id");
    row.nlp_system = a.infons.has("nlp_system") ? a.infons.get("nlp_system")
                                                : collection.infons.get("nlp_system");
    row.nlp_date = a.infons.has("nlp_date") ? a.infons.get("nlp_date") : collection.date;
    row.nlp_datetime = a.infons.has("nlp_datetime") ? a.infons.get("nlp_datetime")
                                                    : collection.infons.get("nlp_datetime");
    if (a.infons.has("exists")) {
        row.term_exists = a.infons.get("exists");
    } else if (a.infons.has("negation")) {
        row.term_exists = a.infons.get("negation") == "True" ? "False" : "True";
    }
    row.term_temporal = a.infons.get("temporal");

    // snippet: the enclosing sentence when there is one, else a +-40
    // character window around the term.
    if (a.infons.has("snippet")) {
        row.snippet = a.infons.get("snippet");
    } else if (sentence != nullptr) {
        row.snippet = sentence->text;
    } else if (!passage.text.empty()) {
        const int64_t text_len = static_cast<int64_t>(uni::length(passage.text));
        int64_t begin = a.location().offset - passage.offset - 40;
        int64_t end = a.location().offset - passage.offset + a.location().length + 40;
        begin = std::max<int64_t>(begin, 0);
        end = std::min(end, text_len);
        if (begin < end)
            row.snippet = uni::substr(passage.text, static_cast<std::size_t>(begin),
                                      static_cast<std::size_t>(end - begin));
    }

    row.term_modifiers = pack_modifiers(a.infons);
    return row;
}

} // namespace

const std::vector<std::string>& note_nlp_columns() {
    static const std::vector<std::string> columns = {
        "note_nlp_id",        "note_id",
        "section_concept_id", "snippet",
        "offset",             "lexical_variant",
        "note_nlp_concept_id", "note_nlp_source_concept_id",
        "nlp_system",         "nlp_date",
        "nlp_datetime",       "term_exists",
        "term_temporal",      "term_modifiers",
    };
    return columns;
}

std::vector<CdmNoteNlpRow> bioc2cdm(const BiocCollection& collection) {
    std::vector<CdmNoteNlpRow> rows;
    for (const BiocDocument& doc : collection.documents) {
        for (const BiocPassage& passage : doc.passages) {
            for (const BiocAnnotation& a : passage.annotations)
                rows.push_back(annotation_to_row(collection, doc, passage, nullptr, a));
            for (const BiocSentence& sentence : passage.sentences)
                for (const BiocAnnotation& a : sentence.annotations)
                    rows.push_back(annotation_to_row(collection, doc, passage, &sentence, a));
        }
    }
    return rows;
}

BiocCollection cdm2bioc(const std::vector<CdmNoteNlpRow>& rows,
                        const std::optional<std::vector<NoteRow>>& notes) {
    std::set<std::string> seen_ids;
    for (const CdmNoteNlpRow& row : rows) {
        if (!seen_ids.insert(row.note_nlp_id).second)
            throw DataError("duplicate note_nlp_id \"" + row.note_nlp_id + "\"");
        if (row.lexical_variant.empty())
            throw DataError("row \"" + row.note_nlp_id + "\" has an empty lexical_variant");
        if (row.offset < 0)
            throw DataError("row \"" + row.note_nlp_id + "\" has a negative offset");
    }
    std::map<std::string, std::string> note_text;
    if (notes) {
        for (const NoteRow& n : *notes) note_text[n.note_id] = n.note_text;
    }

    BiocCollection collection;
    collection.source = "RadText";
    if (!rows.empty()) {
        // Collection-level fields describe the whole table; annotation-level
        // infons are authoritative for each row, so these are only set when
        // they cannot contradict a row (bioc2cdm prefers the annotation).
        auto iso_shaped = [](const std::string& s) {
            if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
            for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        bool same_date = iso_shaped(rows.front().nlp_date);
        bool same_system = !rows.front().nlp_system.empty();
        for (const CdmNoteNlpRow& row : rows) {
            same_date = same_date && row.nlp_date == rows.front().nlp_date;
            same_system = same_system && row.nlp_system == rows.front().nlp_system;
        }
        if (same_date) collection.date = rows.front().nlp_date;
        if (same_system) collection.infons.set("nlp_system", rows.front().nlp_system);
    }

    std::map<std::string, std::size_t> doc_index;
    for (const CdmNoteNlpRow& row : rows) {
        if (!doc_index.count(row.note_id)) {
            if (notes && !note_text.count(row.note_id))
                throw DataError("note_id \"" + row.note_id + "\" not found in the notes table");
            BiocDocument doc;
            doc.id = row.note_id;
            BiocPassage passage;
            passage.offset = 0;
            if (notes) passage.text = note_text[row.note_id];
            doc.passages.push_back(std::move(passage));
            doc_index[row.note_id] = collection.documents.size();
            collection.documents.push_back(std::move(doc));
        }
        BiocDocument& doc = collection.documents[doc_index[row.note_id]];
        BiocPassage& passage = doc.passages.front();

        const int64_t length = static_cast<int64_t>(uni::length(row.lexical_variant));
        if (notes) {
            const int64_t text_len = static_cast<int64_t>(uni::length(passage.text));
            if (row.offset + length > text_len)
                throw DataError("row \"" + row.note_nlp_id + "\" spans [" +
                                std::to_string(row.offset) + ", " +
                                std::to_string(row.offset + length) +
                                ") beyond the note text length " + std::to_string(text_len));
        }

        BiocAnnotation a;
        const std::string prefix = row.note_id + ".";
        a.id = row.note_nlp_id.rfind(prefix, 0) == 0 ? row.note_nlp_id.substr(prefix.size())
                                                     : row.note_nlp_id;
        if (!row.note_nlp_source_concept_id.empty())
            a.infons.set("source_concept_id", row.note_nlp_source_concept_id);
        if (!row.note_nlp_concept_id.empty()) a.infons.set("lemma", row.note_nlp_concept_id);
        if (!row.term_exists.empty()) a.infons.set("exists", row.term_exists);
        if (!row.term_temporal.empty()) a.infons.set("temporal", row.term_temporal);
        if (!row.snippet.empty()) a.infons.set("snippet", row.snippet);
        if (!row.section_concept_id.empty())
            a.infons.set("section_concept_id", row.section_concept_id);
        if (!row.nlp_system.empty()) a.infons.set("nlp_system", row.nlp_system);
        if (!row.nlp_date.empty()) a.infons.set("nlp_date", row.nlp_date);
        if (!row.nlp_datetime.empty()) a.infons.set("nlp_datetime", row.nlp_datetime);
        for (const auto& [key, value] :
             unpack_modifiers(row.term_modifiers, row.term_exists.empty()))
            a.infons.set(key, value);
        a.locations.push_back({row.offset, length});
        a.text = row.lexical_variant;
        passage.annotations.push_back(std::move(a));
    }
    return collection;
}

BiocCollection csv2bioc(const std::string& csv_text, const std::string& id_column,
                        const std::string& text_column, const std::string& date) {
    csv::Table table = csv::parse(csv_text);
    const int id_col = table.column(id_column);
    const int text_col = table.column(text_column);
    if (id_col < 0) throw ConfigError("CSV has no column named \"" + id_column + "\"");
    if (text_col < 0) throw ConfigError("CSV has no column named \"" + text_column + "\"");

    BiocCollection collection;
    collection.source = "RadText";
    collection.date = date;
    collection.infons.set("nlp_system", "RadText");

    std::set<std::string> seen;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string& id = row[id_col];
        const std::string& text = row[text_col];
        if (id.empty())
            throw DataError("row " + std::to_string(r + 2) + ": empty \"" + id_column + "\"");
        if (text.empty())
            throw DataError("row " + std::to_string(r + 2) + ": empty \"" + text_column + "\"");
        if (!seen.insert(id).second)
            throw DataError("row " + std::to_string(r + 2) + ": duplicate note id \"" + id + "\"");
        BiocDocument doc;
        doc.id = id;
        BiocPassage passage;
        passage.offset = 0;
        passage.text = text;
        doc.passages.push_back(std::move(passage));
        collection.documents.push_back(std::move(doc));
    }
    return collection;
}

std::string write_note_nlp_csv(const std::vector<CdmNoteNlpRow>& rows) {
    std::string out = csv::write_row(note_nlp_columns());
    for (const CdmNoteNlpRow& r : rows) {
        out += csv::write_row({r.note_nlp_id, r.note_id, r.section_concept_id, r.snippet,
                               std::to_string(r.offset), r.lexical_variant,
                               r.note_nlp_concept_id, r.note_nlp_source_concept_id,
                               r.nlp_system, r.nlp_date, r.nlp_datetime, r.term_exists,
                               r.term_temporal, r.term_modifiers});
    }
    return out;
}

std::vector<CdmNoteNlpRow> parse_note_nlp_csv(const std::string& csv_text) {
    csv::Table table = csv::parse(csv_text);
    std::vector<int> cols;
    for (const std::string& name : note_nlp_columns()) {
        int c = table.column(name);
        if (c < 0) throw ConfigError("NOTE_NLP CSV has no column named \"" + name + "\"");
        cols.push_back(c);
    }
    std::vector<CdmNoteNlpRow> rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& f = table.rows[r];
        CdmNoteNlpRow row;
        row.note_nlp_id = f[cols[0]];
        row.note_id = f[cols[1]];
        row.section_concept_id = f[cols[2]];
        row.snippet = f[cols[3]];
        try {
            row.offset = std::stoll(f[cols[4]]);
        } catch (const std::exception&) {
            throw ParseError("NOTE_NLP CSV: offset \"" + f[cols[4]] + "\" is not an integer",
                             static_cast<int>(r + 2));
        }
        row.lexical_variant = f[cols[5]];
        row.note_nlp_concept_id = f[cols[6]];
        row.note_nlp_source_concept_id = f[cols[7]];
        row.nlp_system = f[cols[8]];
        row.nlp_date = f[cols[9]];
        row.nlp_datetime = f[cols[10]];
        row.term_exists = f[cols[11]];
        row.term_temporal = f[cols[12]];
        row.term_modifiers = f[cols[13]];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<NoteRow> parse_notes_csv(const std::string& csv_text) {
    csv::Table table = csv::parse(csv_text);
    const int id_col = table.column("note_id");
    const int text_col = table.column("note_text");
    if (id_col < 0 || text_col < 0)
        throw ConfigError("notes CSV requires note_id and note_text columns");
    std::vector<NoteRow> notes;
    for (const auto& row : table.rows) notes.push_back({row[id_col], row[text_col]});
    return notes;
}

} // namespace radtext
