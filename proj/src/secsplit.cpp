#include "radtext/secsplit.hpp"

#include "radtext/csv.hpp"
#include "radtext/errors.hpp"
#include "radtext/resources.hpp"
#include "radtext/unicode.hpp"

#include <algorithm>
#include <set>

namespace radtext {

namespace {

char32_t fold(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

bool is_blank(char32_t c) { return c == U' ' || c == U'\t' || c == U'\r'; }

} // namespace

SectionTitleVocab::SectionTitleVocab(std::vector<SectionTitle> entries)
    : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const SectionTitle& e : entries_) {
        if (e.title.empty()) throw ConfigError("section vocabulary: empty title pattern");
        std::string folded;
        for (char c : e.title) folded += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!seen.insert(folded).second)
            throw ConfigError("section vocabulary: duplicate title \"" + e.title + "\"");
    }
}

int SectionTitleVocab::match(const std::u32string& line) const {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const std::u32string title = uni::to_u32(entries_[i].title);
        if (title.size() + 1 > line.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < title.size(); ++k) {
            if (fold(line[k]) != fold(title[k])) {
                ok = false;
                break;
            }
        }
        if (ok && line[title.size()] == U':' && title.size() > best_len) {
            best = static_cast<int>(i);
            best_len = title.size();
        }
    }
    return best;
}

SectionTitleVocab parse_section_vocab(const std::string& csv_text) {
    csv::Table table = csv::parse(csv_text);
    const int title_col = table.column("title");
    const int concept_col = table.column("section_concept");
    const int id_col = table.column("section_concept_id");
    if (title_col < 0 || concept_col < 0 || id_col < 0)
        throw ConfigError("section vocabulary requires columns title, section_concept, "
                          "section_concept_id");
    std::vector<SectionTitle> entries;
    for (const auto& row : table.rows)
        entries.push_back({row[title_col], row[concept_col], row[id_col]});
    return SectionTitleVocab(std::move(entries));
}

SectionTitleVocab load_section_vocab(const std::string& path) {
    return parse_section_vocab(resources::load(resources::kSectionVocab, path));
}

SectionTitleVocab default_section_vocab() {
    return parse_section_vocab(resources::load(resources::kSectionVocab));
}

namespace {

// Generic header shape: line-initial run of uppercase words ending in ':'.
// Returns the header length including the colon, or 0.
std::size_t generic_header_len(const std::u32string& line) {
    if (line.empty() || line[0] < U'A' || line[0] > U'Z') return 0;
    std::size_t i = 1;
    while (i < line.size() && i <= 41) {
        char32_t c = line[i];
        if (c == U':') return i + 1;
        const bool allowed = (c >= U'A' && c <= U'Z') || c == U' ' || c == U'\'';
        if (!allowed) return 0;
        ++i;
    }
    return 0;
}

struct Segment {
    int64_t offset = 0; // document-global
    std::u32string text;
    Infons infons;
};

std::vector<Segment> segment_passage(const BiocPassage& passage,
                                     const SectionTitleVocab& vocab) {
    const std::u32string text = uni::to_u32(passage.text);
    std::vector<Segment> segments;

    // Header positions: (start, header length incl. colon, vocab index).
    struct Header {
        std::size_t start;
        std::size_t len;
        int vocab_index;
    };
    std::vector<Header> headers;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find(U'\n', line_start);
        if (line_end == std::u32string::npos) line_end = text.size();
        const std::u32string line = text.substr(line_start, line_end - line_start);
        int vi = vocab.match(line);
        std::size_t hlen = 0;
        if (vi >= 0)
            hlen = uni::to_u32(vocab.entries()[vi].title).size() + 1;
        else
            hlen = generic_header_len(line);
        if (hlen > 0) headers.push_back({line_start, hlen, vi});
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }

    auto add_body = [&](std::size_t begin, std::size_t end) {
        // Trim whitespace, keeping offsets aligned with the document.
        while (begin < end && (is_blank(text[begin]) || text[begin] == U'\n')) ++begin;
        while (end > begin && (is_blank(text[end - 1]) || text[end - 1] == U'\n')) --end;
        if (begin >= end) return;
        Segment seg;
        seg.offset = passage.offset + static_cast<int64_t>(begin);
        seg.text = text.substr(begin, end - begin);
        segments.push_back(std::move(seg));
    };

    std::size_t cursor = 0;
    for (const Header& h : headers) {
        if (h.start > cursor) add_body(cursor, h.start);
        Segment title;
        title.offset = passage.offset + static_cast<int64_t>(h.start);
        title.text = text.substr(h.start, h.len);
        if (h.vocab_index >= 0) {
            const SectionTitle& entry = vocab.entries()[h.vocab_index];
            if (!entry.section_concept.empty())
                title.infons.set("section_concept", entry.section_concept);
            if (!entry.section_concept_id.empty())
                title.infons.set("section_concept_id", entry.section_concept_id);
        }
        segments.push_back(std::move(title));
        cursor = h.start + h.len;
    }
    add_body(cursor, text.size());

    if (segments.empty() && !text.empty()) {
        // Whitespace-only passage; keep it as-is.
        segments.push_back({passage.offset, text, {}});
    }
    return segments;
}

} // namespace

BiocDocument split_sections(const BiocDocument& doc, const SectionTitleVocab& vocab) {
    BiocDocument out;
    out.id = doc.id;
    out.infons = doc.infons;
    for (const BiocPassage& passage : doc.passages) {
        if (passage.text.empty()) {
            out.passages.push_back(passage);
            continue;
        }
        std::vector<BiocPassage> pieces;
        for (Segment& seg : segment_passage(passage, vocab)) {
            BiocPassage p;
            p.offset = seg.offset;
            p.text = uni::to_utf8(seg.text);
            p.infons = std::move(seg.infons);
            pieces.push_back(std::move(p));
        }
        // Re-home existing annotations (PHI spans) into the piece that
        // contains them; relations follow their annotations' piece.
        for (const BiocAnnotation& a : passage.annotations) {
            bool placed = false;
            for (BiocPassage& p : pieces) {
                const int64_t begin = p.offset;
                const int64_t end = p.offset + static_cast<int64_t>(uni::length(p.text));
                if (!a.locations.empty() && a.location().offset >= begin &&
                    a.location().offset + a.location().length <= end) {
                    p.annotations.push_back(a);
                    placed = true;
                    break;
                }
            }
            if (!placed && !pieces.empty()) pieces.front().annotations.push_back(a);
        }
        for (BiocPassage& p : pieces) out.passages.push_back(std::move(p));
    }
    return out;
}

BiocCollection split_sections(const BiocCollection& collection,
                              const SectionTitleVocab& vocab) {
    BiocCollection out = collection;
    for (BiocDocument& doc : out.documents) doc = split_sections(doc, vocab);
    return out;
}

} // namespace radtext
