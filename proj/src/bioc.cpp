#include "radtext/bioc.hpp"

#include "radtext/unicode.hpp"

#include <algorithm>
#include <set>

namespace radtext {

void Infons::set(const std::string& key, const std::string& value) {
    for (auto& e : entries_) {
        if (e.first == key) {
            e.second = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

bool Infons::has(const std::string& key) const {
    return find(key).has_value();
}

std::string Infons::get(const std::string& key) const {
    auto v = find(key);
    return v ? *v : std::string();
}

std::optional<std::string> Infons::find(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.first == key) return e.second;
    return std::nullopt;
}

void Infons::erase(const std::string& key) {
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [&](const Entry& e) { return e.first == key; }),
                   entries_.end());
}

namespace {

bool is_iso_date(const std::string& s) {
    // YYYY-MM-DD with plausible calendar ranges.
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return false;
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

class Validator {
public:
    explicit Validator(const BiocCollection& c) : collection_(c) {}

    std::vector<Violation> run() {
        if (!collection_.date.empty() && !is_iso_date(collection_.date))
            add("collection", "date \"" + collection_.date + "\" is not an ISO-8601 calendar date");
        for (std::size_t d = 0; d < collection_.documents.size(); ++d) check_document(d);
        return std::move(violations_);
    }

private:
    void add(const std::string& path, const std::string& msg) {
        violations_.push_back({path, msg});
    }

    void check_document(std::size_t d) {
        const BiocDocument& doc = collection_.documents[d];
        const std::string path = "document[" + (doc.id.empty() ? std::to_string(d) : doc.id) + "]";
        int64_t prev_end = -1;
        for (std::size_t p = 0; p < doc.passages.size(); ++p) {
            const BiocPassage& passage = doc.passages[p];
            const std::string ppath = path + ".passage[" + std::to_string(p) + "]";
            if (passage.offset < 0) add(ppath, "negative offset");
            if (passage.offset < prev_end)
                add(ppath, "passages out of order or overlapping");
            prev_end = passage.offset + static_cast<int64_t>(uni::length(passage.text));
            check_passage(passage, ppath);
        }
    }

    void check_passage(const BiocPassage& passage, const std::string& path) {
        // A passage with no text and no sentences carries annotations whose
        // text has no document counterpart; substring checks do not apply.
        const bool has_text = !passage.text.empty() || !passage.sentences.empty();
        const std::u32string text32 = uni::to_u32(passage.text);

        int64_t prev_end = -1;
        for (std::size_t s = 0; s < passage.sentences.size(); ++s) {
            const BiocSentence& sentence = passage.sentences[s];
            const std::string spath = path + ".sentence[" + std::to_string(s) + "]";
            const int64_t rel = sentence.offset - passage.offset;
            const int64_t len = static_cast<int64_t>(uni::length(sentence.text));
            if (sentence.offset < prev_end)
                add(spath, "sentences out of order or overlapping");
            prev_end = sentence.offset + len;
            if (rel < 0 || rel + len > static_cast<int64_t>(text32.size())) {
                add(spath, "sentence span outside passage span");
            } else if (uni::to_u32(sentence.text) != text32.substr(rel, len)) {
                add(spath, "sentence text does not equal the passage substring at its offset");
            }
            check_annotations(sentence.annotations, sentence.offset, sentence.text, true, spath);
            check_relations(sentence.relations, sentence.annotations, spath);
        }
        check_annotations(passage.annotations, passage.offset, passage.text, has_text, path);
        check_relations(passage.relations, passage.annotations, path);
    }

    void check_annotations(const std::vector<BiocAnnotation>& annotations,
                           int64_t base, const std::string& text, bool has_text,
                           const std::string& path) {
        std::set<std::string> ids;
        const std::u32string text32 = has_text ? uni::to_u32(text) : std::u32string();
        for (const BiocAnnotation& a : annotations) {
            const std::string apath = path + ".annotation[" + a.id + "]";
            if (!ids.insert(a.id).second) add(apath, "duplicate annotation id");
            if (a.locations.empty()) {
                add(apath, "annotation has no location");
                continue;
            }
            for (const Location& loc : a.locations) {
                if (loc.offset < 0) add(apath, "negative location offset");
                if (loc.length <= 0) add(apath, "non-positive location length");
            }
            if (!has_text) continue;
            // For the single-location case the annotation text must equal the
            // covered substring; multi-location annotations are checked piecewise
            // against the concatenation.
            std::u32string covered;
            bool in_bounds = true;
            for (const Location& loc : a.locations) {
                const int64_t rel = loc.offset - base;
                if (rel < 0 || rel + loc.length > static_cast<int64_t>(text32.size())) {
                    add(apath, "location outside containing text span");
                    in_bounds = false;
                    break;
                }
                covered += text32.substr(rel, loc.length);
            }
            if (!in_bounds) continue;
            const std::u32string atext = uni::to_u32(a.text);
            // De-identification keeps the original span in the annotation
            // while the document carries its 'X'-mask, so an all-'X' image
            // of matching length is accepted too.
            const bool masked_image =
                atext.size() == covered.size() && !covered.empty() &&
                covered.find_first_not_of(U'X') == std::u32string::npos;
            if (atext != covered && !masked_image)
                add(apath, "annotation text does not equal the referenced substring");
        }
    }

    void check_relations(const std::vector<BiocRelation>& relations,
                         const std::vector<BiocAnnotation>& annotations,
                         const std::string& path) {
        std::set<std::string> ids;
        std::set<std::string> ann_ids;
        for (const BiocAnnotation& a : annotations) ann_ids.insert(a.id);
        for (const BiocRelation& r : relations) {
            const std::string rpath = path + ".relation[" + r.id + "]";
            if (!ids.insert(r.id).second) add(rpath, "duplicate relation id");
            if (r.infons.get("dependency").empty())
                add(rpath, "missing or empty \"dependency\" infon");
            int governors = 0, dependants = 0;
            for (const BiocNode& n : r.nodes) {
                if (n.role == "governor")
                    ++governors;
                else if (n.role == "dependant")
                    ++dependants;
                else
                    add(rpath, "unknown node role \"" + n.role + "\"");
                if (!ann_ids.count(n.refid))
                    add(rpath, "node refid \"" + n.refid + "\" does not resolve to an annotation");
            }
            if (governors != 1 || dependants != 1)
                add(rpath, "relation must have exactly one governor and one dependant node");
        }
    }

    const BiocCollection& collection_;
    std::vector<Violation> violations_;
};

} // namespace

std::vector<Violation> validate(const BiocCollection& collection) {
    return Validator(collection).run();
}

std::string describe(const std::vector<Violation>& violations, std::size_t max_items) {
    std::string out;
    std::size_t n = std::min(violations.size(), max_items);
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += "; ";
        out += violations[i].path + ": " + violations[i].message;
    }
    if (violations.size() > n)
        out += "; and " + std::to_string(violations.size() - n) + " more";
    return out;
}

} // namespace radtext
