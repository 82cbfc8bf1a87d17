#pragma once

// In-memory BioC document model. Collections own documents, documents own
// passages, passages own sentences; annotations and relations can live on
// passages or sentences. Offsets are document-global and counted in Unicode
// scalar values. Values are treated as immutable once built; annotators
// construct new collections instead of mutating shared ones.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace radtext {

// Ordered string map. Keys are unique; insertion order is preserved and
// survives XML round trips byte-exactly.
class Infons {
public:
    using Entry = std::pair<std::string, std::string>;

    // Inserts, or updates in place keeping the original position.
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;
    // Returns "" for missing keys.
    std::string get(const std::string& key) const;
    std::optional<std::string> find(const std::string& key) const;
    void erase(const std::string& key);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const Infons&) const = default;

private:
    std::vector<Entry> entries_;
};

struct Location {
    int64_t offset = 0; // document-global, in code points
    int64_t length = 0;

    bool operator==(const Location&) const = default;
};

struct BiocAnnotation {
    std::string id;
    Infons infons;
    std::vector<Location> locations;
    std::string text;

    // First location; every built-in annotator emits exactly one.
    const Location& location() const { return locations.front(); }

    bool operator==(const BiocAnnotation&) const = default;
};

struct BiocNode {
    std::string refid;
    std::string role; // "governor" | "dependant"

    bool operator==(const BiocNode&) const = default;
};

struct BiocRelation {
    std::string id;
    Infons infons; // must contain key "dependency"
    std::vector<BiocNode> nodes;

    bool operator==(const BiocRelation&) const = default;
};

struct BiocSentence {
    int64_t offset = 0;
    std::string text;
    Infons infons;
    std::vector<BiocAnnotation> annotations;
    std::vector<BiocRelation> relations;

    bool operator==(const BiocSentence&) const = default;
};

struct BiocPassage {
    int64_t offset = 0;
    std::string text;
    Infons infons;
    std::vector<BiocSentence> sentences;
    std::vector<BiocAnnotation> annotations;
    std::vector<BiocRelation> relations;

    bool operator==(const BiocPassage&) const = default;
};

struct BiocDocument {
    std::string id;
    Infons infons;
    std::vector<BiocPassage> passages;

    bool operator==(const BiocDocument&) const = default;
};

struct BiocCollection {
    std::string source;
    std::string date; // ISO-8601 calendar date
    std::string key;
    Infons infons;
    std::vector<BiocDocument> documents;

    bool operator==(const BiocCollection&) const = default;
};

// One invariant violation found by validate(). `path` identifies the node,
// e.g. "document[r1].passage[1].annotation[a2]".
struct Violation {
    std::string path;
    std::string message;
};

// Checks every model invariant: location bounds and substring equality,
// id uniqueness, relation node resolution, passage/sentence ordering and
// containment, date syntax. Total function; empty result iff valid.
// Substring checks are skipped for passages with empty text and no
// sentences (documents that carry annotations but no source text), and an
// annotation whose document image is an all-'X' run of matching length is
// accepted (a masked PHI span keeps its original text).
std::vector<Violation> validate(const BiocCollection& collection);

// Convenience for error messages and serializer checks.
std::string describe(const std::vector<Violation>& violations, std::size_t max_items = 8);

} // namespace radtext
