#pragma once

// Dictionary/regex concept matcher. Matching is per sentence,
// case-insensitive, leftmost-longest, non-overlapping, and aligned to token
// boundaries; phrases are whitespace-normalized so they match across line
// breaks.

#include "radtext/bioc.hpp"

#include <memory>
#include <string>
#include <vector>

namespace radtext {

struct ConceptEntry {
    std::string id;   // e.g. "RID5350"
    std::string name; // e.g. "Pneumonia"
    std::string source; // optional terminology name ("UMLS", "RadLex")
    std::vector<std::string> phrases;
    std::vector<std::string> regexes;
};

class ConceptVocabulary {
public:
    explicit ConceptVocabulary(std::vector<ConceptEntry> entries);
    ~ConceptVocabulary();
    ConceptVocabulary(ConceptVocabulary&&) noexcept;
    ConceptVocabulary& operator=(ConceptVocabulary&&) noexcept;

    const std::vector<ConceptEntry>& entries() const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

// YAML with a top-level `concepts` sequence. Throws ConfigError on
// duplicate ids, entries without phrases or regexes, or bad regexes.
ConceptVocabulary parse_concept_vocab(const std::string& yaml_text);
ConceptVocabulary load_concept_vocab(const std::string& path);
ConceptVocabulary default_concept_vocab();

BiocDocument match_concepts(const BiocDocument& doc, const ConceptVocabulary& vocab);
BiocCollection match_concepts(const BiocCollection& collection,
                              const ConceptVocabulary& vocab);

} // namespace radtext
