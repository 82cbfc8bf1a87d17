#pragma once

// Section segmentation. Splits each document into alternating title and
// body passages. A line is a section header when a vocabulary title matches
// at line start (case-insensitive, immediately followed by ':') or when it
// matches the generic header shape ^[A-Z][A-Z ']{0,40}: — headers outside
// the vocabulary become title passages without concept infons.

#include "radtext/bioc.hpp"

#include <string>
#include <vector>

namespace radtext {

struct SectionTitle {
    std::string title; // matched case-insensitively at line start
    std::string section_concept;
    std::string section_concept_id;
};

class SectionTitleVocab {
public:
    explicit SectionTitleVocab(std::vector<SectionTitle> entries);

    const std::vector<SectionTitle>& entries() const { return entries_; }

    // Longest vocabulary title matching at the start of `line` (and
    // followed by ':'); -1 if none.
    int match(const std::u32string& line) const;

private:
    std::vector<SectionTitle> entries_;
};

// CSV with columns title, section_concept, section_concept_id. Throws
// ConfigError on duplicate titles or empty patterns.
SectionTitleVocab parse_section_vocab(const std::string& csv_text);
SectionTitleVocab load_section_vocab(const std::string& path);
SectionTitleVocab default_section_vocab();

BiocDocument split_sections(const BiocDocument& doc, const SectionTitleVocab& vocab);
BiocCollection split_sections(const BiocCollection& collection,
                              const SectionTitleVocab& vocab);

} // namespace radtext
