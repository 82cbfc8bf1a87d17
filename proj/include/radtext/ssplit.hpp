#pragma once

// Rule-based sentence boundary detection and word tokenization. A sentence
// ends after '.', '!', '?', or a blank line, except when the '.' belongs to
// a decimal number, an abbreviation, or a single capital initial. Newlines
// inside a sentence behave like spaces; two consecutive newlines always
// break.

#include "radtext/bioc.hpp"

#include <set>
#include <string>
#include <vector>

namespace radtext {

struct Token {
    std::string text;
    int64_t offset = 0; // document-global, code points
    int64_t length = 0;
};

class AbbreviationList {
public:
    AbbreviationList() = default;
    explicit AbbreviationList(std::set<std::string> entries);

    // True when `token` (lowercased, trailing '.' included or not) is listed.
    bool contains(const std::string& token) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::set<std::string> entries_;
};

// One entry per line; '#' comments and blank lines ignored. Entries must
// not contain whitespace.
AbbreviationList parse_abbreviations(const std::string& text);
AbbreviationList load_abbreviations(const std::string& path);
AbbreviationList default_abbreviations();

BiocDocument split_sentences(const BiocDocument& doc, const AbbreviationList& abbrevs);
BiocCollection split_sentences(const BiocCollection& collection,
                               const AbbreviationList& abbrevs);

// Maximal alphanumeric runs (internal hyphens/apostrophes allowed, decimal
// points kept inside numbers); every other non-space character is its own
// token. Offsets are document-global.
std::vector<Token> tokenize(const BiocSentence& sentence);
std::vector<Token> tokenize_text(const std::string& text, int64_t base_offset);

} // namespace radtext
