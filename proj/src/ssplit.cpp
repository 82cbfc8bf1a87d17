#include "radtext/ssplit.hpp"

#include "radtext/errors.hpp"
#include "radtext/resources.hpp"
#include "radtext/unicode.hpp"

#include <algorithm>

namespace radtext {

namespace {

bool is_space32(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n';
}

bool is_digit32(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_alpha32(char32_t c) {
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || c >= 0x80;
}

bool is_alnum32(char32_t c) { return is_digit32(c) || is_alpha32(c); }

std::string lower_ascii(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 32;
    return out;
}

} // namespace

AbbreviationList::AbbreviationList(std::set<std::string> entries)
    : entries_(std::move(entries)) {}

bool AbbreviationList::contains(const std::string& token) const {
    std::string t = lower_ascii(token);
    if (entries_.count(t)) return true;
    if (!t.empty() && t.back() == '.') {
        t.pop_back();
        return entries_.count(t) > 0;
    }
    return false;
}

AbbreviationList parse_abbreviations(const std::string& text) {
    std::set<std::string> entries;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') {
            for (char c : line)
                if (c == ' ' || c == '\t')
                    throw ConfigError("abbreviation list: entry with whitespace on line " +
                                      std::to_string(line_no));
            entries.insert(lower_ascii(line));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return AbbreviationList(std::move(entries));
}

AbbreviationList load_abbreviations(const std::string& path) {
    return parse_abbreviations(resources::load(resources::kAbbreviations, path));
}

AbbreviationList default_abbreviations() {
    return parse_abbreviations(resources::load(resources::kAbbreviations));
}

namespace {

// The maximal run of non-space characters containing position i.
std::u32string surrounding_run(const std::u32string& text, std::size_t i) {
    std::size_t begin = i;
    while (begin > 0 && !is_space32(text[begin - 1])) --begin;
    std::size_t end = i;
    while (end < text.size() && !is_space32(text[end])) ++end;
    return text.substr(begin, end - begin);
}

bool ends_sentence(const std::u32string& text, std::size_t i,
                   const AbbreviationList& abbrevs) {
    const char32_t c = text[i];
    if (c == U'!' || c == U'?') return true;
    if (c != U'.') return false;
    // Decimal guard: '.' flanked by digits never terminates.
    if (i > 0 && i + 1 < text.size() && is_digit32(text[i - 1]) && is_digit32(text[i + 1]))
        return false;
    // Single capital initial ("J. Smith").
    if (i > 0 && text[i - 1] >= U'A' && text[i - 1] <= U'Z' &&
        (i == 1 || !is_alnum32(text[i - 2])))
        return false;
    // Abbreviations, including dotted forms: check the whole non-space run
    // around the period ("a.m.") and the word directly before it.
    const std::u32string run32 = surrounding_run(text, i);
    std::string run = uni::to_utf8(run32);
    // Strip trailing punctuation other than the dots that belong to the form.
    while (!run.empty() && !(std::isalnum(static_cast<unsigned char>(run.back())) ||
                             run.back() == '.'))
        run.pop_back();
    if (abbrevs.contains(run)) return false;
    std::size_t begin = i;
    while (begin > 0 && is_alnum32(text[begin - 1])) --begin;
    const std::string word = uni::to_utf8(text.substr(begin, i - begin)) + ".";
    if (abbrevs.contains(word)) return false;
    return true;
}

struct Span {
    std::size_t begin;
    std::size_t end;
};

std::vector<Span> sentence_spans(const std::u32string& text,
                                 const AbbreviationList& abbrevs) {
    std::vector<Span> spans;
    const std::size_t n = text.size();
    std::size_t start = 0;
    auto emit = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_space32(text[begin])) ++begin;
        while (end > begin && is_space32(text[end - 1])) --end;
        if (begin < end) spans.push_back({begin, end});
    };
    std::size_t i = 0;
    while (i < n) {
        if (ends_sentence(text, i, abbrevs)) {
            emit(start, i + 1);
            start = i + 1;
            ++i;
            continue;
        }
        if (text[i] == U'\n') {
            // A blank line (two newlines with only blanks between) breaks.
            std::size_t j = i + 1;
            while (j < n && (text[j] == U' ' || text[j] == U'\t' || text[j] == U'\r')) ++j;
            if (j < n && text[j] == U'\n') {
                emit(start, i);
                start = j + 1;
                i = j + 1;
                continue;
            }
        }
        ++i;
    }
    emit(start, n);
    return spans;
}

// Title passages (a bare section header) get no sentences.
bool looks_like_title(const std::u32string& text) {
    if (text.empty() || text.back() != U':' || text.size() > 60) return false;
    for (char32_t c : text)
        if (c == U'\n') return false;
    return true;
}

} // namespace

BiocDocument split_sentences(const BiocDocument& doc, const AbbreviationList& abbrevs) {
    BiocDocument out = doc;
    for (BiocPassage& passage : out.passages) {
        if (passage.text.empty() || !passage.sentences.empty()) continue;
        const std::u32string text = uni::to_u32(passage.text);
        if (looks_like_title(text)) continue;
        for (const Span& span : sentence_spans(text, abbrevs)) {
            BiocSentence s;
            s.offset = passage.offset + static_cast<int64_t>(span.begin);
            s.text = uni::to_utf8(text.substr(span.begin, span.end - span.begin));
            passage.sentences.push_back(std::move(s));
        }
    }
    return out;
}

BiocCollection split_sentences(const BiocCollection& collection,
                               const AbbreviationList& abbrevs) {
    BiocCollection out = collection;
    for (BiocDocument& doc : out.documents) doc = split_sentences(doc, abbrevs);
    return out;
}

std::vector<Token> tokenize_text(const std::string& text, int64_t base_offset) {
    const std::u32string t = uni::to_u32(text);
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = t.size();
    while (i < n) {
        if (is_space32(t[i])) {
            ++i;
            continue;
        }
        std::size_t begin = i;
        if (is_alnum32(t[i])) {
            ++i;
            while (i < n) {
                if (is_alnum32(t[i])) {
                    ++i;
                } else if ((t[i] == U'-' || t[i] == U'\'') && i + 1 < n &&
                           is_alnum32(t[i + 1]) && is_alnum32(t[i - 1])) {
                    ++i; // internal hyphen/apostrophe
                } else if (t[i] == U'.' && i + 1 < n && is_digit32(t[i - 1]) &&
                           is_digit32(t[i + 1])) {
                    ++i; // decimal point
                } else {
                    break;
                }
            }
        } else {
            ++i; // punctuation: one character per token
        }
        Token token;
        token.offset = base_offset + static_cast<int64_t>(begin);
        token.length = static_cast<int64_t>(i - begin);
        token.text = uni::to_utf8(t.substr(begin, i - begin));
        tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<Token> tokenize(const BiocSentence& sentence) {
    return tokenize_text(sentence.text, sentence.offset);
}

} // namespace radtext
