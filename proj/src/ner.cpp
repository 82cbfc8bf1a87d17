#include "radtext/ner.hpp"

#include "radtext/errors.hpp"
#include "radtext/resources.hpp"
#include "radtext/ssplit.hpp"
#include "radtext/unicode.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <regex>
#include <set>

namespace radtext {

namespace {

std::string regex_escape(const std::string& s) {
    static const std::string special = R"(\^$.|?*+()[]{})";
    std::string out;
    for (char c : s) {
        if (special.find(c) != std::string::npos) out += '\\';
        out += c;
    }
    return out;
}

// Phrase -> regex: whitespace runs match any whitespace run.
std::string phrase_to_regex(const std::string& phrase) {
    std::string out;
    bool in_space = false;
    for (char c : phrase) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out += "\\s+";
        in_space = false;
        out += regex_escape(std::string(1, c));
    }
    return out;
}

} // namespace

struct ConceptVocabulary::Impl {
    std::vector<ConceptEntry> entries;
    // One compiled matcher per (entry, pattern) pair, in entry order.
    struct Matcher {
        std::size_t entry_index;
        std::regex regex;
    };
    std::vector<Matcher> matchers;
};

ConceptVocabulary::ConceptVocabulary(std::vector<ConceptEntry> entries)
    : impl_(std::make_unique<Impl>()) {
    impl_->entries = std::move(entries);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < impl_->entries.size(); ++i) {
        const ConceptEntry& e = impl_->entries[i];
        if (e.id.empty()) throw ConfigError("concept vocabulary: entry with empty id");
        if (!ids.insert(e.id).second)
            throw ConfigError("concept vocabulary: duplicate concept id \"" + e.id + "\"");
        if (e.phrases.empty() && e.regexes.empty())
            throw ConfigError("concept \"" + e.id + "\" has neither phrases nor regexes");
        for (const std::string& phrase : e.phrases) {
            if (phrase.empty()) throw ConfigError("concept \"" + e.id + "\" has an empty phrase");
            impl_->matchers.push_back(
                {i, std::regex(phrase_to_regex(phrase), std::regex::ECMAScript | std::regex::icase)});
        }
        for (const std::string& re : e.regexes) {
            try {
                impl_->matchers.push_back({i, std::regex(re, std::regex::ECMAScript | std::regex::icase)});
            } catch (const std::regex_error& err) {
                throw ConfigError("concept \"" + e.id + "\": bad regex: " + err.what());
            }
        }
    }
}

ConceptVocabulary::~ConceptVocabulary() = default;
ConceptVocabulary::ConceptVocabulary(ConceptVocabulary&&) noexcept = default;
ConceptVocabulary& ConceptVocabulary::operator=(ConceptVocabulary&&) noexcept = default;

const std::vector<ConceptEntry>& ConceptVocabulary::entries() const { return impl_->entries; }

ConceptVocabulary parse_concept_vocab(const std::string& yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("concept vocabulary: ") + e.what());
    }
    if (!root["concepts"] || !root["concepts"].IsSequence())
        throw ConfigError("concept vocabulary: missing top-level \"concepts\" sequence");
    std::vector<ConceptEntry> entries;
    for (const YAML::Node& n : root["concepts"]) {
        ConceptEntry e;
        if (!n["id"]) throw ConfigError("concept vocabulary: entry without id");
        e.id = n["id"].as<std::string>();
        e.name = n["name"] ? n["name"].as<std::string>() : e.id;
        e.source = n["source"] ? n["source"].as<std::string>() : "";
        if (n["phrases"])
            for (const YAML::Node& p : n["phrases"]) e.phrases.push_back(p.as<std::string>());
        if (n["regexes"])
            for (const YAML::Node& r : n["regexes"]) e.regexes.push_back(r.as<std::string>());
        entries.push_back(std::move(e));
    }
    return ConceptVocabulary(std::move(entries));
}

ConceptVocabulary load_concept_vocab(const std::string& path) {
    return parse_concept_vocab(resources::load(resources::kConcepts, path));
}

ConceptVocabulary default_concept_vocab() {
    return parse_concept_vocab(resources::load(resources::kConcepts));
}

namespace {

struct Candidate {
    std::size_t begin; // sentence-relative code points
    std::size_t end;
    std::size_t entry_index;
    std::size_t matcher_index;
};

std::vector<Candidate> find_candidates(const BiocSentence& sentence,
                                       const ConceptVocabulary::Impl& impl) {
    std::vector<Candidate> out;
    const auto byte_to_cp = uni::byte_to_cp_map(sentence.text);

    // Token boundaries, sentence-relative.
    std::set<std::size_t> starts, ends;
    for (const Token& t : tokenize_text(sentence.text, 0)) {
        starts.insert(static_cast<std::size_t>(t.offset));
        ends.insert(static_cast<std::size_t>(t.offset + t.length));
    }

    for (std::size_t m = 0; m < impl.matchers.size(); ++m) {
        auto it = std::sregex_iterator(sentence.text.begin(), sentence.text.end(),
                                       impl.matchers[m].regex);
        for (; it != std::sregex_iterator(); ++it) {
            const std::smatch& match = *it;
            const std::size_t b = byte_to_cp[match.position(0)];
            const std::size_t e = byte_to_cp[match.position(0) + match.length(0)];
            if (b >= e) continue;
            if (!starts.count(b) || !ends.count(e)) continue; // token alignment
            out.push_back({b, e, impl.matchers[m].entry_index, m});
        }
    }
    return out;
}

} // namespace

BiocDocument match_concepts(const BiocDocument& doc, const ConceptVocabulary& vocab) {
    BiocDocument out = doc;
    int next_id = 0;
    // Continue numbering after existing a<k> ids so reruns stay stable.
    for (const BiocPassage& passage : out.passages)
        for (const BiocSentence& sentence : passage.sentences)
            for (const BiocAnnotation& a : sentence.annotations)
                if (a.id.size() > 1 && a.id[0] == 'a') {
                    int v = std::atoi(a.id.c_str() + 1);
                    next_id = std::max(next_id, v);
                }

    for (BiocPassage& passage : out.passages) {
        for (BiocSentence& sentence : passage.sentences) {
            std::vector<Candidate> candidates = find_candidates(sentence, vocab.impl());
            // Leftmost-longest; ties to the earlier vocabulary entry.
            std::sort(candidates.begin(), candidates.end(),
                      [](const Candidate& a, const Candidate& b) {
                          if (a.begin != b.begin) return a.begin < b.begin;
                          if (a.end != b.end) return a.end > b.end;
                          return a.entry_index < b.entry_index;
                      });
            std::vector<Candidate> chosen;
            for (const Candidate& c : candidates) {
                bool overlaps = false;
                for (const Candidate& k : chosen) {
                    if (c.begin < k.end && k.begin < c.end) {
                        overlaps = true;
                        break;
                    }
                }
                if (!overlaps) chosen.push_back(c);
            }
            // Skip spans that already carry a concept annotation (rerun).
            for (const Candidate& c : chosen) {
                const int64_t global_begin = sentence.offset + static_cast<int64_t>(c.begin);
                const int64_t length = static_cast<int64_t>(c.end - c.begin);
                bool duplicate = false;
                for (const BiocAnnotation& a : sentence.annotations) {
                    if (a.infons.has("source_concept_id") && !a.locations.empty() &&
                        a.location().offset == global_begin && a.location().length == length) {
                        duplicate = true;
                        break;
                    }
                }
                if (duplicate) continue;
                const ConceptEntry& entry = vocab.entries()[c.entry_index];
                BiocAnnotation a;
                a.id = "a" + std::to_string(++next_id);
                a.infons.set("source_concept", entry.name);
                a.infons.set("source_concept_id", entry.id);
                if (!entry.source.empty()) a.infons.set("source", entry.source);
                a.locations.push_back({global_begin, length});
                a.text = uni::substr(sentence.text, c.begin, c.end - c.begin);
                sentence.annotations.push_back(std::move(a));
            }
        }
    }
    return out;
}

BiocCollection match_concepts(const BiocCollection& collection,
                              const ConceptVocabulary& vocab) {
    BiocCollection out = collection;
    for (BiocDocument& doc : out.documents) doc = match_concepts(doc, vocab);
    return out;
}

} // namespace radtext
