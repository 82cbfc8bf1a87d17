#include "radtext/deid.hpp"

#include "radtext/errors.hpp"
#include "radtext/resources.hpp"
#include "radtext/unicode.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <regex>

namespace radtext {

struct PhiRuleSet::Impl {
    std::vector<PhiRule> rules;
    std::vector<std::regex> compiled; // empty regex slot for dictionary rules
};

PhiRuleSet::PhiRuleSet(std::vector<PhiRule> rules) : impl_(std::make_unique<Impl>()) {
    impl_->rules = std::move(rules);
    for (const PhiRule& rule : impl_->rules) {
        if (rule.regex.empty() && rule.dictionary.empty())
            throw ConfigError("PHI rule \"" + rule.name + "\" has neither a regex nor a dictionary");
        auto flags = std::regex::ECMAScript;
        if (rule.ignore_case) flags |= std::regex::icase;
        try {
            impl_->compiled.emplace_back(rule.regex.empty() ? "$^" : rule.regex, flags);
        } catch (const std::regex_error& e) {
            throw ConfigError("PHI rule \"" + rule.name + "\": bad regex: " + e.what());
        }
    }
}

PhiRuleSet::~PhiRuleSet() = default;
PhiRuleSet::PhiRuleSet(PhiRuleSet&&) noexcept = default;
PhiRuleSet& PhiRuleSet::operator=(PhiRuleSet&&) noexcept = default;

const std::vector<PhiRule>& PhiRuleSet::rules() const { return impl_->rules; }

PhiRuleSet parse_phi_rules(const std::string& yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("PHI rule file: ") + e.what());
    }
    if (!root["rules"] || !root["rules"].IsSequence())
        throw ConfigError("PHI rule file: missing top-level \"rules\" sequence");
    std::vector<PhiRule> rules;
    for (const YAML::Node& n : root["rules"]) {
        PhiRule rule;
        rule.name = n["name"] ? n["name"].as<std::string>() : "rule-" + std::to_string(rules.size());
        if (!n["category"])
            throw ConfigError("PHI rule \"" + rule.name + "\": missing category");
        rule.category = n["category"].as<std::string>();
        rule.concept_id = n["concept_id"] ? n["concept_id"].as<std::string>() : "";
        rule.priority = n["priority"] ? n["priority"].as<int>() : 0;
        rule.group = n["group"] ? n["group"].as<int>() : 0;
        rule.ignore_case = n["ignore_case"] ? n["ignore_case"].as<bool>() : false;
        if (n["regex"]) rule.regex = n["regex"].as<std::string>();
        if (n["dictionary"]) {
            for (const YAML::Node& w : n["dictionary"]) {
                std::string phrase = w.as<std::string>();
                if (!phrase.empty()) rule.dictionary.push_back(std::move(phrase));
            }
        }
        rules.push_back(std::move(rule));
    }
    return PhiRuleSet(std::move(rules));
}

PhiRuleSet load_phi_rules(const std::string& path) {
    return parse_phi_rules(resources::load(resources::kPhiRules, path));
}

PhiRuleSet default_phi_rules() {
    return parse_phi_rules(resources::load(resources::kPhiRules));
}

namespace {

struct Span {
    std::size_t rule_index;
    std::size_t begin; // code points, passage-relative
    std::size_t end;
};

bool is_word_char(char32_t c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c >= 0x80;
}

// All-X spans never count as PHI again; this is what makes deidentify
// idempotent for text that is already masked.
bool already_masked(const std::u32string& text, std::size_t begin, std::size_t end) {
    bool has_alnum = false;
    for (std::size_t i = begin; i < end; ++i) {
        char32_t c = text[i];
        if (is_word_char(c)) {
            has_alnum = true;
            if (c != U'X') return false;
        }
    }
    return has_alnum;
}

std::u32string fold_case(const std::u32string& s) {
    std::u32string out = s;
    for (char32_t& c : out)
        if (c >= U'A' && c <= U'Z') c += 32;
    return out;
}

std::vector<Span> find_spans(const std::string& text, const PhiRuleSet::Impl& impl) {
    std::vector<Span> spans;
    const auto byte_to_cp = uni::byte_to_cp_map(text);
    const std::u32string text32 = uni::to_u32(text);
    const std::u32string folded = fold_case(text32);

    for (std::size_t r = 0; r < impl.rules.size(); ++r) {
        const PhiRule& rule = impl.rules[r];
        if (!rule.regex.empty()) {
            auto begin = std::sregex_iterator(text.begin(), text.end(), impl.compiled[r]);
            for (auto it = begin; it != std::sregex_iterator(); ++it) {
                const std::smatch& m = *it;
                int g = rule.group;
                if (g < 0 || g >= static_cast<int>(m.size()) || !m[g].matched) g = 0;
                std::size_t b = byte_to_cp[m.position(g)];
                std::size_t e = byte_to_cp[m.position(g) + m.length(g)];
                if (b < e) spans.push_back({r, b, e});
            }
        }
        for (const std::string& phrase : rule.dictionary) {
            const std::u32string needle = fold_case(uni::to_u32(phrase));
            if (needle.empty()) continue;
            std::size_t pos = 0;
            while ((pos = folded.find(needle, pos)) != std::u32string::npos) {
                std::size_t end = pos + needle.size();
                const bool left_ok = pos == 0 || !is_word_char(folded[pos - 1]);
                const bool right_ok = end == folded.size() || !is_word_char(folded[end]);
                if (left_ok && right_ok) spans.push_back({r, pos, end});
                ++pos;
            }
        }
    }

    std::erase_if(spans, [&](const Span& s) { return already_masked(text32, s.begin, s.end); });

    // Higher priority wins on overlap; ties go leftmost-longest.
    std::stable_sort(spans.begin(), spans.end(), [&](const Span& a, const Span& b) {
        int pa = impl.rules[a.rule_index].priority;
        int pb = impl.rules[b.rule_index].priority;
        if (pa != pb) return pa > pb;
        if (a.begin != b.begin) return a.begin < b.begin;
        return a.end > b.end;
    });
    std::vector<Span> chosen;
    for (const Span& s : spans) {
        bool overlaps = false;
        for (const Span& c : chosen) {
            if (s.begin < c.end && c.begin < s.end) {
                overlaps = true;
                break;
            }
        }
        if (!overlaps) chosen.push_back(s);
    }
    // Annotations are emitted grouped by rule, then by offset.
    std::sort(chosen.begin(), chosen.end(), [](const Span& a, const Span& b) {
        if (a.rule_index != b.rule_index) return a.rule_index < b.rule_index;
        return a.begin < b.begin;
    });
    return chosen;
}

} // namespace

BiocDocument deidentify(const BiocDocument& doc, const PhiRuleSet& rules, bool redact) {
    BiocDocument out = doc;
    int next_id = 0;
    for (BiocPassage& passage : out.passages) {
        if (passage.text.empty()) continue;
        std::u32string text32 = uni::to_u32(passage.text);
        const std::vector<Span> spans = find_spans(passage.text, rules.impl());
        for (const Span& s : spans) {
            if (!redact) {
                BiocAnnotation a;
                a.id = "A" + std::to_string(next_id++);
                a.infons.set("source_concept", rules.rules()[s.rule_index].category);
                a.infons.set("source_concept_id", rules.rules()[s.rule_index].concept_id);
                a.locations.push_back({passage.offset + static_cast<int64_t>(s.begin),
                                       static_cast<int64_t>(s.end - s.begin)});
                a.text = uni::to_utf8(text32.substr(s.begin, s.end - s.begin));
                passage.annotations.push_back(std::move(a));
            }
            for (std::size_t i = s.begin; i < s.end; ++i) text32[i] = U'X';
        }
        passage.text = uni::to_utf8(text32);
    }
    return out;
}

BiocCollection deidentify(const BiocCollection& collection, const PhiRuleSet& rules,
                          bool redact) {
    BiocCollection out = collection;
    for (BiocDocument& doc : out.documents) doc = deidentify(doc, rules, redact);
    return out;
}

} // namespace radtext
