#pragma once

// Rule-based PHI removal. Matched spans are masked character-for-character
// with 'X' (whitespace and punctuation inside the span included), so text
// length and every other offset in the document are unchanged. Each span is
// annotated with its category, concept id, and the original text; pass
// redact=true to drop the annotations and keep only the mask.

#include "radtext/bioc.hpp"

#include <memory>
#include <string>
#include <vector>

namespace radtext {

struct PhiRule {
    std::string name;
    std::string category;   // e.g. "Date", "Person Name"
    std::string concept_id; // e.g. "C1547350"
    std::string regex;      // empty for dictionary rules
    int group = 0;          // capture group that becomes the PHI span
    bool ignore_case = false;
    std::vector<std::string> dictionary; // phrases, for dictionary rules
    int priority = 0;
};

class PhiRuleSet {
public:
    explicit PhiRuleSet(std::vector<PhiRule> rules);
    ~PhiRuleSet();
    PhiRuleSet(PhiRuleSet&&) noexcept;
    PhiRuleSet& operator=(PhiRuleSet&&) noexcept;

    const std::vector<PhiRule>& rules() const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

// Parses the YAML rule file. Throws ConfigError for bad regexes (naming
// the rule) or missing fields. Unknown categories pass through verbatim.
PhiRuleSet parse_phi_rules(const std::string& yaml_text);
PhiRuleSet load_phi_rules(const std::string& path);
PhiRuleSet default_phi_rules();

BiocDocument deidentify(const BiocDocument& doc, const PhiRuleSet& rules,
                        bool redact = false);
BiocCollection deidentify(const BiocCollection& collection, const PhiRuleSet& rules,
                          bool redact = false);

} // namespace radtext
