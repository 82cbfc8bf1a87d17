#pragma once

// Document-level label aggregation: merges mention-level results into one
// record per (document, finding) with status positive / negative /
// uncertain / absent.

#include "radtext/bioc.hpp"

#include <array>
#include <string>
#include <vector>

namespace radtext {

enum class LabelStatus { positive, negative, uncertain, absent };

std::string to_string(LabelStatus status);

struct LabelRecord {
    std::string doc_id;
    std::string concept_id;
    std::string concept_name;
    LabelStatus status = LabelStatus::absent;

    bool operator==(const LabelRecord&) const = default;
};

struct Finding {
    std::string concept_id;
    std::string concept_name;
};

// findings CSV: columns concept_id, concept_name.
std::vector<Finding> parse_findings(const std::string& csv_text);
std::vector<Finding> load_findings(const std::string& path = "");

// Merge precedence, highest first; the default is positive > uncertain >
// negative.
using Precedence = std::array<LabelStatus, 3>;
Precedence default_precedence();
Precedence parse_precedence(const std::string& spec); // "positive,uncertain,negative"

// One record per (document, finding): the highest-precedence status among
// the document's mentions of that finding; absent when there is none.
std::vector<LabelRecord> collect_labels(const BiocCollection& collection,
                                        const std::vector<Finding>& findings,
                                        const Precedence& precedence = default_precedence());

// Data rows (doc_id,concept_id,concept_name,status) ordered by doc_id then
// concept_id, followed by a blank line and a per-finding summary block
// (finding,positive,negative,uncertain,total); absent rows appear in the
// data block but not in the summary.
std::string write_labels_csv(const std::vector<LabelRecord>& records);

} // namespace radtext
