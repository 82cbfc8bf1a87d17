#include "radtext/collect.hpp"

#include "radtext/csv.hpp"
#include "radtext/errors.hpp"
#include "radtext/resources.hpp"

#include <algorithm>
#include <map>

namespace radtext {

std::string to_string(LabelStatus status) {
    switch (status) {
    case LabelStatus::positive: return "positive";
    case LabelStatus::negative: return "negative";
    case LabelStatus::uncertain: return "uncertain";
    case LabelStatus::absent: return "absent";
    }
    return "absent";
}

std::vector<Finding> parse_findings(const std::string& csv_text) {
    csv::Table table = csv::parse(csv_text);
    const int id_col = table.column("concept_id");
    const int name_col = table.column("concept_name");
    if (id_col < 0) throw ConfigError("findings CSV requires a concept_id column");
    std::vector<Finding> findings;
    for (const auto& row : table.rows)
        findings.push_back({row[id_col], name_col >= 0 ? row[name_col] : row[id_col]});
    return findings;
}

std::vector<Finding> load_findings(const std::string& path) {
    return parse_findings(resources::load(resources::kFindings, path));
}

Precedence default_precedence() {
    return {LabelStatus::positive, LabelStatus::uncertain, LabelStatus::negative};
}

Precedence parse_precedence(const std::string& spec) {
    std::vector<LabelStatus> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        const std::string name = spec.substr(start, comma - start);
        if (name == "positive") out.push_back(LabelStatus::positive);
        else if (name == "negative") out.push_back(LabelStatus::negative);
        else if (name == "uncertain") out.push_back(LabelStatus::uncertain);
        else throw ConfigError("unknown status \"" + name + "\" in precedence");
        if (comma == spec.size()) break;
        start = comma + 1;
    }
    if (out.size() != 3) throw ConfigError("precedence must list positive, negative, uncertain");
    Precedence p;
    std::copy(out.begin(), out.end(), p.begin());
    if (std::find(p.begin(), p.end(), LabelStatus::positive) == p.end() ||
        std::find(p.begin(), p.end(), LabelStatus::negative) == p.end() ||
        std::find(p.begin(), p.end(), LabelStatus::uncertain) == p.end())
        throw ConfigError("precedence must mention each status exactly once");
    return p;
}

namespace {

LabelStatus mention_status(const BiocAnnotation& a) {
    if (a.infons.get("exists") == "True") return LabelStatus::positive;
    if (a.infons.get("uncertainty") == "True") return LabelStatus::uncertain;
    if (a.infons.get("negation") == "True") return LabelStatus::negative;
    return LabelStatus::absent; // mention without a detection verdict
}

} // namespace

std::vector<LabelRecord> collect_labels(const BiocCollection& collection,
                                        const std::vector<Finding>& findings,
                                        const Precedence& precedence) {
    std::vector<LabelRecord> records;
    for (const BiocDocument& doc : collection.documents) {
        // statuses seen per finding id
        std::map<std::string, std::vector<LabelStatus>> seen;
        std::map<std::string, std::string> names;
        auto visit = [&](const BiocAnnotation& a) {
            const std::string id = a.infons.get("source_concept_id");
            if (id.empty()) return;
            const LabelStatus s = mention_status(a);
            if (s != LabelStatus::absent) seen[id].push_back(s);
            if (!names.count(id) && a.infons.has("source_concept"))
                names[id] = a.infons.get("source_concept");
        };
        for (const BiocPassage& passage : doc.passages) {
            for (const BiocAnnotation& a : passage.annotations) visit(a);
            for (const BiocSentence& sentence : passage.sentences)
                for (const BiocAnnotation& a : sentence.annotations) visit(a);
        }
        for (const Finding& finding : findings) {
            LabelRecord record;
            record.doc_id = doc.id;
            record.concept_id = finding.concept_id;
            record.concept_name = !finding.concept_name.empty()
                                      ? finding.concept_name
                                      : (names.count(finding.concept_id)
                                             ? names[finding.concept_id]
                                             : finding.concept_id);
            record.status = LabelStatus::absent;
            auto it = seen.find(finding.concept_id);
            if (it != seen.end() && !it->second.empty()) {
                for (LabelStatus level : precedence) {
                    if (std::find(it->second.begin(), it->second.end(), level) !=
                        it->second.end()) {
                        record.status = level;
                        break;
                    }
                }
            }
            records.push_back(std::move(record));
        }
    }
    std::sort(records.begin(), records.end(), [](const LabelRecord& a, const LabelRecord& b) {
        if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
        return a.concept_id < b.concept_id;
    });
    return records;
}

std::string write_labels_csv(const std::vector<LabelRecord>& records) {
    std::string out = csv::write_row({"doc_id", "concept_id", "concept_name", "status"});
    for (const LabelRecord& r : records)
        out += csv::write_row({r.doc_id, r.concept_id, r.concept_name, to_string(r.status)});

    // Summary block, one row per finding in first-appearance order; absent
    // records are not part of the counts.
    std::vector<std::string> order;
    std::map<std::string, std::array<int, 3>> counts; // pos, neg, unc
    std::map<std::string, std::string> names;
    for (const LabelRecord& r : records) {
        if (!counts.count(r.concept_id)) {
            counts[r.concept_id] = {0, 0, 0};
            order.push_back(r.concept_id);
            names[r.concept_id] = r.concept_name;
        }
        if (r.status == LabelStatus::positive) ++counts[r.concept_id][0];
        if (r.status == LabelStatus::negative) ++counts[r.concept_id][1];
        if (r.status == LabelStatus::uncertain) ++counts[r.concept_id][2];
    }
    out += "\n";
    out += csv::write_row({"finding", "positive", "negative", "uncertain", "total"});
    for (const std::string& id : order) {
        const auto& c = counts[id];
        out += csv::write_row({names[id], std::to_string(c[0]), std::to_string(c[1]),
                               std::to_string(c[2]), std::to_string(c[0] + c[1] + c[2])});
    }
    return out;
}

} // namespace radtext
