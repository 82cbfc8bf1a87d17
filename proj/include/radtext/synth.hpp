#pragma once

// Synthetic report generators used by the integration tests and the
// radtext-synth tool: templated radiology reports with known gold labels
// over the five default findings (plus matching parse trees), and notes
// with planted PHI for the de-identification checks.

#include "radtext/collect.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radtext::synth {

struct GoldLabel {
    std::string doc_id;
    std::string concept_id;
    LabelStatus status = LabelStatus::absent;
};

struct Corpus {
    std::string reports_csv; // columns id,text
    std::string trees;       // one bracketed tree per line, deduplicated
    std::vector<GoldLabel> gold; // one entry per (report, finding), absent included
};

// Deterministic for a given (count, seed).
Corpus generate_corpus(int count, uint32_t seed);

std::string gold_csv(const std::vector<GoldLabel>& gold);

struct PlantedSpan {
    int64_t offset = 0; // code points
    int64_t length = 0;
    std::string category;
};

struct PhiNote {
    std::string id;
    std::string text;
    std::vector<PlantedSpan> planted;
};

std::vector<PhiNote> generate_phi_notes(int count, uint32_t seed);

} // namespace radtext::synth
