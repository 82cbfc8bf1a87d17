#pragma once

// Pipeline orchestration shared by the CLI and the Python bindings. Stages
// run strictly in sequence; within a stage, documents can be processed by a
// small thread pool with the output merged back in input order, so results
// are identical for any job count.

#include "radtext/bioc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radtext {

enum class Stage { deid, secsplit, ssplit, ner, parse, tree2dep, neg, collect };

std::string to_string(Stage stage);
std::optional<Stage> stage_from_string(const std::string& name);

struct PipelineResources {
    // Empty paths resolve through $RADTEXT_RESOURCES, then the bundled
    // defaults.
    std::string phi_rules;
    std::string section_vocab;
    std::string abbreviations;
    std::string concepts;
    std::string negation_patterns;
    std::string uncertainty_patterns;
    std::string findings;
    std::string trees;  // bracketed trees for the parse stage, one per line
    std::string conllu; // CoNLL-U alternative for the parse stage
    bool redact = false;
    std::string precedence = "positive,uncertain,negative";
};

struct PipelineConfig {
    std::vector<Stage> annotators;
    PipelineResources resources;
    std::string input_path;  // BioC XML
    std::string output_path; // BioC XML, or the labels CSV when collect runs
    std::string workdir;     // intermediate files; default: the output directory
    int jobs = 1;
};

// Enforces the stage dependencies: ner before neg, parse or tree2dep before
// neg, secsplit before ssplit when both are present, no duplicates.
// Throws PipelineOrderError.
void validate_annotator_order(const std::vector<Stage>& annotators);

// One annotator over a whole collection, in memory. `stage` must not be
// collect (which produces CSV, not BioC).
BiocCollection run_stage(const BiocCollection& collection, Stage stage,
                         const PipelineResources& resources, int jobs = 1);

// The collect stage: labels CSV text.
std::string run_collect(const BiocCollection& collection, const PipelineResources& resources);

// Full run with persisted intermediates "<output-stem>.<stage>.xml" in the
// workdir. Throws on failure, leaving earlier intermediates in place.
void run(const PipelineConfig& config);

} // namespace radtext
