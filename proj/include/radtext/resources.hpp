#pragma once

// Bundled resource files and the lookup order used by every stage:
// an explicit path wins, then a file under $RADTEXT_RESOURCES (or the
// directory passed to set_resource_dir), then the compiled-in default.

#include <cstddef>
#include <string>
#include <vector>

namespace radtext::resources {

struct EmbeddedFile {
    const char* name; // relative path, e.g. "patterns/negation.txt"
    const unsigned char* data;
    std::size_t size;
};

extern const EmbeddedFile kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;

// Canonical resource names.
inline constexpr const char* kPhiRules = "phi_rules.yml";
inline constexpr const char* kSectionVocab = "section_vocab.csv";
inline constexpr const char* kAbbreviations = "abbreviations.txt";
inline constexpr const char* kConcepts = "concepts.yml";
inline constexpr const char* kNegationPatterns = "patterns/negation.txt";
inline constexpr const char* kUncertaintyPatterns = "patterns/uncertainty.txt";
inline constexpr const char* kFindings = "findings.csv";
inline constexpr const char* kSampleReports = "sample/reports.csv";
inline constexpr const char* kSampleTrees = "sample/trees.txt";

// Contents of an embedded file; throws ConfigError for unknown names.
std::string embedded(const std::string& name);

std::vector<std::string> embedded_names();

// Resolution directory: $RADTEXT_RESOURCES unless overridden.
std::string resource_dir();
void set_resource_dir(const std::string& dir);

// Resolves a resource to its contents following the lookup order above.
// `explicit_path` may be empty.
std::string load(const std::string& name, const std::string& explicit_path = "");

// Writes every embedded file into `dir` (radtext-download). Returns the
// list of files written.
std::vector<std::string> install_all(const std::string& dir);

} // namespace radtext::resources
