#pragma once

// Negation/uncertainty detection: a small Semgrex-style pattern language
// compiled into subgraph queries over dependency graphs. A pattern is an
// alternating chain of node constraints and edge steps:
//
//   node:  { attr:/regex/ [, attr:/regex/]* } [=name]   attr in {word,lemma,tag}
//   edge:  >   governs            <   governed by
//          >>  governs transitively    <<  governed by transitively
//          optionally followed by {dep:/regex/} (or a vacuous {})
//
// Node regexes are anchored and case-insensitive. Every pattern must carry
// the capture =f, which must bind inside the anchor node set. On a
// transitive step a label constraint must hold for every edge on the chain.

#include "radtext/bioc.hpp"
#include "radtext/depgraph.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace radtext {

enum class PatternKind { negation, uncertainty };

struct NodeConstraint {
    std::string attribute; // "word" | "lemma" | "tag"
    std::string regex;     // as written, unanchored
};

enum class EdgeDirection { governs, governed_by, governs_transitively, governed_by_transitively };

struct EdgeStep {
    EdgeDirection direction = EdgeDirection::governs;
    std::string label_regex; // empty = any label
};

class NegPattern {
public:
    std::string id;     // e.g. "nn180"
    PatternKind kind = PatternKind::negation;
    std::string source; // original pattern string, verbatim

    std::size_t node_count() const;
    const std::vector<std::vector<NodeConstraint>>& node_constraints() const;
    const std::vector<EdgeStep>& edge_steps() const;
    const std::map<std::string, std::size_t>& captures() const; // name -> node position
    std::size_t f_position() const;

    // True when graph node `node` satisfies the constraints of query node
    // `position` (used by the matcher and by test oracles).
    bool node_matches(std::size_t position, const DepNode& node) const;
    bool label_matches(std::size_t step, const std::string& label) const;

    struct Impl;
    std::shared_ptr<const Impl> impl;
};

// Throws ParseError (with column) on syntax errors, a missing =f capture,
// or regexes that do not compile.
NegPattern compile_pattern(const std::string& src, const std::string& id, PatternKind kind);

// Pattern file: one per line, "id <TAB> pattern"; '#' comments ignored.
std::vector<NegPattern> parse_patterns(const std::string& text, PatternKind kind);
std::vector<NegPattern> load_negation_patterns(const std::string& path = "");
std::vector<NegPattern> load_uncertainty_patterns(const std::string& path = "");

// One satisfying assignment of query nodes to graph nodes (1-based graph
// indices, position-indexed). Injective over query nodes; f inside anchor.
struct Binding {
    std::vector<int> assignment;
    std::map<std::string, int> captures;

    bool operator==(const Binding&) const = default;
    bool operator<(const Binding& other) const { return assignment < other.assignment; }
};

std::vector<Binding> match_pattern(const NegPattern& pattern, const DepGraph& graph,
                                   const std::set<int>& anchor);

// Runs all patterns over every concept annotation (annotations carrying a
// source_concept_id infon) in every sentence: negation patterns first, then
// uncertainty, in list order; the first match wins. The anchor is the set
// of graph nodes overlapping the annotation span, closed under conj edges
// in both directions. Matched concepts get exists/negation (or uncertainty)
// plus negbio_pattern_id/negbio_pattern_str infons; unmatched get
// exists=True. Throws PipelineOrderError when a sentence has concepts but
// no attached graph.
BiocDocument detect(const BiocDocument& doc, const std::vector<NegPattern>& patterns);
BiocCollection detect(const BiocCollection& collection,
                      const std::vector<NegPattern>& patterns);

// Convenience: negation list followed by uncertainty list.
std::vector<NegPattern> combine_patterns(std::vector<NegPattern> negation,
                                         std::vector<NegPattern> uncertainty);

} // namespace radtext
