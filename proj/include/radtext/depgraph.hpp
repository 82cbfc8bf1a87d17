#pragma once

// Universal dependency graph layer: the graph type, CoNLL-U ingestion,
// bracketed-tree parsing, head-rule conversion of constituency trees to
// dependencies, and attachment of graphs into BioC sentences as
// annotations ("T<k>") and relations ("R<k>").

#include "radtext/bioc.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace radtext {

struct DepNode {
    int index = 0;      // 1-based token index
    std::string word;
    std::string lemma;
    std::string tag;    // POS tag as provided (PTB or UPOS)
    int64_t offset = -1; // document-global start; -1 until aligned

    bool operator==(const DepNode&) const = default;
};

struct DepEdge {
    int governor = 0; // node index; 0 is the virtual root
    int dependent = 0;
    std::string label;

    bool operator==(const DepEdge&) const = default;
};

struct DepGraph {
    std::vector<DepNode> nodes;
    std::vector<DepEdge> edges;

    const DepNode* node(int index) const;

    bool operator==(const DepGraph&) const = default;
};

// Single root, in-degree one, acyclic, connected. Throws DataError when
// violated (with `what` naming the source for error messages).
void validate_graph(const DepGraph& graph, const std::string& what = "dependency graph");

// CoNLL-U: 10 tab-separated columns, blank-line sentence separation, '#'
// comments; multi-word-token ranges and empty nodes are skipped. Consumes
// ID, FORM, LEMMA, UPOS, HEAD, DEPREL.
std::vector<DepGraph> parse_conllu(const std::string& text);

struct ParseTree {
    std::string label;
    std::string token; // non-empty iff this is a leaf
    std::vector<ParseTree> children;

    bool is_leaf() const { return !token.empty(); }
    std::vector<std::string> leaves() const;
};

// Penn-Treebank bracketing. Throws ParseError with the 1-based character
// position on unbalanced input.
ParseTree parse_ptb(const std::string& s);

struct HeadRule {
    bool leftward = true; // scan direction for each preferred label
    std::vector<std::string> preferences;
};

struct HeadRuleTable {
    std::map<std::string, HeadRule> rules;

    // Compact default table (S, SBAR, VP, NP, PP, ADVP, ADJP, QP, PRT);
    // unknown labels fall back to the leftmost non-punctuation child.
    static HeadRuleTable standard();
};

// Head percolation + a closed edge-label rule table. Lemmas come from
// lowercasing with a small exception map.
DepGraph tree2dep(const ParseTree& tree, const HeadRuleTable& rules);
DepGraph tree2dep(const ParseTree& tree);

// Writes the graph into the sentence: nodes become annotations
// "T<id_base+k>" with infons lemma/tag (the root node also gets
// root=True), edges become relations "R<id_base+j>" with a "dependency"
// infon and governor/dependant nodes. Token offsets resolve by greedy
// left-to-right alignment against the sentence text; a token that cannot
// be aligned raises DataError.
BiocSentence attach_graph(const BiocSentence& sentence, const DepGraph& graph,
                          int id_base = 0);

// Inverse of attach_graph: rebuilds the graph from T-annotations and
// R-relations; returns an empty graph when the sentence has none.
DepGraph graph_from_sentence(const BiocSentence& sentence);

// Lemma used by tree2dep: lowercase plus exceptions (is/are/was -> be,
// has -> have, seen -> see, ruled -> rule, ...).
std::string default_lemma(const std::string& word);

} // namespace radtext
