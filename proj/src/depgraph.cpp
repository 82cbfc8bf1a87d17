#include "radtext/depgraph.hpp"

#include "radtext/errors.hpp"
#include "radtext/unicode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace radtext {

namespace {

std::string lower_ascii(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 32;
    return out;
}

const std::set<std::string>& punct_tags() {
    static const std::set<std::string> tags = {".",  ",",  ":",    "``",   "''",
                                               "-LRB-", "-RRB-", "HYPH", "SYM"};
    return tags;
}

bool is_punct_label(const std::string& label) { return punct_tags().count(label) > 0; }

// "NP-SBJ" / "NP=2" -> "NP"
std::string strip_label(const std::string& label) {
    std::size_t cut = label.find_first_of("-=");
    if (cut == std::string::npos || cut == 0) return label;
    return label.substr(0, cut);
}

} // namespace

const DepNode* DepGraph::node(int index) const {
    if (index < 1 || index > static_cast<int>(nodes.size())) return nullptr;
    return &nodes[index - 1];
}

void validate_graph(const DepGraph& graph, const std::string& what) {
    const int n = static_cast<int>(graph.nodes.size());
    if (n == 0) {
        if (!graph.edges.empty()) throw DataError(what + ": edges without nodes");
        return;
    }
    for (int i = 0; i < n; ++i) {
        if (graph.nodes[i].index != i + 1)
            throw DataError(what + ": node indices must be consecutive from 1");
    }
    std::vector<int> governor(n + 1, -1);
    int roots = 0;
    for (const DepEdge& e : graph.edges) {
        if (e.dependent < 1 || e.dependent > n || e.governor < 0 || e.governor > n)
            throw DataError(what + ": edge index out of range");
        if (e.dependent == e.governor) throw DataError(what + ": self-loop");
        if (e.label.empty()) throw DataError(what + ": empty dependency label");
        if (governor[e.dependent] != -1)
            throw DataError(what + ": node " + std::to_string(e.dependent) +
                            " has more than one governor");
        governor[e.dependent] = e.governor;
        if (e.governor == 0) ++roots;
    }
    if (roots != 1) throw DataError(what + ": expected exactly one root, found " +
                                    std::to_string(roots));
    for (int i = 1; i <= n; ++i) {
        if (governor[i] == -1)
            throw DataError(what + ": node " + std::to_string(i) + " has no governor");
        // Walk the governor chain; in a tree it reaches the virtual root.
        int steps = 0, cur = i;
        while (cur != 0) {
            cur = governor[cur];
            if (++steps > n) throw DataError(what + ": cycle through node " + std::to_string(i));
        }
    }
}

// ---------------------------------------------------------------------------
// CoNLL-U
// ---------------------------------------------------------------------------

std::vector<DepGraph> parse_conllu(const std::string& text) {
    std::vector<DepGraph> graphs;
    DepGraph current;
    int block_start_line = 0;

    auto flush = [&] {
        if (current.nodes.empty()) return;
        std::sort(current.edges.begin(), current.edges.end(),
                  [](const DepEdge& a, const DepEdge& b) { return a.dependent < b.dependent; });
        try {
            validate_graph(current, "CoNLL-U sentence starting at line " +
                                        std::to_string(block_start_line));
        } catch (const DataError&) {
            current = {};
            throw;
        }
        graphs.push_back(std::move(current));
        current = {};
    };

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        if (line.empty()) {
            flush();
        } else if (line[0] != '#') {
            std::vector<std::string> cols;
            std::size_t p = 0;
            while (true) {
                std::size_t tab = line.find('\t', p);
                if (tab == std::string::npos) {
                    cols.push_back(line.substr(p));
                    break;
                }
                cols.push_back(line.substr(p, tab - p));
                p = tab + 1;
            }
            if (cols.size() != 10)
                throw ParseError("CoNLL-U: expected 10 tab-separated columns, got " +
                                     std::to_string(cols.size()),
                                 line_no);
            const std::string& id = cols[0];
            // Multi-word token ranges (1-2) and empty nodes (1.1) are not
            // graph nodes.
            if (id.find('-') == std::string::npos && id.find('.') == std::string::npos) {
                if (current.nodes.empty()) block_start_line = line_no;
                DepNode node;
                try {
                    node.index = std::stoi(id);
                } catch (const std::exception&) {
                    throw ParseError("CoNLL-U: non-integer ID \"" + id + "\"", line_no);
                }
                node.word = cols[1];
                node.lemma = cols[2] == "_" ? default_lemma(cols[1]) : cols[2];
                node.tag = cols[3];
                int head = 0;
                try {
                    head = std::stoi(cols[6]);
                } catch (const std::exception&) {
                    throw ParseError("CoNLL-U: non-integer HEAD \"" + cols[6] + "\"", line_no);
                }
                current.nodes.push_back(std::move(node));
                current.edges.push_back({head, current.nodes.back().index,
                                         cols[7] == "_" ? "dep" : cols[7]});
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    flush();
    return graphs;
}

// ---------------------------------------------------------------------------
// Bracketed trees
// ---------------------------------------------------------------------------

std::vector<std::string> ParseTree::leaves() const {
    std::vector<std::string> out;
    if (is_leaf()) {
        out.push_back(token);
        return out;
    }
    for (const ParseTree& child : children) {
        auto sub = child.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

class PtbReader {
public:
    explicit PtbReader(const std::string& s) : in_(s) {}

    ParseTree parse() {
        skip_space();
        ParseTree tree = parse_node();
        skip_space();
        if (pos_ != in_.size())
            throw ParseError("bracketed tree: trailing content at character " +
                             std::to_string(pos_ + 1));
        return tree;
    }

private:
    void skip_space() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("bracketed tree: " + msg + " at character " + std::to_string(pos_ + 1));
    }

    std::string read_atom() {
        std::size_t begin = pos_;
        while (pos_ < in_.size() && !std::isspace(static_cast<unsigned char>(in_[pos_])) &&
               in_[pos_] != '(' && in_[pos_] != ')')
            ++pos_;
        return in_.substr(begin, pos_ - begin);
    }

    ParseTree parse_node() {
        if (pos_ >= in_.size() || in_[pos_] != '(') fail("expected '('");
        ++pos_;
        skip_space();
        ParseTree node;
        node.label = read_atom(); // may be empty for a bare "((...))" wrapper
        skip_space();
        if (pos_ >= in_.size()) fail("unexpected end of input");
        if (in_[pos_] == ')') { // empty constituent, e.g. "(NP)"
            ++pos_;
            return node;
        }
        if (in_[pos_] == '(') {
            while (true) {
                node.children.push_back(parse_node());
                skip_space();
                if (pos_ >= in_.size()) fail("unexpected end of input");
                if (in_[pos_] == ')') {
                    ++pos_;
                    return node;
                }
                if (in_[pos_] != '(') fail("mixed tokens and subtrees");
            }
        }
        node.token = read_atom();
        if (node.token.empty()) fail("expected a token or subtree");
        skip_space();
        if (pos_ >= in_.size() || in_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return node;
    }

    const std::string& in_;
    std::size_t pos_ = 0;
};

} // namespace

ParseTree parse_ptb(const std::string& s) { return PtbReader(s).parse(); }

// ---------------------------------------------------------------------------
// Head rules and tree -> dependencies
// ---------------------------------------------------------------------------

HeadRuleTable HeadRuleTable::standard() {
    HeadRuleTable t;
    t.rules["S1"] = {true, {"S", "SINV", "SBAR", "NP", "VP"}};
    t.rules["TOP"] = t.rules["S1"];
    t.rules["ROOT"] = t.rules["S1"];
    t.rules["S"] = {true, {"VP", "S", "SBAR", "ADJP", "NP"}};
    t.rules["SBAR"] = {true, {"S", "SINV", "VP"}};
    t.rules["SINV"] = {true, {"VP", "VBZ", "VBD", "VBP", "VB", "S"}};
    // The embedded VP outranks finite tags so aspect and passive chains head
    // at the content verb ("has been excluded" heads at "excluded").
    t.rules["VP"] = {true, {"VP", "VBD", "VBZ", "VBP", "VB", "VBG", "VBN", "MD", "ADJP", "NP"}};
    t.rules["PP"] = {true, {"IN", "TO", "RP", "VBG"}};
    t.rules["ADVP"] = {false, {"RB", "RBR", "RBS", "ADVP"}};
    t.rules["ADJP"] = {true, {"JJ", "JJR", "JJS", "VBN", "VBG", "ADJP", "RB"}};
    t.rules["QP"] = {false, {"CD", "NN", "JJ"}};
    t.rules["PRT"] = {true, {"RP"}};
    t.rules["WHNP"] = {false, {"NN", "NNS", "WP", "WDT"}};
    t.rules["CONJP"] = {false, {"IN", "RB", "TO"}};
    return t;
}

namespace {

// NP head selection is staged: rightmost noun, else leftmost NP (the first
// conjunct in coordination), else rightmost modifier-ish child.
struct NpStage {
    bool leftward;
    std::vector<std::string> preferences;
};
const std::vector<NpStage>& np_stages() {
    static const std::vector<NpStage> stages = {
        {false, {"NN", "NNS", "NNP", "NNPS", "NX", "POS"}},
        {true, {"NP", "WHNP"}},
        {false, {"ADJP", "JJ", "QP", "CD", "PRN", "VBG", "VBN"}},
    };
    return stages;
}

const std::map<std::string, std::string>& lemma_exceptions() {
    static const std::map<std::string, std::string> map = {
        {"is", "be"},          {"are", "be"},          {"was", "be"},
        {"were", "be"},        {"been", "be"},         {"am", "be"},
        {"being", "be"},       {"has", "have"},        {"had", "have"},
        {"having", "have"},    {"seen", "see"},        {"shows", "show"},
        {"showed", "show"},    {"shown", "show"},      {"demonstrates", "demonstrate"},
        {"demonstrated", "demonstrate"},               {"reveals", "reveal"},
        {"revealed", "reveal"},{"resolved", "resolve"},{"resolves", "resolve"},
        {"resolving", "resolve"},                      {"cleared", "clear"},
        {"denies", "deny"},    {"denied", "deny"},     {"excluded", "exclude"},
        {"excludes", "exclude"},                       {"suggests", "suggest"},
        {"suggested", "suggest"},                      {"suggesting", "suggest"},
        {"suspected", "suspect"},                      {"suspects", "suspect"},
        {"ruled", "rule"},     {"rules", "rule"},      {"represents", "represent"},
        {"representing", "represent"},                 {"favors", "favor"},
        {"favored", "favor"},  {"considered", "consider"},
        {"considers", "consider"},
    };
    return map;
}

class TreeConverter {
public:
    explicit TreeConverter(const HeadRuleTable& rules) : rules_(rules) {}

    DepGraph run(const ParseTree& tree) {
        int root = process(tree);
        if (root > 0) graph_.edges.push_back({0, root, "root"});
        std::sort(graph_.edges.begin(), graph_.edges.end(),
                  [](const DepEdge& a, const DepEdge& b) { return a.dependent < b.dependent; });
        return std::move(graph_);
    }

private:
    struct ChildInfo {
        const ParseTree* tree;
        int head = -1; // leaf index, -1 when the subtree has no leaves
        std::string label;
    };

    // Returns the index of the constituent's lexical head (-1 if none) and
    // records dependency edges for the non-head children.
    int process(const ParseTree& t) {
        if (t.is_leaf()) {
            DepNode node;
            node.index = static_cast<int>(graph_.nodes.size()) + 1;
            node.word = t.token;
            node.lemma = default_lemma(t.token);
            node.tag = t.label;
            const int index = node.index;
            graph_.nodes.push_back(std::move(node));
            return index;
        }
        std::vector<ChildInfo> children;
        for (const ParseTree& child : t.children) {
            ChildInfo info;
            info.tree = &child;
            info.head = process(child);
            info.label = strip_label(child.label);
            children.push_back(info);
        }
        if (children.empty()) return -1;

        const std::string label = strip_label(t.label);
        const int head_pos = choose_head(label, children);
        if (head_pos < 0) return -1;
        const int head = children[head_pos].head;

        attach_children(label, children, head_pos, head);
        return head;
    }

    int choose_head(const std::string& label, const std::vector<ChildInfo>& children) {
        auto scan = [&](bool leftward, const std::vector<std::string>& prefs) -> int {
            for (const std::string& pref : prefs) {
                if (leftward) {
                    for (std::size_t i = 0; i < children.size(); ++i)
                        if (children[i].head > 0 && children[i].label == pref)
                            return static_cast<int>(i);
                } else {
                    for (std::size_t i = children.size(); i-- > 0;)
                        if (children[i].head > 0 && children[i].label == pref)
                            return static_cast<int>(i);
                }
            }
            return -1;
        };

        if (label == "NP" || label == "NX") {
            for (const NpStage& stage : np_stages()) {
                int pos = scan(stage.leftward, stage.preferences);
                if (pos >= 0) return pos;
            }
        } else {
            auto it = rules_.rules.find(label);
            if (it != rules_.rules.end()) {
                int pos = scan(it->second.leftward, it->second.preferences);
                if (pos >= 0) return pos;
            }
        }
        // Fallback: leftmost non-punctuation child with a head.
        for (std::size_t i = 0; i < children.size(); ++i)
            if (children[i].head > 0 && !is_punct_label(children[i].label))
                return static_cast<int>(i);
        for (std::size_t i = 0; i < children.size(); ++i)
            if (children[i].head > 0) return static_cast<int>(i);
        return -1;
    }

    const DepNode& node_of(int index) const { return graph_.nodes[index - 1]; }

    bool is_neg_adverb(const ChildInfo& c) const {
        if (c.head <= 0) return false;
        if (c.label != "RB" && c.label != "ADVP") return false;
        const std::string word = lower_ascii(node_of(c.head).word);
        return word == "no" || word == "not" || word == "n't";
    }

    void attach_children(const std::string& parent_label, std::vector<ChildInfo>& children,
                         int head_pos, int head) {
        // Coordination: conjuncts share the category of the phrase following
        // the first CC and attach to the first such phrase before it.
        bool has_cc = false;
        std::size_t first_cc = 0;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (children[i].label == "CC" && children[i].head > 0) {
                has_cc = true;
                first_cc = i;
                break;
            }
        }
        std::string conj_label;
        int conj_base_pos = -1;
        std::vector<bool> is_conjunct(children.size(), false);
        if (has_cc) {
            for (std::size_t i = first_cc + 1; i < children.size(); ++i) {
                if (children[i].head > 0 && children[i].label != "CC" &&
                    !is_punct_label(children[i].label)) {
                    conj_label = children[i].label;
                    break;
                }
            }
            if (!conj_label.empty()) {
                for (std::size_t i = 0; i < first_cc; ++i) {
                    if (children[i].head > 0 && children[i].label == conj_label) {
                        conj_base_pos = static_cast<int>(i);
                        break;
                    }
                }
                if (conj_base_pos < 0) {
                    for (std::size_t i = first_cc; i-- > 0;) {
                        if (children[i].head > 0 && children[i].label != "CC" &&
                            !is_punct_label(children[i].label)) {
                            conj_base_pos = static_cast<int>(i);
                            break;
                        }
                    }
                }
            }
            if (conj_base_pos >= 0) {
                for (std::size_t i = conj_base_pos + 1; i < children.size(); ++i) {
                    if (children[i].head <= 0 || children[i].label != conj_label) continue;
                    // A conjunct follows a CC or a comma.
                    int prev = static_cast<int>(i) - 1;
                    while (prev >= 0 && children[prev].head <= 0) --prev;
                    if (prev < 0) continue;
                    const std::string& prev_label = children[prev].label;
                    if (prev_label == "CC" || prev_label == ",") is_conjunct[i] = true;
                }
            }
        }

        for (std::size_t i = 0; i < children.size(); ++i) {
            const ChildInfo& c = children[i];
            if (c.head <= 0 || static_cast<int>(i) == head_pos) continue;

            if (is_punct_label(c.label)) {
                add_edge(head, c.head, "punct");
                continue;
            }
            if (has_cc && conj_base_pos >= 0 && is_conjunct[i] &&
                static_cast<int>(i) != conj_base_pos) {
                add_edge(children[conj_base_pos].head, c.head, "conj");
                continue;
            }
            if (c.label == "CC") {
                // cc attaches to the conjunct that follows it.
                int target = conj_base_pos >= 0 ? children[conj_base_pos].head : head;
                for (std::size_t j = i + 1; j < children.size(); ++j) {
                    if (children[j].head > 0 && is_conjunct[j]) {
                        target = children[j].head;
                        break;
                    }
                }
                add_edge(target, c.head, "cc");
                continue;
            }
            if (is_neg_adverb(c)) {
                // "no"/"not" modifies the nominal that follows it when there
                // is one ("is no effusion" -> neg(effusion, no)).
                int target = head;
                for (std::size_t j = i + 1; j < children.size(); ++j) {
                    if (children[j].head > 0 &&
                        (children[j].label == "NP" || children[j].label == "NX")) {
                        target = children[j].head;
                        break;
                    }
                }
                add_edge(target, c.head, "neg");
                continue;
            }
            if (conj_base_pos >= 0 && static_cast<int>(i) == conj_base_pos &&
                head_pos != conj_base_pos) {
                // First conjunct that is not the constituent head.
                add_edge(head, c.head, assign_label(parent_label, c, true));
                continue;
            }
            add_edge(head, c.head, assign_label(parent_label, c, static_cast<int>(i) < head_pos));
        }
    }

    std::string assign_label(const std::string& parent, const ChildInfo& c, bool before_head) {
        const std::string& cl = c.label;
        const std::string& head_tag = node_of(c.head).tag;

        auto is_verb_tag = [](const std::string& t) {
            return t == "VB" || t == "VBZ" || t == "VBP" || t == "VBD" || t == "VBN" ||
                   t == "VBG";
        };
        auto noun_parent = [&] { return parent == "NP" || parent == "NX" || parent == "WHNP"; };

        if (cl == "DT" || cl == "PDT") return "det";
        if (cl == "EX") return "expl";
        if (cl == "MD") return "aux";
        if (is_verb_tag(cl) && parent == "VP") return "aux";
        if (cl == "PP") return "prep";
        if (parent == "PP" && !before_head) return "pobj";
        if (cl == "PRT" || cl == "RP") return "prt";
        if (cl == "JJ" || cl == "JJR" || cl == "JJS" || cl == "ADJP")
            return noun_parent() ? "amod" : "acomp";
        if (cl == "RB" || cl == "RBR" || cl == "RBS" || cl == "ADVP" || cl == "WHADVP")
            return "advmod";
        if (cl == "CD" || cl == "QP") return "nummod";
        if ((cl == "NN" || cl == "NNS" || cl == "NNP" || cl == "NNPS") && noun_parent() &&
            before_head)
            return "compound";
        if (cl == "NP" || cl == "NX" || cl == "NN" || cl == "NNS" || cl == "NNP" ||
            cl == "NNPS" || head_tag == "NN" || head_tag == "NNS") {
            if ((parent == "S" || parent == "SBAR" || parent == "SINV") && before_head)
                return "nsubj";
            if (parent == "VP" && !before_head) return "obj";
            if (parent == "S" && !before_head) return "obj";
        }
        if ((cl == "VP" || cl == "S" || cl == "SBAR") && noun_parent()) return "acl";
        if (cl == "VP" && parent == "VP") return "xcomp";
        if ((cl == "S" || cl == "SBAR") && parent == "VP") return "ccomp";
        if (cl == "IN" || cl == "TO") return parent == "SBAR" ? "mark" : "dep";
        return "dep";
    }

    void add_edge(int governor, int dependent, const std::string& label) {
        graph_.edges.push_back({governor, dependent, label});
    }

    const HeadRuleTable& rules_;
    DepGraph graph_;
};

} // namespace

std::string default_lemma(const std::string& word) {
    std::string lower = lower_ascii(word);
    auto it = lemma_exceptions().find(lower);
    return it != lemma_exceptions().end() ? it->second : lower;
}

DepGraph tree2dep(const ParseTree& tree, const HeadRuleTable& rules) {
    DepGraph graph = TreeConverter(rules).run(tree);
    validate_graph(graph, "tree2dep output");
    return graph;
}

DepGraph tree2dep(const ParseTree& tree) {
    static const HeadRuleTable table = HeadRuleTable::standard();
    return tree2dep(tree, table);
}

// ---------------------------------------------------------------------------
// BioC attachment
// ---------------------------------------------------------------------------

BiocSentence attach_graph(const BiocSentence& sentence, const DepGraph& graph, int id_base) {
    if (graph.nodes.empty()) return sentence;
    validate_graph(graph, "attach_graph input");

    BiocSentence out = sentence;
    const std::u32string text = uni::to_u32(sentence.text);
    std::size_t cursor = 0;
    std::vector<int64_t> offsets;
    for (const DepNode& node : graph.nodes) {
        const std::u32string word = uni::to_u32(node.word);
        const std::size_t found = text.find(word, cursor);
        if (found == std::u32string::npos)
            throw DataError("attach_graph: token \"" + node.word +
                            "\" not found in sentence at offset " +
                            std::to_string(sentence.offset));
        offsets.push_back(sentence.offset + static_cast<int64_t>(found));
        cursor = found + word.size();
    }

    int root_index = 0;
    for (const DepEdge& e : graph.edges)
        if (e.governor == 0) root_index = e.dependent;

    for (const DepNode& node : graph.nodes) {
        BiocAnnotation a;
        a.id = "T" + std::to_string(id_base + node.index);
        a.infons.set("lemma", node.lemma);
        a.infons.set("tag", node.tag);
        if (node.index == root_index) a.infons.set("root", "True");
        a.locations.push_back(
            {offsets[node.index - 1], static_cast<int64_t>(uni::length(node.word))});
        a.text = node.word;
        out.annotations.push_back(std::move(a));
    }
    int relation_counter = 0;
    for (const DepEdge& e : graph.edges) {
        if (e.governor == 0) continue;
        BiocRelation r;
        r.id = "R" + std::to_string(id_base + (++relation_counter));
        r.infons.set("dependency", e.label);
        r.nodes.push_back({"T" + std::to_string(id_base + e.dependent), "dependant"});
        r.nodes.push_back({"T" + std::to_string(id_base + e.governor), "governor"});
        out.relations.push_back(std::move(r));
    }
    return out;
}

DepGraph graph_from_sentence(const BiocSentence& sentence) {
    struct TokenAnn {
        const BiocAnnotation* annotation;
        int64_t offset;
    };
    std::vector<TokenAnn> tokens;
    for (const BiocAnnotation& a : sentence.annotations) {
        if (a.id.size() < 2 || a.id[0] != 'T') continue;
        bool digits = true;
        for (std::size_t i = 1; i < a.id.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(a.id[i]))) digits = false;
        if (!digits || a.locations.empty()) continue;
        tokens.push_back({&a, a.location().offset});
    }
    std::sort(tokens.begin(), tokens.end(),
              [](const TokenAnn& a, const TokenAnn& b) { return a.offset < b.offset; });

    DepGraph graph;
    std::map<std::string, int> index_of;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const BiocAnnotation& a = *tokens[i].annotation;
        DepNode node;
        node.index = static_cast<int>(i) + 1;
        node.word = a.text;
        node.lemma = a.infons.get("lemma");
        node.tag = a.infons.get("tag");
        node.offset = a.location().offset;
        index_of[a.id] = node.index;
        if (a.infons.get("root") == "True") graph.edges.push_back({0, node.index, "root"});
        graph.nodes.push_back(std::move(node));
    }
    for (const BiocRelation& r : sentence.relations) {
        if (!r.infons.has("dependency")) continue;
        int governor = -1, dependent = -1;
        for (const BiocNode& n : r.nodes) {
            auto it = index_of.find(n.refid);
            if (it == index_of.end()) continue;
            if (n.role == "governor") governor = it->second;
            if (n.role == "dependant") dependent = it->second;
        }
        if (governor > 0 && dependent > 0)
            graph.edges.push_back({governor, dependent, r.infons.get("dependency")});
    }
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const DepEdge& a, const DepEdge& b) { return a.dependent < b.dependent; });
    return graph;
}

} // namespace radtext
