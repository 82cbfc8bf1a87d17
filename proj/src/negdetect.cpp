#include "radtext/negdetect.hpp"

#include "radtext/errors.hpp"
#include "radtext/resources.hpp"
#include "radtext/unicode.hpp"

#include <algorithm>
#include <regex>

namespace radtext {

struct NegPattern::Impl {
    std::vector<std::vector<NodeConstraint>> nodes;
    std::vector<EdgeStep> edges;
    std::map<std::string, std::size_t> captures;
    std::size_t f_position = 0;
    // Compiled anchored case-insensitive regexes, parallel to the
    // constraint lists.
    std::vector<std::vector<std::regex>> node_regexes;
    std::vector<std::regex> label_regexes; // skipped entries for empty labels
    std::vector<bool> has_label;
};

std::size_t NegPattern::node_count() const { return impl->nodes.size(); }
const std::vector<std::vector<NodeConstraint>>& NegPattern::node_constraints() const {
    return impl->nodes;
}
const std::vector<EdgeStep>& NegPattern::edge_steps() const { return impl->edges; }
const std::map<std::string, std::size_t>& NegPattern::captures() const {
    return impl->captures;
}
std::size_t NegPattern::f_position() const { return impl->f_position; }

bool NegPattern::node_matches(std::size_t position, const DepNode& node) const {
    const auto& constraints = impl->nodes[position];
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const std::string* value = nullptr;
        if (constraints[i].attribute == "word") value = &node.word;
        else if (constraints[i].attribute == "lemma") value = &node.lemma;
        else value = &node.tag;
        if (!std::regex_match(*value, impl->node_regexes[position][i])) return false;
    }
    return true;
}

bool NegPattern::label_matches(std::size_t step, const std::string& label) const {
    if (!impl->has_label[step]) return true;
    return std::regex_match(label, impl->label_regexes[step]);
}

namespace {

class PatternParser {
public:
    PatternParser(const std::string& src, const std::string& id) : src_(src), id_(id) {}

    std::shared_ptr<NegPattern::Impl> parse() {
        auto impl = std::make_shared<NegPattern::Impl>();
        skip_space();
        parse_node(*impl);
        while (true) {
            skip_space();
            if (pos_ >= src_.size()) break;
            parse_edge(*impl);
            skip_space();
            parse_node(*impl);
        }
        auto f = impl->captures.find("f");
        if (f == impl->captures.end())
            fail("pattern has no =f capture");
        impl->f_position = f->second;
        // compile regexes
        for (const auto& constraints : impl->nodes) {
            impl->node_regexes.emplace_back();
            for (const NodeConstraint& c : constraints) {
                try {
                    impl->node_regexes.back().emplace_back(
                        c.regex, std::regex::ECMAScript | std::regex::icase);
                } catch (const std::regex_error& e) {
                    fail(std::string("bad regex /") + c.regex + "/: " + e.what());
                }
            }
        }
        for (const EdgeStep& step : impl->edges) {
            impl->has_label.push_back(!step.label_regex.empty());
            try {
                impl->label_regexes.emplace_back(
                    step.label_regex.empty() ? ".*" : step.label_regex,
                    std::regex::ECMAScript | std::regex::icase);
            } catch (const std::regex_error& e) {
                fail(std::string("bad label regex /") + step.label_regex + "/: " + e.what());
            }
        }
        return impl;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("pattern \"" + id_ + "\": " + msg, 0,
                         static_cast<int>(pos_) + 1);
    }

    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    // Parses "{...}" into attribute constraints. Returns true if the group
    // was empty ("{}").
    bool parse_group(std::vector<NodeConstraint>& out, bool allow_dep) {
        if (pos_ >= src_.size() || src_[pos_] != '{') fail("expected '{'");
        ++pos_;
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '}') {
            ++pos_;
            return true;
        }
        while (true) {
            skip_space();
            std::size_t begin = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            std::string attr = src_.substr(begin, pos_ - begin);
            const bool valid = attr == "word" || attr == "lemma" || attr == "tag" ||
                               (allow_dep && attr == "dep");
            if (!valid) fail("unknown attribute \"" + attr + "\"");
            skip_space();
            if (pos_ >= src_.size() || src_[pos_] != ':') fail("expected ':'");
            ++pos_;
            skip_space();
            if (pos_ >= src_.size() || src_[pos_] != '/') fail("expected '/'");
            ++pos_;
            std::string regex;
            while (pos_ < src_.size() && src_[pos_] != '/') {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                    regex += '/';
                    pos_ += 2;
                } else {
                    regex += src_[pos_++];
                }
            }
            if (pos_ >= src_.size()) fail("unterminated regex");
            ++pos_; // closing '/'
            out.push_back({attr, regex});
            skip_space();
            if (pos_ < src_.size() && src_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < src_.size() && src_[pos_] == '}') {
                ++pos_;
                return false;
            }
            fail("expected ',' or '}'");
        }
    }

    void parse_node(NegPattern::Impl& impl) {
        if (pos_ >= src_.size()) fail("expected a node");
        std::vector<NodeConstraint> constraints;
        parse_group(constraints, false);
        impl.nodes.push_back(std::move(constraints));
        if (pos_ < src_.size() && src_[pos_] == '=') {
            ++pos_;
            std::size_t begin = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(begin, pos_ - begin);
            if (name.empty()) fail("expected a capture name after '='");
            if (impl.captures.count(name)) fail("duplicate capture name \"" + name + "\"");
            impl.captures[name] = impl.nodes.size() - 1;
        }
    }

    void parse_edge(NegPattern::Impl& impl) {
        EdgeStep step;
        if (src_[pos_] == '>') {
            ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '>') {
                ++pos_;
                step.direction = EdgeDirection::governs_transitively;
            } else {
                step.direction = EdgeDirection::governs;
            }
        } else if (src_[pos_] == '<') {
            ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '<') {
                ++pos_;
                step.direction = EdgeDirection::governed_by_transitively;
            } else {
                step.direction = EdgeDirection::governed_by;
            }
        } else {
            fail(std::string("expected an edge operator, got '") + src_[pos_] + "'");
        }
        skip_space();
        // Optional label constraint: "{}" (vacuous) or "{dep:/re/}". A brace
        // group here is the label constraint only when another group (the
        // next node) follows; otherwise it is the node itself.
        if (pos_ < src_.size() && src_[pos_] == '{') {
            std::size_t save = pos_;
            std::vector<NodeConstraint> group;
            bool empty = parse_group(group, true);
            const bool is_label = (empty || (group.size() == 1 && group[0].attribute == "dep")) &&
                                  next_is_group();
            if (is_label) {
                if (!group.empty()) step.label_regex = group[0].regex;
            } else {
                pos_ = save; // it was the node; re-parse it as one
            }
        }
        impl.edges.push_back(std::move(step));
    }

    bool next_is_group() {
        std::size_t p = pos_;
        while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t')) ++p;
        return p < src_.size() && src_[p] == '{';
    }

    const std::string& src_;
    const std::string& id_;
    std::size_t pos_ = 0;
};

} // namespace

NegPattern compile_pattern(const std::string& src, const std::string& id, PatternKind kind) {
    NegPattern pattern;
    pattern.id = id;
    pattern.kind = kind;
    pattern.source = src;
    pattern.impl = PatternParser(src, id).parse();
    return pattern;
}

std::vector<NegPattern> parse_patterns(const std::string& text, PatternKind kind) {
    std::vector<NegPattern> patterns;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') {
            std::size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw ParseError("pattern file: expected \"id<TAB>pattern\"", line_no);
            patterns.push_back(compile_pattern(line.substr(tab + 1), line.substr(0, tab), kind));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return patterns;
}

std::vector<NegPattern> load_negation_patterns(const std::string& path) {
    return parse_patterns(resources::load(resources::kNegationPatterns, path),
                          PatternKind::negation);
}

std::vector<NegPattern> load_uncertainty_patterns(const std::string& path) {
    return parse_patterns(resources::load(resources::kUncertaintyPatterns, path),
                          PatternKind::uncertainty);
}

std::vector<NegPattern> combine_patterns(std::vector<NegPattern> negation,
                                         std::vector<NegPattern> uncertainty) {
    std::vector<NegPattern> all = std::move(negation);
    all.insert(all.end(), std::make_move_iterator(uncertainty.begin()),
               std::make_move_iterator(uncertainty.end()));
    return all;
}

// ---------------------------------------------------------------------------
// Matcher
// ---------------------------------------------------------------------------

namespace {

struct GraphIndex {
    int n = 0;
    std::vector<int> parent;                      // parent[i], 0 for root
    std::vector<std::string> parent_label;        // label of edge into i
    std::vector<std::vector<int>> children;       // children[g] = dependents
    std::map<std::pair<int, int>, const DepEdge*> edge;

    explicit GraphIndex(const DepGraph& g) {
        n = static_cast<int>(g.nodes.size());
        parent.assign(n + 1, 0);
        parent_label.assign(n + 1, "");
        children.assign(n + 1, {});
        for (const DepEdge& e : g.edges) {
            if (e.governor >= 1) children[e.governor].push_back(e.dependent);
            parent[e.dependent] = e.governor;
            parent_label[e.dependent] = e.label;
            edge[{e.governor, e.dependent}] = &e;
        }
    }
};

class Matcher {
public:
    Matcher(const NegPattern& pattern, const DepGraph& graph, const std::set<int>& anchor)
        : pattern_(pattern), graph_(graph), index_(graph), anchor_(anchor) {}

    std::vector<Binding> run() {
        const std::size_t k = pattern_.node_count();
        assignment_.assign(k, 0);
        for (int candidate = 1; candidate <= index_.n; ++candidate) {
            if (!try_assign(0, candidate)) continue;
            extend(1);
            assignment_[0] = 0;
        }
        std::sort(results_.begin(), results_.end());
        results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
        return std::move(results_);
    }

private:
    bool try_assign(std::size_t position, int node) {
        if (pattern_.f_position() == position && !anchor_.count(node)) return false;
        for (std::size_t p = 0; p < position; ++p)
            if (assignment_[p] == node) return false; // injective
        if (!pattern_.node_matches(position, *graph_.node(node))) return false;
        assignment_[position] = node;
        return true;
    }

    // Candidate graph nodes for query position `pos` given the assignment of
    // `pos - 1`, honoring the edge step between them.
    std::vector<int> candidates(std::size_t pos) {
        const EdgeStep& step = pattern_.edge_steps()[pos - 1];
        const int from = assignment_[pos - 1];
        std::vector<int> out;
        switch (step.direction) {
        case EdgeDirection::governs:
            for (int child : index_.children[from])
                if (pattern_.label_matches(pos - 1, index_.parent_label[child]))
                    out.push_back(child);
            break;
        case EdgeDirection::governed_by: {
            const int p = index_.parent[from];
            if (p >= 1 && pattern_.label_matches(pos - 1, index_.parent_label[from]))
                out.push_back(p);
            break;
        }
        case EdgeDirection::governs_transitively: {
            // Proper descendants; the label constraint applies to every edge
            // on the chain, so the traversal prunes on it.
            std::vector<int> stack;
            for (int child : index_.children[from])
                if (pattern_.label_matches(pos - 1, index_.parent_label[child]))
                    stack.push_back(child);
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                out.push_back(cur);
                for (int child : index_.children[cur])
                    if (pattern_.label_matches(pos - 1, index_.parent_label[child]))
                        stack.push_back(child);
            }
            break;
        }
        case EdgeDirection::governed_by_transitively: {
            int cur = from;
            while (index_.parent[cur] >= 1 &&
                   pattern_.label_matches(pos - 1, index_.parent_label[cur])) {
                cur = index_.parent[cur];
                out.push_back(cur);
            }
            break;
        }
        }
        return out;
    }

    void extend(std::size_t pos) {
        if (pos == pattern_.node_count()) {
            Binding b;
            b.assignment = assignment_;
            for (const auto& [name, position] : pattern_.captures())
                b.captures[name] = assignment_[position];
            results_.push_back(std::move(b));
            return;
        }
        for (int candidate : candidates(pos)) {
            if (!try_assign(pos, candidate)) continue;
            extend(pos + 1);
            assignment_[pos] = 0;
        }
    }

    const NegPattern& pattern_;
    const DepGraph& graph_;
    GraphIndex index_;
    const std::set<int>& anchor_;
    std::vector<int> assignment_;
    std::vector<Binding> results_;
};

} // namespace

std::vector<Binding> match_pattern(const NegPattern& pattern, const DepGraph& graph,
                                   const std::set<int>& anchor) {
    if (graph.nodes.empty() || anchor.empty()) return {};
    return Matcher(pattern, graph, anchor).run();
}

// ---------------------------------------------------------------------------
// detect
// ---------------------------------------------------------------------------

namespace {

std::set<int> build_anchor(const DepGraph& graph, const BiocAnnotation& annotation) {
    std::set<int> anchor;
    if (annotation.locations.empty()) return anchor;
    for (const Location& loc : annotation.locations) {
        for (const DepNode& node : graph.nodes) {
            if (node.offset < 0) continue;
            const int64_t node_len = static_cast<int64_t>(uni::length(node.word));
            if (node.offset < loc.offset + loc.length && loc.offset < node.offset + node_len)
                anchor.insert(node.index);
        }
    }
    // conj transparency: close over conj edges in both directions.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DepEdge& e : graph.edges) {
            if (e.label != "conj") continue;
            if (anchor.count(e.governor) && !anchor.count(e.dependent)) {
                anchor.insert(e.dependent);
                changed = true;
            }
            if (anchor.count(e.dependent) && e.governor >= 1 && !anchor.count(e.governor)) {
                anchor.insert(e.governor);
                changed = true;
            }
        }
    }
    return anchor;
}

} // namespace

BiocDocument detect(const BiocDocument& doc, const std::vector<NegPattern>& patterns) {
    BiocDocument out = doc;
    for (BiocPassage& passage : out.passages) {
        for (BiocSentence& sentence : passage.sentences) {
            // Concept annotations carry a source_concept_id infon.
            std::vector<BiocAnnotation*> concepts;
            for (BiocAnnotation& a : sentence.annotations)
                if (a.infons.has("source_concept_id")) concepts.push_back(&a);
            if (concepts.empty()) continue;
            const DepGraph graph = graph_from_sentence(sentence);
            if (graph.nodes.empty())
                throw PipelineOrderError(
                    "sentence at offset " + std::to_string(sentence.offset) +
                    " has concept annotations but no dependency graph; run the parsing "
                    "stages before negation detection");
            for (BiocAnnotation* concept : concepts) {
                const std::set<int> anchor = build_anchor(graph, *concept);
                const NegPattern* matched = nullptr;
                // Negation outranks uncertainty regardless of list order;
                // within a kind, list order breaks ties.
                for (PatternKind kind : {PatternKind::negation, PatternKind::uncertainty}) {
                    for (const NegPattern& pattern : patterns) {
                        if (pattern.kind != kind) continue;
                        if (!match_pattern(pattern, graph, anchor).empty()) {
                            matched = &pattern;
                            break;
                        }
                    }
                    if (matched != nullptr) break;
                }
                if (matched == nullptr) {
                    concept->infons.set("exists", "True");
                } else if (matched->kind == PatternKind::negation) {
                    concept->infons.set("exists", "False");
                    concept->infons.set("negation", "True");
                    concept->infons.set("negbio_pattern_id", matched->id);
                    concept->infons.set("negbio_pattern_str", matched->source);
                } else {
                    concept->infons.set("uncertainty", "True");
                    concept->infons.set("negbio_pattern_id", matched->id);
                    concept->infons.set("negbio_pattern_str", matched->source);
                }
            }
        }
    }
    return out;
}

BiocCollection detect(const BiocCollection& collection,
                      const std::vector<NegPattern>& patterns) {
    BiocCollection out = collection;
    for (BiocDocument& doc : out.documents) doc = detect(doc, patterns);
    return out;
}

} // namespace radtext
