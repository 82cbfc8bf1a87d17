#include "radtext/pipeline.hpp"

#include "radtext/bioc_xml.hpp"
#include "radtext/cdm.hpp"
#include "radtext/collect.hpp"
#include "radtext/deid.hpp"
#include "radtext/depgraph.hpp"
#include "radtext/errors.hpp"
#include "radtext/negdetect.hpp"
#include "radtext/ner.hpp"
#include "radtext/resources.hpp"
#include "radtext/secsplit.hpp"
#include "radtext/ssplit.hpp"
#include "radtext/unicode.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace radtext {

namespace fs = std::filesystem;

std::string to_string(Stage stage) {
    switch (stage) {
    case Stage::deid: return "deid";
    case Stage::secsplit: return "secsplit";
    case Stage::ssplit: return "ssplit";
    case Stage::ner: return "ner";
    case Stage::parse: return "parse";
    case Stage::tree2dep: return "tree2dep";
    case Stage::neg: return "neg";
    case Stage::collect: return "collect";
    }
    return "?";
}

std::optional<Stage> stage_from_string(const std::string& name) {
    static const std::map<std::string, Stage> map = {
        {"deid", Stage::deid},     {"secsplit", Stage::secsplit},
        {"ssplit", Stage::ssplit}, {"ner", Stage::ner},
        {"parse", Stage::parse},   {"tree2dep", Stage::tree2dep},
        {"neg", Stage::neg},       {"collect", Stage::collect},
    };
    auto it = map.find(name);
    if (it == map.end()) return std::nullopt;
    return it->second;
}

void validate_annotator_order(const std::vector<Stage>& annotators) {
    auto position = [&](Stage s) -> int {
        for (std::size_t i = 0; i < annotators.size(); ++i)
            if (annotators[i] == s) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < annotators.size(); ++i)
        for (std::size_t j = i + 1; j < annotators.size(); ++j)
            if (annotators[i] == annotators[j])
                throw PipelineOrderError("annotator \"" + to_string(annotators[i]) +
                                         "\" listed twice");
    const int neg = position(Stage::neg);
    if (neg >= 0) {
        const int ner = position(Stage::ner);
        if (ner < 0 || ner > neg)
            throw PipelineOrderError("neg requires ner to run earlier in the pipeline");
        const int parse = position(Stage::parse);
        const int tree2dep = position(Stage::tree2dep);
        const bool parsed_before =
            (parse >= 0 && parse < neg) || (tree2dep >= 0 && tree2dep < neg);
        if (!parsed_before)
            throw PipelineOrderError("neg requires parse or tree2dep to run earlier");
    }
    const int secsplit = position(Stage::secsplit);
    const int ssplit = position(Stage::ssplit);
    if (secsplit >= 0 && ssplit >= 0 && secsplit > ssplit)
        throw PipelineOrderError("secsplit must run before ssplit");
}

namespace {

// Tokens joined with an unlikely separator; the key that matches trees and
// CoNLL-U blocks to sentences.
std::string token_key(const std::vector<std::string>& tokens) {
    std::string key;
    for (const std::string& t : tokens) {
        key += t;
        key += '\x1f';
    }
    return key;
}

std::string sentence_token_key(const BiocSentence& sentence) {
    std::vector<std::string> words;
    for (const Token& t : tokenize_text(sentence.text, 0)) words.push_back(t.text);
    return token_key(words);
}

struct ParseIndex {
    std::map<std::string, std::string> trees;   // token key -> tree line
    std::map<std::string, DepGraph> graphs;     // token key -> CoNLL-U graph
};

ParseIndex build_parse_index(const PipelineResources& res) {
    ParseIndex index;
    if (!res.trees.empty() || res.conllu.empty()) {
        // Trees default to the bundled sample file only when neither source
        // is given explicitly.
        std::string text;
        if (!res.trees.empty()) {
            std::ifstream in(res.trees, std::ios::binary);
            if (!in) throw ConfigError("cannot open trees file \"" + res.trees + "\"");
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            text = resources::load(resources::kSampleTrees);
        }
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string::npos) end = text.size();
            std::string line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t first = line.find_first_not_of(" \t");
            if (first != std::string::npos && line[first] == '(') {
                ParseTree tree = parse_ptb(line.substr(first));
                index.trees[token_key(tree.leaves())] = line.substr(first);
            }
            if (end == text.size()) break;
            start = end + 1;
        }
    }
    if (!res.conllu.empty()) {
        std::ifstream in(res.conllu, std::ios::binary);
        if (!in) throw ConfigError("cannot open CoNLL-U file \"" + res.conllu + "\"");
        std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        for (DepGraph& graph : parse_conllu(text)) {
            std::vector<std::string> words;
            for (const DepNode& n : graph.nodes) words.push_back(n.word);
            index.graphs[token_key(words)] = std::move(graph);
        }
    }
    return index;
}

int max_token_id(const BiocDocument& doc) {
    int max_id = 0;
    for (const BiocPassage& p : doc.passages)
        for (const BiocSentence& s : p.sentences) {
            for (const BiocAnnotation& a : s.annotations)
                if (a.id.size() > 1 && (a.id[0] == 'T' || a.id[0] == 'R'))
                    max_id = std::max(max_id, std::atoi(a.id.c_str() + 1));
            for (const BiocRelation& r : s.relations)
                if (r.id.size() > 1 && r.id[0] == 'R')
                    max_id = std::max(max_id, std::atoi(r.id.c_str() + 1));
        }
    return max_id;
}

bool has_token_annotations(const BiocSentence& sentence) {
    for (const BiocAnnotation& a : sentence.annotations)
        if (a.id.size() > 1 && a.id[0] == 'T' &&
            std::isdigit(static_cast<unsigned char>(a.id[1])))
            return true;
    return false;
}

// parse: attach what external parsers produced. Trees become the sentence
// infon "parse tree"; CoNLL-U graphs attach directly.
BiocDocument apply_parse(const BiocDocument& doc, const ParseIndex& index) {
    BiocDocument out = doc;
    int id_base = max_token_id(out);
    for (BiocPassage& passage : out.passages) {
        for (BiocSentence& sentence : passage.sentences) {
            if (has_token_annotations(sentence)) continue;
            const std::string key = sentence_token_key(sentence);
            if (!sentence.infons.has("parse tree")) {
                auto t = index.trees.find(key);
                if (t != index.trees.end()) sentence.infons.set("parse tree", t->second);
            }
            auto g = index.graphs.find(key);
            if (g != index.graphs.end()) {
                sentence = attach_graph(sentence, g->second, id_base);
                id_base += static_cast<int>(g->second.nodes.size());
            }
        }
    }
    return out;
}

// tree2dep: convert every pending "parse tree" infon into an attached graph.
BiocDocument apply_tree2dep(const BiocDocument& doc) {
    BiocDocument out = doc;
    int id_base = max_token_id(out);
    for (BiocPassage& passage : out.passages) {
        for (BiocSentence& sentence : passage.sentences) {
            if (!sentence.infons.has("parse tree") || has_token_annotations(sentence)) continue;
            const ParseTree tree = parse_ptb(sentence.infons.get("parse tree"));
            const DepGraph graph = tree2dep(tree);
            sentence = attach_graph(sentence, graph, id_base);
            id_base += static_cast<int>(graph.nodes.size());
        }
    }
    return out;
}

void parallel_documents(BiocCollection& collection, int jobs,
                        const std::function<BiocDocument(const BiocDocument&)>& fn) {
    const std::size_t n = collection.documents.size();
    if (jobs <= 1 || n <= 1) {
        for (BiocDocument& doc : collection.documents) doc = fn(doc);
        return;
    }
    std::vector<BiocDocument> results(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(collection.documents[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const int count = std::min<int>(jobs, static_cast<int>(n));
    threads.reserve(count);
    for (int i = 0; i < count; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    collection.documents = std::move(results);
}

} // namespace

BiocCollection run_stage(const BiocCollection& collection, Stage stage,
                         const PipelineResources& res, int jobs) {
    BiocCollection out = collection;
    switch (stage) {
    case Stage::deid: {
        const PhiRuleSet rules = load_phi_rules(res.phi_rules);
        parallel_documents(out, jobs, [&](const BiocDocument& d) {
            return deidentify(d, rules, res.redact);
        });
        break;
    }
    case Stage::secsplit: {
        const SectionTitleVocab vocab = load_section_vocab(res.section_vocab);
        parallel_documents(out, jobs,
                           [&](const BiocDocument& d) { return split_sections(d, vocab); });
        break;
    }
    case Stage::ssplit: {
        const AbbreviationList abbrevs = load_abbreviations(res.abbreviations);
        parallel_documents(out, jobs,
                           [&](const BiocDocument& d) { return split_sentences(d, abbrevs); });
        break;
    }
    case Stage::ner: {
        const ConceptVocabulary vocab = load_concept_vocab(res.concepts);
        parallel_documents(out, jobs,
                           [&](const BiocDocument& d) { return match_concepts(d, vocab); });
        break;
    }
    case Stage::parse: {
        const ParseIndex index = build_parse_index(res);
        parallel_documents(out, jobs,
                           [&](const BiocDocument& d) { return apply_parse(d, index); });
        break;
    }
    case Stage::tree2dep: {
        parallel_documents(out, jobs,
                           [&](const BiocDocument& d) { return apply_tree2dep(d); });
        break;
    }
    case Stage::neg: {
        const std::vector<NegPattern> patterns =
            combine_patterns(load_negation_patterns(res.negation_patterns),
                             load_uncertainty_patterns(res.uncertainty_patterns));
        parallel_documents(out, jobs,
                           [&](const BiocDocument& d) { return detect(d, patterns); });
        break;
    }
    case Stage::collect:
        throw ConfigError("collect produces CSV; use run_collect");
    }
    return out;
}

std::string run_collect(const BiocCollection& collection, const PipelineResources& res) {
    const std::vector<Finding> findings = load_findings(res.findings);
    const Precedence precedence = parse_precedence(res.precedence);
    return write_labels_csv(collect_labels(collection, findings, precedence));
}

void run(const PipelineConfig& config) {
    validate_annotator_order(config.annotators);

    BiocCollection collection = load_bioc_file(config.input_path);

    const fs::path output(config.output_path);
    fs::path workdir = config.workdir.empty() ? output.parent_path() : fs::path(config.workdir);
    if (workdir.empty()) workdir = ".";
    fs::create_directories(workdir);
    const std::string stem = output.stem().string();

    for (std::size_t i = 0; i < config.annotators.size(); ++i) {
        const Stage stage = config.annotators[i];
        const bool last = i + 1 == config.annotators.size();
        if (stage == Stage::collect) {
            const std::string csv_text = run_collect(collection, config.resources);
            const fs::path target = last ? output : workdir / (stem + ".collect.csv");
            std::ofstream f(target, std::ios::binary);
            if (!f) throw DataError("cannot write \"" + target.string() + "\"");
            f << csv_text;
            continue;
        }
        collection = run_stage(collection, stage, config.resources, config.jobs);
        const fs::path intermediate = workdir / (stem + "." + to_string(stage) + ".xml");
        save_bioc_file(collection, intermediate.string());
        if (last) save_bioc_file(collection, output.string());
    }
}

} // namespace radtext
