#include "radtext/bioc_xml.hpp"

#include "radtext/errors.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace radtext {

namespace {

// ---------------------------------------------------------------------------
// Reader
// ---------------------------------------------------------------------------

// A generic element node; the BioC builder walks this.
struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<XmlNode> children;
    std::string text; // concatenated character data
    int line = 0;
    int column = 0;

    std::string attr(const std::string& key) const {
        for (const auto& a : attrs)
            if (a.first == key) return a.second;
        return {};
    }
    bool has_attr(const std::string& key) const {
        for (const auto& a : attrs)
            if (a.first == key) return true;
        return false;
    }
};

class XmlReader {
public:
    explicit XmlReader(const std::string& input) : in_(input) {}

    XmlNode parse() {
        skip_prolog();
        XmlNode root = parse_element();
        skip_misc();
        if (pos_ != in_.size()) fail("trailing content after document element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("XML parse error: " + msg, line_, col_);
    }

    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return eof() ? '\0' : in_[pos_]; }

    char next() {
        if (eof()) fail("unexpected end of input");
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        next();
    }

    bool consume(const std::string& s) {
        if (in_.compare(pos_, s.size(), s) != 0) return false;
        for (std::size_t i = 0; i < s.size(); ++i) next();
        return true;
    }

    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    void skip_space() {
        while (!eof() && is_space(peek())) next();
    }

    static bool is_name_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':';
    }
    static bool is_name_char(char c) {
        return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
    }

    std::string read_name() {
        if (!is_name_start(peek())) fail("expected a name");
        std::string name;
        while (!eof() && is_name_char(peek())) name += next();
        return name;
    }

    void skip_comment() {
        // positioned after "<!--"
        while (true) {
            if (consume("-->")) return;
            next();
        }
    }

    void skip_prolog() {
        skip_space();
        if (consume("<?xml")) {
            while (!consume("?>")) next();
        }
        skip_misc();
        if (consume("<!DOCTYPE")) {
            int depth = 1;
            while (depth > 0) {
                char c = next();
                if (c == '<') ++depth;
                if (c == '>') --depth;
            }
        }
        skip_misc();
    }

    void skip_misc() {
        while (true) {
            skip_space();
            if (consume("<!--")) {
                skip_comment();
                continue;
            }
            if (consume("<?")) {
                while (!consume("?>")) next();
                continue;
            }
            break;
        }
    }

    std::string decode_entity() {
        // positioned after '&'
        std::string name;
        while (peek() != ';') {
            name += next();
            if (name.size() > 10) fail("unterminated entity reference");
        }
        next(); // ';'
        if (name == "lt") return "<";
        if (name == "gt") return ">";
        if (name == "amp") return "&";
        if (name == "quot") return "\"";
        if (name == "apos") return "'";
        if (!name.empty() && name[0] == '#') {
            uint32_t cp = 0;
            try {
                cp = (name.size() > 1 && (name[1] == 'x' || name[1] == 'X'))
                         ? static_cast<uint32_t>(std::stoul(name.substr(2), nullptr, 16))
                         : static_cast<uint32_t>(std::stoul(name.substr(1), nullptr, 10));
            } catch (const std::exception&) {
                fail("bad character reference &" + name + ";");
            }
            if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
                fail("character reference out of range");
            return uni::to_utf8(static_cast<char32_t>(cp));
        }
        fail("unknown entity &" + name + ";");
    }

    std::string read_attr_value() {
        char quote = peek();
        if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
        next();
        std::string value;
        while (peek() != quote) {
            char c = next();
            if (c == '&')
                value += decode_entity();
            else if (c == '<')
                fail("'<' in attribute value");
            else
                value += c;
        }
        next();
        return value;
    }

    XmlNode parse_element() {
        expect('<');
        XmlNode node;
        node.line = line_;
        node.column = col_;
        node.name = read_name();
        while (true) {
            skip_space();
            if (consume("/>")) return node;
            if (peek() == '>') {
                next();
                break;
            }
            std::string key = read_name();
            skip_space();
            expect('=');
            skip_space();
            std::string value = read_attr_value();
            for (const auto& a : node.attrs)
                if (a.first == key) fail("duplicate attribute \"" + key + "\"");
            node.attrs.emplace_back(std::move(key), std::move(value));
        }
        // content
        while (true) {
            if (eof()) fail("unexpected end of input inside <" + node.name + ">");
            if (consume("<!--")) {
                skip_comment();
                continue;
            }
            if (consume("<![CDATA[")) {
                while (!consume("]]>")) node.text += next();
                continue;
            }
            if (in_.compare(pos_, 2, "</") == 0) {
                next();
                next();
                std::string closing = read_name();
                if (closing != node.name)
                    fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
                skip_space();
                expect('>');
                return node;
            }
            if (peek() == '<') {
                node.children.push_back(parse_element());
                continue;
            }
            char c = next();
            if (c == '&')
                node.text += decode_entity();
            else
                node.text += c;
        }
    }

    const std::string& in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---------------------------------------------------------------------------
// Model builder
// ---------------------------------------------------------------------------

[[noreturn]] void schema_error(const XmlNode& node, const std::string& msg) {
    throw DataError("BioC schema error at line " + std::to_string(node.line) + ": " + msg);
}

int64_t parse_offset_value(const XmlNode& node, const std::string& raw,
                           const std::string& what) {
    if (raw.empty()) schema_error(node, "empty " + what);
    std::size_t i = 0;
    for (char c : raw)
        if (c < '0' || c > '9') schema_error(node, what + " \"" + raw + "\" is not a non-negative integer");
    (void)i;
    try {
        return static_cast<int64_t>(std::stoll(raw));
    } catch (const std::exception&) {
        schema_error(node, what + " \"" + raw + "\" is out of range");
    }
}

// Text content of a child element that holds only character data.
std::string scalar_text(const XmlNode& node) {
    if (!node.children.empty())
        schema_error(node, "<" + node.name + "> must not contain child elements");
    return node.text;
}

bool text_is_blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
    return true;
}

void require_blank_text(const XmlNode& node) {
    if (!text_is_blank(node.text))
        schema_error(node, "unexpected character data inside <" + node.name + ">");
}

void add_infon(Infons& infons, const XmlNode& node) {
    if (!node.has_attr("key")) schema_error(node, "<infon> requires a key attribute");
    const std::string key = node.attr("key");
    if (infons.has(key)) schema_error(node, "duplicate infon key \"" + key + "\"");
    infons.set(key, scalar_text(node));
}

BiocAnnotation build_annotation(const XmlNode& node) {
    BiocAnnotation a;
    a.id = node.attr("id");
    require_blank_text(node);
    for (const XmlNode& child : node.children) {
        if (child.name == "infon") {
            add_infon(a.infons, child);
        } else if (child.name == "location") {
            Location loc;
            loc.offset = parse_offset_value(child, child.attr("offset"), "offset attribute");
            loc.length = parse_offset_value(child, child.attr("length"), "length attribute");
            a.locations.push_back(loc);
        } else if (child.name == "text") {
            a.text = scalar_text(child);
        } else {
            schema_error(child, "unknown element <" + child.name + "> in <annotation>");
        }
    }
    return a;
}

BiocRelation build_relation(const XmlNode& node) {
    BiocRelation r;
    r.id = node.attr("id");
    require_blank_text(node);
    for (const XmlNode& child : node.children) {
        if (child.name == "infon") {
            add_infon(r.infons, child);
        } else if (child.name == "node") {
            BiocNode n;
            n.refid = child.attr("refid");
            n.role = child.attr("role");
            r.nodes.push_back(n);
        } else {
            schema_error(child, "unknown element <" + child.name + "> in <relation>");
        }
    }
    return r;
}

BiocSentence build_sentence(const XmlNode& node) {
    BiocSentence s;
    require_blank_text(node);
    bool saw_offset = false;
    for (const XmlNode& child : node.children) {
        if (child.name == "infon") {
            add_infon(s.infons, child);
        } else if (child.name == "offset") {
            s.offset = parse_offset_value(child, scalar_text(child), "offset");
            saw_offset = true;
        } else if (child.name == "text") {
            s.text = scalar_text(child);
        } else if (child.name == "annotation") {
            s.annotations.push_back(build_annotation(child));
        } else if (child.name == "relation") {
            s.relations.push_back(build_relation(child));
        } else {
            schema_error(child, "unknown element <" + child.name + "> in <sentence>");
        }
    }
    if (!saw_offset) schema_error(node, "<sentence> requires an <offset>");
    return s;
}

BiocPassage build_passage(const XmlNode& node) {
    BiocPassage p;
    require_blank_text(node);
    bool saw_offset = false;
    for (const XmlNode& child : node.children) {
        if (child.name == "infon") {
            add_infon(p.infons, child);
        } else if (child.name == "offset") {
            p.offset = parse_offset_value(child, scalar_text(child), "offset");
            saw_offset = true;
        } else if (child.name == "text") {
            p.text = scalar_text(child);
        } else if (child.name == "sentence") {
            p.sentences.push_back(build_sentence(child));
        } else if (child.name == "annotation") {
            p.annotations.push_back(build_annotation(child));
        } else if (child.name == "relation") {
            p.relations.push_back(build_relation(child));
        } else {
            schema_error(child, "unknown element <" + child.name + "> in <passage>");
        }
    }
    if (!saw_offset) schema_error(node, "<passage> requires an <offset>");
    return p;
}

BiocDocument build_document(const XmlNode& node) {
    BiocDocument d;
    require_blank_text(node);
    for (const XmlNode& child : node.children) {
        if (child.name == "infon") {
            add_infon(d.infons, child);
        } else if (child.name == "id") {
            d.id = scalar_text(child);
        } else if (child.name == "passage") {
            d.passages.push_back(build_passage(child));
        } else {
            schema_error(child, "unknown element <" + child.name + "> in <document>");
        }
    }
    return d;
}

BiocCollection build_collection(const XmlNode& node) {
    if (node.name != "collection")
        schema_error(node, "document element must be <collection>, got <" + node.name + ">");
    BiocCollection c;
    require_blank_text(node);
    for (const XmlNode& child : node.children) {
        if (child.name == "infon") {
            add_infon(c.infons, child);
        } else if (child.name == "source") {
            c.source = scalar_text(child);
        } else if (child.name == "date") {
            c.date = scalar_text(child);
        } else if (child.name == "key") {
            c.key = scalar_text(child);
        } else if (child.name == "document") {
            c.documents.push_back(build_document(child));
        } else {
            schema_error(child, "unknown element <" + child.name + "> in <collection>");
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Writer
// ---------------------------------------------------------------------------

// '>' is escaped in character data too: pattern strings like
// "{}=f >{} ..." must appear as "&gt;" in the emitted XML.
std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string escape_attr(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\n': out += "&#10;"; break;
        case '\t': out += "&#9;"; break;
        case '\r': out += "&#13;"; break;
        default: out += c;
        }
    }
    return out;
}

class XmlWriter {
public:
    std::string write(const BiocCollection& c) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        open("collection");
        scalar("source", c.source);
        scalar("date", c.date);
        scalar("key", c.key);
        infons(c.infons);
        for (const BiocDocument& d : c.documents) document(d);
        close("collection");
        return out_.str();
    }

private:
    void indent() {
        for (int i = 0; i < depth_; ++i) out_ << "  ";
    }
    void open(const std::string& name) {
        indent();
        out_ << '<' << name << ">\n";
        ++depth_;
    }
    void close(const std::string& name) {
        --depth_;
        indent();
        out_ << "</" << name << ">\n";
    }
    void scalar(const std::string& name, const std::string& value) {
        indent();
        out_ << '<' << name << '>' << escape_text(value) << "</" << name << ">\n";
    }
    void infons(const Infons& infons) {
        for (const auto& [key, value] : infons.entries()) {
            indent();
            out_ << "<infon key=\"" << escape_attr(key) << "\">" << escape_text(value)
                 << "</infon>\n";
        }
    }
    void annotation(const BiocAnnotation& a) {
        indent();
        out_ << "<annotation id=\"" << escape_attr(a.id) << "\">\n";
        ++depth_;
        infons(a.infons);
        for (const Location& loc : a.locations) {
            indent();
            out_ << "<location offset=\"" << loc.offset << "\" length=\"" << loc.length
                 << "\"/>\n";
        }
        scalar("text", a.text);
        close("annotation");
    }
    void relation(const BiocRelation& r) {
        indent();
        out_ << "<relation id=\"" << escape_attr(r.id) << "\">\n";
        ++depth_;
        infons(r.infons);
        for (const BiocNode& n : r.nodes) {
            indent();
            out_ << "<node refid=\"" << escape_attr(n.refid) << "\" role=\""
                 << escape_attr(n.role) << "\"/>\n";
        }
        close("relation");
    }
    void sentence(const BiocSentence& s) {
        open("sentence");
        infons(s.infons);
        scalar("offset", std::to_string(s.offset));
        if (!s.text.empty()) scalar("text", s.text);
        for (const BiocAnnotation& a : s.annotations) annotation(a);
        for (const BiocRelation& r : s.relations) relation(r);
        close("sentence");
    }
    void passage(const BiocPassage& p) {
        open("passage");
        infons(p.infons);
        scalar("offset", std::to_string(p.offset));
        if (!p.text.empty()) scalar("text", p.text);
        for (const BiocSentence& s : p.sentences) sentence(s);
        for (const BiocAnnotation& a : p.annotations) annotation(a);
        for (const BiocRelation& r : p.relations) relation(r);
        close("passage");
    }
    void document(const BiocDocument& d) {
        open("document");
        scalar("id", d.id);
        infons(d.infons);
        for (const BiocPassage& p : d.passages) passage(p);
        close("document");
    }

    std::ostringstream out_;
    int depth_ = 0;
};

} // namespace

BiocCollection parse_bioc_xml(const std::string& xml) {
    XmlReader reader(xml);
    return build_collection(reader.parse());
}

std::string serialize_bioc_xml(const BiocCollection& collection) {
    auto violations = validate(collection);
    if (!violations.empty())
        throw DataError("cannot serialize invalid collection: " + describe(violations));
    return XmlWriter().write(collection);
}

BiocCollection load_bioc_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bioc_xml(buf.str());
}

void save_bioc_file(const BiocCollection& collection, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open \"" + path + "\" for writing");
    out << serialize_bioc_xml(collection);
}

} // namespace radtext
