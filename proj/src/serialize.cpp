#include "redcor/serialize.hpp"

#include "redcor/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace redcor {

Value Value::of(const Int& x) {
    Value v;
    v.kind = Kind::Integer;
    v.integer = x;
    return v;
}

Value Value::word(std::string w) {
    Value v;
    v.kind = Kind::Word;
    v.text = std::move(w);
    return v;
}

Value Value::quoted(std::string t) {
    Value v;
    v.kind = Kind::Text;
    v.text = std::move(t);
    return v;
}

Value Value::list(std::vector<Value> items) {
    Value v;
    v.kind = Kind::List;
    v.items = std::move(items);
    return v;
}

Value Value::of(const Vector& x) {
    Value v = list();
    for (const auto& e : x) v.items.push_back(of(e));
    return v;
}

Value Value::of(const Matrix& m) {
    Value v = list();
    for (std::size_t i = 0; i < m.rows(); ++i) v.items.push_back(of(m.row(i)));
    return v;
}

void Value::fail(const std::string& what) const { throw ParseError(what, line, column); }

Int Value::as_int() const {
    if (kind == Kind::Integer) return integer;
    if (kind == Kind::Text || kind == Kind::Word) {
        Int x;
        if (!text.empty() && x.set_str(text, 10) == 0) return x;
    }
    fail("expected an integer");
}

long Value::as_long() const {
    Int x = as_int();
    if (!x.fits_slong_p()) fail("integer out of range");
    return x.get_si();
}

std::string Value::as_string() const {
    if (kind != Kind::Word && kind != Kind::Text) fail("expected a word or text");
    return text;
}

const std::vector<Value>& Value::as_list() const {
    if (kind != Kind::List) fail("expected a list");
    return items;
}

Vector Value::as_vector() const {
    Vector out;
    for (const auto& v : as_list()) out.push_back(v.as_int());
    return out;
}

Matrix Value::as_matrix(std::size_t rows, std::size_t cols) const {
    const auto& r = as_list();
    if (r.size() != rows)
        fail("expected a matrix with " + std::to_string(rows) + " rows, got " + std::to_string(r.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vector row = r[i].as_vector();
        if (row.size() != cols)
            r[i].fail("expected a row of length " + std::to_string(cols) + ", got " + std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
    }
    return m;
}

void Node::fail(const std::string& what) const { throw ParseError(what, line, column); }

void Node::set(const std::string& key, Value v) {
    for (auto& [k, old] : fields)
        if (k == key) {
            old = std::move(v);
            return;
        }
    fields.emplace_back(key, std::move(v));
}

void Node::add(const std::string& name, Node child) { children.emplace_back(name, std::move(child)); }

const Value* Node::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

const Value& Node::field(const std::string& key) const {
    if (const Value* v = find(key)) return *v;
    fail(kind + " is missing the field '" + key + "'");
}

const Node* Node::find_child(const std::string& name) const {
    for (const auto& [k, c] : children)
        if (k == name) return &c;
    return nullptr;
}

const Node& Node::child(const std::string& name) const {
    if (const Node* c = find_child(name)) return *c;
    fail(kind + " is missing the block '" + name + "'");
}

const Node& Node::expect(const std::string& k) const {
    if (kind != k) fail("expected a " + k + ", got a " + (kind.empty() ? "document without kind" : kind));
    return *this;
}

namespace {

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/' || c == '.' || c == '+' || c == '-';
}

class ValueParser {
public:
    ValueParser(const std::string& s, int line, int column0) : s_(s), line_(line), col0_(column0) {}

    Value parse_all() {
        Value v = parse();
        skip();
        if (pos_ != s_.size()) error("unexpected trailing characters");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;

    [[noreturn]] void error(const std::string& what) const {
        throw ParseError(what, line_, col0_ + static_cast<int>(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    Value located(Value v, std::size_t at) const {
        v.line = line_;
        v.column = col0_ + static_cast<int>(at);
        return v;
    }

    Value parse() {
        skip();
        if (pos_ >= s_.size()) error("expected a value");
        const std::size_t at = pos_;
        const char c = s_[pos_];
        if (c == '[') {
            ++pos_;
            Value v = Value::list();
            skip();
            if (pos_ < s_.size() && s_[pos_] == ']') {
                ++pos_;
                return located(v, at);
            }
            for (;;) {
                v.items.push_back(parse());
                skip();
                if (pos_ >= s_.size()) error("unterminated list");
                if (s_[pos_] == ']') {
                    ++pos_;
                    return located(v, at);
                }
                if (s_[pos_] != ',') error("expected ',' or ']'");
                ++pos_;
            }
        }
        if (c == '"') {
            std::string t;
            for (++pos_; pos_ < s_.size() && s_[pos_] != '"'; ++pos_) {
                if (s_[pos_] != '\\') {
                    t += s_[pos_];
                    continue;
                }
                if (++pos_ >= s_.size()) break;
                t += s_[pos_] == 'n' ? '\n' : s_[pos_];
            }
            if (pos_ >= s_.size()) error("unterminated text");
            ++pos_;
            return located(Value::quoted(t), at);
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_ + 1;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
            const std::string digits = s_.substr(pos_, end - pos_);
            if (digits == "-") error("expected digits after '-'");
            pos_ = end;
            if (pos_ < s_.size() && word_char(s_[pos_])) error("malformed integer");
            return located(Value::of(Int(digits)), at);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < s_.size() && word_char(s_[end])) ++end;
            Value v = Value::word(s_.substr(pos_, end - pos_));
            pos_ = end;
            return located(v, at);
        }
        error(std::string("unexpected character '") + c + "'");
    }
};

std::string text_of(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Integer: return v.integer.get_str();
        case Value::Kind::Word: return v.text;
        case Value::Kind::Text: {
            std::string out = "\"";
            for (char c : v.text) {
                if (c == '"' || c == '\\') out += '\\';
                if (c == '\n') {
                    out += "\\n";
                    continue;
                }
                out += c;
            }
            return out + "\"";
        }
        case Value::Kind::List: {
            std::string out = "[";
            for (std::size_t i = 0; i < v.items.size(); ++i) out += (i ? ", " : "") + text_of(v.items[i]);
            return out + "]";
        }
    }
    return {};
}

void write_body(std::ostringstream& os, const Node& n, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : n.fields) os << pad << k << ": " << text_of(v) << '\n';
    for (const auto& [name, c] : n.children) {
        os << pad << c.kind << ' ' << name << ":\n";
        write_body(os, c, indent + 2);
    }
}

bool is_key(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!word_char(c)) return false;
    return true;
}

}  // namespace

std::string write_text(const Node& node) {
    std::ostringstream os;
    os << kFormatVersion << ' ' << node.kind << '\n';
    write_body(os, node, 0);
    return os.str();
}

Node read_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    Node root;
    bool header = false;
    std::vector<std::pair<int, Node*>> stack;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t indent = 0;
        while (indent < raw.size() && raw[indent] == ' ') ++indent;
        if (indent < raw.size() && raw[indent] == '\t') throw ParseError("tabs are not allowed", line, static_cast<int>(indent) + 1);
        if (indent == raw.size() || raw[indent] == '#') continue;
        const std::string content = raw.substr(indent);
        const int col = static_cast<int>(indent) + 1;
        if (!header) {
            std::istringstream hs(content);
            std::string version, kind, extra;
            hs >> version >> kind >> extra;
            if (version != kFormatVersion)
                throw ParseError("expected the header '" + std::string(kFormatVersion) + " <kind>'", line, col);
            if (kind.empty() || !extra.empty()) throw ParseError("header names exactly one kind", line, col);
            if (indent != 0) throw ParseError("the header must not be indented", line, col);
            root.kind = kind;
            root.line = line;
            root.column = col;
            stack.emplace_back(0, &root);
            header = true;
            continue;
        }
        while (stack.size() > 1 && stack.back().first > static_cast<int>(indent)) stack.pop_back();
        if (stack.back().first != static_cast<int>(indent)) throw ParseError("unexpected indentation", line, col);
        Node& parent = *stack.back().second;
        const std::size_t colon = content.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value' or '<kind> <name>:'", line, col);
        const std::string head = content.substr(0, colon);
        const std::string rest = content.substr(colon + 1);
        const std::size_t space = head.find(' ');
        if (space != std::string::npos) {
            const std::string kind = head.substr(0, space), name = head.substr(space + 1);
            if (!is_key(kind) || !is_key(name)) throw ParseError("malformed block header", line, col);
            if (rest.find_first_not_of(' ') != std::string::npos)
                throw ParseError("a block header ends with ':'", line, col + static_cast<int>(colon) + 1);
            if (parent.find_child(name) || parent.find(name)) throw ParseError("duplicate name '" + name + "'", line, col);
            Node child(kind);
            child.line = line;
            child.column = col;
            parent.add(name, std::move(child));
            stack.emplace_back(static_cast<int>(indent) + 2, &parent.children.back().second);
            continue;
        }
        if (!is_key(head)) throw ParseError("malformed key", line, col);
        if (parent.find(head) || parent.find_child(head)) throw ParseError("duplicate key '" + head + "'", line, col);
        ValueParser vp(rest, line, col + static_cast<int>(colon) + 1);
        parent.fields.emplace_back(head, vp.parse_all());
    }
    if (!header) throw ParseError("empty document", line == 0 ? 1 : line, 1);
    return root;
}

namespace {

nlohmann::ordered_json value_json(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Integer:
            if (v.integer.fits_slong_p()) return v.integer.get_si();
            return v.integer.get_str();
        case Value::Kind::Word:
        case Value::Kind::Text: return v.text;
        case Value::Kind::List: {
            auto a = nlohmann::ordered_json::array();
            for (const auto& x : v.items) a.push_back(value_json(x));
            return a;
        }
    }
    return nullptr;
}

Value json_value(const nlohmann::ordered_json& j) {
    if (j.is_number_integer()) return Value::of(Int(j.get<long>()));
    if (j.is_number_unsigned()) return Value::of(Int(std::to_string(j.get<unsigned long>())));
    if (j.is_string()) {
        std::string t = j.get<std::string>();
        const bool bare = !t.empty() && (std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_') &&
                          std::all_of(t.begin(), t.end(), word_char);
        return bare ? Value::word(std::move(t)) : Value::quoted(std::move(t));
    }
    if (j.is_boolean()) return Value::word(j.get<bool>() ? "true" : "false");
    if (j.is_array()) {
        Value v = Value::list();
        for (const auto& x : j) v.items.push_back(json_value(x));
        return v;
    }
    throw ParseError("unsupported JSON value", 1, 1);
}

nlohmann::ordered_json node_json(const Node& n) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    o["kind"] = n.kind;
    for (const auto& [k, v] : n.fields) o[k] = value_json(v);
    for (const auto& [name, c] : n.children) o[name] = node_json(c);
    return o;
}

Node json_node(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("expected a JSON object with a string 'kind'", 1, 1);
    Node n(j["kind"].get<std::string>());
    n.line = 1;
    n.column = 1;
    for (const auto& [k, v] : j.items()) {
        if (k == "kind" || k == "format") continue;
        if (v.is_object()) {
            n.add(k, json_node(v));
        } else {
            Value x = json_value(v);
            x.line = 1;
            x.column = 1;
            n.fields.emplace_back(k, x);
        }
    }
    return n;
}

}  // namespace

nlohmann::ordered_json to_json(const Node& node) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    o["format"] = kFormatVersion;
    const nlohmann::ordered_json body = node_json(node);
    for (const auto& [k, v] : body.items()) o[k] = v;
    return o;
}

Node from_json(const nlohmann::ordered_json& j) {
    if (j.is_object() && j.contains("format") && j["format"] != kFormatVersion)
        throw ParseError("unsupported format version", 1, 1);
    return json_node(j);
}

Node read_document(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') return read_text(text);
    try {
        return from_json(nlohmann::ordered_json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON", line, col);
    }
}

RingSpec parse_ring(const std::string& s) {
    if (s == "Z") return RingSpec::integers();
    if (s.rfind("Z/", 0) == 0) {
        Int n;
        if (s.size() > 2 && n.set_str(s.substr(2), 10) == 0 && n >= 2) return RingSpec::integers_mod(n);
        throw ParseError("the modulus of Z/n must be an integer n >= 2", 1, 3);
    }
    throw ParseError("unknown ring '" + s + "'; expected Z or Z/n", 1, 1);
}

Vector parse_integer_list(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    Vector out;
    std::size_t start = 0;
    while (start <= t.size()) {
        std::size_t end = t.find(',', start);
        if (end == std::string::npos) end = t.size();
        std::string item = t.substr(start, end - start);
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        Int x;
        if (item.empty() || x.set_str(item, 10) != 0)
            throw ParseError("expected a comma-separated list of integers", 1, static_cast<int>(start) + 1);
        out.push_back(x);
        start = end + 1;
    }
    return out;
}

Ideal parse_ideal(const RingSpec& ring, const std::string& s) { return Ideal(ring, parse_integer_list(s)); }

namespace {

RingSpec ring_of(const Node& n) {
    const Value& v = n.field("ring");
    try {
        return parse_ring(v.as_string());
    } catch (const ParseError&) {
        v.fail("expected a ring: Z or Z/n with n >= 2");
    }
}

Module module_from(const RingSpec& ring, const Value& orders) {
    try {
        return Module(ring, orders.as_vector());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        orders.fail(e.what());
    }
}

std::vector<Module> terms_from(const RingSpec& ring, const Value& v) {
    std::vector<Module> out;
    for (const auto& t : v.as_list()) out.push_back(module_from(ring, t));
    return out;
}

template <class F>
auto guarded(const Node& n, const Value* at, F&& build) {
    try {
        return build();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        if (at) at->fail(e.what());
        n.fail(e.what());
    }
}

Value terms_value(const Complex& C) {
    Value v = Value::list();
    for (int n = C.lo(); n <= C.hi(); ++n) v.items.push_back(Value::of(C.term(n).orders));
    return v;
}

}  // namespace

Node encode(const Ideal& a) {
    Node n("ideal");
    n.set("ring", Value::word(a.ring().to_string()));
    n.set("generators", Value::of(a.generators()));
    return n;
}

Node encode(const Module& M) {
    Node n("module");
    n.set("ring", Value::word(M.ring.to_string()));
    n.set("orders", Value::of(M.orders));
    return n;
}

Node encode(const Morphism& f) {
    Node n("morphism");
    n.set("ring", Value::word(f.source().ring.to_string()));
    n.set("source", Value::of(f.source().orders));
    n.set("target", Value::of(f.target().orders));
    n.set("matrix", Value::of(f.matrix()));
    return n;
}

Node encode(const Complex& C) {
    Node n("complex");
    n.set("ring", Value::word(C.ring().to_string()));
    n.set("lo", Value::of(Int(C.lo())));
    n.set("terms", terms_value(C));
    Value d = Value::list();
    for (int k = C.lo(); k < C.hi(); ++k) d.items.push_back(Value::of(C.diff_matrix(k)));
    n.set("diffs", d);
    return n;
}

Node encode(const ChainMap& f) {
    Node n("chain-map");
    n.set("ring", Value::word(f.source().ring().to_string()));
    n.set("lo", Value::of(Int(f.lo())));
    Value c = Value::list();
    for (int k = f.lo(); k <= f.hi(); ++k) c.items.push_back(Value::of(f.component_matrix(k)));
    n.set("components", c);
    n.add("source", encode(f.source()));
    n.add("target", encode(f.target()));
    return n;
}

namespace {

template <class System>
Node encode_system(const System& S, const char* kind) {
    Node n(kind);
    n.set("ring", Value::word(S.stages.front().ring().to_string()));
    n.set("height", Value::of(Int(static_cast<long>(S.stages.size()))));
    for (std::size_t k = 0; k < S.stages.size(); ++k) n.add("stage" + std::to_string(k + 1), encode(S.stages[k]));
    for (std::size_t k = 0; k < S.transitions.size(); ++k)
        n.add("transition" + std::to_string(k + 1), encode(S.transitions[k]));
    return n;
}

template <class System>
System decode_system(const Node& n, const char* kind) {
    n.expect(kind);
    const Value& hv = n.field("height");
    const long height = hv.as_long();
    if (height < 2 || height > 64) hv.fail("height must be between 2 and 64");
    std::vector<Complex> stages;
    std::vector<ChainMap> transitions;
    for (long k = 1; k <= height; ++k) stages.push_back(decode_complex(n.child("stage" + std::to_string(k))));
    for (long k = 1; k < height; ++k) transitions.push_back(decode_chain_map(n.child("transition" + std::to_string(k))));
    return guarded(n, nullptr, [&] { return System(stages, transitions); });
}

}  // namespace

Node encode(const DirectSystem& D) { return encode_system(D, "direct-system"); }
Node encode(const InverseSystem& B) { return encode_system(B, "inverse-system"); }

Ideal decode_ideal(const Node& n) {
    n.expect("ideal");
    const RingSpec ring = ring_of(n);
    const Value& g = n.field("generators");
    return guarded(n, &g, [&] { return Ideal(ring, g.as_vector()); });
}

Module decode_module(const Node& n) {
    n.expect("module");
    return module_from(ring_of(n), n.field("orders"));
}

Morphism decode_morphism(const Node& n) {
    n.expect("morphism");
    const RingSpec ring = ring_of(n);
    Module S = module_from(ring, n.field("source")), T = module_from(ring, n.field("target"));
    const Value& m = n.field("matrix");
    Matrix A = m.as_matrix(T.rank(), S.rank());
    return guarded(n, &m, [&] { return Morphism(S, T, A); });
}

Complex decode_complex(const Node& n) {
    n.expect("complex");
    const RingSpec ring = ring_of(n);
    const Value& lov = n.field("lo");
    const long lo = lov.as_long();
    if (lo < -1000 || lo > 1000) lov.fail("lo out of range");
    const Value& tv = n.field("terms");
    std::vector<Module> terms = terms_from(ring, tv);
    if (terms.empty()) tv.fail("a complex needs at least one term");
    const Value& dv = n.field("diffs");
    const auto& ds = dv.as_list();
    if (ds.size() + 1 != terms.size())
        dv.fail("expected " + std::to_string(terms.size() - 1) + " differentials, got " + std::to_string(ds.size()));
    std::vector<Matrix> diffs;
    for (std::size_t k = 0; k < ds.size(); ++k) diffs.push_back(ds[k].as_matrix(terms[k + 1].rank(), terms[k].rank()));
    return guarded(n, &dv, [&] { return Complex(ring, static_cast<int>(lo), terms, diffs); });
}

ChainMap decode_chain_map(const Node& n) {
    n.expect("chain-map");
    Complex S = decode_complex(n.child("source")), T = decode_complex(n.child("target"));
    if (!(S.ring() == T.ring()) || !(ring_of(n) == S.ring())) n.fail("source, target and map rings differ");
    const int lo = std::min(S.lo(), T.lo()), hi = std::max(S.hi(), T.hi());
    const Value& lov = n.field("lo");
    if (lov.as_long() != lo) lov.fail("components must start at degree " + std::to_string(lo));
    const Value& cv = n.field("components");
    const auto& cs = cv.as_list();
    if (static_cast<long>(cs.size()) != hi - lo + 1)
        cv.fail("expected " + std::to_string(hi - lo + 1) + " components, got " + std::to_string(cs.size()));
    std::map<int, Matrix> comps;
    for (int k = lo; k <= hi; ++k)
        comps[k] = cs[static_cast<std::size_t>(k - lo)].as_matrix(T.term(k).rank(), S.term(k).rank());
    return guarded(n, &cv, [&] { return ChainMap(S, T, comps); });
}

DirectSystem decode_direct_system(const Node& n) { return decode_system<DirectSystem>(n, "direct-system"); }
InverseSystem decode_inverse_system(const Node& n) { return decode_system<InverseSystem>(n, "inverse-system"); }

}  // namespace redcor
