#pragma once

// The "redcor/1" text format and its JSON equivalent.
//
//   redcor/1 complex
//   ring: Z
//   lo: -1
//   terms: [[0], [0]]
//   diffs: [[[4]]]
//
// A document is a header line naming the format version and the kind of the
// top-level object, followed by `key: value` fields and nested blocks
// `<kind> <name>:` whose contents are indented by two more spaces. Values are
// decimal integers, bare words (Z, Z/6, true), double-quoted text, or
// bracketed lists of values. Matrices are lists of rows. Lines starting with
// '#' are comments.

#include "redcor/systems.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace redcor {

inline constexpr const char* kFormatVersion = "redcor/1";

struct Value {
    enum class Kind { Integer, Word, Text, List };
    Kind kind = Kind::List;
    Int integer;
    std::string text;
    std::vector<Value> items;
    int line = 0;
    int column = 0;

    static Value of(const Int& x);
    static Value word(std::string w);
    static Value quoted(std::string t);
    static Value list(std::vector<Value> items = {});
    static Value of(const Vector& v);
    static Value of(const Matrix& m);

    [[noreturn]] void fail(const std::string& what) const;
    Int as_int() const;
    long as_long() const;
    std::string as_string() const;  // words and text alike
    const std::vector<Value>& as_list() const;
    Vector as_vector() const;
    Matrix as_matrix(std::size_t rows, std::size_t cols) const;
};

struct Node {
    std::string kind;
    std::vector<std::pair<std::string, Value>> fields;
    std::vector<std::pair<std::string, Node>> children;
    int line = 0;
    int column = 0;

    explicit Node(std::string k = {}) : kind(std::move(k)) {}

    [[noreturn]] void fail(const std::string& what) const;
    void set(const std::string& key, Value v);
    void add(const std::string& name, Node child);
    const Value* find(const std::string& key) const;
    const Value& field(const std::string& key) const;
    const Node* find_child(const std::string& name) const;
    const Node& child(const std::string& name) const;
    // Throws unless the node has the given kind.
    const Node& expect(const std::string& k) const;
};

std::string write_text(const Node& node);
Node read_text(const std::string& text);
nlohmann::ordered_json to_json(const Node& node);
Node from_json(const nlohmann::ordered_json& j);
// Text or JSON, told apart by the first non-blank character.
Node read_document(const std::string& text);

RingSpec parse_ring(const std::string& s);
// "2" or "2,3" as ideal generators over the ring.
Ideal parse_ideal(const RingSpec& ring, const std::string& s);
Vector parse_integer_list(const std::string& s);

Node encode(const Ideal& a);
Node encode(const Module& M);
Node encode(const Morphism& f);
Node encode(const Complex& C);
Node encode(const ChainMap& f);
Node encode(const DirectSystem& D);
Node encode(const InverseSystem& B);

Ideal decode_ideal(const Node& n);
Module decode_module(const Node& n);
Morphism decode_morphism(const Node& n);
// Rejects d o d != 0 with a ParseError naming the failing degree.
Complex decode_complex(const Node& n);
ChainMap decode_chain_map(const Node& n);
DirectSystem decode_direct_system(const Node& n);
InverseSystem decode_inverse_system(const Node& n);

template <class T>
std::string serialize(const T& value) {
    return write_text(encode(value));
}

}  // namespace redcor
