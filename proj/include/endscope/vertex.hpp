// vertex.hpp — vertex identity as a canonical printable token.
//
// Every graph family documents a canonical token grammar (see the gallery
// headers). Equality is token equality; the total order is plain
// lexicographic byte order on tokens, which is all that component
// fingerprints and tie-breaking need.
#pragma once

#include <functional>
#include <string>
#include <utility>

namespace endscope {

struct VertexId {
    std::string token;

    VertexId() = default;
    explicit VertexId(std::string t) : token(std::move(t)) {}

    friend bool operator==(const VertexId& a, const VertexId& b) { return a.token == b.token; }
    friend bool operator!=(const VertexId& a, const VertexId& b) { return a.token != b.token; }
    friend bool operator<(const VertexId& a, const VertexId& b) { return a.token < b.token; }
    friend bool operator>(const VertexId& a, const VertexId& b) { return b < a; }
};

struct VertexIdHash {
    std::size_t operator()(const VertexId& v) const {
        return std::hash<std::string>{}(v.token);
    }
};

} // namespace endscope
