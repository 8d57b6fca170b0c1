#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

using VertexId = std::int64_t;

// An abstract simplex: a strictly increasing list of vertex ids.
struct Simplex {
    std::vector<VertexId> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<VertexId> vs) : vertices(std::move(vs)) { validate(); }
    Simplex(std::initializer_list<VertexId> vs) : vertices(vs) { validate(); }

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    // i-th face: the simplex with vertex i removed.
    Simplex face(int i) const {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (int j = 0; j < static_cast<int>(vertices.size()); ++j)
            if (j != i) f.vertices.push_back(vertices[j]);
        return f;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(vertices[i]);
        }
        return s + "]";
    }

    void validate() const {
        if (vertices.empty()) throw InvalidArgumentError("a simplex needs at least one vertex");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0) throw InvalidArgumentError("negative vertex id in simplex " + str());
            if (i > 0 && vertices[i] <= vertices[i - 1])
                throw InvalidArgumentError("vertices must be strictly increasing in simplex " + str());
        }
    }

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices == b.vertices; }
    friend bool operator<(const Simplex& a, const Simplex& b) { return a.vertices < b.vertices; }
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace ramify
