#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cubegraph/errors.hpp"
#include "cubegraph/graph_key.hpp"
#include "cubegraph/numeric.hpp"

namespace cubegraph {

// simple undirected graph with explicit sorted adjacency lists
class AdjacencyGraph {
public:
    using vertex_type = std::uint32_t;

    AdjacencyGraph() = default;
    explicit AdjacencyGraph(std::uint32_t n) : adjacency_(n) {}

    std::uint32_t vertex_count() const {
        return static_cast<std::uint32_t>(adjacency_.size());
    }
    Integer order() const { return vertex_count(); }
    std::size_t edge_count() const { return edges_; }

    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& list = adjacency_[u];
        return std::binary_search(list.begin(), list.end(), v);
    }

    void add_edge(std::uint32_t u, std::uint32_t v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
        insert_sorted(adjacency_[u], v);
        insert_sorted(adjacency_[v], u);
        ++edges_;
    }

    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    int degree(std::uint32_t v) const {
        return static_cast<int>(neighbors(v).size());
    }

    // true iff every vertex has the same degree; reports it through k_out
    bool regular(int* k_out = nullptr) const {
        if (adjacency_.empty()) return false;
        const int k = degree(0);
        for (std::uint32_t v = 1; v < vertex_count(); ++v)
            if (degree(v) != k) return false;
        if (k_out) *k_out = k;
        return true;
    }

    template <class F>
    void for_each_neighbor(std::uint32_t v, F&& visit) const {
        for (std::uint32_t w : adjacency_[v]) visit(w);
    }

    VertexKey key(std::uint32_t v) const { return VertexKey{v, 0}; }

private:
    void check_vertex(std::uint32_t v) const {
        if (v >= adjacency_.size())
            throw std::invalid_argument("vertex index out of range");
    }

    static void insert_sorted(std::vector<std::uint32_t>& list, std::uint32_t v) {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    }

    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::size_t edges_ = 0;
};

// Edge-list format: '#' starts a comment, blank lines are skipped, the first
// payload line is "n <vertex-count>", every following line is one undirected
// edge "<u> <v>" with 0-based endpoints, each edge declared exactly once.
inline AdjacencyGraph load_graph(std::istream& in) {
    AdjacencyGraph graph;
    bool have_header = false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream tokens(line);
        if (!have_header) {
            std::string tag;
            if (!(tokens >> tag)) continue;  // blank or comment-only line
            long long n = -1;
            std::string extra;
            if (tag != "n" || !(tokens >> n) || (tokens >> extra) || n < 1)
                throw ParseError("expected header \"n <vertex-count>\"", lineno);
            if (n > 50'000'000) throw ParseError("vertex count out of range", lineno);
            graph = AdjacencyGraph(static_cast<std::uint32_t>(n));
            have_header = true;
            continue;
        }
        std::string first;
        if (!(tokens >> first)) continue;  // blank or comment-only line
        std::istringstream edge_tokens(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(edge_tokens >> u >> v) || (edge_tokens >> extra))
            throw ParseError("expected edge \"<u> <v>\"", lineno);
        if (u < 0 || v < 0 || u >= graph.vertex_count() || v >= graph.vertex_count())
            throw ParseError("vertex index out of range", lineno);
        if (u == v) throw ParseError("self-loops are not allowed", lineno);
        if (graph.has_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)))
            throw ParseError("duplicate edge", lineno);
        graph.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    if (!have_header) throw ParseError("missing header \"n <vertex-count>\"");
    return graph;
}

inline AdjacencyGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    return load_graph(in);
}

}  // namespace cubegraph
