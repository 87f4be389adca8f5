#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cubegraph/errors.hpp"
#include "cubegraph/graph_key.hpp"
#include "cubegraph/numeric.hpp"

namespace cubegraph {

// parameters of a graph as seen from one vertex: order, degree, girth and the
// number of girth-length cycles through that vertex
struct LocalParams {
    Integer n;
    int k = 0;
    int g = 0;
    long eta = 0;
};

struct ExplorationOptions {
    int max_cycle_length = 16;  // girth probes give up beyond this
};

// evidence that local probing stayed local
struct ExplorationStats {
    std::uint64_t states_visited = 0;
};

template <class G>
std::vector<typename G::vertex_type> collect_neighbors(const G& graph,
                                                       const typename G::vertex_type& v) {
    std::vector<typename G::vertex_type> out;
    graph.for_each_neighbor(v, [&](const auto& w) { out.push_back(w); });
    return out;
}

namespace detail {

// Length of the shortest cycle using the edge origin--a: BFS back towards the
// origin with that one edge removed.  Returns 0 if no such cycle has length
// at most max_len.  The search is depth-capped, so it touches on the order of
// k^(max_len) states at worst and far fewer once a short cycle exists.
template <class G>
int cycle_through_edge(const G& graph, const typename G::vertex_type& origin,
                       const typename G::vertex_type& a, int max_len,
                       ExplorationStats* stats) {
    const VertexKey origin_key = graph.key(origin);
    const VertexKey a_key = graph.key(a);
    std::unordered_set<VertexKey, VertexKeyHash> visited{a_key};
    std::vector<typename G::vertex_type> frontier{a};
    for (int depth = 1; depth + 1 <= max_len; ++depth) {
        std::vector<typename G::vertex_type> next;
        for (const auto& u : frontier) {
            const bool u_is_a = depth == 1 && graph.key(u) == a_key;
            bool found = false;
            graph.for_each_neighbor(u, [&](const auto& w) {
                if (found) return;
                const VertexKey wk = graph.key(w);
                if (wk == origin_key) {
                    if (u_is_a) return;  // that is the removed edge itself
                    found = true;
                    return;
                }
                if (visited.insert(wk).second) {
                    next.push_back(w);
                    if (stats) ++stats->states_visited;
                }
            });
            if (found) return depth + 1;
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return 0;
}

}  // namespace detail

// shortest cycle length through the origin (the local girth), found by
// removing each incident edge in turn; throws if nothing closes within the
// configured cap
template <class G>
int shortest_cycle_through(const G& graph, const typename G::vertex_type& origin,
                           const ExplorationOptions& options = {},
                           ExplorationStats* stats = nullptr) {
    int best = 0;
    for (const auto& a : collect_neighbors(graph, origin)) {
        const int cap = best == 0 ? options.max_cycle_length
                                  : std::min(best - 1, options.max_cycle_length);
        const int len = detail::cycle_through_edge(graph, origin, a, cap, stats);
        if (len != 0 && (best == 0 || len < best)) best = len;
        if (best == 3) break;  // simple graphs cannot beat a triangle
    }
    if (best == 0)
        throw UnsupportedGraphError("girth not found within depth budget");
    return best;
}

// Number of simple cycles of length len through the origin, by depth-first
// enumeration of simple paths; each cycle is met once per direction, so the
// directed count is halved.  Work is bounded by k * (k-1)^(len-1).
template <class G>
long count_cycles_through(const G& graph, const typename G::vertex_type& origin,
                          int len, ExplorationStats* stats = nullptr) {
    if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
    std::vector<VertexKey> path{graph.key(origin)};
    long directed = 0;
    auto dfs = [&](auto&& self, const typename G::vertex_type& v, int edges) -> void {
        graph.for_each_neighbor(v, [&](const auto& w) {
            const VertexKey wk = graph.key(w);
            if (edges + 1 == len) {
                if (wk == path.front()) ++directed;
                return;
            }
            for (const VertexKey& seen : path)
                if (seen == wk) return;
            path.push_back(wk);
            if (stats) ++stats->states_visited;
            self(self, w, edges + 1);
            path.pop_back();
        });
    };
    dfs(dfs, origin, 0);
    if (directed % 2 != 0)
        throw std::logic_error("directed cycle count must be even");
    return directed / 2;
}

// Independent check for girth-4 graphs: every 4-cycle through the origin is a
// pair of neighbors with a common second vertex, so count exactly that.
template <class G>
long count_4cycles_by_common_neighbors(const G& graph,
                                       const typename G::vertex_type& origin) {
    const auto nbrs = collect_neighbors(graph, origin);
    const VertexKey origin_key = graph.key(origin);
    std::vector<std::vector<VertexKey>> second(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        graph.for_each_neighbor(nbrs[i], [&](const auto& w) {
            const VertexKey wk = graph.key(w);
            if (!(wk == origin_key)) second[i].push_back(wk);
        });
    long total = 0;
    for (std::size_t i = 0; i < second.size(); ++i)
        for (std::size_t j = i + 1; j < second.size(); ++j)
            for (const VertexKey& x : second[i])
                for (const VertexKey& y : second[j])
                    if (x == y) ++total;
    return total;
}

// shell sizes |{v : dist(origin, v) = i}| for i = 0..depth (truncated BFS)
template <class G>
std::vector<std::uint64_t> shell_counts(const G& graph,
                                        const typename G::vertex_type& origin, int depth,
                                        ExplorationStats* stats = nullptr) {
    std::unordered_set<VertexKey, VertexKeyHash> visited{graph.key(origin)};
    std::vector<typename G::vertex_type> frontier{origin};
    std::vector<std::uint64_t> counts{1};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<typename G::vertex_type> next;
        for (const auto& u : frontier)
            graph.for_each_neighbor(u, [&](const auto& w) {
                if (visited.insert(graph.key(w)).second) {
                    next.push_back(w);
                    if (stats) ++stats->states_visited;
                }
            });
        if (!next.empty()) counts.push_back(next.size());
        frontier = std::move(next);
    }
    return counts;
}

// Local parameters seen from the origin.  The order is taken from known_order
// when the caller has it (cube groups); otherwise the component is enumerated
// outright, which is only sensible for small explicit graphs.
template <class G>
LocalParams local_params(const G& graph, const typename G::vertex_type& origin,
                         std::optional<Integer> known_order = std::nullopt,
                         const ExplorationOptions& options = {},
                         ExplorationStats* stats = nullptr) {
    LocalParams lp;
    lp.k = static_cast<int>(collect_neighbors(graph, origin).size());
    lp.g = shortest_cycle_through(graph, origin, options, stats);
    if (lp.g % 2 != 0)
        throw UnsupportedGraphError("odd-girth graph unsupported (shortest cycle through origin has length " +
                                    std::to_string(lp.g) + ")");
    lp.eta = count_cycles_through(graph, origin, lp.g, stats);
    if (known_order) {
        lp.n = *known_order;
    } else {
        std::uint64_t total = 0;
        for (auto c : shell_counts(graph, origin, 1 << 20, stats)) total += c;
        lp.n = total;
    }
    return lp;
}

}  // namespace cubegraph
