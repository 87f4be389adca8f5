#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cubegraph/adjacency.hpp"
#include "cubegraph/errors.hpp"
#include "cubegraph/graph_key.hpp"
#include "cubegraph/numeric.hpp"

namespace cubegraph {

struct BfsOptions {
    // maximum number of states one enumeration may hold
    std::uint64_t budget_slots = 100'000'000;
};

// counts[i] = number of vertices at distance exactly i from the origin
struct DistanceArray {
    std::vector<std::uint64_t> counts;
    std::string origin;

    int diameter() const { return static_cast<int>(counts.size()) - 1; }
    Integer total() const {
        Integer t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

namespace detail {

template <class G>
DistanceArray bfs_dense(const G& graph, const typename G::vertex_type& origin,
                        const BfsOptions& options) {
    const std::uint64_t size = graph.dense_size();
    if (size > options.budget_slots)
        throw BudgetExceededError("graph too large: " + std::to_string(size) +
                                  " slots exceed the budget of " +
                                  std::to_string(options.budget_slots));
    constexpr std::uint8_t kUnseen = 0xff;
    std::vector<std::uint8_t> dist(size, kUnseen);
    dist[graph.dense_rank(origin)] = 0;
    DistanceArray out;
    out.counts.push_back(1);
    for (std::uint8_t level = 0;; ++level) {
        if (level == 0xfe)
            throw BudgetExceededError("distance exceeds dense level limit");
        std::uint64_t found = 0;
        for (std::uint64_t i = 0; i < size; ++i) {
            if (dist[i] != level) continue;
            graph.for_each_neighbor(graph.dense_unrank(i), [&](const auto& w) {
                auto& slot = dist[graph.dense_rank(w)];
                if (slot == kUnseen) {
                    slot = static_cast<std::uint8_t>(level + 1);
                    ++found;
                }
            });
        }
        if (found == 0) break;
        out.counts.push_back(found);
    }
    return out;
}

template <class G>
DistanceArray bfs_sparse(const G& graph, const typename G::vertex_type& origin,
                         const BfsOptions& options) {
    std::unordered_set<VertexKey, VertexKeyHash> visited;
    visited.reserve(static_cast<std::size_t>(
        graph.order() < options.budget_slots ? graph.order().template convert_to<std::uint64_t>()
                                             : options.budget_slots));
    visited.insert(graph.key(origin));
    std::vector<typename G::vertex_type> frontier{origin};
    DistanceArray out;
    out.counts.push_back(1);
    while (!frontier.empty()) {
        std::vector<typename G::vertex_type> next;
        for (const auto& u : frontier) {
            graph.for_each_neighbor(u, [&](const auto& w) {
                if (visited.insert(graph.key(w)).second) {
                    if (visited.size() > options.budget_slots)
                        throw BudgetExceededError(
                            "enumeration exceeded the budget of " +
                            std::to_string(options.budget_slots) + " slots");
                    next.push_back(w);
                }
            });
        }
        if (!next.empty()) out.counts.push_back(next.size());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace detail

// Exact single-source distance profile of an implicitly represented graph.
// Group order is checked against the budget up front so an infeasible request
// fails immediately instead of after hours.
template <class G>
DistanceArray bfs_distance_array(const G& graph, const typename G::vertex_type& origin,
                                 const BfsOptions& options = {}) {
    if (graph.order() > options.budget_slots)
        throw BudgetExceededError("graph too large: order " + graph.order().str() +
                                  " exceeds the budget of " +
                                  std::to_string(options.budget_slots) + " slots");
    if constexpr (requires { graph.dense(); }) {
        if (graph.dense() && graph.dense_size() <= options.budget_slots)
            return detail::bfs_dense(graph, origin, options);
    }
    return detail::bfs_sparse(graph, origin, options);
}

inline DistanceArray bfs_distance_array(const AdjacencyGraph& graph, std::uint32_t origin,
                                        const BfsOptions& options = {}) {
    if (graph.vertex_count() > options.budget_slots)
        throw BudgetExceededError("graph too large for the configured budget");
    constexpr int kUnseen = -1;
    std::vector<int> dist(graph.vertex_count(), kUnseen);
    dist[origin] = 0;
    std::queue<std::uint32_t> queue;
    queue.push(origin);
    DistanceArray out;
    out.origin = std::to_string(origin);
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop();
        for (std::uint32_t w : graph.neighbors(u)) {
            if (dist[w] != kUnseen) continue;
            dist[w] = dist[u] + 1;
            queue.push(w);
        }
    }
    for (int d : dist) {
        if (d < 0) continue;  // unreachable vertices are not part of the profile
        if (d >= static_cast<int>(out.counts.size())) out.counts.resize(d + 1, 0);
        ++out.counts[d];
    }
    return out;
}

// ratios r_i = counts[i] / counts[i-1]
struct BranchingRatios {
    std::vector<Rational> ratios;
};

inline BranchingRatios branching_ratios(const DistanceArray& da) {
    if (da.counts.empty() || da.counts.front() != 1)
        throw std::invalid_argument("distance array must start with a single origin");
    BranchingRatios out;
    for (std::size_t i = 0; i + 1 < da.counts.size(); ++i) {
        if (da.counts[i] == 0)
            throw std::invalid_argument("distance array has an empty interior shell");
        out.ratios.emplace_back(Integer(da.counts[i + 1]), Integer(da.counts[i]));
    }
    return out;
}

// Shell-growth sanity for a k-regular graph of even girth g: r_1 = k, every
// later ratio is at most k-1, ratios do not increase while i <= g/2, and the
// ratio at the girth shell bounds every ratio beyond it.  (Strict monotone
// decay over the whole array is NOT required; enumerated cube data refutes
// it past the peak.)
inline bool growth_bounded_by_girth_shell(const BranchingRatios& br, int k, int g) {
    const auto& r = br.ratios;
    if (r.empty() || r.front() != k) return false;
    const std::size_t half_g = static_cast<std::size_t>(g / 2);
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] > k - 1) return false;
        if (i + 1 <= half_g && r[i] > r[i - 1]) return false;
        if (i + 1 > half_g && half_g >= 1 && half_g <= r.size() && r[i] > r[half_g - 1])
            return false;
    }
    return true;
}

// |E_1..E_d| where E_i counts edges between shells i-1 and i
using EdgePartition = std::vector<std::int64_t>;

struct IdentityReport {
    bool vertex_sum_ok = false;   // sum of shell sizes equals the known order
    bool edge_sum_ok = false;     // partition is nonnegative, closes at zero,
                                  // and totals n*k/2
    bool alternating_ok = false;  // alternating shell sum vanishes
    Integer vertex_sum;
    Integer alternating_sum;
    EdgePartition edge_partition;
    Integer edge_total;
};

// Shell-sum identities for a distance array of a connected k-regular graph
// with no odd cycles: within-shell edges are then impossible, so the edge set
// splits exactly into the between-shell classes E_i with
// E_i + E_{i+1} = k * counts[i] and E_0 = E_{d+1} = 0.
inline IdentityReport verify_identities(const DistanceArray& da, int k,
                                        std::optional<Integer> expected_order = std::nullopt) {
    const auto& c = da.counts;
    const bool shape_ok = !c.empty() && c.front() == 1 && k >= 1 &&
                          (c.size() < 2 || c[1] == static_cast<std::uint64_t>(k));
    bool positive_ok = true;
    for (auto v : c) positive_ok = positive_ok && v > 0;
    if (!shape_ok || !positive_ok)
        throw UnsupportedGraphError("not a k-regular symmetric distance array");

    IdentityReport rep;
    rep.vertex_sum = 0;
    rep.alternating_sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        rep.vertex_sum += c[i];
        rep.alternating_sum += (i % 2 == 0) ? Integer(c[i]) : Integer(-Integer(c[i]));
    }
    rep.vertex_sum_ok = !expected_order || rep.vertex_sum == *expected_order;
    rep.alternating_ok = rep.alternating_sum == 0;

    std::int64_t carry = 0;  // E_i while scanning shell i
    bool partition_ok = true;
    rep.edge_total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t crossing =
            static_cast<std::int64_t>(k) * static_cast<std::int64_t>(c[i]) - carry;
        if (i + 1 < c.size()) {
            rep.edge_partition.push_back(crossing);
            rep.edge_total += crossing;
            if (crossing <= 0) partition_ok = false;
        } else if (crossing != 0) {
            partition_ok = false;  // the last shell must absorb all its edges
        }
        carry = crossing;
    }
    rep.edge_sum_ok = partition_ok && 2 * rep.edge_total == rep.vertex_sum * k;
    return rep;
}

}  // namespace cubegraph
