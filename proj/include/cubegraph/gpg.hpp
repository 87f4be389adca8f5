#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cubegraph/adjacency.hpp"
#include "cubegraph/bounds.hpp"
#include "cubegraph/errors.hpp"
#include "cubegraph/graph_analysis.hpp"
#include "cubegraph/local_params.hpp"
#include "cubegraph/numeric.hpp"

namespace cubegraph {

// Generalized Petersen graph G(m, t): outer cycle 0..m-1, inner vertices
// m..2m-1 joined by spokes, inner edges skip t positions.  1 <= t < m/2
// keeps the graph simple and 3-regular.
inline AdjacencyGraph generate_gpg(int m, int t) {
    if (m < 3) throw std::invalid_argument("generalized Petersen graph needs m >= 3");
    if (t < 1 || 2 * t >= m)
        throw std::invalid_argument("skip t must satisfy 1 <= t < m/2");
    AdjacencyGraph graph(static_cast<std::uint32_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        graph.add_edge(i, (i + 1) % m);
        graph.add_edge(i, m + i);
        graph.add_edge(m + i, m + (i + t) % m);
    }
    return graph;
}

// Girth of an explicit graph: minimum over vertices of the shortest cycle
// through each.  Vertices with no cycle within the cap are skipped; if no
// vertex closes a cycle the graph is treated as out of scope.
inline int graph_girth(const AdjacencyGraph& graph,
                       const ExplorationOptions& options = {},
                       ExplorationStats* stats = nullptr) {
    int best = 0;
    ExplorationOptions probe = options;
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
        if (best != 0) probe.max_cycle_length = std::min(best, options.max_cycle_length);
        try {
            const int len = shortest_cycle_through(graph, v, probe, stats);
            if (best == 0 || len < best) best = len;
        } catch (const UnsupportedGraphError&) {
            continue;  // no cycle through v within the cap
        }
        if (best == 3) break;
    }
    if (best == 0) throw UnsupportedGraphError("girth not found within depth budget");
    return best;
}

// minimum over vertices of the number of girth-length cycles through each;
// zero whenever some vertex lies on no shortest cycle
inline long min_girth_cycles_per_vertex(const AdjacencyGraph& graph, int girth,
                                        ExplorationStats* stats = nullptr) {
    long best = -1;
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
        const long count = count_cycles_through(graph, v, girth, stats);
        if (best < 0 || count < best) best = count;
        if (best == 0) break;
    }
    return best < 0 ? 0 : best;
}

enum class EtaMode { measured, conservative_one };

struct BoundValidation {
    Integer n;
    int k = 0;
    int girth = 0;
    long eta_measured = 0;
    long eta_used = 0;
    EtaMode eta_mode = EtaMode::measured;
    int diameter = 0;      // max eccentricity over every origin
    int ecc_origin0 = 0;   // eccentricity of vertex 0 alone
    Rational r_max_value;
    int d_min_value = 0;
    DminBranch d_min_branch = DminBranch::geometric;
    bool holds = false;    // d_min <= diameter
};

// Check the diameter lower bound against an explicit graph.  The diameter is
// taken as the maximum eccentricity over all origins, which also verifies
// that per-origin profiles agree with vertex 0's where they should, instead
// of assuming any symmetry of the input.
inline BoundValidation validate_lower_bound(const AdjacencyGraph& graph,
                                            EtaMode mode = EtaMode::measured,
                                            const ExplorationOptions& options = {}) {
    if (graph.vertex_count() == 0)
        throw UnsupportedGraphError("graph has no vertices");
    int k = 0;
    if (!graph.regular(&k))
        throw UnsupportedGraphError("graph is not regular");
    if (k < 3)
        throw UnsupportedGraphError("degree must be at least 3");

    BoundValidation report;
    report.n = graph.vertex_count();
    report.k = k;
    report.eta_mode = mode;
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
        const DistanceArray da = bfs_distance_array(graph, v);
        if (da.total() != report.n)
            throw UnsupportedGraphError("graph is disconnected");
        const int ecc = da.diameter();
        if (v == 0) report.ecc_origin0 = ecc;
        if (ecc > report.diameter) report.diameter = ecc;
    }

    report.girth = graph_girth(graph, options);
    if (report.girth % 2 != 0)
        throw UnsupportedGraphError("odd-girth graph unsupported (girth " +
                                    std::to_string(report.girth) + ")");
    report.eta_measured = min_girth_cycles_per_vertex(graph, report.girth);
    report.eta_used = mode == EtaMode::measured ? report.eta_measured : 1;

    // Dense girth-cycle concentration can push the measured eta past what the
    // shell-deficit model tolerates (several cycles may share one lost slot,
    // e.g. the Moebius-Kantor graph).  Such graphs are out of scope for the
    // measured mode rather than an input error.
    try {
        report.r_max_value = r_max(report.k, report.girth, report.eta_used);
        const DminResult dm =
            d_min_detailed(report.n, report.k, report.girth, report.eta_used);
        report.d_min_value = dm.value;
        report.d_min_branch = dm.branch;
    } catch (const std::invalid_argument& e) {
        throw UnsupportedGraphError(std::string("eta outside the bound's domain: ") +
                                    e.what());
    }
    report.holds = report.d_min_value <= report.diameter;
    return report;
}

}  // namespace cubegraph
