#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubegraph/bounds.hpp"
#include "cubegraph/cube.hpp"
#include "cubegraph/graph_analysis.hpp"
#include "cubegraph/gpg.hpp"
#include "cubegraph/local_params.hpp"
#include "cubegraph/numeric.hpp"

namespace cubegraph {

using ordered_json = nlohmann::ordered_json;

enum class DiameterSource { computed, literature };

inline const char* diameter_source_name(DiameterSource s) {
    return s == DiameterSource::computed ? "computed" : "literature";
}

inline const char* branch_name(DminBranch b) {
    return b == DminBranch::geometric ? "geometric" : "arithmetic";
}

// the exact quarter-turn diameter of the 3x3x3, established externally by
// large-scale computation; far beyond what direct enumeration can reach
inline constexpr int kQuarterTurnDiameter3x3x3 = 26;

struct AnalysisRecord {
    int cube_size = 3;
    std::string metric_label;
    Integer n;
    int k = 0;
    int g = 0;
    long eta_measured = 0;
    long eta_used = 0;
    Rational r_max_value;
    std::optional<int> d_actual;
    DiameterSource d_source = DiameterSource::computed;
    int d_min_value = 0;
    DminBranch d_min_branch = DminBranch::geometric;
    double d_probab_value = 0.0;
    int bv_lower_value = 0;
    int bv_upper_value = 0;
    double epsilon = 0.0;
    std::optional<DistanceArray> distances;
};

struct AnalyzeOptions {
    std::uint64_t budget_slots = 1ull << 28;
    bool skip_bfs = false;
    double epsilon = 0.0;
    std::optional<long> eta_override;       // e.g. the conservative value 1
    std::optional<Integer> origin_rank;     // BFS origin; default solved state
};

inline AnalysisRecord analyze_metric(int cube_size, TurnMetric kind,
                                     const AnalyzeOptions& options = {}) {
    const CayleyGraph graph(make_metric(cube_size, kind));
    CubeState origin = graph.origin();
    std::string origin_label = "solved";
    if (options.origin_rank) {
        origin = unrank(*options.origin_rank, cube_size);
        origin_label = "rank " + options.origin_rank->str();
    }

    AnalysisRecord rec;
    rec.cube_size = cube_size;
    rec.metric_label = metric_name(kind);
    rec.epsilon = options.epsilon;

    const LocalParams lp = local_params(graph, origin, graph.order());
    rec.n = lp.n;
    rec.k = lp.k;
    rec.g = lp.g;
    rec.eta_measured = lp.eta;
    rec.eta_used = options.eta_override.value_or(lp.eta);

    const BoundsReport bounds =
        bounds_report(rec.n, rec.k, rec.g, rec.eta_used, rec.epsilon);
    rec.r_max_value = bounds.r_max_value;
    rec.d_min_value = bounds.d_min_value;
    rec.d_min_branch = bounds.d_min_branch;
    rec.d_probab_value = bounds.d_probab_value;
    rec.bv_lower_value = bounds.bv_lower_value;
    rec.bv_upper_value = bounds.bv_upper_value;

    if (!options.skip_bfs && graph.order() <= options.budget_slots) {
        DistanceArray da =
            bfs_distance_array(graph, origin, BfsOptions{options.budget_slots});
        da.origin = origin_label;
        rec.d_actual = da.diameter();
        rec.d_source = DiameterSource::computed;
        rec.distances = std::move(da);
    } else if (cube_size == 3 && kind == TurnMetric::quarter) {
        rec.d_actual = kQuarterTurnDiameter3x3x3;
        rec.d_source = DiameterSource::literature;
    }
    return rec;
}

// the five metrics in fixed presentation order
inline std::vector<std::pair<int, TurnMetric>> reference_metrics() {
    return {
        {3, TurnMetric::square_slice},
        {2, TurnMetric::square},
        {2, TurnMetric::quarter},
        {3, TurnMetric::square},
        {3, TurnMetric::quarter},
    };
}

inline std::vector<AnalysisRecord> reference_table(const AnalyzeOptions& options = {}) {
    std::vector<AnalysisRecord> out;
    for (const auto& [size, kind] : reference_metrics())
        out.push_back(analyze_metric(size, kind, options));
    return out;
}

// --- formatting helpers ---------------------------------------------------

inline std::string format_double(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

inline std::string format_compact(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

// three-significant-digit scientific rendering of a big integer, e.g. 663552
// -> "6.64e5"
inline std::string scientific_string(const Integer& n) {
    if (n < 0) return "-" + scientific_string(-n);
    const std::string digits = n.str();
    int exponent = static_cast<int>(digits.size()) - 1;
    std::string first4 = digits.substr(0, 4);
    while (first4.size() < 4) first4 += '0';
    int mantissa = (std::stoi(first4) + 5) / 10;
    if (mantissa >= 1000) {
        mantissa /= 10;
        ++exponent;
    }
    std::string m = std::to_string(mantissa);
    return m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exponent);
}

inline std::string rational_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

inline std::string probab_string(double value) {
    return std::isinf(value) ? "inf" : format_double(value, 4);
}

inline double probab_rounded(double value) {
    return std::round(value * 1e4) / 1e4;
}

inline std::string cube_label(int cube_size) {
    return std::to_string(cube_size) + "x" + std::to_string(cube_size) + "x" +
           std::to_string(cube_size);
}

// --- record rendering -------------------------------------------------------

inline std::string render_text(const AnalysisRecord& rec) {
    std::string out;
    out += "cube: " + cube_label(rec.cube_size) + "\n";
    out += "metric: " + rec.metric_label + "\n";
    out += "n: " + rec.n.str() + " (" + scientific_string(rec.n) + ")\n";
    out += "k: " + std::to_string(rec.k) + "\n";
    out += "girth: " + std::to_string(rec.g) + "\n";
    out += "eta: " + std::to_string(rec.eta_used);
    if (rec.eta_used != rec.eta_measured)
        out += " (measured " + std::to_string(rec.eta_measured) + ")";
    out += "\n";
    out += "r_max: " + rational_string(rec.r_max_value) + " (" +
           format_compact(to_double(rec.r_max_value)) + ")\n";
    if (rec.d_actual)
        out += "d_actual: " + std::to_string(*rec.d_actual) + " (" +
               diameter_source_name(rec.d_source) + ")\n";
    else
        out += "d_actual: unknown\n";
    out += "d_min: " + std::to_string(rec.d_min_value) + " (" +
           branch_name(rec.d_min_branch) + ")\n";
    out += "d_probab: " + probab_string(rec.d_probab_value) + "\n";
    out += "bv_lower: " + std::to_string(rec.bv_lower_value) + "\n";
    out += "bv_upper: " + std::to_string(rec.bv_upper_value) + "\n";
    out += "epsilon: " + format_compact(rec.epsilon) + "\n";
    return out;
}

inline constexpr const char* kCsvHeader =
    "cube_size,metric_name,n,k,g,eta,r_max,d_actual,d_actual_source,d_min,"
    "d_min_branch,d_probab,bv_lower,bv_upper,epsilon";

inline std::string csv_row(const AnalysisRecord& rec) {
    std::string out;
    out += std::to_string(rec.cube_size) + "," + rec.metric_label + ",";
    out += rec.n.str() + "," + std::to_string(rec.k) + "," + std::to_string(rec.g) + ",";
    out += std::to_string(rec.eta_used) + ",";
    out += format_compact(to_double(rec.r_max_value)) + ",";
    if (rec.d_actual) {
        out += std::to_string(*rec.d_actual) + ",";
        out += std::string(diameter_source_name(rec.d_source)) + ",";
    } else {
        out += ",,";
    }
    out += std::to_string(rec.d_min_value) + "," + branch_name(rec.d_min_branch) + ",";
    out += probab_string(rec.d_probab_value) + ",";
    out += std::to_string(rec.bv_lower_value) + "," + std::to_string(rec.bv_upper_value);
    out += "," + format_compact(rec.epsilon);
    return out;
}

inline std::string render_csv(const std::vector<AnalysisRecord>& records) {
    std::string out = kCsvHeader;
    out += "\n";
    for (const auto& rec : records) {
        out += csv_row(rec);
        out += "\n";
    }
    return out;
}

inline ordered_json record_json(const AnalysisRecord& rec) {
    ordered_json j;
    j["cube_size"] = rec.cube_size;
    j["metric_name"] = rec.metric_label;
    j["n"] = rec.n.str();  // decimal string: orders can exceed 2^63
    j["n_scientific"] = scientific_string(rec.n);
    j["k"] = rec.k;
    j["g"] = rec.g;
    j["eta"] = rec.eta_used;
    j["eta_measured"] = rec.eta_measured;
    j["r_max"] = to_double(rec.r_max_value);
    j["r_max_exact"] = rational_string(rec.r_max_value);
    if (rec.d_actual) {
        j["d_actual"] = *rec.d_actual;
        j["d_actual_source"] = diameter_source_name(rec.d_source);
    } else {
        j["d_actual"] = nullptr;
        j["d_actual_source"] = nullptr;
    }
    j["d_min"] = rec.d_min_value;
    j["d_min_branch"] = branch_name(rec.d_min_branch);
    if (std::isinf(rec.d_probab_value))
        j["d_probab"] = "inf";
    else
        j["d_probab"] = probab_rounded(rec.d_probab_value);
    j["bv_lower"] = rec.bv_lower_value;
    j["bv_upper"] = rec.bv_upper_value;
    j["epsilon"] = rec.epsilon;
    return j;
}

inline std::string render_json(const AnalysisRecord& rec) {
    return record_json(rec).dump(2) + "\n";
}

inline std::string render_json(const std::vector<AnalysisRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) arr.push_back(record_json(rec));
    return arr.dump(2) + "\n";
}

namespace detail {

inline void pad_to(std::string& s, std::size_t width) {
    while (s.size() < width) s += ' ';
}

}  // namespace detail

// fixed-width text table over all records
inline std::string render_table_text(const std::vector<AnalysisRecord>& records) {
    const std::vector<std::string> header = {"cube",  "metric", "n",     "n~",
                                             "k",     "g",      "eta",   "r_max",
                                             "d",     "src",    "d_min", "d_probab",
                                             "bv_lo", "bv_hi"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : records) {
        std::vector<std::string> row;
        row.push_back(cube_label(rec.cube_size));
        row.push_back(rec.metric_label);
        row.push_back(rec.n.str());
        row.push_back(scientific_string(rec.n));
        row.push_back(std::to_string(rec.k));
        row.push_back(std::to_string(rec.g));
        row.push_back(std::to_string(rec.eta_used));
        row.push_back(format_compact(to_double(rec.r_max_value)));
        row.push_back(rec.d_actual ? std::to_string(*rec.d_actual) : "-");
        row.push_back(rec.d_actual ? diameter_source_name(rec.d_source) : "-");
        row.push_back(std::to_string(rec.d_min_value));
        row.push_back(probab_string(rec.d_probab_value));
        row.push_back(std::to_string(rec.bv_lower_value));
        row.push_back(std::to_string(rec.bv_upper_value));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            detail::pad_to(cell, width[c]);
            line += cell;
            if (c + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };
    std::string out = emit(header);
    for (const auto& row : rows) out += emit(row);
    return out;
}

// --- distance array rendering ---------------------------------------------

inline std::string render_distance_text(const DistanceArray& da) {
    std::string out = "origin: " + da.origin + "\n";
    for (std::size_t i = 0; i < da.counts.size(); ++i)
        out += std::to_string(i) + ": " + std::to_string(da.counts[i]) + "\n";
    out += "total: " + da.total().str() + "\n";
    out += "diameter: " + std::to_string(da.diameter()) + "\n";
    return out;
}

inline std::string render_distance_csv(const DistanceArray& da) {
    std::string out = "distance,count\n";
    for (std::size_t i = 0; i < da.counts.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(da.counts[i]) + "\n";
    return out;
}

inline std::string render_distance_json(const DistanceArray& da) {
    ordered_json j;
    j["origin"] = da.origin;
    j["counts"] = da.counts;
    j["diameter"] = da.diameter();
    j["total"] = da.total().str();
    return j.dump(2) + "\n";
}

// --- bound validation rendering ---------------------------------------------

inline std::string render_validation_text(const BoundValidation& v,
                                          const std::string& source) {
    std::string out;
    out += "source: " + source + "\n";
    out += "n: " + v.n.str() + "\n";
    out += "k: " + std::to_string(v.k) + "\n";
    out += "girth: " + std::to_string(v.girth) + "\n";
    out += "eta_measured: " + std::to_string(v.eta_measured) + "\n";
    out += "eta_used: " + std::to_string(v.eta_used) +
           (v.eta_mode == EtaMode::measured ? " (measured)" : " (conservative)") + "\n";
    out += "diameter: " + std::to_string(v.diameter) + " (eccentricity of vertex 0: " +
           std::to_string(v.ecc_origin0) + ")\n";
    out += "r_max: " + rational_string(v.r_max_value) + " (" +
           format_compact(to_double(v.r_max_value)) + ")\n";
    out += "d_min: " + std::to_string(v.d_min_value) + " (" +
           branch_name(v.d_min_branch) + ")\n";
    out += std::string("bound_check: ") + (v.holds ? "PASS" : "FAIL") + "\n";
    return out;
}

inline std::string render_validation_csv(const BoundValidation& v,
                                         const std::string& source) {
    std::string out =
        "source,n,k,girth,eta_measured,eta_used,eta_mode,diameter,ecc_origin0,"
        "r_max,d_min,d_min_branch,holds\n";
    out += source + "," + v.n.str() + "," + std::to_string(v.k) + "," +
           std::to_string(v.girth) + "," + std::to_string(v.eta_measured) + "," +
           std::to_string(v.eta_used) + "," +
           (v.eta_mode == EtaMode::measured ? "measured" : "one") + "," +
           std::to_string(v.diameter) + "," + std::to_string(v.ecc_origin0) + "," +
           format_compact(to_double(v.r_max_value)) + "," +
           std::to_string(v.d_min_value) + "," + branch_name(v.d_min_branch) + "," +
           (v.holds ? "true" : "false") + "\n";
    return out;
}

inline std::string render_validation_json(const BoundValidation& v,
                                          const std::string& source) {
    ordered_json j;
    j["source"] = source;
    j["n"] = v.n.str();
    j["k"] = v.k;
    j["girth"] = v.girth;
    j["eta_measured"] = v.eta_measured;
    j["eta_used"] = v.eta_used;
    j["eta_mode"] = v.eta_mode == EtaMode::measured ? "measured" : "one";
    j["diameter"] = v.diameter;
    j["ecc_origin0"] = v.ecc_origin0;
    j["r_max"] = to_double(v.r_max_value);
    j["r_max_exact"] = rational_string(v.r_max_value);
    j["d_min"] = v.d_min_value;
    j["d_min_branch"] = branch_name(v.d_min_branch);
    j["holds"] = v.holds;
    return j.dump(2) + "\n";
}

}  // namespace cubegraph
