#include <catch2/catch_amalgamated.hpp>

#include "cubegraph/gpg.hpp"
#include "cubegraph/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

using namespace cubegraph;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("full analysis record for the slice metric") {
    const AnalysisRecord rec = analyze_metric(3, TurnMetric::square_slice);
    CHECK(rec.cube_size == 3);
    CHECK(rec.metric_label == "square-slice");
    CHECK(rec.n == 8);
    CHECK(rec.k == 3);
    CHECK(rec.g == 4);
    CHECK(rec.eta_measured == 3);
    CHECK(rec.eta_used == 3);
    CHECK(rec.r_max_value == Rational(1));
    REQUIRE(rec.d_actual.has_value());
    CHECK(*rec.d_actual == 3);
    CHECK(rec.d_source == DiameterSource::computed);
    CHECK(rec.d_min_value == 3);
    CHECK(rec.d_min_branch == DminBranch::arithmetic);
    CHECK(std::isinf(rec.d_probab_value));
    CHECK(rec.bv_lower_value == 0);
    CHECK(rec.bv_upper_value == 8);
    REQUIRE(rec.distances.has_value());
    CHECK(rec.distances->counts == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(rec.distances->origin == "solved");

    const std::string text = render_text(rec);
    CHECK_THAT(text, ContainsSubstring("cube: 3x3x3\n"));
    CHECK_THAT(text, ContainsSubstring("metric: square-slice\n"));
    CHECK_THAT(text, ContainsSubstring("n: 8 (8.00e0)\n"));
    CHECK_THAT(text, ContainsSubstring("r_max: 1 (1)\n"));
    CHECK_THAT(text, ContainsSubstring("d_actual: 3 (computed)\n"));
    CHECK_THAT(text, ContainsSubstring("d_min: 3 (arithmetic)\n"));
    CHECK_THAT(text, ContainsSubstring("d_probab: inf\n"));
}

TEST_CASE("skipping enumeration leaves the diameter unknown") {
    AnalyzeOptions options;
    options.skip_bfs = true;
    const AnalysisRecord rec = analyze_metric(3, TurnMetric::square_slice, options);
    CHECK_FALSE(rec.d_actual.has_value());
    CHECK_FALSE(rec.distances.has_value());
    CHECK_THAT(render_text(rec), ContainsSubstring("d_actual: unknown\n"));
    CHECK_THAT(csv_row(rec), ContainsSubstring(",,,"));
    const ordered_json j = ordered_json::parse(render_json(rec));
    CHECK(j["d_actual"].is_null());
    CHECK(j["d_actual_source"].is_null());
}

TEST_CASE("eta override is reported next to the measured value") {
    AnalyzeOptions options;
    options.eta_override = 1;
    const AnalysisRecord rec = analyze_metric(3, TurnMetric::square_slice, options);
    CHECK(rec.eta_measured == 3);
    CHECK(rec.eta_used == 1);
    CHECK(rec.r_max_value == Rational(5, 3));
    CHECK(rec.d_min_value == 2);
    CHECK(rec.d_min_branch == DminBranch::geometric);
    CHECK_THAT(render_text(rec), ContainsSubstring("eta: 1 (measured 3)\n"));
    const ordered_json j = ordered_json::parse(render_json(rec));
    CHECK(j["eta"].get<long>() == 1);
    CHECK(j["eta_measured"].get<long>() == 3);
}

TEST_CASE("enumeration from a non-solved origin covers the same coset") {
    AnalyzeOptions options;
    options.origin_rank = Integer(5);
    const AnalysisRecord rec = analyze_metric(3, TurnMetric::square_slice, options);
    REQUIRE(rec.distances.has_value());
    // a vertex-transitive graph shows the same profile from every origin
    CHECK(rec.distances->counts == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(rec.distances->origin == "rank 5");
    CHECK(*rec.d_actual == 3);
}

TEST_CASE("quarter-turn 3x3x3 falls back to the established diameter") {
    const AnalysisRecord rec = analyze_metric(3, TurnMetric::quarter);
    CHECK(rec.n == Integer("43252003274489856000"));
    CHECK(rec.k == 12);
    CHECK(rec.g == 4);
    CHECK(rec.eta_used == 18);
    CHECK(rec.r_max_value == Rational(19, 2));
    REQUIRE(rec.d_actual.has_value());
    CHECK(*rec.d_actual == 26);
    CHECK(rec.d_source == DiameterSource::literature);
    CHECK(rec.d_min_value == 20);
    CHECK_FALSE(rec.distances.has_value());

    CHECK_THAT(render_text(rec), ContainsSubstring("d_actual: 26 (literature)\n"));
    CHECK_THAT(render_text(rec), ContainsSubstring("r_max: 19/2 (9.5)\n"));
    CHECK_THAT(csv_row(rec), ContainsSubstring(",26,literature,"));
    const ordered_json j = ordered_json::parse(render_json(rec));
    CHECK(j["n"].get<std::string>() == "43252003274489856000");
    CHECK(j["n_scientific"].get<std::string>() == "4.33e19");
    CHECK(j["d_actual"].get<int>() == 26);
    CHECK(j["d_actual_source"].get<std::string>() == "literature");
    CHECK(j["d_min"].get<int>() == 20);
}

TEST_CASE("csv rendering is deterministic and carries the inf token") {
    AnalyzeOptions options;
    options.skip_bfs = true;
    const std::string once = render_csv(reference_table(options));
    const std::string twice = render_csv(reference_table(options));
    CHECK(once == twice);
    CHECK_THAT(once, ContainsSubstring(kCsvHeader));
    CHECK_THAT(once, ContainsSubstring(",inf,"));
    // five data rows beneath the header
    CHECK(std::count(once.begin(), once.end(), '\n') == 6);
}

TEST_CASE("json rendering parses back with faithful values") {
    AnalyzeOptions options;
    options.skip_bfs = true;
    const std::vector<AnalysisRecord> records = reference_table(options);
    const ordered_json arr = ordered_json::parse(render_json(records));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[0]["metric_name"] == "square-slice");
    CHECK(arr[0]["d_probab"] == "inf");
    CHECK(arr[1]["g"].get<int>() == 6);
    CHECK(arr[1]["d_probab"].get<double>() ==
          Catch::Approx(probab_rounded(records[1].d_probab_value)).margin(1e-12));
    CHECK(arr[2]["n"].get<std::string>() == "3674160");
    CHECK(arr[3]["n_scientific"].get<std::string>() == "6.64e5");
    CHECK(arr[4]["d_min"].get<int>() == 20);
    CHECK(arr[4]["eta"].get<long>() == 18);
}

TEST_CASE("reference metrics come in fixed presentation order") {
    const auto metrics = reference_metrics();
    REQUIRE(metrics.size() == 5);
    CHECK(metrics[0] == std::pair{3, TurnMetric::square_slice});
    CHECK(metrics[1] == std::pair{2, TurnMetric::square});
    CHECK(metrics[2] == std::pair{2, TurnMetric::quarter});
    CHECK(metrics[3] == std::pair{3, TurnMetric::square});
    CHECK(metrics[4] == std::pair{3, TurnMetric::quarter});
}

TEST_CASE("scientific rendering keeps three significant digits") {
    CHECK(scientific_string(Integer(8)) == "8.00e0");
    CHECK(scientific_string(Integer(24)) == "2.40e1");
    CHECK(scientific_string(Integer(663552)) == "6.64e5");
    CHECK(scientific_string(Integer(3674160)) == "3.67e6");
    CHECK(scientific_string(Integer("43252003274489856000")) == "4.33e19");
    // rounding can carry into a new power of ten
    CHECK(scientific_string(Integer(99960)) == "1.00e5");
    CHECK(scientific_string(Integer(9994)) == "9.99e3");
}

TEST_CASE("rational and probabilistic formatting") {
    CHECK(rational_string(Rational(19, 2)) == "19/2");
    CHECK(rational_string(Rational(9, 2)) == "9/2");
    CHECK(rational_string(Rational(3)) == "3");
    CHECK(probab_string(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(probab_string(13.4099) == "13.4099");
    CHECK(probab_string(2.5) == "2.5000");
    CHECK(cube_label(2) == "2x2x2");
}

TEST_CASE("text table marks missing diameters with a dash") {
    AnalyzeOptions options;
    options.skip_bfs = true;
    const std::string table = render_table_text(reference_table(options));
    CHECK_THAT(table, ContainsSubstring("cube"));
    CHECK_THAT(table, ContainsSubstring("d_probab"));
    CHECK_THAT(table, ContainsSubstring("square-slice"));
    CHECK_THAT(table, ContainsSubstring(" -"));             // skipped enumerations
    CHECK_THAT(table, ContainsSubstring("literature"));     // except the known one
    CHECK_THAT(table, ContainsSubstring("43252003274489856000"));
}

TEST_CASE("distance array rendering") {
    const AnalysisRecord rec = analyze_metric(3, TurnMetric::square_slice);
    REQUIRE(rec.distances.has_value());
    CHECK(render_distance_csv(*rec.distances) ==
          "distance,count\n0,1\n1,3\n2,3\n3,1\n");
    const std::string text = render_distance_text(*rec.distances);
    CHECK_THAT(text, ContainsSubstring("origin: solved\n"));
    CHECK_THAT(text, ContainsSubstring("total: 8\n"));
    CHECK_THAT(text, ContainsSubstring("diameter: 3\n"));
    const ordered_json j = ordered_json::parse(render_distance_json(*rec.distances));
    CHECK(j["counts"] == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(j["diameter"].get<int>() == 3);
}

TEST_CASE("bound validation rendering") {
    const BoundValidation v = validate_lower_bound(generate_gpg(4, 1));
    const std::string text = render_validation_text(v, "G(4,1)");
    CHECK_THAT(text, ContainsSubstring("source: G(4,1)\n"));
    CHECK_THAT(text, ContainsSubstring("eta_used: 3 (measured)\n"));
    CHECK_THAT(text, ContainsSubstring("bound_check: PASS\n"));
    const std::string csv = render_validation_csv(v, "G(4,1)");
    CHECK_THAT(csv, ContainsSubstring("source,n,k,girth"));
    CHECK_THAT(csv, ContainsSubstring(",true\n"));
    const ordered_json j = ordered_json::parse(render_validation_json(v, "G(4,1)"));
    CHECK(j["holds"].get<bool>());
    CHECK(j["diameter"].get<int>() == 3);
}
