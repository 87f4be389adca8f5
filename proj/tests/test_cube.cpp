#include <catch2/catch_amalgamated.hpp>

#include "cubegraph/cube.hpp"
#include "cubegraph/graph_analysis.hpp"

#include <set>
#include <vector>

using namespace cubegraph;

namespace {

CubeState walk(const Metric& metric, const std::vector<int>& gen_indices) {
    CubeState s = solved_state(metric.cube_size);
    for (int i : gen_indices) s = apply_move(s, metric.generators[i]);
    return s;
}

}  // namespace

TEST_CASE("every face turn has order four") {
    for (Face f : {Face::R, Face::L, Face::U, Face::D, Face::F, Face::B}) {
        const Move m = face_turn(f, 1);
        CubeState s = solved_state(3);
        for (int i = 0; i < 4; ++i) {
            s = apply_move(s, m);
            if (i < 3) REQUIRE(!(s == solved_state(3)));
        }
        REQUIRE(s == solved_state(3));
        REQUIRE(valid(s));
    }
}

TEST_CASE("half turns and inverses agree with composition") {
    const Move r = face_turn(Face::R, 1);
    const Move r2 = face_turn(Face::R, 2);
    const Move r3 = face_turn(Face::R, 3);
    const CubeState s = solved_state(3);
    CHECK(apply_move(apply_move(s, r), r) == apply_move(s, r2));
    CHECK(apply_move(apply_move(s, r), r2) == apply_move(s, r3));
    CHECK(apply_move(apply_move(s, r), inverse_move(r)) == s);
    CHECK(apply_move(apply_move(s, r3), r) == s);
}

TEST_CASE("composition is application order") {
    const Move r = face_turn(Face::R, 1);
    const Move d = face_turn(Face::D, 1);
    const Move rd = compose_moves(r, d);
    CubeState a = solved_state(3);
    a = apply_move(a, r);
    a = apply_move(a, d);
    CHECK(a == apply_move(solved_state(3), rd));
    // R and D do not commute
    CHECK(!(apply_move(solved_state(3), compose_moves(d, r)) ==
            apply_move(solved_state(3), rd)));
}

TEST_CASE("moves keep states valid") {
    const Metric metric = make_metric(3, TurnMetric::quarter);
    CubeState s = solved_state(3);
    for (int i = 0; i < 500; ++i) {
        s = apply_move(s, metric.generators[(i * 7 + 3) % metric.generators.size()]);
        REQUIRE(valid(s));
    }
}

TEST_CASE("2x2x2 moves fix the anchor corner") {
    const Metric metric = make_metric(2, TurnMetric::quarter);
    REQUIRE(metric.generators.size() == 6);
    CubeState s = solved_state(2);
    for (int i = 0; i < 200; ++i) {
        s = apply_move(s, metric.generators[(i * 5 + 1) % 6]);
        REQUIRE(valid(s));
        REQUIRE(s.corners.perm[kAnchorCornerSlot] == kAnchorCornerSlot);
        REQUIRE(s.corners.twist[kAnchorCornerSlot] == 0);
    }
}

TEST_CASE("generator sets are closed under inverses") {
    for (auto [size, kind] :
         {std::pair{3, TurnMetric::quarter}, {3, TurnMetric::square},
          {3, TurnMetric::square_slice}, {2, TurnMetric::quarter},
          {2, TurnMetric::square}}) {
        const Metric metric = make_metric(size, kind);
        const CubeState origin = solved_state(size);
        for (const Move& g : metric.generators) {
            const CubeState moved = apply_move(origin, g);
            bool has_inverse = false;
            for (const Move& h : metric.generators)
                if (apply_move(moved, h) == origin) has_inverse = true;
            REQUIRE(has_inverse);
        }
    }
}

TEST_CASE("square and slice generators are involutions") {
    for (auto [size, kind] :
         {std::pair{3, TurnMetric::square}, {3, TurnMetric::square_slice},
          {2, TurnMetric::square}}) {
        const Metric metric = make_metric(size, kind);
        const CubeState origin = solved_state(size);
        for (const Move& g : metric.generators)
            REQUIRE(apply_move(apply_move(origin, g), g) == origin);
    }
}

TEST_CASE("unsupported metric pairs are rejected") {
    CHECK_THROWS_AS(make_metric(2, TurnMetric::square_slice), std::invalid_argument);
    CHECK_THROWS_AS(make_metric(4, TurnMetric::quarter), std::invalid_argument);
    CHECK_THROWS_AS(make_metric(1, TurnMetric::square), std::invalid_argument);
}

TEST_CASE("metric names round-trip") {
    CHECK(parse_metric("quarter") == TurnMetric::quarter);
    CHECK(parse_metric("square") == TurnMetric::square);
    CHECK(parse_metric("square-slice") == TurnMetric::square_slice);
    CHECK_THROWS_AS(parse_metric("halfturn"), std::invalid_argument);
    CHECK(std::string(metric_name(TurnMetric::square_slice)) == "square-slice");
}

TEST_CASE("small groups have the expected orders") {
    // enumerate outright and compare against the closed-form orders
    const CayleyGraph slice(make_metric(3, TurnMetric::square_slice));
    CHECK(bfs_distance_array(slice, slice.origin()).total() == 8);
    CHECK(slice.order() == 8);

    const CayleyGraph sq2(make_metric(2, TurnMetric::square));
    CHECK(bfs_distance_array(sq2, sq2.origin()).total() == 24);
    CHECK(sq2.order() == 24);

    CHECK(group_order(make_metric(2, TurnMetric::quarter)) == 3674160);
    CHECK(group_order(make_metric(3, TurnMetric::square)) == 663552);
    CHECK(group_order(make_metric(3, TurnMetric::quarter)) ==
          Integer("43252003274489856000"));
}

TEST_CASE("state codes are injective along a walk") {
    const Metric metric = make_metric(3, TurnMetric::quarter);
    CubeState s = solved_state(3);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::vector<CubeState> states;
    for (int i = 0; i < 300; ++i) {
        s = apply_move(s, metric.generators[(i * 11 + 2) % 12]);
        const VertexKey key = state_key(s);
        if (seen.insert({key.a, key.b}).second) states.push_back(s);
    }
    // identical keys only for identical states
    for (const CubeState& t : states) {
        int key_matches = 0;
        for (const CubeState& u : states)
            if (state_key(t) == state_key(u)) ++key_matches;
        REQUIRE(key_matches == 1);
    }
}

TEST_CASE("rank and unrank are mutually inverse") {
    const Metric q3 = make_metric(3, TurnMetric::quarter);
    CubeState s = solved_state(3);
    for (int i = 0; i < 100; ++i) {
        s = apply_move(s, q3.generators[(i * 13 + 5) % 12]);
        const Integer r = rank(s);
        REQUIRE(unrank(r, 3) == s);
    }
    const Metric q2 = make_metric(2, TurnMetric::quarter);
    CubeState t = solved_state(2);
    for (int i = 0; i < 100; ++i) {
        t = apply_move(t, q2.generators[(i * 13 + 5) % 6]);
        const Integer r = rank(t);
        REQUIRE(r < 3674160);
        REQUIRE(unrank(r, 2) == t);
    }
}

TEST_CASE("unrank rejects out-of-range indices") {
    CHECK_THROWS_AS(unrank(Integer(3674160), 2), std::invalid_argument);
    CHECK_THROWS_AS(unrank(Integer(-1), 3), std::invalid_argument);
    CHECK_THROWS_AS(unrank(coordinate_space_size(3), 3), std::invalid_argument);
    CHECK(unrank(Integer(0), 2) == solved_state(2));
    CHECK(unrank(Integer(0), 3) == solved_state(3));
}

TEST_CASE("dense indexing covers the 2x2x2 quarter group exactly") {
    const CayleyGraph graph(make_metric(2, TurnMetric::quarter));
    REQUIRE(graph.dense());
    REQUIRE(graph.dense_size() == 3674160);
    // spot-check bijectivity across the range
    for (std::uint64_t i = 0; i < graph.dense_size(); i += 104729) {
        const CubeState s = graph.dense_unrank(i);
        REQUIRE(graph.dense_rank(s) == i);
        REQUIRE(valid(s));
    }
    REQUIRE_FALSE(CayleyGraph(make_metric(3, TurnMetric::square)).dense());
}

TEST_CASE("walks never leave the anchored representation") {
    const CayleyGraph graph(make_metric(2, TurnMetric::square));
    CHECK(walk(graph.metric(), {0, 1, 2, 0, 1, 2}).cube_size == 2);
}
