// Tests for the local rewrite rules: per-rule factor contracts checked
// against brute-force counts, script parsing, and full script replay.

#include <doctest.h>

#include "tilecount/engines.hpp"
#include "tilecount/graph.hpp"
#include "tilecount/region.hpp"
#include "tilecount/rewrites.hpp"

#include <stdexcept>

using namespace tilecount;

namespace {

// Unit 4-cycle B(0,0) - W(1,1) - B(2,0) - W(1,-1); two perfect matchings.
MatchGraph diamond() {
    MatchGraph g;
    g.add_vertex(0, 0, Color::Black);
    g.add_vertex(1, 1, Color::White);
    g.add_vertex(2, 0, Color::Black);
    g.add_vertex(1, -1, Color::White);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 0, 1);
    return g;
}

// Alternating path starting black at (0,0) with the given edge weights.
MatchGraph make_path(const std::vector<Rat>& weights) {
    MatchGraph g;
    for (std::size_t i = 0; i <= weights.size(); ++i)
        g.add_vertex(Rat(static_cast<int>(i)), 0, i % 2 == 0 ? Color::Black : Color::White);
    for (std::size_t i = 0; i < weights.size(); ++i)
        g.add_edge(static_cast<int>(i), static_cast<int>(i) + 1, weights[i]);
    return g;
}

// Inner 4-cycle with unit legs to four corners plus a pendant chain on the
// first corner.  Cycle weights x=1, y=2, z=3, t=1.
MatchGraph spider_a_host() {
    MatchGraph g;
    g.add_vertex(1, 0, Color::Black);    // 0: p0
    g.add_vertex(0, 1, Color::White);    // 1: p1
    g.add_vertex(-1, 0, Color::Black);   // 2: p2
    g.add_vertex(0, -1, Color::White);   // 3: p3
    g.add_vertex(2, 0, Color::White);    // 4: corner of p0
    g.add_vertex(0, 2, Color::Black);    // 5: corner of p1
    g.add_vertex(-2, 0, Color::White);   // 6: corner of p2
    g.add_vertex(0, -2, Color::Black);   // 7: corner of p3
    g.add_vertex(3, 0, Color::Black);    // 8: pendant chain
    g.add_vertex(4, 0, Color::White);    // 9
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 3);
    g.add_edge(3, 0, 1);
    for (int i = 0; i < 4; ++i) g.add_edge(i, 4 + i, 1);
    g.add_edge(4, 8, 2);
    g.add_edge(8, 9, 1);
    return g;
}

// Two unit 4-cycles sharing the center 0, with pendant structure hanging off
// the two free arc ends so the graph has perfect matchings.
MatchGraph double_cycle_host() {
    MatchGraph g;
    g.add_vertex(0, 0, Color::Black);    // 0: shared center
    g.add_vertex(1, 1, Color::White);    // 1: b1
    g.add_vertex(2, 0, Color::Black);    // 2: b2
    g.add_vertex(1, -1, Color::White);   // 3: b3
    g.add_vertex(-1, 1, Color::White);   // 4: c1
    g.add_vertex(-2, 0, Color::Black);   // 5: c2
    g.add_vertex(-1, -1, Color::White);  // 6: c3
    g.add_vertex(2, -2, Color::Black);   // 7
    g.add_vertex(-2, -2, Color::Black);  // 8
    g.add_vertex(0, -3, Color::White);   // 9
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 0, 1);
    g.add_edge(0, 4, 1);
    g.add_edge(4, 5, 1);
    g.add_edge(5, 6, 1);
    g.add_edge(6, 0, 1);
    g.add_edge(3, 7, 1);
    g.add_edge(6, 8, 1);
    g.add_edge(7, 9, 1);
    g.add_edge(8, 9, 1);
    return g;
}

}  // namespace

TEST_CASE("vertex split preserves the count") {
    MatchGraph g = diamond();
    REQUIRE(count_brute(g) == 2);

    RewriteResult r = vertex_split(g, 0, {1});
    CHECK(r.step.rule == "vertex-split");
    CHECK(r.step.factor == 1);
    CHECK(r.graph.vertex_count() == 6);
    CHECK(count_brute(r.graph) == 2);

    RewriteResult all_other = vertex_split(g, 0, {});
    CHECK(all_other.step.factor == 1);
    CHECK(count_brute(all_other.graph) == 2);

    CHECK_THROWS_AS(vertex_split(g, 9, {1}), std::invalid_argument);
    CHECK_THROWS_AS(vertex_split(g, 0, {2}), std::invalid_argument);   // not a neighbor
    CHECK_THROWS_AS(vertex_split(g, 0, {1, 1}), std::invalid_argument);
}

TEST_CASE("star scaling divides the count by the scale") {
    MatchGraph g = diamond();

    RewriteResult tripled = star_scale(g, 1, 3);
    CHECK(tripled.step.rule == "star");
    CHECK(tripled.step.factor == Rat(1, 3));
    CHECK(count_brute(tripled.graph) == 6);
    CHECK(count_brute(g) == tripled.step.factor * count_brute(tripled.graph));

    RewriteResult halved = star_scale(g, 0, Rat(1, 2));
    CHECK(halved.step.factor == 2);
    CHECK(count_brute(halved.graph) == 1);

    RewriteResult same = star_scale(g, 2, 1);
    CHECK(same.step.factor == 1);
    CHECK(dump_graph(same.graph) == dump_graph(g));

    CHECK_THROWS_AS(star_scale(g, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(star_scale(g, 0, -2), std::invalid_argument);
    CHECK_THROWS_AS(star_scale(g, 42, 2), std::invalid_argument);
}

TEST_CASE("spider-a replaces an inner cycle by a corner cycle") {
    MatchGraph g = spider_a_host();
    REQUIRE(count_brute(g) == 1);

    RewriteResult r = urban_renewal(g, {0, 1, 2, 3});
    CHECK(r.step.rule == "spider-a");
    CHECK(r.step.factor == 5);  // x z + y t = 1*3 + 2*1
    CHECK(r.graph.vertex_count() == 6);
    CHECK(r.graph.weight(4, 5) == Rat(3, 5));
    CHECK(r.graph.weight(5, 6) == Rat(1, 5));
    CHECK(r.graph.weight(6, 7) == Rat(1, 5));
    CHECK(r.graph.weight(7, 4) == Rat(2, 5));
    CHECK(count_brute(r.graph) == Rat(1, 5));
    CHECK(count_brute(g) == r.step.factor * count_brute(r.graph));

    MatchGraph heavy_leg = spider_a_host();
    heavy_leg.set_weight(0, 4, 2);
    CHECK_THROWS_AS(urban_renewal(heavy_leg, {0, 1, 2, 3}), std::invalid_argument);

    MatchGraph two_corners = spider_a_host();
    int extra = two_corners.add_vertex(2, 1, Color::White);
    two_corners.add_edge(0, extra, 1);
    CHECK_THROWS_AS(urban_renewal(two_corners, {0, 1, 2, 3}), std::invalid_argument);

    MatchGraph touching = spider_a_host();
    touching.add_edge(4, 5, 1);
    CHECK_THROWS_AS(urban_renewal(touching, {0, 1, 2, 3}), std::invalid_argument);

    CHECK_THROWS_AS(urban_renewal(g, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("spider-b replaces a legged path by a corner cycle") {
    MatchGraph g;
    g.add_vertex(1, 0, Color::Black);   // 0: p
    g.add_vertex(2, 0, Color::White);   // 1: q
    g.add_vertex(3, 0, Color::Black);   // 2: r
    g.add_vertex(0, 0, Color::White);   // 3: corner of p
    g.add_vertex(2, 1, Color::Black);   // 4: corner of q
    g.add_vertex(4, 0, Color::White);   // 5: corner of r
    g.add_edge(0, 1, 3);                // x
    g.add_edge(1, 2, Rat(1, 2));        // y
    g.add_edge(3, 0, 1);
    g.add_edge(1, 4, 1);
    g.add_edge(2, 5, 1);
    REQUIRE(count_brute(g) == 1);

    RewriteResult r = urban_renewal_b(g, {0, 1, 2});
    CHECK(r.step.rule == "spider-b");
    CHECK(r.step.factor == 2);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.weight(3, 4) == Rat(1, 6));   // 1/(2x)
    CHECK(r.graph.weight(4, 5) == 1);           // 1/(2y)
    CHECK(r.graph.weight(5, 6) == Rat(3, 2));   // x/2
    CHECK(r.graph.weight(6, 3) == Rat(1, 4));   // y/2
    CHECK(count_brute(r.graph) == Rat(1, 2));
    CHECK(count_brute(g) == r.step.factor * count_brute(r.graph));

    CHECK_THROWS_AS(urban_renewal_b(g, {0, 2, 1}), std::invalid_argument);  // not a path
    CHECK_THROWS_AS(urban_renewal_b(g, {0, 1}), std::invalid_argument);
}

TEST_CASE("spider-c replaces a legged edge by a corner cycle") {
    MatchGraph g;
    g.add_vertex(1, 0, Color::Black);   // 0: p
    g.add_vertex(2, 0, Color::White);   // 1: q
    g.add_vertex(0, 0, Color::White);   // 2: corner of p
    g.add_vertex(3, 0, Color::Black);   // 3: corner of q
    g.add_edge(0, 1, 2);                // x
    g.add_edge(2, 0, 1);
    g.add_edge(1, 3, 1);
    REQUIRE(count_brute(g) == 1);

    RewriteResult r = urban_renewal_c(g, {0, 1});
    CHECK(r.step.rule == "spider-c");
    CHECK(r.step.factor == 2);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(r.graph.weight(2, 3) == Rat(1, 4));   // 1/(2x)
    CHECK(r.graph.weight(3, 4) == Rat(1, 2));
    CHECK(r.graph.weight(4, 5) == 1);           // x/2
    CHECK(r.graph.weight(5, 2) == Rat(1, 2));
    CHECK(count_brute(r.graph) == Rat(1, 2));
    CHECK(count_brute(g) == r.step.factor * count_brute(r.graph));

    CHECK_THROWS_AS(urban_renewal_c(g, {0, 3}), std::invalid_argument);  // not an edge
    CHECK_THROWS_AS(urban_renewal_c(g, {0}), std::invalid_argument);
}

TEST_CASE("double 4-cycle collapses twin cycles around the center") {
    MatchGraph g = double_cycle_host();
    REQUIRE(count_brute(g) == 4);

    RewriteResult r = double_4cycle(g, 0, {1, 2, 3}, {4, 5, 6});
    CHECK(r.step.rule == "double-4-cycle");
    CHECK(r.step.factor == 2);
    CHECK(r.graph.vertex_count() == 6);
    CHECK(count_brute(r.graph) == 2);
    CHECK(count_brute(g) == r.step.factor * count_brute(r.graph));

    // Rebalanced weights on the b arc: factor picks up w(b1,b2) w(c1,c2).
    MatchGraph w = double_cycle_host();
    w.set_weight(1, 2, Rat(1, 2));
    w.set_weight(3, 0, 2);  // keeps w(a,b1) w(b2,b3) = w(b1,b2) w(b3,a)
    RewriteResult rw = double_4cycle(w, 0, {1, 2, 3}, {4, 5, 6});
    CHECK(rw.step.factor == 1);
    CHECK(count_brute(w) == rw.step.factor * count_brute(rw.graph));

    MatchGraph bad = double_cycle_host();
    bad.set_weight(1, 2, 3);
    CHECK_THROWS_AS(double_4cycle(bad, 0, {1, 2, 3}, {4, 5, 6}), std::invalid_argument);

    // Reversed arc order puts a degree-3 vertex where degree 2 is required.
    CHECK_THROWS_AS(double_4cycle(g, 0, {3, 2, 1}, {4, 5, 6}), std::invalid_argument);
    CHECK_THROWS_AS(double_4cycle(g, 0, {1, 2}, {4, 5, 6}), std::invalid_argument);
}

TEST_CASE("forced-edge step factors out forced weights") {
    MatchGraph path = make_path({2, 5, Rat(1, 3)});
    RewriteResult r = forced_edges(path);
    CHECK(r.step.rule == "forced-edge");
    CHECK(r.step.factor == Rat(2, 3));
    CHECK(r.graph.vertex_count() == 0);
    CHECK(r.step.site.size() == 4);
    CHECK(count_brute(path) == r.step.factor * count_brute(r.graph));

    MatchGraph g = diamond();
    RewriteResult none = forced_edges(g);
    CHECK(none.step.factor == 1);
    CHECK(none.graph.vertex_count() == 4);
    CHECK(none.step.site.empty());
}

TEST_CASE("script parsing accepts every rule and rejects junk") {
    const std::string text = R"([
        {"rule": "vertex-split", "v": 0, "h": [2, 3]},
        {"rule": "star", "v": 1, "t": "3/2"},
        {"rule": "star", "v": 2, "t": 4},
        {"rule": "spider-a", "cycle": [0, 1, 2, 3]},
        {"rule": "spider-b", "path": [4, 5, 6]},
        {"rule": "spider-c", "edge": [7, 8]},
        {"rule": "double-4-cycle", "a": 0, "b": [1, 2, 3], "c": [4, 5, 6]},
        {"rule": "forced-edge"}
    ])";
    std::vector<ScriptStep> steps = parse_script_string(text);
    REQUIRE(steps.size() == 8);
    CHECK(steps[0].rule == "vertex-split");
    CHECK(steps[0].ids == std::vector<int>{0, 2, 3});
    CHECK(steps[1].t == Rat(3, 2));
    CHECK(steps[2].t == 4);
    CHECK(steps[3].ids.size() == 4);
    CHECK(steps[6].ids == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(steps[7].ids.empty());

    CHECK_THROWS_WITH_AS(parse_script_string(R"([{"rule": "mystery"}])"),
                         "script step 0: unknown rule 'mystery'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_script_string(R"([{"rule": "star", "v": 0, "t": 2, "w": 9}])"),
                         "script step 0: unknown field 'w'", std::invalid_argument);
    CHECK_THROWS_AS(parse_script_string(R"([{"rule": "star", "v": 0, "t": "0.5"}])"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_script_string(R"([{"rule": "star", "t": 2}])"),
                    std::invalid_argument);  // missing v
    CHECK_THROWS_AS(parse_script_string(R"([{"rule": "spider-b", "path": [1, "x"]}])"),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_script_string(R"({"rule": "star"})"),
                         "script: top level must be an array", std::invalid_argument);
    CHECK_THROWS_AS(parse_script_string("nonsense"), std::invalid_argument);
}

TEST_CASE("script replay multiplies the step factors") {
    MatchGraph g = diamond();

    ReplayResult empty = replay_script(g, {});
    CHECK(empty.factor == 1);
    CHECK(empty.steps.empty());
    CHECK(dump_graph(empty.graph) == dump_graph(g));

    // Pipeline on a quartered-rectangle dual: splits open every vertex, one
    // spider-a and two spider-b steps collapse the middle, and two star
    // steps absorb the leftover weights.
    const std::string pipeline = R"([
        {"rule": "vertex-split", "v": 0, "h": [2, 3]},
        {"rule": "vertex-split", "v": 2, "h": [8, 6]},
        {"rule": "vertex-split", "v": 6, "h": [11, 3]},
        {"rule": "vertex-split", "v": 3, "h": [8, 14]},
        {"rule": "vertex-split", "v": 1, "h": [5]},
        {"rule": "vertex-split", "v": 5, "h": [20, 12]},
        {"rule": "vertex-split", "v": 7, "h": [18, 4]},
        {"rule": "vertex-split", "v": 4, "h": [26]},
        {"rule": "spider-a", "cycle": [8, 11, 14, 17]},
        {"rule": "spider-b", "path": [20, 23, 12]},
        {"rule": "spider-b", "path": [18, 26, 29]},
        {"rule": "star", "v": 13, "t": "2"},
        {"rule": "star", "v": 19, "t": "2"}
    ])";
    MatchGraph host = dual_graph(build_region({Family::RE, 1, 3, {2}}));
    REQUIRE(count_brute(host) == 2);
    ReplayResult res = replay_script(host, parse_script_string(pipeline));
    CHECK(res.steps.size() == 13);
    CHECK(res.factor == 2);
    CHECK(res.graph.vertex_count() == 16);
    CHECK(res.graph.edge_count() == 18);
    CHECK(count_brute(res.graph) == 1);
    CHECK(count_brute(host) == res.factor * count_brute(res.graph));

    CHECK_THROWS_WITH_AS(
        replay_script(g, parse_script_string(R"([{"rule": "vertex-split", "v": 99, "h": []}])")),
        "script step 0 (vertex-split): vertex-split: vertex 99 not in graph",
        std::runtime_error);
}
