#include <doctest.h>

#include <random>

#include "atgrid/errors.hpp"
#include "atgrid/graph.hpp"

using namespace atgrid;

TEST_CASE("cycles") {
    const Graph c3 = make_cycle(3);
    CHECK(c3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    const Graph c4 = make_cycle(4);
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("paths, cliques, bicliques") {
    CHECK(make_path(4).edge_count() == 3);
    CHECK(make_path(1).edge_count() == 0);
    CHECK(make_complete(4).edge_count() == 6);
    CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
    CHECK(make_complete_bipartite(2, 4).vertex_count() == 6);
    CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("graph construction validates simplicity") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 1}}), std::invalid_argument);
    // Canonicalization: endpoints swapped, list sorted.
    const Graph g(3, {{2, 1}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("cartesian products") {
    const Graph k2 = make_complete(2);
    const Graph square = cartesian_product(k2, k2);
    CHECK(square.vertex_count() == 4);
    CHECK(square.edge_count() == 4);
    CHECK(square.is_regular(2));

    const Graph c3xc3 = cartesian_product(make_cycle(3), make_cycle(3));
    CHECK(c3xc3.vertex_count() == 9);
    CHECK(c3xc3.edge_count() == 18);
    CHECK(c3xc3.is_regular(4));

    const Graph c3xc4 = cartesian_product(make_cycle(3), make_cycle(4));
    CHECK(c3xc4.vertex_count() == 12);
    CHECK(c3xc4.edge_count() == 24);
}

TEST_CASE("product vertex numbering is layer-major") {
    // (u, v) -> v * |V(g)| + u; layer v is a copy of g.
    const Graph g = make_path(2);   // single edge 0-1
    const Graph h = make_path(3);   // path 0-1-2
    const Graph p = cartesian_product(g, h);
    CHECK(p.has_edge(0, 1));  // layer 0 copy of g
    CHECK(p.has_edge(2, 3));  // layer 1
    CHECK(p.has_edge(4, 5));  // layer 2
    CHECK(p.has_edge(0, 2));  // h-edge at u = 0
    CHECK(p.has_edge(1, 3));
    CHECK(!p.has_edge(0, 4)); // h has no edge 0-2
}

TEST_CASE("product is commutative up to the index bijection") {
    const Graph g = make_cycle(3);
    const Graph h = make_path(4);
    const Graph gh = cartesian_product(g, h);
    const Graph hg = cartesian_product(h, g);
    REQUIRE(gh.vertex_count() == hg.vertex_count());
    REQUIRE(gh.edge_count() == hg.edge_count());
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    // (u, v) indexed v*ng + u in gh maps to u*nh + v in hg.
    for (const Edge& e : gh.edges()) {
        const int u1 = e.first % ng, v1 = e.first / ng;
        const int u2 = e.second % ng, v2 = e.second / ng;
        CHECK(hg.has_edge(u1 * nh + v1, u2 * nh + v2));
    }
}

TEST_CASE("torus equals the product of its cycles, and is 4-regular") {
    CHECK(make_torus({3, 3}) == cartesian_product(make_cycle(3), make_cycle(3)));
    CHECK(make_torus({3, 4}).edge_count() == 24);
    CHECK(make_torus({4, 4}).vertex_count() == 16);
    CHECK_THROWS_AS(make_torus({2, 5}), std::invalid_argument);
    for (int m = 3; m <= 8; ++m) {
        for (int k = 3; k <= 8; ++k) {
            const Graph t = make_torus({m, k});
            REQUIRE(t.vertex_count() == m * k);
            REQUIRE(t.edge_count() == 2 * m * k);
            REQUIRE(t.is_regular(4));
        }
    }
}

TEST_CASE("orientations and indegrees") {
    const Graph c4 = make_cycle(4);
    // cyclic 0->1->2->3->0: heads per sorted edges (0,1),(0,3),(1,2),(2,3)
    const Orientation cyclic(c4, {1, 0, 2, 3});
    CHECK(cyclic.indegrees() == std::vector<int>{1, 1, 1, 1});
    CHECK(cyclic.max_indegree() == 1);

    const Orientation acyclic = Orientation::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(acyclic.indegrees() == std::vector<int>{0, 1, 2});

    const Orientation empty(Graph(3, {}), {});
    CHECK(empty.indegrees() == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(Orientation(c4, {1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Orientation(c4, {2, 0, 2, 3}), std::invalid_argument);

    std::mt19937 rng(3);
    for (int iter = 0; iter < 100; ++iter) {
        const Graph g = make_torus({3, 3});
        std::vector<int> heads;
        for (const Edge& e : g.edges()) heads.push_back(rng() % 2 ? e.first : e.second);
        const Orientation d(g, heads);
        int total = 0;
        for (int x : d.indegrees()) total += x;
        REQUIRE(total == g.edge_count());
    }
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2\n") == make_cycle(3));
    CHECK(parse_edge_list("3 2\n2 1\n1 0\n").edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 0\n"), doctest::Contains("loop"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 0\n"), doctest::Contains("duplicate"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 5\n"), doctest::Contains("out of range"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 abc\n"), doctest::Contains("malformed"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list(""), doctest::Contains("header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 5\n0 1\n"), doctest::Contains("promises"),
                         ParseError);
}

TEST_CASE("serialize round-trips through the canonical form") {
    const std::string scrambled = "3 3\n1 2\n0 2\n0 1\n";
    CHECK(serialize_edge_list(parse_edge_list(scrambled)) == "3 3\n0 1\n0 2\n1 2\n");
    const Graph torus = make_torus({3, 4});
    CHECK(parse_edge_list(serialize_edge_list(torus)) == torus);
}

TEST_CASE("orientation files round-trip") {
    const std::string text = "4 4\n0 1\n1 2\n2 3\n3 0\n";
    const Orientation d = parse_orientation(text);
    CHECK(d.indegrees() == std::vector<int>{1, 1, 1, 1});
    const Orientation back = parse_orientation(serialize_orientation(d));
    CHECK(back.indegrees() == d.indegrees());
    for (int e = 0; e < 4; ++e) CHECK(back.head(e) == d.head(e));
    CHECK_THROWS_AS(parse_orientation("2 2\n0 1\n1 0\n"), ParseError);
}
