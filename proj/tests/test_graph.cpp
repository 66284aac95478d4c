#include <doctest.h>

#include <random>
#include <set>

#include "rescurv/families.hpp"
#include "rescurv/graph.hpp"
#include "support/random_graphs.hpp"

using namespace rescurv;

TEST_CASE("parse_edge_list builds the two-edge path") {
    Graph g = parse_edge_list("a b\nb c");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("parse_edge_list builds the triangle") {
    Graph g = parse_edge_list("0 1\n1 2\n2 0");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("parse_edge_list accepts comments and blank lines") {
    Graph g = parse_edge_list("# path\n\na b # edge one\n  b c\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_edge_list error cases") {
    CHECK_THROWS_AS(parse_edge_list("0 1\n2 3"), DisconnectedError);
    CHECK_THROWS_AS(parse_edge_list(""), EmptyInputError);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), EmptyInputError);
    CHECK_THROWS_AS(parse_edge_list("a a"), SelfLoopError);
    CHECK_THROWS_AS(parse_edge_list("a b\nb a"), DuplicateEdgeError);
    CHECK_THROWS_AS(parse_edge_list("a b c"), MalformedLineError);
    CHECK_THROWS_AS(parse_edge_list("a"), MalformedLineError);

    try {
        parse_edge_list("a b\nb c\nc a\na a");
    } catch (const SelfLoopError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testing::random_connected_graph(30, eng);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("laplacian fixtures") {
    Graph k2 = generate(family_spec("complete", {2}));
    auto l2 = laplacian(k2);
    CHECK(l2(0, 0) == 1.0);
    CHECK(l2(0, 1) == -1.0);
    CHECK(l2(1, 1) == 1.0);

    Graph p3 = generate(family_spec("path", {3}));
    auto l3 = laplacian(p3);
    CHECK(l3(0, 0) == 1.0);
    CHECK(l3(1, 1) == 2.0);
    CHECK(l3(2, 2) == 1.0);
    CHECK(l3(0, 1) == -1.0);
    CHECK(l3(0, 2) == 0.0);

    // C_4: circulant, diagonal 2, -1 on cyclic neighbors; all row sums zero.
    Graph c4 = generate(family_spec("cycle", {4}));
    auto l4 = laplacian(c4);
    for (int i = 0; i < 4; ++i) {
        CHECK(l4(i, i) == 2.0);
        CHECK(l4(i, (i + 1) % 4) == -1.0);
        CHECK(l4(i, (i + 2) % 4) == 0.0);
        double row = 0;
        for (int j = 0; j < 4; ++j) row += l4(i, j);
        CHECK(row == 0.0);
    }
}

TEST_CASE("bfs distances and diameters") {
    CHECK(bfs_distances(generate(family_spec("cycle", {8}))).diameter == 4);
    CHECK(bfs_distances(generate(family_spec("complete", {5}))).diameter == 1);

    // Q_3: the graph metric is Hamming distance, so the diameter is 3.
    Graph q3 = generate(family_spec("hypercube", {3}));
    auto t = bfs_distances(q3);
    CHECK(t.diameter == 3);
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            int hamming = __builtin_popcount(u ^ v);
            CHECK(t.dist[u][v] == hamming);
        }
}

TEST_CASE("distance table is a metric") {
    std::mt19937_64 eng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testing::random_connected_graph(20, eng);
        auto t = bfs_distances(g);
        int n = g.order();
        for (int i = 0; i < n; ++i) {
            CHECK(t.dist[i][i] == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(t.dist[i][j] == t.dist[j][i]);
                for (int k = 0; k < n; ++k)
                    CHECK(t.dist[i][k] <= t.dist[i][j] + t.dist[j][k]);
            }
        }
    }
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(generate(family_spec("cycle", {4}))).bipartite);
    CHECK_FALSE(is_bipartite(generate(family_spec("cycle", {5}))).bipartite);

    auto q3 = is_bipartite(generate(family_spec("hypercube", {3})));
    REQUIRE(q3.bipartite);
    // Valid 2-coloring: endpoints of every edge differ.
    Graph g = generate(family_spec("hypercube", {3}));
    for (auto [u, v] : g.edges()) CHECK(q3.coloring[u] != q3.coloring[v]);
}

TEST_CASE("family sizes match closed forms") {
    for (int n = 1; n <= 8; ++n) {
        Graph q = generate(family_spec("hypercube", {n}));
        CHECK(q.order() == (1 << n));
        CHECK(q.edge_count() == n * (1 << (n - 1)));
    }
    for (int n = 2; n <= 30; ++n) {
        CHECK(generate(family_spec("complete", {n})).edge_count() == n * (n - 1) / 2);
        if (n >= 3) CHECK(generate(family_spec("cycle", {n})).edge_count() == n);
    }
    CHECK(generate(family_spec("torus", {2, 4})).order() == 16);
    CHECK(generate(family_spec("torus", {2, 4})).edge_count() == 32);
}

TEST_CASE("family diameters match closed forms") {
    for (int n = 2; n <= 12; ++n)
        CHECK(bfs_distances(generate(family_spec("complete", {n}))).diameter == 1);
    for (int n = 3; n <= 16; ++n)
        CHECK(bfs_distances(generate(family_spec("cycle", {n}))).diameter == n / 2);
    for (int n = 1; n <= 7; ++n)
        CHECK(bfs_distances(generate(family_spec("hypercube", {n}))).diameter == n);
}

TEST_CASE("edge-list render round-trips up to label order") {
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testing::random_connected_graph(15, eng);
        Graph back = parse_edge_list(g.to_edge_list());
        REQUIRE(back.order() == g.order());
        REQUIRE(back.edge_count() == g.edge_count());
        // Compare label-level edge sets.
        auto key = [](const Graph& h) {
            std::set<std::pair<std::string, std::string>> s;
            for (auto [u, v] : h.edges()) {
                auto a = h.label(u), b = h.label(v);
                if (a > b) std::swap(a, b);
                s.insert({a, b});
            }
            return s;
        };
        CHECK(key(back) == key(g));
    }
}

TEST_CASE("json export shape") {
    Graph g = parse_edge_list("a b\nb c");
    CHECK(g.to_json() ==
          R"({"n":3,"labels":["a","b","c"],"edges":[[0,1],[1,2]]})");
}
