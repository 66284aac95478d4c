#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>

#include "rescurv/families.hpp"
#include "rescurv/resistance.hpp"
#include "support/random_graphs.hpp"

using namespace rescurv;

namespace {

// Closed-form cycle resistance: two paths in parallel, k(n-k)/n.
double cycle_resistance(int n, int hops) {
    return static_cast<double>(hops) * (n - hops) / n;
}

} // namespace

TEST_CASE("resistance fixtures") {
    auto k2 = resistance_matrix(generate(family_spec("complete", {2})));
    CHECK(k2.omega(0, 1) == doctest::Approx(1.0).epsilon(1e-12));

    // P_3 is two unit resistors in series.
    auto p3 = resistance_matrix(generate(family_spec("path", {3})));
    CHECK(p3.omega(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p3.omega(1, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p3.omega(0, 2) == doctest::Approx(2.0).epsilon(1e-12));

    for (int n : {4, 7, 12}) {
        Graph g = generate(family_spec("cycle", {n}));
        auto rd = resistance_matrix(g);
        auto t = bfs_distances(g);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(rd.omega(i, j) ==
                      doctest::Approx(cycle_resistance(n, t.dist[i][j])).epsilon(1e-11));
    }

    for (int n : {3, 5, 9}) {
        auto rd = resistance_matrix(generate(family_spec("complete", {n})));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(rd.omega(i, j) == doctest::Approx(2.0 / n).epsilon(1e-11));
    }
}

TEST_CASE("omega is symmetric with zero diagonal and positive off-diagonal") {
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_connected_graph(25, eng);
        auto rd = resistance_matrix(g, /*with_spectrum=*/false);
        int n = g.order();
        for (int i = 0; i < n; ++i) {
            CHECK(rd.omega(i, i) == 0.0);
            for (int j = i + 1; j < n; ++j) {
                CHECK(rd.omega(i, j) == rd.omega(j, i));
                CHECK(rd.omega(i, j) > 0.0);
            }
        }
    }
}

TEST_CASE("gamma spectrum is {1} union the positive Laplacian spectrum") {
    for (const char* kind : {"cycle", "complete"}) {
        Graph g = generate(family_spec(kind, {9}));
        auto rd = resistance_matrix(g);
        auto gamma_eigs = eig_symmetric(rd.gamma).eigenvalues;
        std::vector<double> expected(rd.spectrum.eigenvalues.begin(),
                                     rd.spectrum.eigenvalues.end());
        expected[0] = 1.0; // the all-ones direction moves from 0 to 1
        std::sort(expected.begin(), expected.end());
        for (int i = 0; i < g.order(); ++i)
            CHECK(gamma_eigs[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("laplacian spectrum has a single zero mode on connected graphs") {
    std::mt19937_64 eng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testing::random_connected_graph(25, eng);
        auto rd = resistance_matrix(g);
        CHECK(std::abs(rd.spectrum.eigenvalues[0]) <= 1e-9);
        CHECK(rd.spectrum.eigenvalues[1] > 1e-9); // algebraic connectivity
    }
}

TEST_CASE("resistance is a metric") {
    std::mt19937_64 eng(29);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = testing::random_connected_graph(40, eng);
        auto rd = resistance_matrix(g, /*with_spectrum=*/false);
        int n = g.order();
        double worst = 0.0; // most negative triangle slack
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    worst = std::min(worst,
                                     rd.omega(i, j) + rd.omega(j, k) - rd.omega(i, k));
        CHECK(worst >= -1e-10);
    }
}

TEST_CASE("resistance is bounded by hop distance") {
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testing::random_connected_graph(30, eng);
        auto rd = resistance_matrix(g, /*with_spectrum=*/false);
        auto t = bfs_distances(g);
        double worst = 0.0;
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                worst = std::max(worst, rd.omega(i, j) - t.dist[i][j]);
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("Rayleigh monotonicity: adding an edge never increases resistance") {
    std::mt19937_64 eng(37);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_connected_graph(14, eng);
        auto before = resistance_matrix(g, /*with_spectrum=*/false);
        int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.adjacent(u, v)) continue;
                auto edges = g.edges();
                edges.push_back({u, v});
                Graph denser = Graph::from_edges(n, std::move(edges), g.labels());
                auto after = resistance_matrix(denser, /*with_spectrum=*/false);
                double worst =
                    (after.omega.mat() - before.omega.mat()).maxCoeff();
                CHECK(worst <= 1e-10);
            }
    }
}

TEST_CASE("kirchhoff index fixtures") {
    CHECK(resistance_matrix(generate(family_spec("complete", {2}))).kirchhoff ==
          doctest::Approx(1.0).epsilon(1e-12));
    // C_4: four adjacent pairs at 3/4 plus two antipodal pairs at 1.
    CHECK(resistance_matrix(generate(family_spec("cycle", {4}))).kirchhoff ==
          doctest::Approx(5.0).epsilon(1e-12));
    for (int n : {3, 6, 17})
        CHECK(resistance_matrix(generate(family_spec("complete", {n}))).kirchhoff ==
              doctest::Approx(n - 1.0).epsilon(1e-11));
    // Kirchhoff index is bounded below by n - 1 (Foster).
    std::mt19937_64 eng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testing::random_connected_graph(20, eng);
        auto rd = resistance_matrix(g, /*with_spectrum=*/false);
        CHECK(rd.kirchhoff >= g.order() - 1 - 1e-9);
    }
}

TEST_CASE("foster residuals") {
    Graph p3 = generate(family_spec("path", {3}));
    CHECK(foster_check(p3, resistance_matrix(p3)) <= 1e-12);

    Graph c8 = generate(family_spec("cycle", {8}));
    CHECK(foster_check(c8, resistance_matrix(c8)) <= 1e-12);

    Graph petersen = generate(family_spec("petersen", {}));
    CHECK(foster_check(petersen, resistance_matrix(petersen)) <= 1e-8);
}

TEST_CASE("mckay residuals") {
    // C_4: Kf = 5 and n sum 1/lambda = 4 (1/2 + 1/2 + 1/4) = 5.
    Graph c4 = generate(family_spec("cycle", {4}));
    auto rd4 = resistance_matrix(c4);
    CHECK(rd4.kirchhoff == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(mckay_check(rd4) <= 1e-10);

    // K_3: Kf = 2 and 3 (1/3 + 1/3) = 2.
    Graph k3 = generate(family_spec("complete", {3}));
    auto rd3 = resistance_matrix(k3);
    CHECK(rd3.kirchhoff == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mckay_check(rd3) <= 1e-10);

    // Q_3: both sides equal 8 (3/2 + 3/4 + 1/6).
    Graph q3 = generate(family_spec("hypercube", {3}));
    auto rdq = resistance_matrix(q3);
    double expected = 8.0 * (3.0 / 2.0 + 3.0 / 4.0 + 1.0 / 6.0);
    CHECK(rdq.kirchhoff == doctest::Approx(expected).epsilon(1e-11));
    CHECK(mckay_check(rdq) <= 1e-8 * rdq.kirchhoff);

    CHECK_THROWS_AS(mckay_check(resistance_matrix(q3, /*with_spectrum=*/false)),
                    std::logic_error);
}

TEST_CASE("omega csv shape") {
    Graph p3 = parse_edge_list("a b\nb c");
    auto rd = resistance_matrix(p3, /*with_spectrum=*/false);
    std::string csv = omega_csv(p3, rd);
    CHECK(csv.substr(0, 6) == "a,b,c\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    // First data row is Omega(a, .) = (0, 1, 2).
    auto row_start = csv.find('\n') + 1;
    auto row_end = csv.find('\n', row_start);
    std::string row = csv.substr(row_start, row_end - row_start);
    double a, b, c;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &a, &b, &c) == 3);
    CHECK(a == 0.0);
    CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c == doctest::Approx(2.0).epsilon(1e-12));
}
