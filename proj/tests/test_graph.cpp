#include <doctest.h>

#include <set>

#include "gsu/error.hpp"
#include "gsu/generators.hpp"
#include "gsu/graph.hpp"

using namespace gsu;

TEST_CASE("path(3) combinatorial Laplacian") {
    const Graph g = make_path(3);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    CHECK((laplacian(g) - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("normalized Laplacian of a weighted triangle") {
    const Graph g(3, {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 3.0}});
    const Eigen::MatrixXd L = laplacian(g, LaplacianVariant::normalized);
    // degrees 5, 3, 4
    CHECK(L(0, 0) == doctest::Approx(1.0));
    CHECK(L(0, 1) == doctest::Approx(-2.0 / std::sqrt(15.0)));
    CHECK(L(0, 2) == doctest::Approx(-3.0 / std::sqrt(20.0)));
    CHECK(L(1, 2) == doctest::Approx(-1.0 / std::sqrt(12.0)));
    CHECK((L - L.transpose()).norm() == 0.0);
}

TEST_CASE("edges are canonicalized") {
    const Graph g(3, {{2, 1, 1.0}, {1, 0, 0.5}});
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, 0.5});
    CHECK(g.edges()[1] == Edge{1, 2, 1.0});
    CHECK(g.degrees()(1) == doctest::Approx(1.5));
}

TEST_CASE("invalid graphs are rejected") {
    CHECK_THROWS_AS(Graph(3, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 2, 1.0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, 0.0}, {1, 2, 1.0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, -1.0}, {1, 2, 1.0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 1, std::nan("")}, {1, 2, 1.0}}), ValidationError);
    CHECK_THROWS_AS(Graph(3, {{0, 5, 1.0}}), ValidationError);
    CHECK_THROWS_AS(Graph(4, {{0, 1, 1.0}, {2, 3, 1.0}}), DisconnectedGraphError);
    CHECK_THROWS_AS(Graph(0, {}), ValidationError);
}

TEST_CASE("disconnected graph error is also a validation error") {
    CHECK_THROWS_AS(Graph(4, {{0, 1, 1.0}, {2, 3, 1.0}}), ValidationError);
}

TEST_CASE("hop distances") {
    const Graph comet = make_comet(64, 53);
    CHECK(comet.size() == 64);
    CHECK(comet.edges().size() == 63);
    // leaf 1 to the far end of the ten-vertex tail
    CHECK(hop_distance(comet, 1, 63) == 11);
    CHECK(hop_distance(comet, 1, 2) == 2);
    CHECK(hop_distance(comet, 5, 5) == 0);
    const auto d = hop_distances_from(make_path(6), 0);
    CHECK(d == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(hop_distance(make_ring(10), 0, 7) == 3);
}

TEST_CASE("modified path puts 1/d on the first edge") {
    const Graph g = make_modified_path(10, 4.0);
    CHECK(g.edges()[0].w == doctest::Approx(0.25));
    for (std::size_t e = 1; e < g.edges().size(); ++e) CHECK(g.edges()[e].w == 1.0);
    CHECK(make_modified_path(10, 1.0) == make_path(10));
    CHECK_THROWS_AS(make_modified_path(10, 0.0), ValidationError);
}

TEST_CASE("deterministic generators have the expected structure") {
    const Graph ring = make_ring(12);
    for (Eigen::Index i = 0; i < 12; ++i) CHECK(ring.degrees()(i) == 2.0);
    CHECK(ring.edges().size() == 12);
    const Graph path = make_path(12);
    CHECK(path.edges().size() == 11);
}

TEST_CASE("random generators are seeded and connected") {
    for (const std::string kind : {"sensor", "community", "erdos_renyi", "random_regular"}) {
        CAPTURE(kind);
        const Graph a = generate(kind, 64, {}, 3);
        const Graph b = generate(kind, 64, {}, 3);
        const Graph c = generate(kind, 64, {}, 4);
        CHECK(a == b);
        CHECK_FALSE(a == c);
        CHECK(is_connected(a.size(), a.edges()));
        CHECK(a.seed() == std::optional<std::uint64_t>(3));
    }
}

TEST_CASE("random regular graphs are regular and simple") {
    const Graph g = make_random_regular(64, 6, 11);
    for (Eigen::Index i = 0; i < 64; ++i) CHECK(g.degrees()(i) == 6.0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : g.edges()) CHECK(seen.insert({e.i, e.j}).second);
    CHECK_THROWS_AS(make_random_regular(7, 3, 1), ValidationError);
}

TEST_CASE("sensor weights are Gaussian of distance and bounded by one") {
    const Graph g = make_sensor(100, 5);
    for (const auto& e : g.edges()) {
        CHECK(e.w > 0.0);
        CHECK(e.w <= 1.0);
    }
    for (const auto& nb : g.neighbors()) CHECK(nb.size() >= 8);
}

TEST_CASE("community graphs keep every community at two or more vertices") {
    const Graph g = make_community(300, 9, 2);
    CHECK(g.size() == 300);
    CHECK(g.kind().name == "community");
    CHECK_THROWS_AS(make_community(10, 6, 1), ValidationError);
}

TEST_CASE("generate validates kinds and parameters") {
    CHECK_THROWS_AS(generate("nope", 10), ValidationError);
    CHECK_THROWS_AS(generate("path", 10, {{"bogus", 1.0}}), ValidationError);
    CHECK(generate("modified_path", 10, {{"d", 10.0}}).edges()[0].w == doctest::Approx(0.1));
    CHECK(generate("modified_path", 10, {{"w12", 0.01}}).edges()[0].w == doctest::Approx(0.01));
    const Graph comet = generate("comet", 64);
    CHECK(comet.kind().params.at("k") == 53.0);
    CHECK(generator_kinds().size() == 8);
}

TEST_CASE("labels name the kind and parameters") {
    CHECK(make_path(5).label() == "path(n=5)");
    const std::string s = make_sensor(20, 9).label();
    CHECK(s.find("sensor(n=20") == 0);
    CHECK(s.find("seed=9") != std::string::npos);
}
