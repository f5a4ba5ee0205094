#include <doctest.h>

#include <set>

#include "properties.hpp"

TEST_CASE("randomized invariants hold on 1000 cases each") {
    for (const auto& r : testing::property_suites(1000, 2024)) {
        CAPTURE(r.name);
        CAPTURE(r.worst);
        CHECK(r.cases == 1000);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("random graphs are connected and varied") {
    std::mt19937_64 rng(5);
    std::set<std::size_t> sizes;
    for (int t = 0; t < 200; ++t) {
        const gsu::Graph g = testing::random_graph(rng);
        sizes.insert(g.size());
        CHECK(gsu::is_connected(g.size(), g.edges()));
    }
    CHECK(sizes.size() > 10);
}

TEST_CASE("a broken invariant is reported") {
    const auto r = testing::run_suite("always off", 10, 1, [](const testing::Case&, std::mt19937_64&) { return 1.0; });
    CHECK(r.failures == 10);
    CHECK(r.worst == 1.0);
}
