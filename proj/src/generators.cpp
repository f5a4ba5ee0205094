#include "gsu/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "gsu/error.hpp"

namespace gsu {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

std::size_t as_count(double v, const std::string& name) {
    require(std::isfinite(v) && v >= 0.0 && std::floor(v) == v, name + " must be a nonnegative integer");
    return static_cast<std::size_t>(v);
}

template <class Build>
Graph retry_until_connected(const std::string& kind, Build build) {
    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        auto [n, edges] = build(attempt);
        if (is_connected(n, edges)) return Graph(n, std::move(edges));
    }
    throw NumericalError(kind + ": no connected draw after " + std::to_string(kGeneratorRetries) + " attempts");
}

Graph with_kind(Graph g, GraphKind kind, std::optional<std::uint64_t> seed) {
    return Graph(g.size(), g.edges(), std::move(kind), seed);
}

}  // namespace

Graph make_path(std::size_t n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph(n, std::move(edges), GraphKind{"path", {}});
}

Graph make_modified_path(std::size_t n, double d) {
    require(n >= 2, "modified_path needs n >= 2");
    require(std::isfinite(d) && d > 0.0, "modified_path distance d must be positive");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, i == 0 ? 1.0 / d : 1.0});
    return Graph(n, std::move(edges), GraphKind{"modified_path", {{"d", d}}});
}

Graph make_ring(std::size_t n) {
    require(n >= 3, "ring needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return Graph(n, std::move(edges), GraphKind{"ring", {}});
}

Graph make_comet(std::size_t n, std::size_t k) {
    require(k >= 1, "comet needs k >= 1");
    require(n >= k + 2, "comet needs n >= k + 2");
    std::vector<Edge> edges;
    for (std::size_t leaf = 1; leaf <= k; ++leaf) edges.push_back({0, leaf, 1.0});
    std::size_t prev = 0;
    for (std::size_t v = k + 1; v < n; ++v) {
        edges.push_back({prev, v, 1.0});
        prev = v;
    }
    return Graph(n, std::move(edges), GraphKind{"comet", {{"k", static_cast<double>(k)}}});
}

Graph make_sensor(std::size_t n, std::uint64_t seed, std::size_t neighbors) {
    require(n > neighbors && neighbors >= 1, "sensor needs n > neighbors >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Graph g = retry_until_connected("sensor", [&](int) {
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = unit(rng);
            y[i] = unit(rng);
        }
        auto dist = [&](std::size_t a, std::size_t b) { return std::hypot(x[a] - x[b], y[a] - y[b]); };
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            order.erase(order.begin() + static_cast<std::ptrdiff_t>(i));
            std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(neighbors), order.end(),
                              [&](std::size_t a, std::size_t b) {
                                  const double da = dist(i, a), db = dist(i, b);
                                  return da != db ? da < db : a < b;
                              });
            for (std::size_t r = 0; r < neighbors; ++r) {
                const auto j = order[r];
                total += dist(i, j);
                pairs.insert({std::min(i, j), std::max(i, j)});
            }
        }
        const double sigma = total / static_cast<double>(n * neighbors);
        std::vector<Edge> edges;
        for (auto [a, b] : pairs) {
            const double d = dist(a, b);
            // Floor keeps coincident-far pairs strictly positive.
            edges.push_back({a, b, std::max(std::exp(-d * d / (sigma * sigma)), 1e-300)});
        }
        return std::pair{n, std::move(edges)};
    });
    return with_kind(std::move(g), GraphKind{"sensor", {{"neighbors", static_cast<double>(neighbors)}}}, seed);
}

Graph make_community(std::size_t n, std::size_t c, std::uint64_t seed, double p_in, double p_out, bool equal_sizes) {
    require(c >= 1, "community needs c >= 1");
    require(n >= 2 * c, "community needs n >= 2c");
    require(p_in > 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0, "community probabilities must lie in (0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Graph g = retry_until_connected("community", [&](int) {
        std::vector<std::size_t> sizes(c, n / c);
        if (equal_sizes) {
            for (std::size_t r = 0; r < n % c; ++r) ++sizes[r];
        } else {
            // Uniform random cut points, redrawn until every community has at least 2 vertices.
            std::uniform_int_distribution<std::size_t> cut(1, n - 1);
            for (int tries = 0;; ++tries) {
                std::vector<std::size_t> cuts(c - 1);
                for (auto& v : cuts) v = cut(rng);
                cuts.push_back(0);
                cuts.push_back(n);
                std::sort(cuts.begin(), cuts.end());
                bool ok = true;
                for (std::size_t r = 0; r < c; ++r) {
                    sizes[r] = cuts[r + 1] - cuts[r];
                    ok = ok && sizes[r] >= 2;
                }
                if (ok) break;
                if (tries > 10000) throw NumericalError("community: could not draw community sizes");
            }
        }
        std::vector<std::size_t> label(n);
        std::size_t v = 0;
        for (std::size_t r = 0; r < c; ++r)
            for (std::size_t s = 0; s < sizes[r]; ++s) label[v++] = r;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (unit(rng) < (label[i] == label[j] ? p_in : p_out)) edges.push_back({i, j, 1.0});
        return std::pair{n, std::move(edges)};
    });
    return with_kind(std::move(g),
                     GraphKind{"community",
                               {{"c", static_cast<double>(c)}, {"p_in", p_in}, {"p_out", p_out},
                                {"equal", equal_sizes ? 1.0 : 0.0}}},
                     seed);
}

Graph make_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    require(n >= 2, "erdos_renyi needs n >= 2");
    require(p > 0.0 && p <= 1.0, "erdos_renyi needs p in (0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Graph g = retry_until_connected("erdos_renyi", [&](int) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (unit(rng) < p) edges.push_back({i, j, 1.0});
        return std::pair{n, std::move(edges)};
    });
    return with_kind(std::move(g), GraphKind{"erdos_renyi", {{"p", p}}}, seed);
}

Graph make_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
    require(degree >= 1 && degree < n, "random_regular needs 1 <= deg < n");
    require((n * degree) % 2 == 0, "random_regular needs n*deg even");
    std::mt19937_64 rng(seed);
    // Pairing model with incremental rejection of loops and repeated pairs; restart when stuck.
    Graph g = retry_until_connected("random_regular", [&](int) {
        std::vector<Edge> edges;
        for (int restart = 0; restart < 1000; ++restart) {
            std::vector<std::size_t> stubs;
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t r = 0; r < degree; ++r) stubs.push_back(v);
            std::set<std::pair<std::size_t, std::size_t>> used;
            edges.clear();
            bool stuck = false;
            while (!stubs.empty() && !stuck) {
                bool paired = false;
                for (int tries = 0; tries < 100 && !paired; ++tries) {
                    std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
                    const auto a = pick(rng), b = pick(rng);
                    const auto u = stubs[a], v = stubs[b];
                    if (a == b || u == v || used.count({std::min(u, v), std::max(u, v)})) continue;
                    used.insert({std::min(u, v), std::max(u, v)});
                    edges.push_back({std::min(u, v), std::max(u, v), 1.0});
                    stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)));
                    stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)));
                    paired = true;
                }
                stuck = !paired;
            }
            if (!stuck) break;
            edges.clear();
        }
        return std::pair{n, std::move(edges)};
    });
    return with_kind(std::move(g), GraphKind{"random_regular", {{"deg", static_cast<double>(degree)}}}, seed);
}

std::vector<std::string> generator_kinds() {
    return {"path", "modified_path", "ring", "comet", "sensor", "community", "erdos_renyi", "random_regular"};
}

Graph generate(std::string_view kind, std::size_t n, const ParamMap& params, std::uint64_t seed) {
    auto allow = [&](std::initializer_list<const char*> keys) {
        for (const auto& [key, value] : params) {
            if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
                throw ValidationError("unknown parameter '" + key + "' for " + std::string(kind));
        }
    };
    auto get = [&](const char* key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    const double nn = static_cast<double>(n);
    if (kind == "path") {
        allow({});
        return make_path(n);
    }
    if (kind == "modified_path") {
        allow({"d", "w12"});
        require(!(params.count("d") && params.count("w12")), "give either d or w12, not both");
        const double d = params.count("w12") ? 1.0 / get("w12", 1.0) : get("d", 1.0);
        return make_modified_path(n, d);
    }
    if (kind == "ring") {
        allow({});
        return make_ring(n);
    }
    if (kind == "comet") {
        allow({"k"});
        require(n >= 12 || params.count("k"), "comet with n < 12 needs an explicit k");
        return make_comet(n, as_count(get("k", nn - 11.0), "k"));
    }
    if (kind == "sensor") {
        allow({"neighbors"});
        return make_sensor(n, seed, as_count(get("neighbors", 8.0), "neighbors"));
    }
    if (kind == "community") {
        allow({"c", "p_in", "p_out", "equal"});
        const auto c = as_count(get("c", std::floor(std::sqrt(nn) / 2.0) + 1.0), "c");
        return make_community(n, c, seed, get("p_in", 0.3), get("p_out", 0.01), get("equal", 0.0) != 0.0);
    }
    if (kind == "erdos_renyi") {
        allow({"p"});
        return make_erdos_renyi(n, get("p", 2.0 * std::log(nn) / nn), seed);
    }
    if (kind == "random_regular") {
        allow({"deg"});
        return make_random_regular(n, as_count(get("deg", 6.0), "deg"), seed);
    }
    throw ValidationError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace gsu
