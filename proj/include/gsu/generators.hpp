#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsu/graph.hpp"

namespace gsu {

// Attempts made by random generators before giving up on connectivity.
inline constexpr int kGeneratorRetries = 200;

Graph make_path(std::size_t n);
// Path whose first edge has weight 1/d.
Graph make_modified_path(std::size_t n, double d);
Graph make_ring(std::size_t n);
// Star of k leaves around vertex 0 plus a tail of n-1-k vertices hanging off the center.
Graph make_comet(std::size_t n, std::size_t k);
Graph make_sensor(std::size_t n, std::uint64_t seed, std::size_t neighbors = 8);
// c communities; sizes drawn at random unless equal_sizes is set.
Graph make_community(std::size_t n, std::size_t c, std::uint64_t seed, double p_in = 0.3, double p_out = 0.01,
                     bool equal_sizes = false);
Graph make_erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph make_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

std::vector<std::string> generator_kinds();

// Dispatch by name. Unknown parameters are rejected; missing ones take defaults:
// modified_path d=1, comet k=n-11 (tail of 10), community c=floor(sqrt(n)/2)+1,
// erdos_renyi p=2ln(n)/n, random_regular deg=6.
Graph generate(std::string_view kind, std::size_t n, const ParamMap& params = {}, std::uint64_t seed = 0);

}  // namespace gsu
