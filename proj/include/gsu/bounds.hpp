#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsu/measures.hpp"
#include "gsu/spectral.hpp"

namespace gsu {

inline constexpr double kBoundSlackTolerance = 1e-9;

enum class Direction {
    at_least,  // lhs >= rhs
    at_most,   // lhs <= rhs
};

struct BoundContext {
    std::string graph_id;
    std::string signal_id;
    std::optional<double> p;
    std::optional<double> q;
};

struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Direction direction = Direction::at_least;
    // Positive when the inequality holds with room to spare.
    double slack = 0.0;
    bool holds = true;
    BoundContext context;

    static BoundReport make(std::string name, double lhs, double rhs, Direction direction, BoundContext context);
};

BoundContext with_p(BoundContext ctx, PNorm p);
BoundContext with_pq(BoundContext ctx, PNorm p, PNorm q);

// sqrt(|f|_0 |fhat|_0) >= 1/mu and (|f|_0 + |fhat|_0)/2 >= 1/mu.
std::vector<BoundReport> support_uncertainty(const SpectralBasis& b, const Signal& f, const BoundContext& ctx = {});

// ||f||_p ||fhat||_p >= mu^(1-2/p) ||f||_2^2, p in [1, 2].
BoundReport lp_uncertainty(const SpectralBasis& b, const Signal& f, PNorm p, const BoundContext& ctx = {});

// H(f) + H(fhat) >= -2 ln mu.
BoundReport entropic_uncertainty(const SpectralBasis& b, const Signal& f, EntropyMode mode = EntropyMode::strict,
                                 const BoundContext& ctx = {});

// sum_{VS} |f|^2 <= |VS| ||f||_inf^2 <= |VS| mu^2 ||fhat||_1^2, one report per link.
std::vector<BoundReport> local_folland(const SpectralBasis& b, const Signal& f, const std::vector<std::size_t>& subset,
                                       const BoundContext& ctx = {});

// ||fhat||_q vs mu^(1-2/q) ||f||_p (<= for p <= 2, >= for p >= 2), then
// s_p(f) s_q(fhat) <= mu^|1-2/q|.
std::vector<BoundReport> hausdorff_young(const SpectralBasis& b, const Signal& f, PNorm p, const BoundContext& ctx = {});

struct GlobalSelection {
    bool support = true;
    bool lp = true;
    bool entropic = true;
    bool folland = true;
    bool hausdorff_young = true;

    // "all" or a comma list of support,lp,entropic,folland,hausdorff_young.
    static GlobalSelection parse(const std::string& which);
};

// Runs the selected reports. lp is skipped when p > 2; an empty subset means all vertices.
std::vector<BoundReport> evaluate_global(const SpectralBasis& b, const Signal& f, const GlobalSelection& which, PNorm p,
                                         const std::vector<std::size_t>& subset, EntropyMode mode,
                                         const BoundContext& ctx = {});

}  // namespace gsu
