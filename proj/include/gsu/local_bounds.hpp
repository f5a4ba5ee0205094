#pragma once

#include <vector>

#include "gsu/frames.hpp"
#include "gsu/graph.hpp"

namespace gsu {

// Relative tolerance under which two maxima count as tied; ties go to the lowest index.
inline constexpr double kArgmaxTieTolerance = 1e-12;

// Index of the largest entry, lowest index among near-ties.
std::size_t tolerant_argmax(const Eigen::Ref<const Eigen::VectorXd>& values);

struct ProductLocalization {
    Complex via_product;  // sqrt(N) T_i(g h)(j)
    Complex direct;       // <T_i g, T_j h>
    double difference;    // |via_product - direct|
};

ProductLocalization kernel_product_localization(const SpectralBasis& b, const Eigen::VectorXd& g,
                                                const Eigen::VectorXd& h, std::size_t i, std::size_t j);

// N x K matrix whose column k is T_{i0}(g_{k0} g_k).
Eigen::MatrixXcd product_localizations(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0);

// Analysis coefficients of the atom T_{i0} g_{k0}.
Coefficients ambiguity(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0);

struct LocalBoundReport {
    std::size_t i0 = 0;
    std::size_t k0 = 0;
    PNorm p{2.0};
    double sp = 0.0;           // s_p(A T_{i0} g_{k0})
    double bound_mid = 0.0;    // B^min(1/p,1-1/p) ||T_ĩ g_k̃||_2^|1-2/p| / sqrt(A)
    double bound_outer = 0.0;  // same with sqrt(N) nu_ĩ ||g_k̃||_2
    double lower = 0.0;        // ||T_{i0} g_{k0}||_2 / sqrt(B) for p = inf, NaN otherwise
    std::size_t k_tilde = 0;
    std::size_t i_tilde = 0;
    std::size_t hop = 0;  // h_G(i0, ĩ)

    // lower <= sp (p = inf only) <= bound_mid <= bound_outer within tolerance.
    bool chain_holds(double tol = kBoundSlackTolerance) const;
};

// Needs A > 0 and a nonzero atom.
LocalBoundReport local_bound(const SpectralBasis& b, const FilterBank& bank, const Graph& g, std::size_t i0,
                             std::size_t k0, PNorm p);

// Every (i0, k0), ordered by i0 then k0. Zero atoms are skipped.
std::vector<LocalBoundReport> local_bounds_all(const SpectralBasis& b, const FilterBank& bank, const Graph& g, PNorm p);

struct TightnessHypotheses {
    bool tight_frame = false;
    bool k0_is_argmax = false;
    bool i0_is_argmax = false;

    bool all() const { return tight_frame && k0_is_argmax && i0_is_argmax; }
};

TightnessHypotheses tightness_hypotheses(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0);

// ||T_j g^2||_p / ||T_j g^2||_2.
double overlap(const SpectralBasis& b, const Eigen::VectorXd& g, std::size_t j, PNorm p);

enum class SpreadFamily { heat, wavelet };

SpreadFamily parse_spread_family(const std::string& s);

// heat: exp(-10 a lambda / lambda_max); wavelet: sqrt(40) a lambda exp(-40 a lambda / lambda_max).
KernelSpec spread_kernel(SpreadFamily family, double a);

struct SpreadRow {
    double dilation = 0.0;
    double mean_relative_error = 0.0;  // mean_i (||T_i g||_inf - |T_i g(i)|) / ||T_i g||_inf
    double mean_hop = 0.0;             // mean_i h(ĩ, i)
    std::size_t max_hop = 0;
};

std::vector<SpreadRow> localization_spread_stats(const SpectralBasis& b, const Graph& g, SpreadFamily family,
                                                 const std::vector<double>& dilations);

// Same statistics for one fixed kernel.
SpreadRow localization_spread(const SpectralBasis& b, const Graph& g, const Eigen::VectorXd& kernel, double dilation);

}  // namespace gsu
