#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsu/graph.hpp"
#include "gsu/spectral.hpp"

namespace gsu {

// Mixes (master, stream, offset) into an independent 64-bit seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t offset);

// x = igft(h .* gft(w)), w standard normal from seed.
Eigen::VectorXd smooth_signal(const SpectralBasis& b, const Eigen::VectorXd& h, std::uint64_t seed);

enum class ProbeNorm {
    squared_kernel,  // p_i proportional to ||T_i g^2||_2
    kernel,          // p_i proportional to ||T_i g||_2
};

// Needs a nonnegative kernel.
Eigen::VectorXd sampling_distribution(const SpectralBasis& b, const Eigen::VectorXd& g,
                                      ProbeNorm mode = ProbeNorm::squared_kernel);

struct SamplingMask {
    std::vector<std::size_t> indices;  // strictly increasing

    std::size_t size() const { return indices.size(); }
};

// m weighted draws without replacement, renormalizing after each; falls back to
// uniform over the remaining vertices once their weight is exhausted.
SamplingMask draw_mask(const Eigen::VectorXd& p, std::size_t m, std::uint64_t seed);

inline constexpr double kInpaintResidualTolerance = 1e-8;

// argmin x^T L x subject to x[mask] = y; y is listed in mask order.
Eigen::VectorXd inpaint(const Eigen::MatrixXd& L, const SamplingMask& mask, const Eigen::VectorXd& y);

enum class Strategy { uniform, nonuniform };
std::string to_string(Strategy s);

struct ExperimentConfig {
    std::string kind = "sensor";
    std::size_t n = 300;
    ParamMap params;
    std::vector<double> ratios;
    std::size_t trials = 20;
    std::uint64_t seed = 7;
    double probe_scale = 10.0;    // probe kernel exp(-probe_scale lambda / lambda_max)
    double lowpass_scale = 100.0;  // signal kernel 1 / (1 + lowpass_scale lambda / lambda_max)
    ProbeNorm probe = ProbeNorm::squared_kernel;
    unsigned threads = 1;
};

struct ExperimentResult {
    std::string kind;
    std::uint64_t seed = 0;  // graph seed of the trial
    std::size_t trial = 0;
    double ratio = 0.0;
    Strategy strategy = Strategy::uniform;
    double error = 0.0;  // ||x - x*||_2 / ||x*||_2
};

// Ordered by trial, then ratio, then strategy; independent of thread count.
std::vector<ExperimentResult> run_experiment(const ExperimentConfig& config);

struct ExperimentSummary {
    double ratio = 0.0;
    Strategy strategy = Strategy::uniform;
    double mean_error = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
};

std::vector<ExperimentSummary> summarize(const std::vector<ExperimentResult>& results);

struct SignTest {
    std::size_t wins = 0;  // nonuniform error strictly smaller
    std::size_t losses = 0;
    std::size_t ties = 0;
    double p_value = 1.0;  // one-sided exact binomial, ties dropped
};

// Pairs uniform and nonuniform results sharing (trial, ratio). ratio < 0 pools every ratio.
SignTest paired_sign_test(const std::vector<ExperimentResult>& results, double ratio = -1.0);

}  // namespace gsu
