#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gsu/frames.hpp"
#include "gsu/plot.hpp"

namespace gsu {

inline constexpr std::array<BankDesign, 4> kTable1Designs = {BankDesign::gabor_uniform, BankDesign::gabor_adapted,
                                                             BankDesign::wavelet_log, BankDesign::wavelet_adapted};

// max_{i,k} ||T_i g_k||_2 / sqrt(N) for a named design.
double table1_value(const SpectralBasis& b, BankDesign design, std::size_t K);

struct Table1Options {
    std::size_t n = 64;
    std::size_t K = 16;
    std::vector<std::uint64_t> seeds = {1, 2, 3};
    bool ring_dft = false;
    std::size_t comet_k = 0;  // 0: n - 11
};

struct Table1Row {
    std::string graph;
    std::size_t samples = 1;  // graphs averaged (random kinds use one per seed)
    double mu = 0.0;
    std::array<double, 4> bound{};  // in kTable1Designs order
};

// Ring, sensor, random regular, Erdős–Rényi, comet, path, modified path W12=0.1 and 0.01.
std::vector<Table1Row> repro_table1(const Table1Options& options);

struct ModifiedPathRow {
    double d = 1.0;
    double mu = 0.0;
    double lp_rhs = 0.0;        // mu^(1-2/p) with p = 1
    double lp_first = 0.0;      // ||delta_1||_1 ||hat delta_1||_1
    double lp_last = 0.0;       // same for delta_N
    double global_bound = 0.0;  // frame bound on s_inf, gabor_uniform
    double local_first = 0.0;   // local bound_mid at (i0 = 1, k0 = 0), p = inf
    double local_last = 0.0;    // local bound_mid at (i0 = N, k0 = 0), p = inf
    double sinf_first = 0.0;
    double sinf_last = 0.0;
};

// Log grid from 1 to 1000 merged with {11, 17, 27, 81}.
std::vector<double> default_distance_grid();

std::vector<ModifiedPathRow> repro_modified_path(std::size_t n, const std::vector<double>& distances, std::size_t K = 16);

std::vector<PlotSeries> modified_path_series(const std::vector<ModifiedPathRow>& rows);

}  // namespace gsu
