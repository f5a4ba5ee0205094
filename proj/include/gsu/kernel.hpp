#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gsu/spectral.hpp"

namespace gsu {

// sin((pi/2) cos^2(pi t)) on |t| <= 1/2, zero outside. w(t)^2 + w(t - 1/2)^2 = 1 on [0, 1/2].
double mother_window(double t);

enum class WarpKind { identity, spectrum_cdf, log, log_spectrum_cdf };

std::string to_string(WarpKind w);
WarpKind parse_warp(const std::string& s);

// Monotone map of [0, lambda_max] onto itself built from a spectrum.
class Warp {
public:
    Warp(WarpKind kind, const Eigen::VectorXd& eigenvalues);
    double operator()(double lambda) const;
    WarpKind kind() const { return kind_; }

private:
    double cdf(double lambda) const;
    double log_map(double x, double first) const;

    WarpKind kind_;
    double lambda_max_;
    double log_first_ = 1.0;  // lambda_1 (or its CDF image) for the log map
    std::vector<double> knot_x_;
    std::vector<double> knot_y_;
};

// exp(-tau lambda), or exp(-tau lambda / lambda_max) when normalized.
struct HeatSpec {
    double tau = 1.0;
    bool normalized = false;
};
// exp(-lambda^2 tau^2 / lambda_max^2).
struct GaussianSpec {
    double tau = 1.0;
};
// 1 / (1 + c lambda / lambda_max).
struct LowPassSpec {
    double c = 100.0;
};
// sqrt(40) a lambda exp(-40 a lambda / lambda_max).
struct WaveletSpec {
    double a = 1.0;
};
// w((lambda - center) / width).
struct MotherSpec {
    double center = 0.0;
    double width = 1.0;
};
// 1 on [lo, hi], 0 elsewhere.
struct RectSpec {
    double lo = 0.0;
    double hi = 0.0;
};
struct ConstantSpec {
    double value = 1.0;
};
// Samples over the spectrum, one per eigenvalue.
struct TableSpec {
    std::vector<double> values;
};

struct KernelSpec;

// inner(warp(lambda)).
struct WarpedSpec {
    WarpKind warp = WarpKind::identity;
    std::shared_ptr<const KernelSpec> inner;
};

struct KernelSpec {
    std::variant<HeatSpec, GaussianSpec, LowPassSpec, WaveletSpec, MotherSpec, RectSpec, ConstantSpec, TableSpec,
                 WarpedSpec>
        form;
};

// Text form, e.g. "heat:tau=1", "rect:lo=0,hi=0", "warped:warp=log;mother:center=0,width=2".
std::string describe(const KernelSpec& spec);
KernelSpec parse_kernel_spec(const std::string& text);

// A kernel with its samples over sigma(L).
class Kernel {
public:
    Kernel(KernelSpec spec, Eigen::VectorXd values);
    static Kernel sample(const KernelSpec& spec, const SpectralBasis& b);
    static Kernel table(Eigen::VectorXd values);

    const KernelSpec& spec() const { return spec_; }
    const Eigen::VectorXd& values() const { return values_; }
    std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

private:
    KernelSpec spec_;
    Eigen::VectorXd values_;
};

Eigen::VectorXd sample_kernel(const KernelSpec& spec, const SpectralBasis& b);

}  // namespace gsu
