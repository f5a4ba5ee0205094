#include "gsu/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "gsu/error.hpp"
#include "gsu/format.hpp"

namespace gsu {

namespace {

using Params = std::map<std::string, double>;

Params parse_params(const std::string& body) {
    Params out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("kernel parameter '" + item + "' needs key=value");
        const std::string value = item.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (value.empty() || *end != '\0' || !std::isfinite(v))
            throw ValidationError("kernel parameter '" + item + "' is not a finite number");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

double take(Params& p, const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (!fallback) throw ValidationError("kernel parameter '" + key + "' is required");
        return *fallback;
    }
    const double v = it->second;
    p.erase(it);
    return v;
}

struct Evaluator {
    double lambda;
    double lambda_max;
    const Eigen::VectorXd& eigenvalues;
    std::size_t index;

    double operator()(const HeatSpec& s) const {
        return std::exp(-s.tau * (s.normalized ? lambda / lambda_max : lambda));
    }
    double operator()(const GaussianSpec& s) const {
        const double x = lambda * s.tau / lambda_max;
        return std::exp(-x * x);
    }
    double operator()(const LowPassSpec& s) const { return 1.0 / (1.0 + s.c * lambda / lambda_max); }
    double operator()(const WaveletSpec& s) const {
        return std::sqrt(40.0) * s.a * lambda * std::exp(-40.0 * s.a * lambda / lambda_max);
    }
    double operator()(const MotherSpec& s) const { return mother_window((lambda - s.center) / s.width); }
    double operator()(const RectSpec& s) const { return (lambda >= s.lo && lambda <= s.hi) ? 1.0 : 0.0; }
    double operator()(const ConstantSpec& s) const { return s.value; }
    double operator()(const TableSpec& s) const { return s.values[index]; }
    double operator()(const WarpedSpec&) const { throw std::logic_error("warped kernels are sampled in bulk"); }
};

}  // namespace

double mother_window(double t) {
    if (!(std::abs(t) <= 0.5)) return 0.0;
    const double c = std::cos(std::numbers::pi * t);
    return std::sin(0.5 * std::numbers::pi * c * c);
}

std::string to_string(WarpKind w) {
    switch (w) {
        case WarpKind::identity: return "identity";
        case WarpKind::spectrum_cdf: return "spectrum_cdf";
        case WarpKind::log: return "log";
        case WarpKind::log_spectrum_cdf: return "log_spectrum_cdf";
    }
    return "identity";
}

WarpKind parse_warp(const std::string& s) {
    for (auto w : {WarpKind::identity, WarpKind::spectrum_cdf, WarpKind::log, WarpKind::log_spectrum_cdf})
        if (s == to_string(w)) return w;
    throw ValidationError("unknown warp '" + s + "'");
}

Warp::Warp(WarpKind kind, const Eigen::VectorXd& eigenvalues) : kind_(kind) {
    const auto n = eigenvalues.size();
    if (n < 2) throw ValidationError("warp needs at least two eigenvalues");
    lambda_max_ = eigenvalues(n - 1);
    if (!(lambda_max_ > 0.0) || !std::isfinite(lambda_max_)) throw NumericalError("warp needs a positive finite lambda_max");

    if (kind_ == WarpKind::spectrum_cdf || kind_ == WarpKind::log_spectrum_cdf) {
        // Eigenvalues closer than 1e-8 lambda_max share one knot placed at their mean rank.
        const double tol = 1e-8 * lambda_max_;
        Eigen::Index a = 0;
        while (a < n) {
            Eigen::Index b = a;
            double sum = eigenvalues(a);
            while (b + 1 < n && eigenvalues(b + 1) - eigenvalues(a) <= tol) sum += eigenvalues(++b);
            knot_x_.push_back(sum / static_cast<double>(b - a + 1));
            knot_y_.push_back(lambda_max_ * 0.5 * static_cast<double>(a + b) / static_cast<double>(n - 1));
            a = b + 1;
        }
        knot_x_.front() = 0.0;
        knot_y_.front() = 0.0;
        knot_x_.back() = lambda_max_;
        knot_y_.back() = lambda_max_;
        if (knot_x_.size() < 2) throw NumericalError("spectrum is degenerate; cannot build a CDF warp");
    }
    if (kind_ == WarpKind::log || kind_ == WarpKind::log_spectrum_cdf) {
        double first = 0.0;
        for (Eigen::Index l = 0; l < n; ++l)
            if (eigenvalues(l) > kEigenvalueClamp) {
                first = eigenvalues(l);
                break;
            }
        if (!(first > 0.0)) throw NumericalError("log warp needs a nonzero eigenvalue");
        log_first_ = kind_ == WarpKind::log ? first : cdf(first);
        if (!(log_first_ > 0.0) || !std::isfinite(log_first_)) throw NumericalError("log warp scale is not finite");
    }
}

double Warp::cdf(double lambda) const {
    if (lambda <= knot_x_.front()) return knot_y_.front();
    if (lambda >= knot_x_.back()) return knot_y_.back();
    const auto it = std::upper_bound(knot_x_.begin(), knot_x_.end(), lambda);
    const auto hi = static_cast<std::size_t>(it - knot_x_.begin());
    const auto lo = hi - 1;
    const double t = (lambda - knot_x_[lo]) / (knot_x_[hi] - knot_x_[lo]);
    return knot_y_[lo] + t * (knot_y_[hi] - knot_y_[lo]);
}

double Warp::log_map(double x, double first) const {
    return lambda_max_ * std::log1p(x / first) / std::log1p(lambda_max_ / first);
}

double Warp::operator()(double lambda) const {
    double y = lambda;
    switch (kind_) {
        case WarpKind::identity: break;
        case WarpKind::spectrum_cdf: y = cdf(lambda); break;
        case WarpKind::log: y = log_map(std::max(lambda, 0.0), log_first_); break;
        case WarpKind::log_spectrum_cdf: y = log_map(cdf(lambda), log_first_); break;
    }
    if (!std::isfinite(y)) throw NumericalError("warp produced a non-finite value");
    return y;
}

std::string describe(const KernelSpec& spec) {
    struct Visitor {
        std::string operator()(const HeatSpec& s) const {
            return "heat:tau=" + format_double(s.tau) + (s.normalized ? ",normalized=1" : "");
        }
        std::string operator()(const GaussianSpec& s) const { return "gaussian:tau=" + format_double(s.tau); }
        std::string operator()(const LowPassSpec& s) const { return "lowpass:c=" + format_double(s.c); }
        std::string operator()(const WaveletSpec& s) const { return "wavelet:a=" + format_double(s.a); }
        std::string operator()(const MotherSpec& s) const {
            return "mother:center=" + format_double(s.center) + ",width=" + format_double(s.width);
        }
        std::string operator()(const RectSpec& s) const {
            return "rect:lo=" + format_double(s.lo) + ",hi=" + format_double(s.hi);
        }
        std::string operator()(const ConstantSpec& s) const { return "constant:value=" + format_double(s.value); }
        std::string operator()(const TableSpec&) const { return "table"; }
        std::string operator()(const WarpedSpec& s) const {
            return "warped:warp=" + to_string(s.warp) + ";" + describe(*s.inner);
        }
    };
    return std::visit(Visitor{}, spec.form);
}

KernelSpec parse_kernel_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "warped") {
        const auto semi = body.find(';');
        if (semi == std::string::npos) throw ValidationError("warped kernel needs 'warp=<kind>;<inner kernel>'");
        const std::string head = body.substr(0, semi);
        if (head.rfind("warp=", 0) != 0) throw ValidationError("warped kernel needs 'warp=<kind>' first");
        auto inner = std::make_shared<const KernelSpec>(parse_kernel_spec(body.substr(semi + 1)));
        if (std::holds_alternative<WarpedSpec>(inner->form)) throw ValidationError("warped kernels cannot be nested");
        return KernelSpec{WarpedSpec{parse_warp(head.substr(5)), std::move(inner)}};
    }
    if (name == "table") throw ValidationError("table kernels are only read from bank files");
    Params p = parse_params(body);
    KernelSpec spec;
    if (name == "heat") spec.form = HeatSpec{take(p, "tau", 1.0), take(p, "normalized", 0.0) != 0.0};
    else if (name == "gaussian") spec.form = GaussianSpec{take(p, "tau", 1.0)};
    else if (name == "lowpass") spec.form = LowPassSpec{take(p, "c", 100.0)};
    else if (name == "wavelet") spec.form = WaveletSpec{take(p, "a", 1.0)};
    else if (name == "mother") spec.form = MotherSpec{take(p, "center"), take(p, "width")};
    else if (name == "rect") spec.form = RectSpec{take(p, "lo"), take(p, "hi")};
    else if (name == "constant") spec.form = ConstantSpec{take(p, "value", 1.0)};
    else throw ValidationError("unknown kernel '" + name + "'");
    if (!p.empty()) throw ValidationError("unknown parameter '" + p.begin()->first + "' for kernel " + name);
    if (auto* m = std::get_if<MotherSpec>(&spec.form); m && !(m->width > 0.0))
        throw ValidationError("mother kernel width must be positive");
    return spec;
}

Eigen::VectorXd sample_kernel(const KernelSpec& spec, const SpectralBasis& b) {
    const Eigen::VectorXd& lam = b.eigenvalues();
    const auto n = lam.size();
    Eigen::VectorXd out(n);
    if (const auto* t = std::get_if<TableSpec>(&spec.form)) {
        if (static_cast<Eigen::Index>(t->values.size()) != n)
            throw ValidationError("table kernel has " + std::to_string(t->values.size()) + " values, expected " +
                                  std::to_string(n));
    }
    if (const auto* w = std::get_if<WarpedSpec>(&spec.form)) {
        if (!w->inner) throw ValidationError("warped kernel has no inner kernel");
        if (std::holds_alternative<TableSpec>(w->inner->form) || std::holds_alternative<WarpedSpec>(w->inner->form))
            throw ValidationError("only analytic kernels can be warped");
        const Warp warp(w->warp, lam);
        for (Eigen::Index l = 0; l < n; ++l) {
            out(l) = std::visit(Evaluator{warp(lam(l)), b.lambda_max(), lam, static_cast<std::size_t>(l)},
                                w->inner->form);
        }
    } else {
        for (Eigen::Index l = 0; l < n; ++l)
            out(l) = std::visit(Evaluator{lam(l), b.lambda_max(), lam, static_cast<std::size_t>(l)}, spec.form);
    }
    if (!out.allFinite()) throw NumericalError("kernel " + describe(spec) + " has non-finite samples");
    return out;
}

Kernel::Kernel(KernelSpec spec, Eigen::VectorXd values) : spec_(std::move(spec)), values_(std::move(values)) {
    if (!values_.allFinite()) throw ValidationError("kernel samples must be finite");
}

Kernel Kernel::sample(const KernelSpec& spec, const SpectralBasis& b) { return Kernel(spec, sample_kernel(spec, b)); }

Kernel Kernel::table(Eigen::VectorXd values) {
    KernelSpec spec{TableSpec{std::vector<double>(values.data(), values.data() + values.size())}};
    return Kernel(std::move(spec), std::move(values));
}

}  // namespace gsu
