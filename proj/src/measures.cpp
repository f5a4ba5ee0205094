#include "gsu/measures.hpp"

#include <charconv>
#include <string>

#include "gsu/format.hpp"

namespace gsu {

namespace {

double parse_number(std::string_view s) {
    std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) throw ValidationError("cannot parse p = '" + buf + "'");
    return v;
}

}  // namespace

PNorm::PNorm(double p) : p_(p) {
    if (std::isnan(p) || p < 1.0) throw ValidationError("p must lie in [1, inf], got " + format_short(p));
}

PNorm PNorm::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const double num = parse_number(text.substr(0, slash));
        const double den = parse_number(text.substr(slash + 1));
        if (den == 0.0) throw ValidationError("p has zero denominator");
        return PNorm(num / den);
    }
    return PNorm(parse_number(text));
}

PNorm PNorm::conjugate() const {
    if (is_infinite()) return PNorm(1.0);
    if (p_ == 1.0) return infinity();
    return PNorm(p_ / (p_ - 1.0));
}

std::string PNorm::to_string() const { return is_infinite() ? "inf" : format_double(p_); }

double norm_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag, PNorm p) {
    if (!mag.allFinite()) throw ValidationError("norm of non-finite entries");
    if (mag.size() == 0) return 0.0;
    const double peak = mag.maxCoeff();
    if (p.is_infinite() || peak == 0.0) return peak;
    if (p.value() == 1.0) return mag.sum();
    if (p.value() == 2.0) return std::sqrt(mag.square().sum());
    // Scaled to avoid overflow and underflow at large p.
    return peak * std::pow((mag / peak).pow(p.value()).sum(), 1.0 / p.value());
}

std::size_t support_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag) {
    if (!mag.allFinite()) throw ValidationError("support of non-finite entries");
    if (mag.size() == 0) return 0;
    const double tol = kSupportTolerance * mag.maxCoeff();
    return static_cast<std::size_t>((mag > tol).count());
}

double sparsity_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag, PNorm p) {
    const double two = norm_of_magnitudes(mag, PNorm(2.0));
    if (two == 0.0) throw ValidationError("sparsity of a zero signal is undefined");
    const double np = norm_of_magnitudes(mag, p);
    return (p.is_infinite() || p.value() > 2.0) ? np / two : two / np;
}

double entropy_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag, EntropyMode mode) {
    double energy = norm_of_magnitudes(mag, PNorm(2.0));
    if (mode == EntropyMode::strict) {
        if (std::abs(energy - 1.0) > kUnitNormTolerance)
            throw ValidationError("entropy needs a unit-norm signal, got norm " + format_double(energy));
        energy = 1.0;
    } else if (energy == 0.0) {
        throw ValidationError("entropy of a zero signal is undefined");
    }
    double h = 0.0;
    for (Eigen::Index n = 0; n < mag.size(); ++n) {
        const double a = mag(n) / energy;
        const double a2 = a * a;
        if (a2 > 0.0) h -= a2 * std::log(a2);
    }
    return h;
}

}  // namespace gsu
