#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "gsu/error.hpp"

namespace gsu {

// Order p of an l^p norm, p in [1, inf].
class PNorm {
public:
    explicit PNorm(double p);
    static PNorm infinity() { return PNorm(std::numeric_limits<double>::infinity()); }
    // Accepts "inf", "infinity", a number, or a ratio such as "4/3".
    static PNorm parse(std::string_view text);

    double value() const { return p_; }
    bool is_infinite() const { return std::isinf(p_); }
    // 1/p (0 for p = inf).
    double reciprocal() const { return is_infinite() ? 0.0 : 1.0 / p_; }
    // q with 1/p + 1/q = 1.
    PNorm conjugate() const;
    std::string to_string() const;

    bool operator==(const PNorm&) const = default;

private:
    double p_;
};

// Entrywise magnitudes of a vector or matrix, flattened column-major.
template <class Derived>
Eigen::ArrayXd magnitudes(const Eigen::MatrixBase<Derived>& x) {
    Eigen::ArrayXd mag(x.size());
    Eigen::Index k = 0;
    for (Eigen::Index c = 0; c < x.cols(); ++c)
        for (Eigen::Index r = 0; r < x.rows(); ++r) mag(k++) = std::abs(x(r, c));
    return mag;
}

double norm_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag, PNorm p);

// l^p norm over every entry of a vector or matrix.
template <class Derived>
double norm(const Eigen::MatrixBase<Derived>& x, PNorm p) {
    return norm_of_magnitudes(magnitudes(x), p);
}

inline constexpr double kSupportTolerance = 1e-10;

// Entries with |x| > 1e-10 * max|x|.
std::size_t support_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag);

template <class Derived>
std::size_t support(const Eigen::MatrixBase<Derived>& x) {
    return support_of_magnitudes(magnitudes(x));
}

// s_p = ||x||_2/||x||_p for p <= 2, ||x||_p/||x||_2 for p > 2.
double sparsity_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag, PNorm p);

template <class Derived>
double sparsity(const Eigen::MatrixBase<Derived>& x, PNorm p) {
    return sparsity_of_magnitudes(magnitudes(x), p);
}

enum class EntropyMode { strict, normalize };

inline constexpr double kUnitNormTolerance = 1e-8;

// -sum |x|^2 ln |x|^2. Strict mode rejects ||x||_2 != 1; normalize mode rescales first.
double entropy_of_magnitudes(const Eigen::Ref<const Eigen::ArrayXd>& mag, EntropyMode mode);

template <class Derived>
double entropy(const Eigen::MatrixBase<Derived>& x, EntropyMode mode = EntropyMode::strict) {
    return entropy_of_magnitudes(magnitudes(x), mode);
}

}  // namespace gsu
