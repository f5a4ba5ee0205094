#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "gsu/spectral.hpp"

namespace testing {

inline Eigen::VectorXd random_real(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gauss(rng);
    return v;
}

inline gsu::Signal random_complex(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    gsu::Signal v(static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gsu::Complex(gauss(rng), gauss(rng));
    return v;
}

inline gsu::Signal random_unit(std::size_t n, std::mt19937_64& rng) {
    gsu::Signal v = gsu::to_signal(random_real(n, rng));
    return v / v.norm();
}

inline gsu::Signal delta(std::size_t n, std::size_t i) {
    gsu::Signal v = gsu::Signal::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
}

// Sparse random signal: a few nonzero entries, exercising the support bounds.
inline gsu::Signal random_sparse(std::size_t n, std::size_t nnz, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::normal_distribution<double> gauss;
    gsu::Signal v = gsu::Signal::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < nnz; ++k) v(static_cast<Eigen::Index>(pick(rng))) = gauss(rng);
    if (v.norm() == 0.0) v(0) = 1.0;
    return v / v.norm();
}

}  // namespace testing
