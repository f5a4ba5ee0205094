#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "gsu/graph.hpp"

namespace gsu {

using Complex = std::complex<double>;
using Signal = Eigen::VectorXcd;

inline constexpr double kEigenvalueClamp = 1e-10;

// Laplacian eigenvalues (ascending, lambda_0 clamped to 0) and orthonormal
// eigenvectors as columns. Immutable once built.
class SpectralBasis {
public:
    SpectralBasis(Eigen::VectorXd eigenvalues, Eigen::MatrixXcd eigenvectors, bool real);

    std::size_t size() const { return static_cast<std::size_t>(eigenvalues_.size()); }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
    double lambda_max() const { return eigenvalues_(eigenvalues_.size() - 1); }
    // Smallest eigenvalue above the clamp.
    double lambda_min_nonzero() const;
    bool is_real() const { return real_; }

    // nu_i = max_l |u_l(i)|, mu = max_i nu_i.
    const Eigen::VectorXd& nu() const { return nu_; }
    double mu() const { return mu_; }
    // Lowest (vertex, mode) pair achieving mu.
    std::size_t coherence_vertex() const { return coherence_vertex_; }
    std::size_t coherence_mode() const { return coherence_mode_; }

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
    bool real_;
    Eigen::VectorXd nu_;
    double mu_ = 0.0;
    std::size_t coherence_vertex_ = 0;
    std::size_t coherence_mode_ = 0;
};

// Symmetric eigendecomposition. Each eigenvector is flipped so that its first
// entry of largest magnitude is nonnegative.
SpectralBasis eigendecompose(const Eigen::MatrixXd& L);

// Complex exponential basis of a uniformly weighted ring, modes ordered
// 0, 1, N-1, 2, N-2, ...
SpectralBasis ring_dft_basis(const Graph& ring);

struct BasisOptions {
    LaplacianVariant variant = LaplacianVariant::combinatorial;
    bool ring_dft = false;
};

SpectralBasis compute_basis(const Graph& g, const BasisOptions& options = {});

Signal gft(const SpectralBasis& b, const Signal& f);
Signal igft(const SpectralBasis& b, const Signal& fhat);

struct Coherence {
    double mu;
    Eigen::VectorXd nu;
};

Coherence coherence(const SpectralBasis& b);

// Sum_l h(lambda_l) u_l u_l^H for real samples h.
Eigen::MatrixXcd spectral_operator(const SpectralBasis& b, const Eigen::VectorXd& h);

Signal to_signal(const Eigen::VectorXd& x);

}  // namespace gsu
