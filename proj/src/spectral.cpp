#include "gsu/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gsu/error.hpp"

namespace gsu {

namespace {

void check_length(const SpectralBasis& b, const Signal& f) {
    if (static_cast<std::size_t>(f.size()) != b.size())
        throw ValidationError("signal length " + std::to_string(f.size()) + " does not match graph size " +
                              std::to_string(b.size()));
}

}  // namespace

SpectralBasis::SpectralBasis(Eigen::VectorXd eigenvalues, Eigen::MatrixXcd eigenvectors, bool real)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)), real_(real) {
    const auto n = eigenvalues_.size();
    if (n < 1 || eigenvectors_.rows() != n || eigenvectors_.cols() != n)
        throw ValidationError("basis dimensions do not match");
    if (!eigenvalues_.allFinite() || !eigenvectors_.allFinite()) throw NumericalError("non-finite basis entries");
    for (Eigen::Index l = 0; l < n; ++l)
        if (std::abs(eigenvalues_(l)) < kEigenvalueClamp) eigenvalues_(l) = 0.0;
    if (eigenvalues_(0) < 0.0) throw ValidationError("Laplacian eigenvalues must be nonnegative");
    for (Eigen::Index l = 1; l < n; ++l)
        if (eigenvalues_(l) < eigenvalues_(l - 1)) throw ValidationError("eigenvalues must be nondecreasing");

    const Eigen::MatrixXd mag = eigenvectors_.cwiseAbs();
    nu_.resize(n);
    mu_ = -1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index l = 0;
        nu_(i) = mag.row(i).maxCoeff(&l);
        if (nu_(i) > mu_) {
            mu_ = nu_(i);
            coherence_vertex_ = static_cast<std::size_t>(i);
            coherence_mode_ = static_cast<std::size_t>(l);
        }
    }
}

double SpectralBasis::lambda_min_nonzero() const {
    for (Eigen::Index l = 0; l < eigenvalues_.size(); ++l)
        if (eigenvalues_(l) > 0.0) return eigenvalues_(l);
    throw NumericalError("spectrum has no nonzero eigenvalue");
}

SpectralBasis eigendecompose(const Eigen::MatrixXd& L) {
    if (L.rows() != L.cols() || L.rows() < 1) throw ValidationError("Laplacian must be square and nonempty");
    if (!L.allFinite()) throw ValidationError("Laplacian has non-finite entries");
    const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
    if ((L - L.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw ValidationError("Laplacian is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
    Eigen::MatrixXd U = solver.eigenvectors();
    for (Eigen::Index l = 0; l < U.cols(); ++l) {
        const double peak = U.col(l).cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < U.rows(); ++i) {
            if (std::abs(U(i, l)) >= peak * (1.0 - 1e-12)) {
                if (U(i, l) < 0.0) U.col(l) *= -1.0;
                break;
            }
        }
    }
    return SpectralBasis(solver.eigenvalues(), U.cast<Complex>(), true);
}

SpectralBasis ring_dft_basis(const Graph& ring) {
    const std::size_t n = ring.size();
    if (ring.edges().size() != n) throw ValidationError("ring DFT basis needs a ring graph");
    const double w = ring.edges().front().w;
    for (const auto& e : ring.edges()) {
        const bool consecutive = e.j == e.i + 1 || (e.i == 0 && e.j == n - 1);
        if (!consecutive || e.w != w) throw ValidationError("ring DFT basis needs a uniformly weighted ring");
    }
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::VectorXd lambda(N);
    Eigen::MatrixXcd U(N, N);
    for (Eigen::Index pos = 0; pos < N; ++pos) {
        // pos 0 -> 0, 1 -> 1, 2 -> N-1, 3 -> 2, 4 -> N-2, ...
        const Eigen::Index half = (pos + 1) / 2;
        const Eigen::Index k = (pos % 2 == 1 || pos == 0) ? half : N - half;
        lambda(pos) = 2.0 * w * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(half) / static_cast<double>(N)));
        for (Eigen::Index v = 0; v < N; ++v) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(k * v % N) / static_cast<double>(N);
            U(v, pos) = std::polar(1.0 / std::sqrt(static_cast<double>(N)), phase);
        }
    }
    return SpectralBasis(lambda, U, false);
}

SpectralBasis compute_basis(const Graph& g, const BasisOptions& options) {
    if (options.ring_dft) {
        if (options.variant != LaplacianVariant::combinatorial)
            throw ValidationError("ring DFT basis is only defined for the combinatorial Laplacian");
        return ring_dft_basis(g);
    }
    return eigendecompose(laplacian(g, options.variant));
}

Signal gft(const SpectralBasis& b, const Signal& f) {
    check_length(b, f);
    return b.eigenvectors().adjoint() * f;
}

Signal igft(const SpectralBasis& b, const Signal& fhat) {
    check_length(b, fhat);
    return b.eigenvectors() * fhat;
}

Coherence coherence(const SpectralBasis& b) { return {b.mu(), b.nu()}; }

Eigen::MatrixXcd spectral_operator(const SpectralBasis& b, const Eigen::VectorXd& h) {
    if (static_cast<std::size_t>(h.size()) != b.size()) throw ValidationError("kernel length does not match basis");
    const auto& U = b.eigenvectors();
    return U * h.cast<Complex>().asDiagonal() * U.adjoint();
}

Signal to_signal(const Eigen::VectorXd& x) { return x.cast<Complex>(); }

}  // namespace gsu
