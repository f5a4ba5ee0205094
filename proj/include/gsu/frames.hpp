#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gsu/bounds.hpp"
#include "gsu/kernel.hpp"
#include "gsu/measures.hpp"
#include "gsu/spectral.hpp"

namespace gsu {

inline constexpr double kTightTolerance = 1e-9;

enum class BankDesign { gabor_uniform, gabor_adapted, wavelet_log, wavelet_adapted, custom };

std::string to_string(BankDesign d);
BankDesign parse_design(const std::string& s);

class FilterBank {
public:
    // All kernels must share one length. Custom banks may have A = 0.
    FilterBank(std::vector<Kernel> kernels, BankDesign design);

    std::size_t size() const { return kernels_.size(); }
    std::size_t vertex_count() const { return static_cast<std::size_t>(values_.rows()); }
    const std::vector<Kernel>& kernels() const { return kernels_; }
    const Kernel& kernel(std::size_t k) const { return kernels_.at(k); }
    // N x K, column k holds the samples of kernel k.
    const Eigen::MatrixXd& values() const { return values_; }
    BankDesign design() const { return design_; }

    // G(lambda_l) = sum_k |g_k(lambda_l)|^2.
    const Eigen::VectorXd& G() const { return G_; }
    // A = N min G, B = N max G.
    double lower_bound() const { return A_; }
    double upper_bound() const { return B_; }
    bool is_frame() const { return A_ > 0.0; }
    bool is_tight(double tol = kTightTolerance) const { return B_ - A_ <= tol * B_; }

    std::string label() const;

private:
    std::vector<Kernel> kernels_;
    BankDesign design_;
    Eigen::MatrixXd values_;
    Eigen::VectorXd G_;
    double A_ = 0.0;
    double B_ = 0.0;
};

// The four tight designs. Throws NumericalError if the result is not tight.
FilterBank design_bank(const SpectralBasis& b, BankDesign design, std::size_t K);

// Kernel specs for a named design, before sampling.
std::vector<KernelSpec> design_specs(const SpectralBasis& b, BankDesign design, std::size_t K);

FilterBank custom_bank(const SpectralBasis& b, const std::vector<KernelSpec>& specs);

// T_i g(n) = sqrt(N) sum_l g(lambda_l) conj(u_l(i)) u_l(n).
Signal localize(const SpectralBasis& b, const Eigen::VectorXd& g, std::size_t i);

// ||T_i g||_2 for every vertex i.
Eigen::VectorXd atom_norm_map(const SpectralBasis& b, const Eigen::VectorXd& g);

// N x K matrix of ||T_i g_k||_2.
Eigen::MatrixXd atom_norms(const SpectralBasis& b, const FilterBank& bank);

struct Coefficients {
    // N x K, entry (i, k) = <f, T_i g_k>.
    Eigen::MatrixXcd values;
    std::string signal_id;
    std::string bank_id;

    double norm(PNorm p) const { return gsu::norm(values, p); }
    double sparsity(PNorm p) const { return gsu::sparsity(values, p); }
};

Coefficients analysis(const SpectralBasis& b, const FilterBank& bank, const Signal& f, std::string signal_id = "");

struct LiebBound {
    PNorm p{2.0};
    double A = 0.0;
    double B = 0.0;
    double max_atom_norm = 0.0;    // max_{i,k} ||T_i g_k||_2
    double max_kernel_norm = 0.0;  // max_k ||g_k||_2
    double atom_bound = 0.0;       // uses max_atom_norm
    double coherence_bound = 0.0;  // uses sqrt(N) mu max_k ||g_k||_2
};

// Frame-wide bounds on s_p(A f). Throws NumericalError if A = 0.
LiebBound global_lieb(const SpectralBasis& b, const FilterBank& bank, PNorm p);

// s_p(A f) <= atom_bound, and atom_bound <= coherence_bound.
std::vector<BoundReport> global_lieb_check(const SpectralBasis& b, const FilterBank& bank, const Signal& f, PNorm p,
                                           const BoundContext& ctx = {});

// A[u, k] = sum_n f[n] conj(g[n - u]) exp(-2 pi i k n / N), indices mod N.
Eigen::MatrixXcd dwft(const Signal& f, const Signal& g);

// ||A f||_p against N^(1/p) ||f||_2 ||g||_2 (<= for p >= 2, >= for p <= 2).
BoundReport lieb_discrete_check(const Signal& f, const Signal& g, PNorm p, const BoundContext& ctx = {});

}  // namespace gsu
