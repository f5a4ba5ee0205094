#include "gsu/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsu/error.hpp"
#include "gsu/format.hpp"

namespace gsu {

namespace {

void check_vertex(const SpectralBasis& b, std::size_t i) {
    if (i >= b.size()) throw ValidationError("vertex " + std::to_string(i + 1) + " out of range");
}

void check_kernel(const SpectralBasis& b, const Eigen::VectorXd& g) {
    if (static_cast<std::size_t>(g.size()) != b.size()) throw ValidationError("kernel length does not match basis");
}

void check_bank(const SpectralBasis& b, const FilterBank& bank) {
    if (bank.vertex_count() != b.size()) throw ValidationError("filter bank does not match basis size");
}

}  // namespace

std::string to_string(BankDesign d) {
    switch (d) {
        case BankDesign::gabor_uniform: return "gabor_uniform";
        case BankDesign::gabor_adapted: return "gabor_adapted";
        case BankDesign::wavelet_log: return "wavelet_log";
        case BankDesign::wavelet_adapted: return "wavelet_adapted";
        case BankDesign::custom: return "custom";
    }
    return "custom";
}

BankDesign parse_design(const std::string& s) {
    for (auto d : {BankDesign::gabor_uniform, BankDesign::gabor_adapted, BankDesign::wavelet_log,
                   BankDesign::wavelet_adapted, BankDesign::custom})
        if (s == to_string(d)) return d;
    throw ValidationError("unknown design '" + s + "'");
}

FilterBank::FilterBank(std::vector<Kernel> kernels, BankDesign design)
    : kernels_(std::move(kernels)), design_(design) {
    if (kernels_.empty()) throw ValidationError("filter bank needs at least one kernel");
    const auto n = static_cast<Eigen::Index>(kernels_.front().size());
    values_.resize(n, static_cast<Eigen::Index>(kernels_.size()));
    for (std::size_t k = 0; k < kernels_.size(); ++k) {
        if (static_cast<Eigen::Index>(kernels_[k].size()) != n) throw ValidationError("kernels differ in length");
        values_.col(static_cast<Eigen::Index>(k)) = kernels_[k].values();
    }
    G_ = values_.rowwise().squaredNorm();
    A_ = static_cast<double>(n) * G_.minCoeff();
    B_ = static_cast<double>(n) * G_.maxCoeff();
}

std::string FilterBank::label() const { return to_string(design_) + "(K=" + std::to_string(size()) + ")"; }

std::vector<KernelSpec> design_specs(const SpectralBasis& b, BankDesign design, std::size_t K) {
    if (design == BankDesign::custom) throw ValidationError("custom banks are built from explicit kernels");
    if (K < 2) throw ValidationError("a named design needs K >= 2");
    const double lmax = b.lambda_max();
    if (!(lmax > 0.0)) throw NumericalError("spectrum has lambda_max = 0");
    const double step = lmax / static_cast<double>(K - 1);
    WarpKind warp = WarpKind::identity;
    switch (design) {
        case BankDesign::gabor_adapted: warp = WarpKind::spectrum_cdf; break;
        case BankDesign::wavelet_log: warp = WarpKind::log; break;
        case BankDesign::wavelet_adapted: warp = WarpKind::log_spectrum_cdf; break;
        default: break;
    }
    std::vector<KernelSpec> specs;
    for (std::size_t k = 0; k < K; ++k) {
        KernelSpec mother{MotherSpec{static_cast<double>(k) * step, 2.0 * step}};
        if (warp == WarpKind::identity) specs.push_back(std::move(mother));
        else specs.push_back(KernelSpec{WarpedSpec{warp, std::make_shared<const KernelSpec>(std::move(mother))}});
    }
    return specs;
}

FilterBank design_bank(const SpectralBasis& b, BankDesign design, std::size_t K) {
    std::vector<Kernel> kernels;
    for (const auto& spec : design_specs(b, design, K)) kernels.push_back(Kernel::sample(spec, b));
    FilterBank bank(std::move(kernels), design);
    const double err = (bank.G().array() - 1.0).abs().maxCoeff();
    if (!(err <= kTightTolerance))
        throw NumericalError(to_string(design) + " is not tight: max |G - 1| = " + format_double(err));
    return bank;
}

FilterBank custom_bank(const SpectralBasis& b, const std::vector<KernelSpec>& specs) {
    std::vector<Kernel> kernels;
    for (const auto& spec : specs) kernels.push_back(Kernel::sample(spec, b));
    return FilterBank(std::move(kernels), BankDesign::custom);
}

Signal localize(const SpectralBasis& b, const Eigen::VectorXd& g, std::size_t i) {
    check_vertex(b, i);
    check_kernel(b, g);
    const auto& U = b.eigenvectors();
    const Eigen::VectorXcd weights = g.cast<Complex>().cwiseProduct(U.row(static_cast<Eigen::Index>(i)).adjoint());
    return std::sqrt(static_cast<double>(b.size())) * (U * weights);
}

Eigen::VectorXd atom_norm_map(const SpectralBasis& b, const Eigen::VectorXd& g) {
    check_kernel(b, g);
    // ||T_i g||_2^2 = N sum_l |g(lambda_l)|^2 |u_l(i)|^2 by orthonormality.
    const Eigen::MatrixXd P = b.eigenvectors().cwiseAbs2();
    return (static_cast<double>(b.size()) * (P * g.cwiseAbs2())).cwiseSqrt();
}

Eigen::MatrixXd atom_norms(const SpectralBasis& b, const FilterBank& bank) {
    check_bank(b, bank);
    const Eigen::MatrixXd P = b.eigenvectors().cwiseAbs2();
    return (static_cast<double>(b.size()) * (P * bank.values().cwiseAbs2())).cwiseSqrt();
}

Coefficients analysis(const SpectralBasis& b, const FilterBank& bank, const Signal& f, std::string signal_id) {
    check_bank(b, bank);
    const Signal fhat = gft(b, f);
    // <f, T_i g_k> = sqrt(N) sum_l g_k(lambda_l) fhat(l) u_l(i).
    const Eigen::MatrixXcd weighted = fhat.asDiagonal() * bank.values().cast<Complex>();
    Coefficients c;
    c.values = std::sqrt(static_cast<double>(b.size())) * (b.eigenvectors() * weighted);
    c.signal_id = std::move(signal_id);
    c.bank_id = bank.label();
    return c;
}

LiebBound global_lieb(const SpectralBasis& b, const FilterBank& bank, PNorm p) {
    check_bank(b, bank);
    if (!bank.is_frame()) throw NumericalError("filter bank is not a frame (A = 0)");
    LiebBound r;
    r.p = p;
    r.A = bank.lower_bound();
    r.B = bank.upper_bound();
    r.max_atom_norm = atom_norms(b, bank).maxCoeff();
    r.max_kernel_norm = bank.values().colwise().norm().maxCoeff();
    const double inv = p.reciprocal();
    const double e = std::abs(1.0 - 2.0 * inv);
    const double frame = std::pow(r.B, std::min(0.5, inv)) / std::pow(r.A, std::max(0.5, inv));
    auto power = [e](double x) { return e == 0.0 ? 1.0 : std::pow(x, e); };
    r.atom_bound = frame * power(r.max_atom_norm);
    r.coherence_bound = frame * power(std::sqrt(static_cast<double>(b.size())) * b.mu() * r.max_kernel_norm);
    return r;
}

std::vector<BoundReport> global_lieb_check(const SpectralBasis& b, const FilterBank& bank, const Signal& f, PNorm p,
                                           const BoundContext& ctx) {
    const LiebBound lb = global_lieb(b, bank, p);
    const double sp = analysis(b, bank, f).sparsity(p);
    const auto c = with_p(ctx, p);
    return {BoundReport::make("lieb_frame", sp, lb.atom_bound, Direction::at_most, c),
            BoundReport::make("lieb_coherence", lb.atom_bound, lb.coherence_bound, Direction::at_most, c)};
}

Eigen::MatrixXcd dwft(const Signal& f, const Signal& g) {
    const auto n = f.size();
    if (n == 0 || g.size() != n) throw ValidationError("dwft needs equal-length nonempty signals");
    Eigen::MatrixXcd A(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index k = 0; k < n; ++k) {
            Complex acc = 0.0;
            for (Eigen::Index m = 0; m < n; ++m) {
                const double phase = -2.0 * std::numbers::pi * static_cast<double>((k * m) % n) / static_cast<double>(n);
                acc += f(m) * std::conj(g(((m - u) % n + n) % n)) * std::polar(1.0, phase);
            }
            A(u, k) = acc;
        }
    }
    return A;
}

BoundReport lieb_discrete_check(const Signal& f, const Signal& g, PNorm p, const BoundContext& ctx) {
    const Eigen::MatrixXcd A = dwft(f, g);
    const double n = static_cast<double>(f.size());
    const double rhs = std::pow(n, p.reciprocal()) * f.norm() * g.norm();
    const bool upper = p.is_infinite() || p.value() >= 2.0;
    return BoundReport::make("lieb_discrete", norm(A, p), rhs, upper ? Direction::at_most : Direction::at_least,
                             with_p(ctx, p));
}

}  // namespace gsu
