#include "gsu/local_bounds.hpp"

#include <cmath>
#include <limits>

#include "gsu/error.hpp"

namespace gsu {

namespace {

void check_indices(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0) {
    if (bank.vertex_count() != b.size()) throw ValidationError("filter bank does not match basis size");
    if (i0 >= b.size()) throw ValidationError("vertex " + std::to_string(i0 + 1) + " out of range");
    if (k0 >= bank.size()) throw ValidationError("kernel index " + std::to_string(k0) + " out of range");
}

double root_n(const SpectralBasis& b) { return std::sqrt(static_cast<double>(b.size())); }

}  // namespace

std::size_t tolerant_argmax(const Eigen::Ref<const Eigen::VectorXd>& values) {
    if (values.size() == 0) throw ValidationError("argmax of an empty vector");
    const double peak = values.maxCoeff();
    const double floor = peak - kArgmaxTieTolerance * std::abs(peak);
    for (Eigen::Index k = 0; k < values.size(); ++k)
        if (values(k) >= floor) return static_cast<std::size_t>(k);
    return 0;
}

ProductLocalization kernel_product_localization(const SpectralBasis& b, const Eigen::VectorXd& g,
                                                const Eigen::VectorXd& h, std::size_t i, std::size_t j) {
    if (i >= b.size() || j >= b.size()) throw ValidationError("vertex out of range");
    ProductLocalization r;
    r.via_product = root_n(b) * localize(b, g.cwiseProduct(h), i)(static_cast<Eigen::Index>(j));
    r.direct = localize(b, h, j).dot(localize(b, g, i));  // sum_n T_i g(n) conj(T_j h(n))
    r.difference = std::abs(r.via_product - r.direct);
    return r;
}

Eigen::MatrixXcd product_localizations(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0) {
    check_indices(b, bank, i0, k0);
    const auto& U = b.eigenvectors();
    const Eigen::MatrixXd products = bank.values().col(static_cast<Eigen::Index>(k0)).asDiagonal() * bank.values();
    const Eigen::MatrixXcd weighted =
        U.row(static_cast<Eigen::Index>(i0)).adjoint().asDiagonal() * products.cast<Complex>();
    return root_n(b) * (U * weighted);
}

Coefficients ambiguity(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0) {
    check_indices(b, bank, i0, k0);
    const Signal atom = localize(b, bank.values().col(static_cast<Eigen::Index>(k0)), i0);
    return analysis(b, bank, atom, "T_" + std::to_string(i0 + 1) + " g_" + std::to_string(k0));
}

bool LocalBoundReport::chain_holds(double tol) const {
    const bool low = !p.is_infinite() || lower <= sp + tol;
    return low && sp <= bound_mid + tol && bound_mid <= bound_outer + tol;
}

LocalBoundReport local_bound(const SpectralBasis& b, const FilterBank& bank, const Graph& g, std::size_t i0,
                             std::size_t k0, PNorm p) {
    check_indices(b, bank, i0, k0);
    if (g.size() != b.size()) throw ValidationError("graph does not match basis size");
    if (!bank.is_frame()) throw NumericalError("filter bank is not a frame (A = 0)");
    const Eigen::VectorXd gk0 = bank.values().col(static_cast<Eigen::Index>(k0));
    const double atom_norm = atom_norm_map(b, gk0)(static_cast<Eigen::Index>(i0));
    if (!(atom_norm > 0.0)) throw ValidationError("atom T_i0 g_k0 is zero");

    const Eigen::MatrixXd P = product_localizations(b, bank, i0, k0).cwiseAbs();
    LocalBoundReport r;
    r.i0 = i0;
    r.k0 = k0;
    r.p = p;
    r.k_tilde = tolerant_argmax(P.colwise().maxCoeff().transpose());
    r.i_tilde = tolerant_argmax(P.col(static_cast<Eigen::Index>(r.k_tilde)));
    r.hop = hop_distance(g, i0, r.i_tilde);

    const Eigen::VectorXd gkt = bank.values().col(static_cast<Eigen::Index>(r.k_tilde));
    const double tilde_norm = atom_norm_map(b, gkt)(static_cast<Eigen::Index>(r.i_tilde));
    const double tilde_outer = root_n(b) * b.nu()(static_cast<Eigen::Index>(r.i_tilde)) * gkt.norm();
    const double A = bank.lower_bound(), B = bank.upper_bound();
    const double inv = p.reciprocal();
    const double e = std::abs(1.0 - 2.0 * inv);
    auto power = [e](double x) { return e == 0.0 ? 1.0 : std::pow(x, e); };
    const double front = std::pow(B, std::min(inv, 1.0 - inv)) / std::sqrt(A);
    r.sp = ambiguity(b, bank, i0, k0).sparsity(p);
    r.bound_mid = front * power(tilde_norm);
    r.bound_outer = front * power(tilde_outer);
    r.lower = p.is_infinite() ? atom_norm / std::sqrt(B) : std::numeric_limits<double>::quiet_NaN();
    return r;
}

std::vector<LocalBoundReport> local_bounds_all(const SpectralBasis& b, const FilterBank& bank, const Graph& g, PNorm p) {
    const Eigen::MatrixXd norms = atom_norms(b, bank);
    std::vector<LocalBoundReport> out;
    for (std::size_t i0 = 0; i0 < b.size(); ++i0)
        for (std::size_t k0 = 0; k0 < bank.size(); ++k0)
            if (norms(static_cast<Eigen::Index>(i0), static_cast<Eigen::Index>(k0)) > 0.0)
                out.push_back(local_bound(b, bank, g, i0, k0, p));
    return out;
}

TightnessHypotheses tightness_hypotheses(const SpectralBasis& b, const FilterBank& bank, std::size_t i0, std::size_t k0) {
    check_indices(b, bank, i0, k0);
    const Eigen::MatrixXd P = product_localizations(b, bank, i0, k0).cwiseAbs();
    const Eigen::VectorXd sup = P.colwise().maxCoeff().transpose();
    const auto k = static_cast<Eigen::Index>(k0);
    TightnessHypotheses h;
    h.tight_frame = bank.is_frame() && bank.is_tight();
    h.k0_is_argmax = sup(k) >= sup.maxCoeff() * (1.0 - kArgmaxTieTolerance);
    h.i0_is_argmax = P(static_cast<Eigen::Index>(i0), k) >= sup(k) * (1.0 - kArgmaxTieTolerance);
    return h;
}

double overlap(const SpectralBasis& b, const Eigen::VectorXd& g, std::size_t j, PNorm p) {
    const Signal atom = localize(b, g.cwiseAbs2(), j);
    const double two = norm(atom, PNorm(2.0));
    if (!(two > 0.0)) throw ValidationError("overlap of a degenerate kernel (T_j g^2 = 0)");
    return norm(atom, p) / two;
}

SpreadFamily parse_spread_family(const std::string& s) {
    if (s == "heat") return SpreadFamily::heat;
    if (s == "wavelet") return SpreadFamily::wavelet;
    throw ValidationError("unknown kernel family '" + s + "'");
}

KernelSpec spread_kernel(SpreadFamily family, double a) {
    if (family == SpreadFamily::heat) return KernelSpec{HeatSpec{10.0 * a, true}};
    return KernelSpec{WaveletSpec{a}};
}

SpreadRow localization_spread(const SpectralBasis& b, const Graph& g, const Eigen::VectorXd& kernel, double dilation) {
    if (g.size() != b.size()) throw ValidationError("graph does not match basis size");
    // Column i is T_i g.
    const Eigen::MatrixXd atoms = (root_n(b) * spectral_operator(b, kernel)).cwiseAbs();
    SpreadRow row;
    row.dilation = dilation;
    const auto n = atoms.cols();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double sup = atoms.col(i).maxCoeff();
        if (!(sup > 0.0)) throw NumericalError("localized kernel vanishes at vertex " + std::to_string(i + 1));
        const auto peak = tolerant_argmax(atoms.col(i));
        const auto hop = hop_distance(g, static_cast<std::size_t>(i), peak);
        row.mean_relative_error += (sup - atoms(i, i)) / sup;
        row.mean_hop += static_cast<double>(hop);
        row.max_hop = std::max(row.max_hop, hop);
    }
    row.mean_relative_error /= static_cast<double>(n);
    row.mean_hop /= static_cast<double>(n);
    return row;
}

std::vector<SpreadRow> localization_spread_stats(const SpectralBasis& b, const Graph& g, SpreadFamily family,
                                                 const std::vector<double>& dilations) {
    if (dilations.empty()) throw ValidationError("dilation list is empty");
    std::vector<SpreadRow> rows;
    for (double a : dilations) rows.push_back(localization_spread(b, g, sample_kernel(spread_kernel(family, a), b), a));
    return rows;
}

}  // namespace gsu
