#include "gsu/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gsu {

namespace {

void require_nonzero(const Signal& f) {
    if (f.size() == 0 || f.cwiseAbs().maxCoeff() == 0.0) throw ValidationError("signal must be nonzero");
    if (!f.allFinite()) throw ValidationError("signal has non-finite entries");
}

// mu^e, with 0^0 = 1.
double mu_power(double mu, double e) { return e == 0.0 ? 1.0 : std::pow(mu, e); }

}  // namespace

BoundReport BoundReport::make(std::string name, double lhs, double rhs, Direction direction, BoundContext context) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.direction = direction;
    r.slack = direction == Direction::at_least ? lhs - rhs : rhs - lhs;
    r.holds = r.slack >= -kBoundSlackTolerance;
    r.context = std::move(context);
    return r;
}

BoundContext with_p(BoundContext ctx, PNorm p) {
    ctx.p = p.value();
    return ctx;
}

BoundContext with_pq(BoundContext ctx, PNorm p, PNorm q) {
    ctx.p = p.value();
    ctx.q = q.value();
    return ctx;
}

std::vector<BoundReport> support_uncertainty(const SpectralBasis& b, const Signal& f, const BoundContext& ctx) {
    require_nonzero(f);
    const Signal fhat = gft(b, f);
    const auto s = static_cast<double>(support(f));
    const auto shat = static_cast<double>(support(fhat));
    const double rhs = 1.0 / b.mu();
    return {BoundReport::make("support", std::sqrt(s * shat), rhs, Direction::at_least, ctx),
            BoundReport::make("support_arithmetic", 0.5 * (s + shat), rhs, Direction::at_least, ctx)};
}

BoundReport lp_uncertainty(const SpectralBasis& b, const Signal& f, PNorm p, const BoundContext& ctx) {
    if (p.is_infinite() || p.value() > 2.0) throw ValidationError("lp uncertainty needs p in [1, 2]");
    require_nonzero(f);
    const Signal fhat = gft(b, f);
    const double lhs = norm(f, p) * norm(fhat, p);
    const double two = norm(f, PNorm(2.0));
    const double rhs = mu_power(b.mu(), 1.0 - 2.0 * p.reciprocal()) * two * two;
    return BoundReport::make("lp", lhs, rhs, Direction::at_least, with_p(ctx, p));
}

BoundReport entropic_uncertainty(const SpectralBasis& b, const Signal& f, EntropyMode mode, const BoundContext& ctx) {
    require_nonzero(f);
    const Signal fhat = gft(b, f);
    const double lhs = entropy(f, mode) + entropy(fhat, mode);
    return BoundReport::make("entropic", lhs, -2.0 * std::log(b.mu()), Direction::at_least, ctx);
}

std::vector<BoundReport> local_folland(const SpectralBasis& b, const Signal& f, const std::vector<std::size_t>& subset,
                                       const BoundContext& ctx) {
    if (subset.empty()) throw ValidationError("vertex subset must be nonempty");
    if (static_cast<std::size_t>(f.size()) != b.size()) throw ValidationError("signal length does not match graph");
    std::vector<std::size_t> vs = subset;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw ValidationError("vertex subset has duplicates");
    if (vs.back() >= b.size()) throw ValidationError("vertex subset out of range");
    double energy = 0.0;
    for (auto i : vs) energy += std::norm(f(static_cast<Eigen::Index>(i)));
    const double size = static_cast<double>(vs.size());
    const double sup = norm(f, PNorm::infinity());
    const double one_hat = norm(gft(b, f), PNorm(1.0));
    const double mid = size * sup * sup;
    const double outer = size * b.mu() * b.mu() * one_hat * one_hat;
    return {BoundReport::make("folland_energy", energy, mid, Direction::at_most, ctx),
            BoundReport::make("folland_spectral", mid, outer, Direction::at_most, ctx)};
}

std::vector<BoundReport> hausdorff_young(const SpectralBasis& b, const Signal& f, PNorm p, const BoundContext& ctx) {
    require_nonzero(f);
    const PNorm q = p.conjugate();
    const Signal fhat = gft(b, f);
    const double e = 1.0 - 2.0 * q.reciprocal();
    const double rhs = mu_power(b.mu(), e) * norm(f, p);
    const bool low = !p.is_infinite() && p.value() <= 2.0;
    const auto c = with_pq(ctx, p, q);
    return {BoundReport::make("hausdorff_young", norm(fhat, q), rhs, low ? Direction::at_most : Direction::at_least, c),
            BoundReport::make("sparsity_product", sparsity(f, p) * sparsity(fhat, q), mu_power(b.mu(), std::abs(e)),
                              Direction::at_most, c)};
}

GlobalSelection GlobalSelection::parse(const std::string& which) {
    if (which == "all") return {};
    GlobalSelection s{false, false, false, false, false};
    std::stringstream ss(which);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "support") s.support = true;
        else if (item == "lp") s.lp = true;
        else if (item == "entropic") s.entropic = true;
        else if (item == "folland") s.folland = true;
        else if (item == "hausdorff_young" || item == "hy") s.hausdorff_young = true;
        else throw ValidationError("unknown bound '" + item + "'");
    }
    return s;
}

std::vector<BoundReport> evaluate_global(const SpectralBasis& b, const Signal& f, const GlobalSelection& which, PNorm p,
                                         const std::vector<std::size_t>& subset, EntropyMode mode,
                                         const BoundContext& ctx) {
    std::vector<BoundReport> out;
    auto append = [&](std::vector<BoundReport> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    if (which.support) append(support_uncertainty(b, f, ctx));
    if (which.lp && !p.is_infinite() && p.value() <= 2.0) out.push_back(lp_uncertainty(b, f, p, ctx));
    if (which.entropic) out.push_back(entropic_uncertainty(b, f, mode, ctx));
    if (which.folland) {
        std::vector<std::size_t> vs = subset;
        if (vs.empty())
            for (std::size_t i = 0; i < b.size(); ++i) vs.push_back(i);
        append(local_folland(b, f, vs, ctx));
    }
    if (which.hausdorff_young) append(hausdorff_young(b, f, p, ctx));
    return out;
}

}  // namespace gsu
