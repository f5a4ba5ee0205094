#include "gsu/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "gsu/error.hpp"
#include "gsu/generators.hpp"
#include "gsu/kernel.hpp"
#include "gsu/frames.hpp"

namespace gsu {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t offset) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(offset), static_cast<std::uint32_t>(offset >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Eigen::VectorXd smooth_signal(const SpectralBasis& b, const Eigen::VectorXd& h, std::uint64_t seed) {
    if (static_cast<std::size_t>(h.size()) != b.size()) throw ValidationError("kernel length does not match basis");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd w(h.size());
    for (Eigen::Index n = 0; n < w.size(); ++n) w(n) = normal(rng);
    const Signal fhat = gft(b, to_signal(w));
    return igft(b, h.cast<Complex>().cwiseProduct(fhat)).real();
}

Eigen::VectorXd sampling_distribution(const SpectralBasis& b, const Eigen::VectorXd& g, ProbeNorm mode) {
    if (static_cast<std::size_t>(g.size()) != b.size()) throw ValidationError("kernel length does not match basis");
    if (g.minCoeff() < 0.0) throw ValidationError("sampling distribution needs a nonnegative kernel");
    const Eigen::VectorXd norms = atom_norm_map(b, mode == ProbeNorm::squared_kernel ? Eigen::VectorXd(g.cwiseAbs2()) : g);
    const double total = norms.sum();
    if (!(total > 0.0)) throw ValidationError("all localized kernel norms are zero");
    return norms / total;
}

SamplingMask draw_mask(const Eigen::VectorXd& p, std::size_t m, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(p.size());
    if (m < 1 || m > n) throw ValidationError("mask size must lie in [1, N]");
    if (!p.allFinite() || p.minCoeff() < 0.0) throw ValidationError("probabilities must be finite and nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<bool> taken(n, false);
    SamplingMask mask;
    for (std::size_t draw = 0; draw < m; ++draw) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (!taken[i]) total += p(static_cast<Eigen::Index>(i));
        const double u = unit(rng);
        std::size_t chosen = n;
        if (total > 0.0) {
            const double target = u * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i] || p(static_cast<Eigen::Index>(i)) == 0.0) continue;
                acc += p(static_cast<Eigen::Index>(i));
                chosen = i;
                if (acc > target) break;
            }
        } else {
            auto pos = static_cast<std::size_t>(u * static_cast<double>(n - draw));
            pos = std::min(pos, n - draw - 1);
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                if (pos-- == 0) {
                    chosen = i;
                    break;
                }
            }
        }
        taken[chosen] = true;
        mask.indices.push_back(chosen);
    }
    std::sort(mask.indices.begin(), mask.indices.end());
    return mask;
}

Eigen::VectorXd inpaint(const Eigen::MatrixXd& L, const SamplingMask& mask, const Eigen::VectorXd& y) {
    const auto n = L.rows();
    if (L.cols() != n) throw ValidationError("Laplacian must be square");
    if (mask.indices.empty()) throw ValidationError("mask must be nonempty");
    if (static_cast<std::size_t>(y.size()) != mask.size()) throw ValidationError("observations do not match mask size");
    std::vector<bool> sampled(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < mask.size(); ++k) {
        const auto i = mask.indices[k];
        if (i >= static_cast<std::size_t>(n)) throw ValidationError("mask index out of range");
        if (k > 0 && i <= mask.indices[k - 1]) throw ValidationError("mask indices must be strictly increasing");
        sampled[i] = true;
    }
    Eigen::VectorXd x(n);
    std::vector<Eigen::Index> unknown;
    for (Eigen::Index i = 0; i < n; ++i)
        if (!sampled[static_cast<std::size_t>(i)]) unknown.push_back(i);
    for (std::size_t k = 0; k < mask.size(); ++k) x(static_cast<Eigen::Index>(mask.indices[k])) = y(static_cast<Eigen::Index>(k));
    if (unknown.empty()) return x;

    const auto u = static_cast<Eigen::Index>(unknown.size());
    const auto s = static_cast<Eigen::Index>(mask.size());
    Eigen::MatrixXd Luu(u, u);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(u);
    for (Eigen::Index a = 0; a < u; ++a) {
        for (Eigen::Index c = 0; c < u; ++c) Luu(a, c) = L(unknown[a], unknown[c]);
        for (Eigen::Index c = 0; c < s; ++c) rhs(a) -= L(unknown[a], static_cast<Eigen::Index>(mask.indices[c])) * y(c);
    }
    Eigen::LLT<Eigen::MatrixXd> llt(Luu);
    if (llt.info() != Eigen::Success) throw NumericalError("reduced Laplacian is not positive definite");
    const Eigen::VectorXd xu = llt.solve(rhs);
    const double scale = std::max(rhs.norm(), Luu.norm() * xu.norm());
    if (!xu.allFinite() || (Luu * xu - rhs).norm() > kInpaintResidualTolerance * std::max(scale, 1e-300))
        throw NumericalError("reduced system residual too large");
    for (Eigen::Index a = 0; a < u; ++a) x(unknown[a]) = xu(a);
    return x;
}

std::string to_string(Strategy s) { return s == Strategy::uniform ? "uniform" : "nonuniform"; }

std::vector<ExperimentResult> run_experiment(const ExperimentConfig& config) {
    if (config.ratios.empty()) throw ValidationError("ratio list is empty");
    for (double r : config.ratios)
        if (!(r > 0.0 && r <= 1.0)) throw ValidationError("ratios must lie in (0, 1]");
    if (config.trials == 0) throw ValidationError("trials must be positive");
    const std::size_t R = config.ratios.size();

    auto run_trial = [&](std::size_t t) {
        const std::uint64_t graph_seed = derive_seed(config.seed, t, 0);
        const Graph g = generate(config.kind, config.n, config.params, graph_seed);
        const Eigen::MatrixXd L = laplacian(g);
        const SpectralBasis b = eigendecompose(L);
        const Eigen::VectorXd h = sample_kernel(KernelSpec{LowPassSpec{config.lowpass_scale}}, b);
        const Eigen::VectorXd truth = smooth_signal(b, h, derive_seed(config.seed, t, 1));
        const Eigen::VectorXd probe = sample_kernel(KernelSpec{HeatSpec{config.probe_scale, true}}, b);
        const Eigen::VectorXd weights = sampling_distribution(b, probe, config.probe);
        const Eigen::VectorXd flat = Eigen::VectorXd::Constant(weights.size(), 1.0 / static_cast<double>(weights.size()));
        const double truth_norm = truth.norm();

        std::vector<ExperimentResult> rows;
        for (std::size_t r = 0; r < R; ++r) {
            const double ratio = config.ratios[r];
            auto m = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(g.size())));
            m = std::clamp<std::size_t>(m, 1, g.size());
            for (Strategy s : {Strategy::uniform, Strategy::nonuniform}) {
                const auto offset = 2 + 2 * r + (s == Strategy::nonuniform ? 1 : 0);
                const SamplingMask mask = draw_mask(s == Strategy::uniform ? flat : weights, m,
                                                    derive_seed(config.seed, t, offset));
                Eigen::VectorXd y(static_cast<Eigen::Index>(m));
                for (std::size_t k = 0; k < m; ++k) y(static_cast<Eigen::Index>(k)) = truth(static_cast<Eigen::Index>(mask.indices[k]));
                const Eigen::VectorXd x = inpaint(L, mask, y);
                rows.push_back({config.kind, graph_seed, t, ratio, s, (x - truth).norm() / truth_norm});
            }
        }
        return rows;
    };

    std::vector<std::vector<ExperimentResult>> per_trial(config.trials);
    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
    if (workers == 1) {
        for (std::size_t t = 0; t < config.trials; ++t) per_trial[t] = run_trial(t);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t t = w; t < config.trials; t += workers) per_trial[t] = run_trial(t);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<ExperimentResult> out;
    for (auto& rows : per_trial) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

std::vector<ExperimentSummary> summarize(const std::vector<ExperimentResult>& results) {
    std::map<std::pair<double, int>, std::vector<double>> groups;
    for (const auto& r : results) groups[{r.ratio, static_cast<int>(r.strategy)}].push_back(r.error);
    std::vector<ExperimentSummary> out;
    for (const auto& [key, errors] : groups) {
        ExperimentSummary s;
        s.ratio = key.first;
        s.strategy = static_cast<Strategy>(key.second);
        s.count = errors.size();
        for (double e : errors) s.mean_error += e;
        s.mean_error /= static_cast<double>(s.count);
        double var = 0.0;
        for (double e : errors) var += (e - s.mean_error) * (e - s.mean_error);
        s.std_error = s.count > 1 ? std::sqrt(var / static_cast<double>(s.count - 1)) : 0.0;
        out.push_back(s);
    }
    return out;
}

SignTest paired_sign_test(const std::vector<ExperimentResult>& results, double ratio) {
    std::map<std::pair<std::size_t, double>, std::pair<double, double>> pairs;
    std::map<std::pair<std::size_t, double>, int> seen;
    for (const auto& r : results) {
        if (ratio >= 0.0 && r.ratio != ratio) continue;
        auto& slot = pairs[{r.trial, r.ratio}];
        (r.strategy == Strategy::uniform ? slot.first : slot.second) = r.error;
        seen[{r.trial, r.ratio}] |= r.strategy == Strategy::uniform ? 1 : 2;
    }
    SignTest t;
    for (const auto& [key, errs] : pairs) {
        if (seen[key] != 3) continue;
        if (errs.second < errs.first) ++t.wins;
        else if (errs.second > errs.first) ++t.losses;
        else ++t.ties;
    }
    // P(X >= wins) for X ~ Binomial(wins + losses, 1/2), summed in log space.
    const std::size_t n = t.wins + t.losses;
    if (n == 0) return t;
    double p = 0.0;
    for (std::size_t k = t.wins; k <= n; ++k) {
        const double logc = std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                            std::lgamma(static_cast<double>(n - k) + 1.0);
        p += std::exp(logc - static_cast<double>(n) * std::log(2.0));
    }
    t.p_value = std::min(1.0, p);
    return t;
}

}  // namespace gsu
