#include "gsu/repro.hpp"

#include <algorithm>
#include <cmath>

#include "gsu/error.hpp"
#include "gsu/generators.hpp"
#include "gsu/local_bounds.hpp"

namespace gsu {

double table1_value(const SpectralBasis& b, BankDesign design, std::size_t K) {
    const FilterBank bank = design_bank(b, design, K);
    return atom_norms(b, bank).maxCoeff() / std::sqrt(static_cast<double>(b.size()));
}

std::vector<Table1Row> repro_table1(const Table1Options& options) {
    if (options.n < 13) throw ValidationError("table needs n >= 13");
    if (options.seeds.empty()) throw ValidationError("table needs at least one seed");
    const std::size_t n = options.n;

    auto row_for = [&](const std::string& name, const std::vector<Graph>& graphs, bool ring_dft) {
        Table1Row row;
        row.graph = name;
        row.samples = graphs.size();
        for (const auto& g : graphs) {
            const SpectralBasis b = compute_basis(g, BasisOptions{LaplacianVariant::combinatorial, ring_dft});
            row.mu += b.mu();
            for (std::size_t d = 0; d < kTable1Designs.size(); ++d) row.bound[d] += table1_value(b, kTable1Designs[d], options.K);
        }
        row.mu /= static_cast<double>(graphs.size());
        for (auto& v : row.bound) v /= static_cast<double>(graphs.size());
        return row;
    };
    auto seeded = [&](const std::string& kind) {
        std::vector<Graph> gs;
        for (auto s : options.seeds) gs.push_back(generate(kind, n, {}, s));
        return gs;
    };

    std::vector<Table1Row> rows;
    rows.push_back(row_for(options.ring_dft ? "ring (DFT basis)" : "ring", {make_ring(n)}, options.ring_dft));
    rows.push_back(row_for("sensor", seeded("sensor"), false));
    rows.push_back(row_for("random_regular", seeded("random_regular"), false));
    rows.push_back(row_for("erdos_renyi", seeded("erdos_renyi"), false));
    const std::size_t k = options.comet_k ? options.comet_k : n - 11;
    rows.push_back(row_for("comet(k=" + std::to_string(k) + ")", {make_comet(n, k)}, false));
    rows.push_back(row_for("path", {make_path(n)}, false));
    rows.push_back(row_for("modified_path(W12=0.1)", {make_modified_path(n, 10.0)}, false));
    rows.push_back(row_for("modified_path(W12=0.01)", {make_modified_path(n, 100.0)}, false));
    return rows;
}

std::vector<double> default_distance_grid() {
    std::vector<double> d;
    for (int k = 0; k <= 24; ++k) d.push_back(std::round(std::pow(10.0, 3.0 * k / 24.0) * 1e6) / 1e6);
    for (double extra : {11.0, 17.0, 27.0, 81.0}) d.push_back(extra);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

std::vector<ModifiedPathRow> repro_modified_path(std::size_t n, const std::vector<double>& distances, std::size_t K) {
    if (distances.empty()) throw ValidationError("distance list is empty");
    std::vector<ModifiedPathRow> rows;
    for (double d : distances) {
        const Graph g = make_modified_path(n, d);
        const SpectralBasis b = compute_basis(g);
        const FilterBank bank = design_bank(b, BankDesign::gabor_uniform, K);
        ModifiedPathRow r;
        r.d = d;
        r.mu = b.mu();
        r.lp_rhs = 1.0 / b.mu();
        Signal first = Signal::Zero(static_cast<Eigen::Index>(n)), last = first;
        first(0) = 1.0;
        last(static_cast<Eigen::Index>(n) - 1) = 1.0;
        r.lp_first = lp_uncertainty(b, first, PNorm(1.0)).lhs;
        r.lp_last = lp_uncertainty(b, last, PNorm(1.0)).lhs;
        r.global_bound = global_lieb(b, bank, PNorm::infinity()).atom_bound;
        const auto lf = local_bound(b, bank, g, 0, 0, PNorm::infinity());
        const auto ll = local_bound(b, bank, g, n - 1, 0, PNorm::infinity());
        r.local_first = lf.bound_mid;
        r.local_last = ll.bound_mid;
        r.sinf_first = lf.sp;
        r.sinf_last = ll.sp;
        rows.push_back(r);
    }
    return rows;
}

std::vector<PlotSeries> modified_path_series(const std::vector<ModifiedPathRow>& rows) {
    std::vector<PlotSeries> s(7);
    const char* labels[] = {"coherence mu",          "lp bound 1/mu (p=1)",   "lp lhs delta_1", "lp lhs delta_N",
                            "global bound (p=inf)", "local bound i0=1",      "local bound i0=N"};
    for (std::size_t k = 0; k < s.size(); ++k) s[k].label = labels[k];
    for (const auto& r : rows) {
        const double ys[] = {r.mu, r.lp_rhs, r.lp_first, r.lp_last, r.global_bound, r.local_first, r.local_last};
        for (std::size_t k = 0; k < s.size(); ++k) {
            s[k].x.push_back(r.d);
            s[k].y.push_back(ys[k]);
        }
    }
    s[1].markers = true;
    return s;
}

}  // namespace gsu
