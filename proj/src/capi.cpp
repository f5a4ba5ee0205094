#include "gsu/gsu.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "gsu/bounds.hpp"
#include "gsu/error.hpp"
#include "gsu/frames.hpp"
#include "gsu/generators.hpp"
#include "gsu/io.hpp"
#include "gsu/local_bounds.hpp"
#include "gsu/plot.hpp"
#include "gsu/repro.hpp"
#include "gsu/sampling.hpp"

#ifndef GSU_VERSION_STRING
#define GSU_VERSION_STRING "0.0.0"
#endif

struct gsu_graph {
    gsu::Graph graph;
};

struct gsu_basis {
    gsu::SpectralBasis basis;
};

struct gsu_bank {
    gsu::FilterBank bank;
};

namespace {

thread_local std::string last_error;

template <class F>
gsu_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return GSU_OK;
    } catch (const gsu::DisconnectedGraphError& e) {
        last_error = e.what();
        return GSU_ERR_DISCONNECTED;
    } catch (const gsu::ValidationError& e) {
        last_error = e.what();
        return GSU_ERR_VALIDATION;
    } catch (const gsu::NumericalError& e) {
        last_error = e.what();
        return GSU_ERR_NUMERICAL;
    } catch (const gsu::IoError& e) {
        last_error = e.what();
        return GSU_ERR_IO;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GSU_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return GSU_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown internal error";
        return GSU_ERR_INTERNAL;
    }
}

template <class T>
void need(const T* p, const char* what) {
    if (p == nullptr) throw gsu::ValidationError(std::string(what) + " must not be NULL");
}

template <class T>
T* copy_out(const std::vector<T>& v) {
    if (v.empty()) return nullptr;
    T* p = static_cast<T*>(std::malloc(v.size() * sizeof(T)));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, v.data(), v.size() * sizeof(T));
    return p;
}

char* copy_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

gsu::ParamMap parse_params(const char* text) {
    gsu::ParamMap out;
    if (text == nullptr) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw gsu::ValidationError("parameter '" + item + "' needs key=value");
        const std::string value = item.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (value.empty() || *end != '\0') throw gsu::ValidationError("parameter '" + item + "' is not a number");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

gsu::Signal make_signal(std::size_t n, const double* re, const double* im) {
    need(re, "re");
    gsu::Signal f(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) f(static_cast<Eigen::Index>(k)) = gsu::Complex(re[k], im ? im[k] : 0.0);
    if (!f.allFinite()) throw gsu::ValidationError("signal has non-finite entries");
    return f;
}

void store_signal(const gsu::Signal& f, double* re, double* im) {
    need(re, "out_re");
    for (Eigen::Index k = 0; k < f.size(); ++k) {
        re[k] = f(k).real();
        if (im) im[k] = f(k).imag();
    }
}

Eigen::VectorXd make_real(std::size_t n, const double* v, const char* what) {
    need(v, what);
    return Eigen::Map<const Eigen::VectorXd>(v, static_cast<Eigen::Index>(n));
}

gsu::PNorm p_norm(double p) { return std::isinf(p) ? gsu::PNorm::infinity() : gsu::PNorm(p); }

gsu::LaplacianVariant variant(int normalized) {
    return normalized ? gsu::LaplacianVariant::normalized : gsu::LaplacianVariant::combinatorial;
}

gsu_local_report to_c(const gsu::LocalBoundReport& r) {
    return {r.i0, r.k0, r.sp, r.bound_mid, r.bound_outer, r.lower, r.k_tilde, r.i_tilde, r.hop};
}

gsu_modified_path_row to_c(const gsu::ModifiedPathRow& r) {
    return {r.d,           r.mu,          r.lp_rhs,     r.lp_first,   r.lp_last,
            r.global_bound, r.local_first, r.local_last, r.sinf_first, r.sinf_last};
}

gsu::ModifiedPathRow from_c(const gsu_modified_path_row& r) {
    return {r.d,           r.mu,          r.lp_rhs,     r.lp_first,   r.lp_last,
            r.global_bound, r.local_first, r.local_last, r.sinf_first, r.sinf_last};
}

}  // namespace

extern "C" {

const char* gsu_version(void) { return GSU_VERSION_STRING; }

const char* gsu_last_error(void) { return last_error.c_str(); }

void gsu_free(void* buffer) { std::free(buffer); }

gsu_status gsu_graph_generate(const char* kind, size_t n, const char* params, uint64_t seed, gsu_graph** out) {
    return guard([&] {
        need(kind, "kind");
        need(out, "out");
        *out = new gsu_graph{gsu::generate(kind, n, parse_params(params), seed)};
    });
}

gsu_status gsu_graph_from_edges(size_t n, size_t m, const size_t* i, const size_t* j, const double* w, gsu_graph** out) {
    return guard([&] {
        need(out, "out");
        std::vector<gsu::Edge> edges;
        if (m > 0) {
            need(i, "i");
            need(j, "j");
            need(w, "w");
        }
        for (size_t k = 0; k < m; ++k) edges.push_back({i[k], j[k], w[k]});
        *out = new gsu_graph{gsu::Graph(n, std::move(edges))};
    });
}

gsu_status gsu_graph_read(const char* path, gsu_graph** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = new gsu_graph{gsu::read_graph(path)};
    });
}

gsu_status gsu_graph_write(const gsu_graph* g, const char* path, const char* comment) {
    return guard([&] {
        need(g, "graph");
        need(path, "path");
        std::vector<std::string> comments;
        if (comment) comments.emplace_back(comment);
        gsu::write_graph(g->graph, path, comments);
    });
}

void gsu_graph_free(gsu_graph* g) { delete g; }

size_t gsu_graph_size(const gsu_graph* g) { return g ? g->graph.size() : 0; }

size_t gsu_graph_edge_count(const gsu_graph* g) { return g ? g->graph.edges().size() : 0; }

gsu_status gsu_graph_edge(const gsu_graph* g, size_t k, size_t* i, size_t* j, double* w) {
    return guard([&] {
        need(g, "graph");
        if (k >= g->graph.edges().size()) throw gsu::ValidationError("edge index out of range");
        const auto& e = g->graph.edges()[k];
        if (i) *i = e.i;
        if (j) *j = e.j;
        if (w) *w = e.w;
    });
}

gsu_status gsu_graph_label(const gsu_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = copy_string(g->graph.label());
    });
}

gsu_status gsu_graph_laplacian(const gsu_graph* g, int normalized, double* out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        const Eigen::MatrixXd L = gsu::laplacian(g->graph, variant(normalized));
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(out, L.rows(), L.cols()) = L;
    });
}

gsu_status gsu_graph_hop_distance(const gsu_graph* g, size_t i, size_t j, size_t* out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = gsu::hop_distance(g->graph, i, j);
    });
}

gsu_status gsu_basis_compute(const gsu_graph* g, int normalized, int ring_dft, gsu_basis** out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = new gsu_basis{gsu::compute_basis(g->graph, gsu::BasisOptions{variant(normalized), ring_dft != 0})};
    });
}

void gsu_basis_free(gsu_basis* b) { delete b; }

size_t gsu_basis_size(const gsu_basis* b) { return b ? b->basis.size() : 0; }

gsu_status gsu_basis_eigenvalues(const gsu_basis* b, double* out) {
    return guard([&] {
        need(b, "basis");
        need(out, "out");
        Eigen::Map<Eigen::VectorXd>(out, b->basis.eigenvalues().size()) = b->basis.eigenvalues();
    });
}

gsu_status gsu_basis_coherence(const gsu_basis* b, double* mu, double* nu) {
    return guard([&] {
        need(b, "basis");
        if (mu) *mu = b->basis.mu();
        if (nu) Eigen::Map<Eigen::VectorXd>(nu, b->basis.nu().size()) = b->basis.nu();
    });
}

gsu_status gsu_basis_eigenvectors(const gsu_basis* b, double* re, double* im) {
    return guard([&] {
        need(b, "basis");
        need(re, "re");
        if (!im && !b->basis.is_real()) throw gsu::ValidationError("complex basis needs an imaginary buffer");
        const auto& U = b->basis.eigenvectors();
        using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        Eigen::Map<RowMajor>(re, U.rows(), U.cols()) = U.real();
        if (im) Eigen::Map<RowMajor>(im, U.rows(), U.cols()) = U.imag();
    });
}

gsu_status gsu_basis_write(const gsu_basis* b, const gsu_graph* g, int normalized, int ring_dft, const char* path,
                           const char* sidecar_path, const char* manifest_id) {
    return guard([&] {
        need(b, "basis");
        need(g, "graph");
        need(path, "path");
        gsu::BasisFileOptions options;
        options.manifest_id = manifest_id ? manifest_id : "";
        options.variant = variant(normalized);
        options.ring_dft = ring_dft != 0;
        options.sidecar_path = sidecar_path ? sidecar_path : "";
        gsu::write_basis(b->basis, g->graph, path, options);
    });
}

gsu_status gsu_gft(const gsu_basis* b, const double* re, const double* im, double* out_re, double* out_im) {
    return guard([&] {
        need(b, "basis");
        store_signal(gsu::gft(b->basis, make_signal(b->basis.size(), re, im)), out_re, out_im);
    });
}

gsu_status gsu_igft(const gsu_basis* b, const double* re, const double* im, double* out_re, double* out_im) {
    return guard([&] {
        need(b, "basis");
        store_signal(gsu::igft(b->basis, make_signal(b->basis.size(), re, im)), out_re, out_im);
    });
}

gsu_status gsu_signal_read(const char* path, size_t* n, double** re, double** im) {
    return guard([&] {
        need(path, "path");
        need(n, "n");
        need(re, "re");
        need(im, "im");
        const gsu::Signal f = gsu::read_signal(path);
        std::vector<double> r(static_cast<std::size_t>(f.size())), i(r.size());
        for (Eigen::Index k = 0; k < f.size(); ++k) {
            r[static_cast<std::size_t>(k)] = f(k).real();
            i[static_cast<std::size_t>(k)] = f(k).imag();
        }
        *re = copy_out(r);
        *im = copy_out(i);
        *n = r.size();
    });
}

gsu_status gsu_signal_write(const char* path, size_t n, const double* re, const double* im, const char* comment) {
    return guard([&] {
        need(path, "path");
        std::vector<std::string> comments;
        if (comment) comments.emplace_back(comment);
        gsu::write_signal(make_signal(n, re, im), path, comments);
    });
}

gsu_status gsu_norm(size_t n, const double* re, const double* im, double p, double* out) {
    return guard([&] {
        need(out, "out");
        *out = gsu::norm(make_signal(n, re, im), p_norm(p));
    });
}

gsu_status gsu_sparsity(size_t n, const double* re, const double* im, double p, double* out) {
    return guard([&] {
        need(out, "out");
        *out = gsu::sparsity(make_signal(n, re, im), p_norm(p));
    });
}

gsu_status gsu_entropy(size_t n, const double* re, const double* im, int strict, double* out) {
    return guard([&] {
        need(out, "out");
        *out = gsu::entropy(make_signal(n, re, im), strict ? gsu::EntropyMode::strict : gsu::EntropyMode::normalize);
    });
}

gsu_status gsu_support(size_t n, const double* re, const double* im, size_t* out) {
    return guard([&] {
        need(out, "out");
        *out = gsu::support(make_signal(n, re, im));
    });
}

gsu_status gsu_bounds_global_json(const gsu_basis* b, const double* re, const double* im, const char* which, double p,
                                  const size_t* subset, size_t subset_len, int strict_entropy, const char* graph_id,
                                  const char* signal_id, const char* manifest_id, char** json_out) {
    return guard([&] {
        need(b, "basis");
        need(json_out, "json_out");
        std::vector<std::size_t> vs;
        if (subset) vs.assign(subset, subset + subset_len);
        gsu::BoundContext ctx{graph_id ? graph_id : "", signal_id ? signal_id : "", std::nullopt, std::nullopt};
        const auto reports = gsu::evaluate_global(
            b->basis, make_signal(b->basis.size(), re, im), gsu::GlobalSelection::parse(which ? which : "all"),
            p_norm(p), vs, strict_entropy ? gsu::EntropyMode::strict : gsu::EntropyMode::normalize, ctx);
        *json_out = copy_string(gsu::reports_json_text(reports, manifest_id ? manifest_id : ""));
    });
}

gsu_status gsu_bank_design(const gsu_basis* b, const char* design, size_t K, gsu_bank** out) {
    return guard([&] {
        need(b, "basis");
        need(design, "design");
        need(out, "out");
        *out = new gsu_bank{gsu::design_bank(b->basis, gsu::parse_design(design), K)};
    });
}

gsu_status gsu_bank_custom(const gsu_basis* b, const char* const* specs, size_t count, gsu_bank** out) {
    return guard([&] {
        need(b, "basis");
        need(specs, "specs");
        need(out, "out");
        std::vector<gsu::KernelSpec> parsed;
        for (size_t k = 0; k < count; ++k) {
            need(specs[k], "spec");
            parsed.push_back(gsu::parse_kernel_spec(specs[k]));
        }
        *out = new gsu_bank{gsu::custom_bank(b->basis, parsed)};
    });
}

void gsu_bank_free(gsu_bank* bank) { delete bank; }

size_t gsu_bank_size(const gsu_bank* bank) { return bank ? bank->bank.size() : 0; }

gsu_status gsu_bank_frame_bounds(const gsu_bank* bank, double* A, double* B) {
    return guard([&] {
        need(bank, "bank");
        if (A) *A = bank->bank.lower_bound();
        if (B) *B = bank->bank.upper_bound();
    });
}

gsu_status gsu_bank_kernel(const gsu_bank* bank, size_t k, double* out) {
    return guard([&] {
        need(bank, "bank");
        need(out, "out");
        if (k >= bank->bank.size()) throw gsu::ValidationError("kernel index out of range");
        const auto& v = bank->bank.kernel(k).values();
        Eigen::Map<Eigen::VectorXd>(out, v.size()) = v;
    });
}

gsu_status gsu_bank_write(const gsu_bank* bank, const gsu_graph* g, int normalized, int ring_dft, const char* path,
                          const char* manifest_id) {
    return guard([&] {
        need(bank, "bank");
        need(g, "graph");
        need(path, "path");
        gsu::write_bank(bank->bank, g->graph, gsu::BasisOptions{variant(normalized), ring_dft != 0}, path,
                        manifest_id ? manifest_id : "");
    });
}

gsu_status gsu_bank_read(const char* path, gsu_graph** g, gsu_basis** b, gsu_bank** bank) {
    return guard([&] {
        need(path, "path");
        gsu::BankFile file = gsu::read_bank(path);
        auto basis = gsu::compute_basis(file.graph, file.basis_options);
        if (basis.size() != file.bank.vertex_count()) throw gsu::ValidationError("bank does not match its graph");
        if (b) *b = new gsu_basis{std::move(basis)};
        if (bank) *bank = new gsu_bank{std::move(file.bank)};
        if (g) *g = new gsu_graph{std::move(file.graph)};
    });
}

gsu_status gsu_analysis(const gsu_basis* b, const gsu_bank* bank, const double* re, const double* im, double* out_re,
                        double* out_im) {
    return guard([&] {
        need(b, "basis");
        need(bank, "bank");
        need(out_re, "out_re");
        const auto c = gsu::analysis(b->basis, bank->bank, make_signal(b->basis.size(), re, im));
        using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        Eigen::Map<RowMajor>(out_re, c.values.rows(), c.values.cols()) = c.values.real();
        if (out_im) Eigen::Map<RowMajor>(out_im, c.values.rows(), c.values.cols()) = c.values.imag();
    });
}

gsu_status gsu_localize(const gsu_basis* b, const double* kernel, size_t i, double* out_re, double* out_im) {
    return guard([&] {
        need(b, "basis");
        store_signal(gsu::localize(b->basis, make_real(b->basis.size(), kernel, "kernel"), i), out_re, out_im);
    });
}

gsu_status gsu_atom_norm_map(const gsu_basis* b, const double* kernel, double* out) {
    return guard([&] {
        need(b, "basis");
        need(out, "out");
        const Eigen::VectorXd m = gsu::atom_norm_map(b->basis, make_real(b->basis.size(), kernel, "kernel"));
        Eigen::Map<Eigen::VectorXd>(out, m.size()) = m;
    });
}

gsu_status gsu_global_lieb(const gsu_basis* b, const gsu_bank* bank, double p, double* atom_bound,
                           double* coherence_bound, double* max_atom_norm) {
    return guard([&] {
        need(b, "basis");
        need(bank, "bank");
        const auto r = gsu::global_lieb(b->basis, bank->bank, p_norm(p));
        if (atom_bound) *atom_bound = r.atom_bound;
        if (coherence_bound) *coherence_bound = r.coherence_bound;
        if (max_atom_norm) *max_atom_norm = r.max_atom_norm;
    });
}

gsu_status gsu_local_bound(const gsu_basis* b, const gsu_bank* bank, const gsu_graph* g, size_t i0, size_t k0, double p,
                           gsu_local_report* out) {
    return guard([&] {
        need(b, "basis");
        need(bank, "bank");
        need(g, "graph");
        need(out, "out");
        *out = to_c(gsu::local_bound(b->basis, bank->bank, g->graph, i0, k0, p_norm(p)));
    });
}

gsu_status gsu_local_bounds_all(const gsu_basis* b, const gsu_bank* bank, const gsu_graph* g, double p,
                                gsu_local_report** out, size_t* count) {
    return guard([&] {
        need(b, "basis");
        need(bank, "bank");
        need(g, "graph");
        need(out, "out");
        need(count, "count");
        std::vector<gsu_local_report> rows;
        for (const auto& r : gsu::local_bounds_all(b->basis, bank->bank, g->graph, p_norm(p))) rows.push_back(to_c(r));
        *out = copy_out(rows);
        *count = rows.size();
    });
}

gsu_status gsu_overlap(const gsu_basis* b, const double* kernel, size_t j, double p, double* out) {
    return guard([&] {
        need(b, "basis");
        need(out, "out");
        *out = gsu::overlap(b->basis, make_real(b->basis.size(), kernel, "kernel"), j, p_norm(p));
    });
}

gsu_status gsu_spread_stats(const gsu_basis* b, const gsu_graph* g, const char* family, const double* dilations,
                            size_t count, gsu_spread_row** out) {
    return guard([&] {
        need(b, "basis");
        need(g, "graph");
        need(family, "family");
        need(out, "out");
        if (count > 0) need(dilations, "dilations");
        const auto rows = gsu::localization_spread_stats(b->basis, g->graph, gsu::parse_spread_family(family),
                                                         std::vector<double>(dilations, dilations + count));
        std::vector<gsu_spread_row> c;
        for (const auto& r : rows) c.push_back({r.dilation, r.mean_relative_error, r.mean_hop, r.max_hop});
        *out = copy_out(c);
    });
}

void gsu_experiment_defaults(gsu_experiment_config* config) {
    if (!config) return;
    const gsu::ExperimentConfig d;
    *config = gsu_experiment_config{};
    config->kind = "sensor";
    config->n = d.n;
    config->trials = d.trials;
    config->seed = d.seed;
    config->probe_scale = d.probe_scale;
    config->lowpass_scale = d.lowpass_scale;
    config->threads = 1;
}

gsu_status gsu_experiment_inpaint(const gsu_experiment_config* config, gsu_experiment_row** rows, size_t* count) {
    return guard([&] {
        need(config, "config");
        need(config->kind, "kind");
        need(rows, "rows");
        need(count, "count");
        if (config->ratio_count > 0) need(config->ratios, "ratios");
        gsu::ExperimentConfig c;
        c.kind = config->kind;
        c.n = config->n;
        c.params = parse_params(config->params);
        c.ratios.assign(config->ratios, config->ratios + config->ratio_count);
        c.trials = config->trials;
        c.seed = config->seed;
        c.probe_scale = config->probe_scale;
        c.lowpass_scale = config->lowpass_scale;
        c.probe = config->probe_kernel_norm ? gsu::ProbeNorm::kernel : gsu::ProbeNorm::squared_kernel;
        c.threads = config->threads;
        std::vector<gsu_experiment_row> out;
        for (const auto& r : gsu::run_experiment(c))
            out.push_back({r.seed, r.trial, r.ratio, r.strategy == gsu::Strategy::nonuniform ? 1 : 0, r.error});
        *rows = copy_out(out);
        *count = out.size();
    });
}

gsu_status gsu_sign_test(const gsu_experiment_row* rows, size_t count, double ratio, size_t* wins, size_t* losses,
                         double* p_value) {
    return guard([&] {
        if (count > 0) need(rows, "rows");
        std::vector<gsu::ExperimentResult> results;
        for (size_t k = 0; k < count; ++k)
            results.push_back({"", rows[k].seed, rows[k].trial, rows[k].ratio,
                               rows[k].nonuniform ? gsu::Strategy::nonuniform : gsu::Strategy::uniform, rows[k].error});
        const auto t = gsu::paired_sign_test(results, ratio);
        if (wins) *wins = t.wins;
        if (losses) *losses = t.losses;
        if (p_value) *p_value = t.p_value;
    });
}

gsu_status gsu_inpaint(const gsu_graph* g, const size_t* mask, size_t m, const double* y, double* out) {
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        if (m > 0) {
            need(mask, "mask");
            need(y, "y");
        }
        gsu::SamplingMask sm{std::vector<std::size_t>(mask, mask + m)};
        const Eigen::VectorXd x =
            gsu::inpaint(gsu::laplacian(g->graph), sm, Eigen::Map<const Eigen::VectorXd>(y, static_cast<Eigen::Index>(m)));
        Eigen::Map<Eigen::VectorXd>(out, x.size()) = x;
    });
}

gsu_status gsu_sampling_distribution(const gsu_basis* b, const double* kernel, int kernel_norm, double* out) {
    return guard([&] {
        need(b, "basis");
        need(out, "out");
        const Eigen::VectorXd p =
            gsu::sampling_distribution(b->basis, make_real(b->basis.size(), kernel, "kernel"),
                                       kernel_norm ? gsu::ProbeNorm::kernel : gsu::ProbeNorm::squared_kernel);
        Eigen::Map<Eigen::VectorXd>(out, p.size()) = p;
    });
}

gsu_status gsu_draw_mask(const double* p, size_t n, size_t m, uint64_t seed, size_t* out) {
    return guard([&] {
        need(out, "out");
        const auto mask = gsu::draw_mask(make_real(n, p, "p"), m, seed);
        std::copy(mask.indices.begin(), mask.indices.end(), out);
    });
}

gsu_status gsu_repro_table1(size_t n, size_t K, const uint64_t* seeds, size_t seed_count, int ring_dft, size_t comet_k,
                            gsu_table1_row** rows, size_t* count) {
    return guard([&] {
        need(rows, "rows");
        need(count, "count");
        gsu::Table1Options o;
        o.n = n;
        o.K = K;
        if (seed_count > 0) {
            need(seeds, "seeds");
            o.seeds.assign(seeds, seeds + seed_count);
        }
        o.ring_dft = ring_dft != 0;
        o.comet_k = comet_k;
        std::vector<gsu_table1_row> out;
        for (const auto& r : gsu::repro_table1(o)) {
            gsu_table1_row c{};
            std::snprintf(c.graph, sizeof c.graph, "%s", r.graph.c_str());
            c.samples = r.samples;
            c.mu = r.mu;
            c.gabor_uniform = r.bound[0];
            c.gabor_adapted = r.bound[1];
            c.wavelet_log = r.bound[2];
            c.wavelet_adapted = r.bound[3];
            out.push_back(c);
        }
        *rows = copy_out(out);
        *count = out.size();
    });
}

gsu_status gsu_repro_modified_path(size_t n, size_t K, const double* distances, size_t distance_count,
                                   gsu_modified_path_row** rows, size_t* count) {
    return guard([&] {
        need(rows, "rows");
        need(count, "count");
        const auto grid = distances ? std::vector<double>(distances, distances + distance_count) : gsu::default_distance_grid();
        std::vector<gsu_modified_path_row> out;
        for (const auto& r : gsu::repro_modified_path(n, grid, K)) out.push_back(to_c(r));
        *rows = copy_out(out);
        *count = out.size();
    });
}

gsu_status gsu_plot_svg(const gsu_series* series, size_t count, const char* title, const char* xlabel,
                        const char* ylabel, int logx, char** svg_out) {
    return guard([&] {
        need(svg_out, "svg_out");
        if (count > 0) need(series, "series");
        std::vector<gsu::PlotSeries> s;
        for (size_t k = 0; k < count; ++k) {
            gsu::PlotSeries p;
            p.label = series[k].label ? series[k].label : "";
            if (series[k].n > 0) {
                need(series[k].x, "x");
                need(series[k].y, "y");
                p.x.assign(series[k].x, series[k].x + series[k].n);
                p.y.assign(series[k].y, series[k].y + series[k].n);
            }
            p.markers = series[k].markers != 0;
            s.push_back(std::move(p));
        }
        gsu::PlotOptions o;
        o.title = title ? title : "";
        o.xlabel = xlabel ? xlabel : "";
        o.ylabel = ylabel ? ylabel : "";
        o.logx = logx != 0;
        *svg_out = copy_string(gsu::render_svg(s, o));
    });
}

gsu_status gsu_repro_modified_path_svg(const gsu_modified_path_row* rows, size_t count, char** svg_out) {
    return guard([&] {
        need(svg_out, "svg_out");
        if (count > 0) need(rows, "rows");
        std::vector<gsu::ModifiedPathRow> r;
        for (size_t k = 0; k < count; ++k) r.push_back(from_c(rows[k]));
        gsu::PlotOptions o;
        o.title = "Modified path graphs";
        o.xlabel = "distance d = 1/W12";
        o.ylabel = "value";
        o.logx = true;
        *svg_out = copy_string(gsu::render_svg(gsu::modified_path_series(r), o));
    });
}

}  // extern "C"
