/* C interface to the graph spectral uncertainty library.
 *
 * Objects are opaque handles released with their *_free function. Every call
 * that can fail returns a gsu_status; on failure gsu_last_error() describes the
 * problem for the calling thread. Vertex and mode indices are 0-based here
 * (files and the command line use 1-based vertices). Buffers returned through
 * out-pointers are owned by the caller and released with gsu_free(). Complex
 * vectors are passed as separate real and imaginary arrays; an imaginary
 * input pointer may be NULL for real data. */
#ifndef GSU_GSU_H
#define GSU_GSU_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GSU_API __declspec(dllexport)
#else
#define GSU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsu_status {
    GSU_OK = 0,
    GSU_ERR_VALIDATION = 2,
    GSU_ERR_NUMERICAL = 3,
    GSU_ERR_IO = 4,
    GSU_ERR_DISCONNECTED = 5,
    GSU_ERR_INTERNAL = 6
} gsu_status;

typedef struct gsu_graph gsu_graph;
typedef struct gsu_basis gsu_basis;
typedef struct gsu_bank gsu_bank;

GSU_API const char* gsu_version(void);
GSU_API const char* gsu_last_error(void);
GSU_API void gsu_free(void* buffer);

/* Graphs. params is "key=value,key=value" or NULL. */
GSU_API gsu_status gsu_graph_generate(const char* kind, size_t n, const char* params, uint64_t seed, gsu_graph** out);
GSU_API gsu_status gsu_graph_from_edges(size_t n, size_t m, const size_t* i, const size_t* j, const double* w,
                                        gsu_graph** out);
GSU_API gsu_status gsu_graph_read(const char* path, gsu_graph** out);
/* comment may be NULL; it is written as a leading comment line. */
GSU_API gsu_status gsu_graph_write(const gsu_graph* g, const char* path, const char* comment);
GSU_API void gsu_graph_free(gsu_graph* g);
GSU_API size_t gsu_graph_size(const gsu_graph* g);
GSU_API size_t gsu_graph_edge_count(const gsu_graph* g);
/* Edge k as 0-based (i, j) with i < j. */
GSU_API gsu_status gsu_graph_edge(const gsu_graph* g, size_t k, size_t* i, size_t* j, double* w);
GSU_API gsu_status gsu_graph_label(const gsu_graph* g, char** out);
/* out: n*n row-major. */
GSU_API gsu_status gsu_graph_laplacian(const gsu_graph* g, int normalized, double* out);
GSU_API gsu_status gsu_graph_hop_distance(const gsu_graph* g, size_t i, size_t j, size_t* out);

/* Spectral basis. ring_dft substitutes the complex exponential basis on rings. */
GSU_API gsu_status gsu_basis_compute(const gsu_graph* g, int normalized, int ring_dft, gsu_basis** out);
GSU_API void gsu_basis_free(gsu_basis* b);
GSU_API size_t gsu_basis_size(const gsu_basis* b);
GSU_API gsu_status gsu_basis_eigenvalues(const gsu_basis* b, double* out);
/* nu may be NULL. */
GSU_API gsu_status gsu_basis_coherence(const gsu_basis* b, double* mu, double* nu);
/* Row-major n*n, column l is eigenvector l. im may be NULL for real bases. */
GSU_API gsu_status gsu_basis_eigenvectors(const gsu_basis* b, double* re, double* im);
/* sidecar_path and manifest_id may be NULL. */
GSU_API gsu_status gsu_basis_write(const gsu_basis* b, const gsu_graph* g, int normalized, int ring_dft,
                                   const char* path, const char* sidecar_path, const char* manifest_id);
GSU_API gsu_status gsu_gft(const gsu_basis* b, const double* re, const double* im, double* out_re, double* out_im);
GSU_API gsu_status gsu_igft(const gsu_basis* b, const double* re, const double* im, double* out_re, double* out_im);

/* Signals in CSV form ("i,value" or "i,re,im"). */
GSU_API gsu_status gsu_signal_read(const char* path, size_t* n, double** re, double** im);
GSU_API gsu_status gsu_signal_write(const char* path, size_t n, const double* re, const double* im,
                                    const char* comment);

/* Measures. p uses INFINITY for the max norm. */
GSU_API gsu_status gsu_norm(size_t n, const double* re, const double* im, double p, double* out);
GSU_API gsu_status gsu_sparsity(size_t n, const double* re, const double* im, double p, double* out);
GSU_API gsu_status gsu_entropy(size_t n, const double* re, const double* im, int strict, double* out);
GSU_API gsu_status gsu_support(size_t n, const double* re, const double* im, size_t* out);

/* Global bounds as a JSON array. which: "all" or a comma list of
 * support,lp,entropic,folland,hausdorff_young. subset may be NULL (all vertices). */
GSU_API gsu_status gsu_bounds_global_json(const gsu_basis* b, const double* re, const double* im, const char* which,
                                          double p, const size_t* subset, size_t subset_len, int strict_entropy,
                                          const char* graph_id, const char* signal_id, const char* manifest_id,
                                          char** json_out);

/* Filter banks. specs use the kernel text form, e.g. "heat:tau=1", "rect:lo=0,hi=0". */
GSU_API gsu_status gsu_bank_design(const gsu_basis* b, const char* design, size_t K, gsu_bank** out);
GSU_API gsu_status gsu_bank_custom(const gsu_basis* b, const char* const* specs, size_t count, gsu_bank** out);
GSU_API void gsu_bank_free(gsu_bank* bank);
GSU_API size_t gsu_bank_size(const gsu_bank* bank);
GSU_API gsu_status gsu_bank_frame_bounds(const gsu_bank* bank, double* A, double* B);
/* out: n samples of kernel k. */
GSU_API gsu_status gsu_bank_kernel(const gsu_bank* bank, size_t k, double* out);
GSU_API gsu_status gsu_bank_write(const gsu_bank* bank, const gsu_graph* g, int normalized, int ring_dft,
                                  const char* path, const char* manifest_id);
/* Rebuilds the embedded graph and basis too; any out-pointer may be NULL. */
GSU_API gsu_status gsu_bank_read(const char* path, gsu_graph** g, gsu_basis** b, gsu_bank** bank);

/* Frame operations. Coefficient arrays are n*K row-major, entry (i, k) = <f, T_i g_k>. */
GSU_API gsu_status gsu_analysis(const gsu_basis* b, const gsu_bank* bank, const double* re, const double* im,
                                double* out_re, double* out_im);
GSU_API gsu_status gsu_localize(const gsu_basis* b, const double* kernel, size_t i, double* out_re, double* out_im);
GSU_API gsu_status gsu_atom_norm_map(const gsu_basis* b, const double* kernel, double* out);
GSU_API gsu_status gsu_global_lieb(const gsu_basis* b, const gsu_bank* bank, double p, double* atom_bound,
                                   double* coherence_bound, double* max_atom_norm);

typedef struct gsu_local_report {
    size_t i0;
    size_t k0;
    double sp;
    double bound_mid;
    double bound_outer;
    double lower;
    size_t k_tilde;
    size_t i_tilde;
    size_t hop;
} gsu_local_report;

GSU_API gsu_status gsu_local_bound(const gsu_basis* b, const gsu_bank* bank, const gsu_graph* g, size_t i0, size_t k0,
                                   double p, gsu_local_report* out);
GSU_API gsu_status gsu_local_bounds_all(const gsu_basis* b, const gsu_bank* bank, const gsu_graph* g, double p,
                                        gsu_local_report** out, size_t* count);
GSU_API gsu_status gsu_overlap(const gsu_basis* b, const double* kernel, size_t j, double p, double* out);

typedef struct gsu_spread_row {
    double dilation;
    double mean_relative_error;
    double mean_hop;
    size_t max_hop;
} gsu_spread_row;

/* family: "heat" or "wavelet". */
GSU_API gsu_status gsu_spread_stats(const gsu_basis* b, const gsu_graph* g, const char* family,
                                    const double* dilations, size_t count, gsu_spread_row** out);

/* Sampling and inpainting. */
typedef struct gsu_experiment_row {
    uint64_t seed;
    size_t trial;
    double ratio;
    int nonuniform;
    double error;
} gsu_experiment_row;

typedef struct gsu_experiment_config {
    const char* kind;
    size_t n;
    const char* params; /* may be NULL */
    const double* ratios;
    size_t ratio_count;
    size_t trials;
    uint64_t seed;
    double probe_scale;   /* probe kernel exp(-probe_scale * lambda / lambda_max) */
    double lowpass_scale; /* signal kernel 1 / (1 + lowpass_scale * lambda / lambda_max) */
    int probe_kernel_norm; /* nonzero: weights from ||T_i g|| instead of ||T_i g^2|| */
    unsigned threads;
} gsu_experiment_config;

GSU_API void gsu_experiment_defaults(gsu_experiment_config* config);
GSU_API gsu_status gsu_experiment_inpaint(const gsu_experiment_config* config, gsu_experiment_row** rows,
                                          size_t* count);
/* ratio < 0 pools all ratios. */
GSU_API gsu_status gsu_sign_test(const gsu_experiment_row* rows, size_t count, double ratio, size_t* wins,
                                 size_t* losses, double* p_value);
/* mask: m sorted vertices; y: observed values in mask order; out: n values. */
GSU_API gsu_status gsu_inpaint(const gsu_graph* g, const size_t* mask, size_t m, const double* y, double* out);
GSU_API gsu_status gsu_sampling_distribution(const gsu_basis* b, const double* kernel, int kernel_norm, double* out);
GSU_API gsu_status gsu_draw_mask(const double* p, size_t n, size_t m, uint64_t seed, size_t* out);

/* Reproduction drivers. */
typedef struct gsu_table1_row {
    char graph[64];
    size_t samples;
    double mu;
    double gabor_uniform;
    double gabor_adapted;
    double wavelet_log;
    double wavelet_adapted;
} gsu_table1_row;

GSU_API gsu_status gsu_repro_table1(size_t n, size_t K, const uint64_t* seeds, size_t seed_count, int ring_dft,
                                    size_t comet_k, gsu_table1_row** rows, size_t* count);

typedef struct gsu_modified_path_row {
    double d;
    double mu;
    double lp_rhs;
    double lp_first;
    double lp_last;
    double global_bound;
    double local_first;
    double local_last;
    double sinf_first;
    double sinf_last;
} gsu_modified_path_row;

/* distances may be NULL for the default grid. */
GSU_API gsu_status gsu_repro_modified_path(size_t n, size_t K, const double* distances, size_t distance_count,
                                           gsu_modified_path_row** rows, size_t* count);

/* Plots. */
typedef struct gsu_series {
    const char* label;
    const double* x;
    const double* y;
    size_t n;
    int markers;
} gsu_series;

GSU_API gsu_status gsu_plot_svg(const gsu_series* series, size_t count, const char* title, const char* xlabel,
                                const char* ylabel, int logx, char** svg_out);
GSU_API gsu_status gsu_repro_modified_path_svg(const gsu_modified_path_row* rows, size_t count, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif
