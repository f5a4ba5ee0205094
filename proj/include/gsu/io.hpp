#pragma once

#include <string>
#include <vector>

#include "gsu/bounds.hpp"
#include "gsu/frames.hpp"
#include "gsu/graph.hpp"
#include "gsu/spectral.hpp"

namespace gsu {

// Graph files use 1-based vertices. CSV: optional "#" comment lines, a header
// "i,j,w", then one edge per line. Matrix Market: coordinate real symmetric.
// Format is picked from the extension (.mtx for Matrix Market, CSV otherwise).
Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path, const std::vector<std::string>& comments = {});

Graph read_graph_csv_text(const std::string& text);
std::string graph_csv_text(const Graph& g, const std::vector<std::string>& comments = {});
Graph read_graph_mtx_text(const std::string& text);
std::string graph_mtx_text(const Graph& g, const std::vector<std::string>& comments = {});

// Signal CSV: header "i,value" (real) or "i,re,im" (complex), 1-based i, every vertex once.
Signal read_signal(const std::string& path);
void write_signal(const Signal& f, const std::string& path, const std::vector<std::string>& comments = {});
Signal read_signal_csv_text(const std::string& text);

struct BasisFileOptions {
    std::string manifest_id;
    LaplacianVariant variant = LaplacianVariant::combinatorial;
    bool ring_dft = false;
    std::string sidecar_path;  // empty: no eigenvector sidecar
};

// JSON with eigenvalues, mu, nu and the sidecar name. The sidecar is
// "GSUEIG01", then u64 N, then u64 complex flag, then N*N row-major float64
// (re, im pairs when complex), little-endian.
void write_basis(const SpectralBasis& b, const Graph& g, const std::string& path, const BasisFileOptions& options);
std::string basis_json_text(const SpectralBasis& b, const Graph& g, const BasisFileOptions& options);
Eigen::MatrixXcd read_eigenvector_sidecar(const std::string& path);

// A bank file embeds its graph and basis options so it can be reloaded alone.
struct BankFile {
    Graph graph;
    BasisOptions basis_options;
    FilterBank bank;
};

void write_bank(const FilterBank& bank, const Graph& g, const BasisOptions& options, const std::string& path,
                const std::string& manifest_id = "");
std::string bank_json_text(const FilterBank& bank, const Graph& g, const BasisOptions& options,
                           const std::string& manifest_id = "");
BankFile read_bank(const std::string& path);
BankFile read_bank_json_text(const std::string& text);

std::string reports_json_text(const std::vector<BoundReport>& reports, const std::string& manifest_id = "");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gsu
