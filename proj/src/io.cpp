#include "gsu/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gsu/error.hpp"
#include "gsu/format.hpp"

namespace gsu {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (ss >> item) out.push_back(item);
    return out;
}

double parse_real(const std::string& s, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw IoError("line " + std::to_string(line) + ": cannot parse number '" + s + "'");
    return v;
}

std::size_t parse_index(const std::string& s, std::size_t line) {
    const double v = parse_real(s, line);
    if (!(v >= 1.0) || std::floor(v) != v || v > 1e15)
        throw IoError("line " + std::to_string(line) + ": vertex index '" + s + "' is not a positive integer");
    return static_cast<std::size_t>(v) - 1;
}

// "graph kind=... n=... seed=... key=value" metadata line.
struct GraphMeta {
    std::optional<std::size_t> n;
    GraphKind kind;
    std::optional<std::uint64_t> seed;
};

void parse_meta(const std::string& body, GraphMeta& meta) {
    const auto tokens = split_ws(body);
    if (tokens.empty() || tokens[0] != "graph") return;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto eq = tokens[t].find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tokens[t].substr(0, eq), value = tokens[t].substr(eq + 1);
        try {
            if (key == "kind") meta.kind.name = value;
            else if (key == "n") meta.n = static_cast<std::size_t>(std::stoull(value));
            else if (key == "seed") meta.seed = std::stoull(value);
            else meta.kind.params[key] = std::stod(value);
        } catch (const std::exception&) {
            throw IoError("malformed graph metadata '" + tokens[t] + "'");
        }
    }
}

std::string meta_line(const Graph& g) {
    std::string s = "graph kind=" + g.kind().name + " n=" + std::to_string(g.size());
    if (g.seed()) s += " seed=" + std::to_string(*g.seed());
    for (const auto& [key, value] : g.kind().params) s += " " + key + "=" + format_double(value);
    return s;
}

Graph build_graph(std::size_t max_index, std::vector<Edge> edges, const GraphMeta& meta) {
    std::size_t n = max_index + 1;
    if (meta.n) {
        if (*meta.n < n) throw IoError("graph metadata n is smaller than the largest vertex index");
        n = *meta.n;
    }
    return Graph(n, std::move(edges), meta.kind, meta.seed);
}

std::string file_extension(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back(json::array({e.i + 1, e.j + 1, e.w}));
    json params = json::object();
    for (const auto& [key, value] : g.kind().params) params[key] = value;
    json out = {{"n", g.size()}, {"kind", g.kind().name}, {"params", params}, {"edges", edges}};
    out["seed"] = g.seed() ? json(*g.seed()) : json(nullptr);
    return out;
}

Graph graph_from_json(const json& j) {
    GraphKind kind{j.at("kind").get<std::string>(), {}};
    for (const auto& [key, value] : j.at("params").items()) kind.params[key] = value.get<double>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        const auto i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>();
        if (i < 1 || k < 1) throw IoError("bank graph edge uses vertex 0; indices are 1-based");
        edges.push_back({i - 1, k - 1, e.at(2).get<double>()});
    }
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
    return Graph(j.at("n").get<std::size_t>(), std::move(edges), std::move(kind), seed);
}

json p_json(std::optional<double> p) {
    if (!p) return nullptr;
    if (std::isinf(*p)) return "inf";
    return *p;
}

json number_json(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("error writing '" + path + "'");
}

Graph read_graph_csv_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0, max_index = 0;
    bool header = false;
    GraphMeta meta;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s[0] == '#') {
            parse_meta(trim(s.substr(1)), meta);
            continue;
        }
        if (!header) {
            std::string h = s;
            h.erase(std::remove(h.begin(), h.end(), ' '), h.end());
            if (h != "i,j,w") throw IoError("line " + std::to_string(line) + ": expected header 'i,j,w'");
            header = true;
            continue;
        }
        const auto cells = split(s, ',');
        if (cells.size() != 3) throw IoError("line " + std::to_string(line) + ": expected 3 fields");
        Edge e{parse_index(cells[0], line), parse_index(cells[1], line), parse_real(cells[2], line)};
        if (e.i == e.j) throw ValidationError("line " + std::to_string(line) + ": self loop at vertex " + std::to_string(e.i + 1));
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw ValidationError("line " + std::to_string(line) + ": weight must be positive and finite");
        max_index = std::max({max_index, e.i, e.j});
        edges.push_back(e);
    }
    if (!header) throw IoError("graph CSV has no 'i,j,w' header");
    if (edges.empty()) throw ValidationError("graph has no edges");
    return build_graph(max_index, std::move(edges), meta);
}

std::string graph_csv_text(const Graph& g, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    out += "# " + meta_line(g) + "\n";
    out += "i,j,w\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," + format_double(e.w) + "\n";
    return out;
}

Graph read_graph_mtx_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    if (!std::getline(in, raw)) throw IoError("empty Matrix Market file");
    ++line;
    auto banner = split_ws(raw);
    for (auto& t : banner) std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (banner.size() != 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix" || banner[2] != "coordinate" ||
        (banner[3] != "real" && banner[3] != "integer") || banner[4] != "symmetric")
        throw IoError("expected '%%MatrixMarket matrix coordinate real symmetric'");
    GraphMeta meta;
    std::optional<std::size_t> rows;
    std::size_t expected = 0;
    std::map<std::pair<std::size_t, std::size_t>, double> entries;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s[0] == '%') {
            parse_meta(trim(s.substr(1)), meta);
            continue;
        }
        const auto cells = split_ws(s);
        if (!rows) {
            if (cells.size() != 3) throw IoError("line " + std::to_string(line) + ": expected 'rows cols entries'");
            const auto r = parse_index(cells[0], line) + 1, c = parse_index(cells[1], line) + 1;
            if (r != c) throw IoError("weight matrix must be square");
            rows = r;
            expected = static_cast<std::size_t>(parse_real(cells[2], line));
            continue;
        }
        if (cells.size() != 3) throw IoError("line " + std::to_string(line) + ": expected 'i j w'");
        auto i = parse_index(cells[0], line), j = parse_index(cells[1], line);
        const double w = parse_real(cells[2], line);
        if (i >= *rows || j >= *rows) throw IoError("line " + std::to_string(line) + ": index exceeds matrix size");
        if (i == j) throw ValidationError("line " + std::to_string(line) + ": self loop at vertex " + std::to_string(i + 1));
        if (!(w > 0.0) || !std::isfinite(w))
            throw ValidationError("line " + std::to_string(line) + ": weight must be positive and finite");
        if (i > j) std::swap(i, j);
        if (!entries.emplace(std::pair{i, j}, w).second)
            throw ValidationError("line " + std::to_string(line) + ": duplicate edge");
    }
    if (!rows) throw IoError("Matrix Market file has no size line");
    if (entries.size() != expected) throw IoError("Matrix Market entry count does not match its size line");
    std::vector<Edge> edges;
    for (const auto& [key, w] : entries) edges.push_back({key.first, key.second, w});
    meta.n = *rows;
    return build_graph(0, std::move(edges), meta);
}

std::string graph_mtx_text(const Graph& g, const std::vector<std::string>& comments) {
    std::string out = "%%MatrixMarket matrix coordinate real symmetric\n";
    for (const auto& c : comments) out += "% " + c + "\n";
    out += "% " + meta_line(g) + "\n";
    out += std::to_string(g.size()) + " " + std::to_string(g.size()) + " " + std::to_string(g.edges().size()) + "\n";
    // Lower triangle: row index > column index.
    for (const auto& e : g.edges())
        out += std::to_string(e.j + 1) + " " + std::to_string(e.i + 1) + " " + format_double(e.w) + "\n";
    return out;
}

Graph read_graph(const std::string& path) {
    const std::string text = read_text_file(path);
    return file_extension(path) == "mtx" ? read_graph_mtx_text(text) : read_graph_csv_text(text);
}

void write_graph(const Graph& g, const std::string& path, const std::vector<std::string>& comments) {
    write_text_file(path, file_extension(path) == "mtx" ? graph_mtx_text(g, comments) : graph_csv_text(g, comments));
}

Signal read_signal_csv_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    int columns = 0;
    std::map<std::size_t, Complex> values;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (columns == 0) {
            std::string h = s;
            h.erase(std::remove(h.begin(), h.end(), ' '), h.end());
            if (h == "i,value") columns = 2;
            else if (h == "i,re,im") columns = 3;
            else throw IoError("line " + std::to_string(line) + ": expected header 'i,value' or 'i,re,im'");
            continue;
        }
        const auto cells = split(s, ',');
        if (static_cast<int>(cells.size()) != columns)
            throw IoError("line " + std::to_string(line) + ": expected " + std::to_string(columns) + " fields");
        const auto i = parse_index(cells[0], line);
        const Complex v(parse_real(cells[1], line), columns == 3 ? parse_real(cells[2], line) : 0.0);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ValidationError("line " + std::to_string(line) + ": signal value is not finite");
        if (!values.emplace(i, v).second) throw ValidationError("line " + std::to_string(line) + ": vertex listed twice");
    }
    if (columns == 0) throw IoError("signal CSV has no header");
    if (values.empty()) throw ValidationError("signal is empty");
    const auto n = values.rbegin()->first + 1;
    if (values.size() != n) throw ValidationError("signal must list every vertex 1.." + std::to_string(n));
    Signal f(static_cast<Eigen::Index>(n));
    for (const auto& [i, v] : values) f(static_cast<Eigen::Index>(i)) = v;
    return f;
}

Signal read_signal(const std::string& path) { return read_signal_csv_text(read_text_file(path)); }

void write_signal(const Signal& f, const std::string& path, const std::vector<std::string>& comments) {
    const bool real = f.imag().cwiseAbs().maxCoeff() == 0.0;
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    out += real ? "i,value\n" : "i,re,im\n";
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        out += std::to_string(i + 1) + "," + format_double(f(i).real());
        if (!real) out += "," + format_double(f(i).imag());
        out += "\n";
    }
    write_text_file(path, out);
}

std::string basis_json_text(const SpectralBasis& b, const Graph& g, const BasisFileOptions& options) {
    json j;
    if (!options.manifest_id.empty()) j["manifest_id"] = options.manifest_id;
    j["graph"] = g.label();
    j["n"] = b.size();
    j["laplacian"] = options.variant == LaplacianVariant::combinatorial ? "combinatorial" : "normalized";
    j["ring_dft"] = options.ring_dft;
    j["real_basis"] = b.is_real();
    j["eigenvalues"] = to_std(b.eigenvalues());
    j["lambda_max"] = b.lambda_max();
    j["mu"] = b.mu();
    j["nu"] = to_std(b.nu());
    j["coherence_vertex"] = b.coherence_vertex() + 1;
    j["coherence_mode"] = b.coherence_mode();
    if (options.sidecar_path.empty()) {
        j["eigenvectors"] = nullptr;
    } else {
        const auto slash = options.sidecar_path.find_last_of('/');
        j["eigenvectors"] = {{"file", slash == std::string::npos ? options.sidecar_path : options.sidecar_path.substr(slash + 1)},
                             {"format", "GSUEIG01 u64:N u64:complex row-major float64 little-endian"}};
    }
    return j.dump(2) + "\n";
}

void write_basis(const SpectralBasis& b, const Graph& g, const std::string& path, const BasisFileOptions& options) {
    write_text_file(path, basis_json_text(b, g, options));
    if (options.sidecar_path.empty()) return;
    std::ofstream out(options.sidecar_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + options.sidecar_path + "' for writing");
    const std::uint64_t n = b.size(), complex_flag = b.is_real() ? 0 : 1;
    out.write("GSUEIG01", 8);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&complex_flag), sizeof complex_flag);
    const auto& U = b.eigenvectors();
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
        for (Eigen::Index l = 0; l < U.cols(); ++l) {
            const double re = U(i, l).real(), im = U(i, l).imag();
            out.write(reinterpret_cast<const char*>(&re), sizeof re);
            if (complex_flag) out.write(reinterpret_cast<const char*>(&im), sizeof im);
        }
    }
    if (!out) throw IoError("error writing '" + options.sidecar_path + "'");
}

Eigen::MatrixXcd read_eigenvector_sidecar(const std::string& path) {
    const std::string data = read_text_file(path);
    if (data.size() < 24 || data.compare(0, 8, "GSUEIG01") != 0) throw IoError("'" + path + "' is not an eigenvector sidecar");
    std::uint64_t n = 0, complex_flag = 0;
    std::memcpy(&n, data.data() + 8, 8);
    std::memcpy(&complex_flag, data.data() + 16, 8);
    const std::uint64_t per = complex_flag ? 2 : 1;
    if (n == 0 || n > (1u << 20) || data.size() != 24 + n * n * per * 8) throw IoError("eigenvector sidecar has the wrong size");
    Eigen::MatrixXcd U(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const char* p = data.data() + 24;
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
        for (Eigen::Index l = 0; l < U.cols(); ++l) {
            double re = 0.0, im = 0.0;
            std::memcpy(&re, p, 8);
            p += 8;
            if (complex_flag) {
                std::memcpy(&im, p, 8);
                p += 8;
            }
            U(i, l) = Complex(re, im);
        }
    }
    return U;
}

std::string bank_json_text(const FilterBank& bank, const Graph& g, const BasisOptions& options,
                           const std::string& manifest_id) {
    json j;
    if (!manifest_id.empty()) j["manifest_id"] = manifest_id;
    j["design"] = to_string(bank.design());
    j["K"] = bank.size();
    j["A"] = bank.lower_bound();
    j["B"] = bank.upper_bound();
    j["G"] = to_std(bank.G());
    j["basis"] = {{"laplacian", options.variant == LaplacianVariant::combinatorial ? "combinatorial" : "normalized"},
                  {"ring_dft", options.ring_dft}};
    json kernels = json::array();
    for (const auto& k : bank.kernels()) kernels.push_back({{"spec", describe(k.spec())}, {"values", to_std(k.values())}});
    j["kernels"] = kernels;
    j["graph"] = graph_json(g);
    return j.dump(2) + "\n";
}

void write_bank(const FilterBank& bank, const Graph& g, const BasisOptions& options, const std::string& path,
                const std::string& manifest_id) {
    write_text_file(path, bank_json_text(bank, g, options, manifest_id));
}

BankFile read_bank_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("bank file is not valid JSON: ") + e.what());
    }
    try {
        Graph g = graph_from_json(j.at("graph"));
        BasisOptions options;
        const auto lap = j.at("basis").at("laplacian").get<std::string>();
        if (lap == "normalized") options.variant = LaplacianVariant::normalized;
        else if (lap != "combinatorial") throw IoError("unknown laplacian '" + lap + "'");
        options.ring_dft = j.at("basis").at("ring_dft").get<bool>();
        std::vector<Kernel> kernels;
        for (const auto& k : j.at("kernels")) {
            const auto values = k.at("values").get<std::vector<double>>();
            if (values.size() != g.size()) throw ValidationError("kernel sample count does not match graph size");
            Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
            KernelSpec spec{TableSpec{values}};
            const auto text_spec = k.value("spec", std::string("table"));
            if (text_spec != "table") {
                try {
                    spec = parse_kernel_spec(text_spec);
                } catch (const ValidationError&) {
                }
            }
            kernels.emplace_back(std::move(spec), std::move(v));
        }
        FilterBank bank(std::move(kernels), parse_design(j.at("design").get<std::string>()));
        return BankFile{std::move(g), options, std::move(bank)};
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed bank file: ") + e.what());
    }
}

BankFile read_bank(const std::string& path) { return read_bank_json_text(read_text_file(path)); }

std::string reports_json_text(const std::vector<BoundReport>& reports, const std::string& manifest_id) {
    json arr = json::array();
    for (const auto& r : reports) {
        json o;
        o["name"] = r.name;
        o["lhs"] = number_json(r.lhs);
        o["relation"] = r.direction == Direction::at_least ? ">=" : "<=";
        o["rhs"] = number_json(r.rhs);
        o["slack"] = number_json(r.slack);
        o["holds"] = r.holds;
        o["context"] = {{"graph", r.context.graph_id},
                        {"signal", r.context.signal_id},
                        {"p", p_json(r.context.p)},
                        {"q", p_json(r.context.q)}};
        if (!manifest_id.empty()) o["manifest_id"] = manifest_id;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

}  // namespace gsu
