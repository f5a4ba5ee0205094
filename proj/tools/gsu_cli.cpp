// Command-line front end. Talks to the library only through gsu.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gsu/gsu.h"

namespace {

using json = nlohmann::json;

struct Failure {
    int code;
    std::string message;
};

int exit_code(gsu_status s) {
    switch (s) {
        case GSU_OK: return 0;
        case GSU_ERR_VALIDATION:
        case GSU_ERR_DISCONNECTED: return 2;
        case GSU_ERR_NUMERICAL: return 3;
        case GSU_ERR_IO: return 4;
        default: return 1;
    }
}

void check(gsu_status s) {
    if (s != GSU_OK) throw Failure{exit_code(s), gsu_last_error()};
}

[[noreturn]] void invalid(const std::string& msg) { throw Failure{2, msg}; }

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<gsu_graph, Deleter<gsu_graph, gsu_graph_free>>;
using BasisPtr = std::unique_ptr<gsu_basis, Deleter<gsu_basis, gsu_basis_free>>;
using BankPtr = std::unique_ptr<gsu_bank, Deleter<gsu_bank, gsu_bank_free>>;

struct BufferFree {
    void operator()(void* p) const { gsu_free(p); }
};
template <class T>
using Buffer = std::unique_ptr<T, BufferFree>;

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "infinity") return INFINITY;
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash != std::string::npos) {
            const double a = std::stod(s.substr(0, slash), &used);
            const double b = std::stod(s.substr(slash + 1));
            return a / b;
        }
        const double v = std::stod(s, &used);
        if (used != s.size()) invalid("bad p value '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        invalid("bad p value '" + s + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{4, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{4, "cannot write " + path};
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Run manifest. The id covers the version, the arguments that change results
// and the content of every input file; output paths, thread count and wall
// time are left out so identical runs produce identical bytes.
class Manifest {
public:
    Manifest(int argc, char** argv) : start_(std::chrono::steady_clock::now()) {
        for (int k = 0; k < argc; ++k) argv_.emplace_back(argv[k]);
    }

    void input(const std::string& path) {
        if (path.empty() || path.find(':') != std::string::npos) return;
        inputs_.push_back({path, hex(fnv1a(read_file(path)))});
    }

    void seed(std::uint64_t s) { seeds_.push_back(s); }
    void output(const std::string& path) {
        if (path.empty() || path == "-") return;
        if (std::find(outputs_.begin(), outputs_.end(), path) == outputs_.end()) outputs_.push_back(path);
    }

    std::string id() const {
        std::uint64_t h = fnv1a(gsu_version());
        bool skip = false;
        for (std::size_t k = 1; k < argv_.size(); ++k) {
            const std::string& a = argv_[k];
            if (skip) {
                skip = false;
                continue;
            }
            if (a == "--out" || a == "--threads" || a == "--sidecar" || a == "--svg") {
                skip = true;
                continue;
            }
            if (a.rfind("--out=", 0) == 0 || a.rfind("--threads=", 0) == 0 || a.rfind("--sidecar=", 0) == 0 ||
                a.rfind("--svg=", 0) == 0)
                continue;
            h = fnv1a(std::string(1, '\0') + a, h);
        }
        for (const auto& in : inputs_) h = fnv1a(std::string(1, '\0') + in.second, h);
        return hex(h);
    }

    void write() const {
        if (outputs_.empty()) return;
        json j;
        j["id"] = id();
        j["version"] = gsu_version();
        j["command_line"] = argv_;
        j["seeds"] = seeds_;
        j["inputs"] = json::array();
        for (const auto& in : inputs_) j["inputs"].push_back({{"path", in.first}, {"fnv1a64", in.second}});
        j["outputs"] = outputs_;
        j["wall_time_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        write_file(outputs_.front() + ".manifest.json", j.dump(2) + "\n");
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> argv_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<std::uint64_t> seeds_;
    std::vector<std::string> outputs_;
};

// Tabular output: CSV with a manifest comment line, or a JSON object.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    std::string csv(const std::string& manifest_id) const {
        std::string out = "# manifest=" + manifest_id + "\n";
        for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + columns[c];
        out += "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ",";
                const json& v = row[c];
                if (v.is_string()) out += v.get<std::string>();
                else if (v.is_number_float()) out += fmt(v.get<double>());
                else out += v.dump();
            }
            out += "\n";
        }
        return out;
    }

    std::string json_text(const std::string& manifest_id) const {
        json j;
        j["manifest_id"] = manifest_id;
        j["rows"] = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (std::size_t c = 0; c < row.size(); ++c) {
                const json& v = row[c];
                obj[columns[c]] = v.is_number_float() && !std::isfinite(v.get<double>()) ? json(fmt(v.get<double>())) : v;
            }
            j["rows"].push_back(obj);
        }
        return j.dump(2) + "\n";
    }
};

struct Globals {
    std::uint64_t seed = 7;
    unsigned threads = 1;
    std::string out;
    std::string format = "csv";
    bool format_given = false;
};

void emit(const Table& t, const Globals& g, Manifest& m) {
    m.output(g.out);
    const std::string id = m.id();
    write_file(g.out, g.format == "json" ? t.json_text(id) : t.csv(id));
    m.write();
}

GraphPtr load_graph(const std::string& path, Manifest& m) {
    m.input(path);
    gsu_graph* g = nullptr;
    check(gsu_graph_read(path.c_str(), &g));
    return GraphPtr(g);
}

BasisPtr load_basis(const gsu_graph* g, bool normalized, bool ring_dft) {
    gsu_basis* b = nullptr;
    check(gsu_basis_compute(g, normalized, ring_dft, &b));
    return BasisPtr(b);
}

struct SignalData {
    std::vector<double> re, im;
};

// A signal file, or "delta:i" (1-based vertex) or "eig:l" (0-based mode).
SignalData load_signal(const std::string& spec, const gsu_basis* b, Manifest& m) {
    const std::size_t n = gsu_basis_size(b);
    SignalData s{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    const auto colon = spec.find(':');
    if (colon != std::string::npos && (spec.rfind("delta:", 0) == 0 || spec.rfind("eig:", 0) == 0)) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(spec.substr(colon + 1));
        } catch (const std::logic_error&) {
            invalid("bad signal index in '" + spec + "'");
        }
        if (spec[0] == 'd') {
            if (idx < 1 || idx > n) invalid("delta vertex out of range");
            s.re[idx - 1] = 1.0;
        } else {
            if (idx >= n) invalid("eigenvector index out of range");
            std::vector<double> ur(n * n), ui(n * n);
            check(gsu_basis_eigenvectors(b, ur.data(), ui.data()));
            for (std::size_t i = 0; i < n; ++i) {
                s.re[i] = ur[i * n + idx];
                s.im[i] = ui[i * n + idx];
            }
        }
        return s;
    }
    m.input(spec);
    std::size_t len = 0;
    double* re = nullptr;
    double* im = nullptr;
    check(gsu_signal_read(spec.c_str(), &len, &re, &im));
    Buffer<double> hold_re(re), hold_im(im);
    if (len != n) invalid("signal has " + std::to_string(len) + " entries, graph has " + std::to_string(n));
    s.re.assign(re, re + len);
    s.im.assign(im, im + len);
    return s;
}

std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    if (text.find(':') != std::string::npos) {
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) invalid("range must be start:stop:step");
        double a = 0, b = 0, step = 0;
        try {
            a = std::stod(parts[0]);
            b = std::stod(parts[1]);
            step = std::stod(parts[2]);
        } catch (const std::logic_error&) {
            invalid("bad range '" + text + "'");
        }
        if (!(step > 0) || b < a) invalid("bad range '" + text + "'");
        std::vector<double> out;
        const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
        // Round to 12 digits so 0.1 + 4 * 0.05 prints as 0.3.
        for (long k = 0; k <= count; ++k) out.push_back(std::round((a + k * step) * 1e12) / 1e12);
        return out;
    }
    std::vector<double> out;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::logic_error&) {
            invalid("bad number '" + item + "'");
        }
    }
    return out;
}

std::string join_params(const std::vector<std::string>& params) {
    std::string out;
    for (const auto& p : params) out += (out.empty() ? "" : ",") + p;
    return out;
}

const char* design_name(std::size_t k) {
    static const char* names[] = {"gabor_uniform", "gabor_adapted", "wavelet_log", "wavelet_adapted"};
    return names[k];
}

Table table1(std::size_t n, std::size_t K, const std::vector<std::uint64_t>& seeds, bool ring_dft, std::size_t comet_k) {
    gsu_table1_row* rows = nullptr;
    std::size_t count = 0;
    check(gsu_repro_table1(n, K, seeds.data(), seeds.size(), ring_dft, comet_k, &rows, &count));
    Buffer<gsu_table1_row> hold(rows);
    Table t;
    t.columns = {"graph", "samples", "mu"};
    for (std::size_t k = 0; k < 4; ++k) t.columns.emplace_back(design_name(k));
    for (std::size_t r = 0; r < count; ++r) {
        const auto& row = rows[r];
        t.rows.push_back({row.graph, row.samples, row.mu, row.gabor_uniform, row.gabor_adapted, row.wavelet_log,
                          row.wavelet_adapted});
    }
    return t;
}

std::string strategy_name(int nonuniform) { return nonuniform ? "nonuniform" : "uniform"; }

// Reads the CSV written by "experiment inpaint".
std::vector<gsu_experiment_row> read_experiment_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<gsu_experiment_row> rows;
    bool header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "kind,seed,trial,ratio,strategy,error") throw Failure{4, path + ": unexpected header"};
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        if (f.size() != 6 || (f[4] != "uniform" && f[4] != "nonuniform"))
            throw Failure{4, path + ":" + std::to_string(lineno) + ": malformed row"};
        try {
            rows.push_back({std::stoull(f[1]), std::stoul(f[2]), std::stod(f[3]), f[4] == "nonuniform" ? 1 : 0,
                            std::stod(f[5])});
        } catch (const std::logic_error&) {
            throw Failure{4, path + ":" + std::to_string(lineno) + ": malformed number"};
        }
    }
    if (!header) throw Failure{4, path + ": missing header"};
    return rows;
}

void need_out(const Globals& g, const char* what) {
    if (g.out.empty() || g.out == "-") invalid(std::string(what) + " needs --out");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph spectral uncertainty toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(gsu_version()));

    Globals g;
    app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    app.add_option("--out", g.out, "Output path (stdout when omitted for tables)");
    app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    Manifest manifest(argc, argv);
    std::function<void()> action;

    // graph gen
    auto* graph = app.add_subcommand("graph", "Graph generation");
    graph->require_subcommand(1);
    auto* gen = graph->add_subcommand("gen", "Generate a graph file");
    std::string kind;
    std::size_t n = 64;
    std::vector<std::string> params;
    gen->add_option("--kind", kind, "path, modified_path, ring, comet, sensor, community, erdos_renyi, random_regular")
        ->required();
    gen->add_option("--n", n, "Vertex count")->required();
    gen->add_option("--param", params, "key=value generator parameter");
    gen->callback([&] {
        action = [&] {
            need_out(g, "graph gen");
            manifest.seed(g.seed);
            gsu_graph* raw = nullptr;
            check(gsu_graph_generate(kind.c_str(), n, join_params(params).c_str(), g.seed, &raw));
            GraphPtr gp(raw);
            manifest.output(g.out);
            check(gsu_graph_write(gp.get(), g.out.c_str(), ("manifest=" + manifest.id()).c_str()));
            manifest.write();
        };
    });

    // spectrum
    std::string graph_path, sidecar;
    bool normalized = false, ring_dft = false;
    auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigendecomposition and coherence");
    spectrum->add_option("--graph", graph_path, "Graph file")->required();
    spectrum->add_flag("--normalized", normalized, "Use the normalized Laplacian");
    spectrum->add_flag("--ring-dft", ring_dft, "Complex exponential basis on rings");
    spectrum->add_option("--sidecar", sidecar, "Binary eigenvector file");
    spectrum->callback([&] {
        action = [&] {
            need_out(g, "spectrum");
            auto gp = load_graph(graph_path, manifest);
            auto bp = load_basis(gp.get(), normalized, ring_dft);
            manifest.output(g.out);
            if (!sidecar.empty()) manifest.output(sidecar);
            check(gsu_basis_write(bp.get(), gp.get(), normalized, ring_dft, g.out.c_str(),
                                  sidecar.empty() ? nullptr : sidecar.c_str(), manifest.id().c_str()));
            manifest.write();
        };
    });

    // frame
    auto* frame = app.add_subcommand("frame", "Localized spectral filter frames");
    frame->require_subcommand(1);
    std::string design = "gabor_uniform", bank_path, signal_spec;
    std::size_t K = 16;
    std::vector<std::string> kernels;
    auto* fdesign = frame->add_subcommand("design", "Build a filter bank");
    fdesign->add_option("--graph", graph_path, "Graph file")->required();
    fdesign->add_option("--design", design, "gabor_uniform, gabor_adapted, wavelet_log, wavelet_adapted")
        ->capture_default_str();
    fdesign->add_option("--k", K, "Number of kernels")->capture_default_str();
    fdesign->add_option("--kernel", kernels, "Custom kernel spec, e.g. heat:tau=2 (repeatable; overrides --design)");
    fdesign->add_flag("--normalized", normalized, "Use the normalized Laplacian");
    fdesign->add_flag("--ring-dft", ring_dft, "Complex exponential basis on rings");
    fdesign->callback([&] {
        action = [&] {
            need_out(g, "frame design");
            auto gp = load_graph(graph_path, manifest);
            auto bp = load_basis(gp.get(), normalized, ring_dft);
            gsu_bank* raw = nullptr;
            if (kernels.empty()) {
                check(gsu_bank_design(bp.get(), design.c_str(), K, &raw));
            } else {
                std::vector<const char*> specs;
                for (const auto& k : kernels) specs.push_back(k.c_str());
                check(gsu_bank_custom(bp.get(), specs.data(), specs.size(), &raw));
            }
            BankPtr bank(raw);
            manifest.output(g.out);
            check(gsu_bank_write(bank.get(), gp.get(), normalized, ring_dft, g.out.c_str(), manifest.id().c_str()));
            manifest.write();
        };
    });

    auto* fanalyze = frame->add_subcommand("analyze", "Analysis coefficients <f, T_i g_k>");
    fanalyze->add_option("--bank", bank_path, "Bank file")->required();
    fanalyze->add_option("--signal", signal_spec, "Signal file, delta:i or eig:l")->required();
    fanalyze->callback([&] {
        action = [&] {
            manifest.input(bank_path);
            gsu_basis* braw = nullptr;
            gsu_bank* kraw = nullptr;
            check(gsu_bank_read(bank_path.c_str(), nullptr, &braw, &kraw));
            BasisPtr bp(braw);
            BankPtr bank(kraw);
            const auto f = load_signal(signal_spec, bp.get(), manifest);
            const std::size_t N = gsu_basis_size(bp.get()), nk = gsu_bank_size(bank.get());
            std::vector<double> re(N * nk), im(N * nk);
            check(gsu_analysis(bp.get(), bank.get(), f.re.data(), f.im.data(), re.data(), im.data()));
            Table t;
            t.columns = {"i", "k", "re", "im"};
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t k = 0; k < nk; ++k) t.rows.push_back({i + 1, k, re[i * nk + k], im[i * nk + k]});
            emit(t, g, manifest);
        };
    });

    std::vector<std::uint64_t> seeds{1, 2, 3};
    std::size_t comet_k = 0;
    auto add_table1_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "Vertex count")->capture_default_str();
        cmd->add_option("--k", K, "Kernels per design")->capture_default_str();
        cmd->add_option("--seeds", seeds, "Seeds for the random graph rows")->delimiter(',')->capture_default_str();
        cmd->add_flag("--ring-dft", ring_dft, "Complex exponential basis for the ring row");
        cmd->add_option("--comet-k", comet_k, "Comet star size (0: default)");
        cmd->callback([&] {
            action = [&] {
                for (auto s : seeds) manifest.seed(s);
                emit(table1(n, K, seeds, ring_dft, comet_k), g, manifest);
            };
        });
    };
    add_table1_options(frame->add_subcommand("table1", "Maximum atom norm per design and graph"));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Uncertainty bounds");
    bounds->require_subcommand(1);
    std::string which = "all", p_text = "2";
    std::vector<std::size_t> subset;
    bool strict_entropy = false, all = false;
    std::size_t i0 = 0, k0 = 0;
    auto* bglobal = bounds->add_subcommand("global", "Global uncertainty inequalities for one signal");
    bglobal->add_option("--graph", graph_path, "Graph file")->required();
    bglobal->add_option("--signal", signal_spec, "Signal file, delta:i or eig:l")->required();
    bglobal->add_option("--which", which, "all or support,lp,entropic,folland,hausdorff_young")->capture_default_str();
    bglobal->add_option("--p", p_text, "Norm index, e.g. 1, 4/3, inf")->capture_default_str();
    bglobal->add_option("--subset", subset, "1-based vertex subset for the local Folland bound")->delimiter(',');
    bglobal->add_flag("--strict-entropy", strict_entropy, "Reject non-unit signals instead of normalizing");
    bglobal->add_flag("--normalized", normalized, "Use the normalized Laplacian");
    bglobal->add_flag("--ring-dft", ring_dft, "Complex exponential basis on rings");
    bglobal->callback([&] {
        action = [&] {
            const double p = parse_p(p_text);
            auto gp = load_graph(graph_path, manifest);
            auto bp = load_basis(gp.get(), normalized, ring_dft);
            const auto f = load_signal(signal_spec, bp.get(), manifest);
            std::vector<std::size_t> zero_based;
            for (auto v : subset) {
                if (v == 0) invalid("subset vertices are 1-based");
                zero_based.push_back(v - 1);
            }
            char* label = nullptr;
            check(gsu_graph_label(gp.get(), &label));
            Buffer<char> hold_label(label);
            manifest.output(g.out);
            char* text = nullptr;
            check(gsu_bounds_global_json(bp.get(), f.re.data(), f.im.data(), which.c_str(), p,
                                         zero_based.empty() ? nullptr : zero_based.data(), zero_based.size(),
                                         strict_entropy, label, signal_spec.c_str(), manifest.id().c_str(), &text));
            Buffer<char> hold(text);
            if (g.format_given && g.format == "csv") {
                const json reports = json::parse(text);
                Table t;
                t.columns = {"name", "lhs", "relation", "rhs", "slack", "holds", "p", "q"};
                for (const auto& r : reports) {
                    const auto& c = r["context"];
                    auto pq = [&](const char* key) -> json {
                        if (!c.contains(key) || c[key].is_null()) return "";
                        return c[key].is_string() ? c[key] : json(c[key].get<double>());
                    };
                    t.rows.push_back({r["name"], r["lhs"].get<double>(), r["relation"], r["rhs"].get<double>(),
                                      r["slack"].get<double>(), r["holds"].get<bool>() ? "true" : "false", pq("p"),
                                      pq("q")});
                }
                write_file(g.out, t.csv(manifest.id()));
            } else {
                write_file(g.out, std::string(text) + "\n");
            }
            manifest.write();
        };
    });

    auto* blocal = bounds->add_subcommand("local", "Local concentration bounds per atom");
    blocal->add_option("--graph", graph_path, "Graph file (must match the bank)")->required();
    blocal->add_option("--bank", bank_path, "Bank file")->required();
    blocal->add_option("--p", p_text, "Norm index, e.g. inf, 4")->capture_default_str();
    blocal->add_flag("--all", all, "Every (i0, k0) with a nonzero atom");
    blocal->add_option("--i0", i0, "1-based centre vertex");
    blocal->add_option("--k0", k0, "0-based kernel index");
    blocal->callback([&] {
        action = [&] {
            const double p = parse_p(p_text);
            auto gp = load_graph(graph_path, manifest);
            manifest.input(bank_path);
            gsu_graph* graw = nullptr;
            gsu_basis* braw = nullptr;
            gsu_bank* kraw = nullptr;
            check(gsu_bank_read(bank_path.c_str(), &graw, &braw, &kraw));
            GraphPtr embedded(graw);
            BasisPtr bp(braw);
            BankPtr bank(kraw);
            bool same = gsu_graph_size(gp.get()) == gsu_graph_size(embedded.get()) &&
                        gsu_graph_edge_count(gp.get()) == gsu_graph_edge_count(embedded.get());
            for (std::size_t e = 0; same && e < gsu_graph_edge_count(gp.get()); ++e) {
                std::size_t a1, b1, a2, b2;
                double w1, w2;
                check(gsu_graph_edge(gp.get(), e, &a1, &b1, &w1));
                check(gsu_graph_edge(embedded.get(), e, &a2, &b2, &w2));
                same = a1 == a2 && b1 == b2 && w1 == w2;
            }
            if (!same) invalid("bank was built on a different graph");

            std::vector<gsu_local_report> reports;
            if (all) {
                gsu_local_report* raw = nullptr;
                std::size_t count = 0;
                check(gsu_local_bounds_all(bp.get(), bank.get(), gp.get(), p, &raw, &count));
                Buffer<gsu_local_report> hold(raw);
                reports.assign(raw, raw + count);
            } else {
                if (i0 == 0) invalid("give --all or a 1-based --i0");
                gsu_local_report r{};
                check(gsu_local_bound(bp.get(), bank.get(), gp.get(), i0 - 1, k0, p, &r));
                reports.push_back(r);
            }
            Table t;
            t.columns = {"i0", "k0", "sp", "bound_mid", "bound_outer", "lower", "k_tilde", "i_tilde", "hop"};
            for (const auto& r : reports) {
                json lower = std::isnan(r.lower) ? json("") : json(r.lower);
                t.rows.push_back({r.i0 + 1, r.k0, r.sp, r.bound_mid, r.bound_outer, lower, r.k_tilde, r.i_tilde + 1,
                                  r.hop});
            }
            emit(t, g, manifest);
        };
    });

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Sampling experiments");
    experiment->require_subcommand(1);
    std::string ratios_text = "0.1:0.5:0.05", in_path, probe = "squared";
    std::size_t trials = 20;
    double probe_scale = 0, lowpass_scale = 0;
    auto* inpaint = experiment->add_subcommand("inpaint", "Uniform vs nonuniform sampling for Tikhonov inpainting");
    inpaint->add_option("--kind", kind, "Graph kind")->required();
    inpaint->add_option("--n", n, "Vertex count")->required();
    inpaint->add_option("--param", params, "key=value generator parameter");
    inpaint->add_option("--ratios", ratios_text, "start:stop:step or a comma list")->capture_default_str();
    inpaint->add_option("--trials", trials, "Trials per ratio")->capture_default_str();
    inpaint->add_option("--probe", probe, "Sampling weights from ||T_i g^2|| (squared) or ||T_i g|| (kernel)")
        ->check(CLI::IsMember({"squared", "kernel"}))
        ->capture_default_str();
    inpaint->add_option("--probe-scale", probe_scale, "Probe kernel exp(-s lambda / lambda_max)");
    inpaint->add_option("--lowpass-scale", lowpass_scale, "Signal kernel 1 / (1 + s lambda / lambda_max)");
    inpaint->callback([&] {
        action = [&] {
            const auto ratios = parse_range(ratios_text);
            gsu_experiment_config c;
            gsu_experiment_defaults(&c);
            const std::string joined = join_params(params);
            c.kind = kind.c_str();
            c.n = n;
            c.params = joined.c_str();
            c.ratios = ratios.data();
            c.ratio_count = ratios.size();
            c.trials = trials;
            c.seed = g.seed;
            if (probe_scale > 0) c.probe_scale = probe_scale;
            if (lowpass_scale > 0) c.lowpass_scale = lowpass_scale;
            c.probe_kernel_norm = probe == "kernel";
            c.threads = g.threads;
            manifest.seed(g.seed);
            gsu_experiment_row* rows = nullptr;
            std::size_t count = 0;
            check(gsu_experiment_inpaint(&c, &rows, &count));
            Buffer<gsu_experiment_row> hold(rows);
            Table t;
            t.columns = {"kind", "seed", "trial", "ratio", "strategy", "error"};
            for (std::size_t r = 0; r < count; ++r)
                t.rows.push_back({kind, rows[r].seed, rows[r].trial, rows[r].ratio,
                                  strategy_name(rows[r].nonuniform), rows[r].error});
            emit(t, g, manifest);
            std::size_t wins = 0, losses = 0;
            double pv = 1;
            check(gsu_sign_test(rows, count, -1.0, &wins, &losses, &pv));
            std::cerr << "sign test (nonuniform better): wins=" << wins << " losses=" << losses
                      << " p=" << fmt(pv) << "\n";
        };
    });

    auto* inpaint_plot = experiment->add_subcommand("inpaint-plot", "Mean error per ratio as SVG");
    inpaint_plot->add_option("--in", in_path, "CSV from experiment inpaint")->required();
    inpaint_plot->callback([&] {
        action = [&] {
            need_out(g, "experiment inpaint-plot");
            manifest.input(in_path);
            const auto rows = read_experiment_csv(in_path);
            std::map<double, std::pair<double, std::size_t>> sums[2];
            for (const auto& r : rows) {
                auto& cell = sums[r.nonuniform][r.ratio];
                cell.first += r.error;
                cell.second += 1;
            }
            std::vector<double> xs[2], ys[2];
            for (int s = 0; s < 2; ++s)
                for (const auto& [ratio, cell] : sums[s]) {
                    xs[s].push_back(ratio);
                    ys[s].push_back(cell.first / static_cast<double>(cell.second));
                }
            std::vector<gsu_series> series;
            for (int s = 0; s < 2; ++s)
                if (!xs[s].empty()) {
                    static const char* labels[] = {"uniform", "nonuniform"};
                    series.push_back({labels[s], xs[s].data(), ys[s].data(), xs[s].size(), 1});
                }
            char* svg = nullptr;
            check(gsu_plot_svg(series.data(), series.size(), "Tikhonov inpainting", "sampling ratio",
                               "mean relative error", 0, &svg));
            Buffer<char> hold(svg);
            manifest.output(g.out);
            write_file(g.out, svg);
            manifest.write();
        };
    });

    // repro
    auto* repro = app.add_subcommand("repro", "Reproduction drivers");
    repro->require_subcommand(1);
    add_table1_options(repro->add_subcommand("table1", "Maximum atom norm per design and graph"));
    std::string svg_path;
    std::vector<double> distances;
    auto* mpath = repro->add_subcommand("modified-path", "Sweep W12 = 1/d on the modified path");
    mpath->add_option("--n", n, "Vertex count")->capture_default_str();
    mpath->add_option("--k", K, "Gabor kernels")->capture_default_str();
    mpath->add_option("--d", distances, "Distances (default: log grid 1..1000)")->delimiter(',');
    mpath->add_option("--svg", svg_path, "SVG path (default: <out>.svg)");
    mpath->callback([&] {
        action = [&] {
            gsu_modified_path_row* rows = nullptr;
            std::size_t count = 0;
            check(gsu_repro_modified_path(n, K, distances.empty() ? nullptr : distances.data(), distances.size(),
                                          &rows, &count));
            Buffer<gsu_modified_path_row> hold(rows);
            Table t;
            t.columns = {"d",           "mu",         "lp_rhs",     "lp_first",   "lp_last",
                         "global_bound", "local_first", "local_last", "sinf_first", "sinf_last"};
            for (std::size_t r = 0; r < count; ++r) {
                const auto& x = rows[r];
                t.rows.push_back({x.d, x.mu, x.lp_rhs, x.lp_first, x.lp_last, x.global_bound, x.local_first,
                                  x.local_last, x.sinf_first, x.sinf_last});
            }
            manifest.output(g.out);
            std::string svg_out = svg_path;
            if (svg_out.empty() && !g.out.empty() && g.out != "-") svg_out = g.out + ".svg";
            if (!svg_out.empty()) {
                char* svg = nullptr;
                check(gsu_repro_modified_path_svg(rows, count, &svg));
                Buffer<char> hold_svg(svg);
                write_file(svg_out, svg);
                manifest.output(svg_out);
            }
            emit(t, g, manifest);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.format_given = app.get_option("--format")->count() > 0;
    try {
        if (action) action();
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
