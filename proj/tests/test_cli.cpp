#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path& dir() {
    static const fs::path d = [] {
        const fs::path p = fs::temp_directory_path() / "gsu_test_cli";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string at(const std::string& name) { return (dir() / name).string(); }

int run(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = std::string(GSU_CLI_PATH) + " " + args;
    cmd += stdout_file.empty() ? " > /dev/null" : " > " + stdout_file;
    cmd += " 2> " + at("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("--help") == 0);
    CHECK(run("") == 2);
    CHECK(run("graph gen --kind pretzel --n 10 --out " + at("x.csv")) == 2);
    CHECK(run("graph gen --kind path --n 1 --out " + at("x.csv")) == 2);
    CHECK(run("graph gen --kind path --n 10 --bogus 1 --out " + at("x.csv")) == 2);
    CHECK(run("spectrum --graph " + at("missing.csv") + " --out " + at("s.json")) == 4);
    CHECK(run("graph gen --kind path --n 10 --out /nonexistent-dir/x.csv") == 4);
    std::ofstream(at("broken.csv")) << "i,j,w\n1,2\n";
    CHECK(run("spectrum --graph " + at("broken.csv") + " --out " + at("s.json")) == 4);
    std::ofstream(at("split.csv")) << "# graph n=4\ni,j,w\n1,2,1\n3,4,1\n";
    CHECK(run("spectrum --graph " + at("split.csv") + " --out " + at("s.json")) == 2);
    CHECK(!slurp(at("stderr.txt")).empty());
}

TEST_CASE("reruns are byte-identical, including into a different path") {
    REQUIRE(run("graph gen --kind sensor --n 40 --seed 3 --out " + at("g1.csv")) == 0);
    REQUIRE(run("graph gen --kind sensor --n 40 --seed 3 --out " + at("g2.csv")) == 0);
    const std::string g = slurp(at("g1.csv"));
    CHECK(g == slurp(at("g2.csv")));
    CHECK(g.rfind("# manifest=", 0) == 0);
    REQUIRE(run("graph gen --kind sensor --n 40 --seed 4 --out " + at("g3.csv")) == 0);
    CHECK(g != slurp(at("g3.csv")));

    const auto m = nlohmann::json::parse(slurp(at("g1.csv.manifest.json")));
    CHECK(m.at("id").get<std::string>() == g.substr(11, g.find('\n') - 11));
    CHECK(m.at("seeds") == nlohmann::json::array({3}));
    CHECK(m.contains("wall_time_seconds"));
    CHECK(m.at("version").is_string());

    const std::string graph = at("g1.csv");
    REQUIRE(run("spectrum --graph " + graph + " --sidecar " + at("u1.bin") + " --out " + at("s1.json")) == 0);
    REQUIRE(run("spectrum --graph " + graph + " --sidecar " + at("u2.bin") + " --out " + at("s2.json")) == 0);
    CHECK(slurp(at("u1.bin")) == slurp(at("u2.bin")));
    const auto s1 = nlohmann::json::parse(slurp(at("s1.json")));
    const auto s2 = nlohmann::json::parse(slurp(at("s2.json")));
    CHECK(s1.at("eigenvalues") == s2.at("eigenvalues"));
    CHECK(s1.at("manifest_id") == s2.at("manifest_id"));

    REQUIRE(run("frame design --graph " + graph + " --design wavelet_log --k 6 --out " + at("b1.json")) == 0);
    REQUIRE(run("frame design --graph " + graph + " --design wavelet_log --k 6 --out " + at("b2.json")) == 0);
    CHECK(slurp(at("b1.json")) == slurp(at("b2.json")));

    REQUIRE(run("bounds local --graph " + graph + " --bank " + at("b1.json") + " --p inf --all --out " + at("l1.csv")) == 0);
    REQUIRE(run("bounds local --graph " + graph + " --bank " + at("b1.json") + " --p inf --all", at("l2.csv")) == 0);
    const std::string local = slurp(at("l1.csv"));
    CHECK(local == slurp(at("l2.csv")));
    CHECK(local.find("i0,k0,sp,bound_mid,bound_outer,lower,k_tilde,i_tilde,hop") != std::string::npos);

    REQUIRE(run("frame analyze --bank " + at("b1.json") + " --signal delta:3 --out " + at("a1.csv")) == 0);
    REQUIRE(run("frame analyze --bank " + at("b1.json") + " --signal delta:3 --out " + at("a2.csv")) == 0);
    CHECK(slurp(at("a1.csv")) == slurp(at("a2.csv")));
}

TEST_CASE("experiments do not depend on the thread count") {
    const std::string base = "experiment inpaint --kind sensor --n 50 --ratios 0.2:0.4:0.1 --trials 3";
    REQUIRE(run(base + " --threads 1 --out " + at("e1.csv")) == 0);
    REQUIRE(run(base + " --threads 3 --out " + at("e3.csv")) == 0);
    const std::string e = slurp(at("e1.csv"));
    CHECK(e == slurp(at("e3.csv")));
    CHECK(e.rfind("# manifest=", 0) == 0);
    REQUIRE(run("experiment inpaint-plot --in " + at("e1.csv") + " --out " + at("e.svg")) == 0);
    CHECK(slurp(at("e.svg")).rfind("<svg", 0) == 0);
}

TEST_CASE("reproduction commands") {
    REQUIRE(run("repro table1 --n 32 --k 8 --ring-dft --out " + at("t1.csv")) == 0);
    REQUIRE(run("repro table1 --n 32 --k 8 --ring-dft --format json --out " + at("t1.json")) == 0);
    const auto t = nlohmann::json::parse(slurp(at("t1.json")));
    CHECK(t.at("rows").size() == 8);
    CHECK(t.at("rows")[0].at("mu").get<double>() == doctest::Approx(1.0 / std::sqrt(32.0)));
    CHECK(slurp(at("t1.csv")).find("gabor_uniform") != std::string::npos);

    REQUIRE(run("repro modified-path --n 32 --k 8 --d 1,10,100 --out " + at("mp.csv")) == 0);
    CHECK(fs::exists(at("mp.csv.svg")));
    std::istringstream rows(slurp(at("mp.csv")));
    std::string line;
    std::size_t n = 0;
    while (std::getline(rows, line))
        if (!line.empty() && line[0] != '#') ++n;
    CHECK(n == 4);  // header + 3 distances

    REQUIRE(run("bounds global --graph " + at("g1.csv") + " --signal eig:0 --p 4/3 --format csv --out " + at("gb.csv")) == 0);
    const std::string gb = slurp(at("gb.csv"));
    CHECK(gb.find("name,lhs,relation,rhs,slack,holds,p,q") != std::string::npos);
    CHECK(gb.find(",false,") == std::string::npos);
}
