#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <unsupported/Eigen/MatrixFunctions>

#include "gsu/error.hpp"
#include "gsu/frames.hpp"
#include "gsu/generators.hpp"
#include "support.hpp"

using namespace gsu;

namespace {

std::vector<Graph> eight_graphs(std::size_t n, std::uint64_t seed) {
    return {make_path(n), make_modified_path(n, 10.0), make_ring(n), make_comet(n, n - 11), make_sensor(n, seed),
            make_community(n, 4, seed), make_erdos_renyi(n, 0.15, seed), make_random_regular(n, 6, seed)};
}

Eigen::VectorXd constant(const SpectralBasis& b, double v) {
    return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(b.size()), v);
}

std::vector<double> ranks(const Eigen::VectorXd& x) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(x.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return x(a) < x(b); });
    std::vector<double> r(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<double>(k);
    return r;
}

double spearman(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const auto ra = ranks(a), rb = ranks(b);
    const double n = static_cast<double>(ra.size());
    const double mean = (n - 1.0) / 2.0;
    double num = 0, da = 0, db = 0;
    for (std::size_t k = 0; k < ra.size(); ++k) {
        num += (ra[k] - mean) * (rb[k] - mean);
        da += (ra[k] - mean) * (ra[k] - mean);
        db += (rb[k] - mean) * (rb[k] - mean);
    }
    return num / std::sqrt(da * db);
}

}  // namespace

TEST_CASE("mother window partition of unity") {
    CHECK(mother_window(0.0) == doctest::Approx(1.0));
    CHECK(mother_window(0.5) == doctest::Approx(0.0));
    CHECK(mother_window(0.7) == 0.0);
    for (double t = -0.5; t <= 0.0; t += 0.01) {
        const double a = mother_window(t), b = mother_window(t + 0.5);
        CHECK(a * a + b * b == doctest::Approx(1.0));
    }
}

TEST_CASE("all-pass kernel localizes to a scaled delta") {
    const SpectralBasis b = compute_basis(make_sensor(30, 1));
    for (std::size_t i : {0u, 7u, 29u}) {
        const Signal t = localize(b, constant(b, 1.0), i);
        Signal expected = std::sqrt(30.0) * testing::delta(30, i);
        CHECK((t - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK_THROWS_AS(localize(b, constant(b, 1.0), 30), ValidationError);
}

TEST_CASE("DC indicator localizes to a constant") {
    const SpectralBasis b = compute_basis(make_comet(25, 10));
    Eigen::VectorXd g = Eigen::VectorXd::Zero(25);
    g(0) = 1.0;
    const Signal t = localize(b, g, 4);
    CHECK((t.array() - 1.0 / 5.0).abs().maxCoeff() < 1e-12);
    CHECK(t.norm() == doctest::Approx(1.0));
}

TEST_CASE("localization matches sqrt(N) g(L) delta_i computed by matrix exponential") {
    const Graph g = make_sensor(40, 3);
    const SpectralBasis b = compute_basis(g);
    const double tau = 0.7;
    const Eigen::VectorXd heat = (-tau * b.eigenvalues().array()).exp().matrix();
    const Eigen::MatrixXd E = (-tau * laplacian(g)).exp();
    for (std::size_t i : {0u, 13u, 39u}) {
        const Signal t = localize(b, heat, i);
        const Eigen::VectorXd oracle = std::sqrt(40.0) * E.col(static_cast<Eigen::Index>(i));
        CHECK((t.real() - oracle).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(t.imag().cwiseAbs().maxCoeff() < 1e-12);
        // nonnegative heat atoms: ||T_i g||_1 = sqrt(N) g(0)
        CHECK(t.real().minCoeff() > -1e-12);
        CHECK(t.real().sum() == doctest::Approx(std::sqrt(40.0)));
    }
}

TEST_CASE("polynomial kernel matches the polynomial in L") {
    const Graph g = make_erdos_renyi(30, 0.2, 5);
    const SpectralBasis b = compute_basis(g);
    const Eigen::ArrayXd l = b.eigenvalues().array();
    const Eigen::VectorXd kernel = (1.0 - 0.3 * l + 0.05 * l.square()).matrix();
    const Eigen::MatrixXd L = laplacian(g);
    const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(30, 30) - 0.3 * L + 0.05 * L * L;
    for (std::size_t i = 0; i < 30; i += 7) {
        const Signal t = localize(b, kernel, i);
        CHECK((t.real() - std::sqrt(30.0) * P.col(static_cast<Eigen::Index>(i))).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("atom norm map: mean energy identity and atom norm sandwich") {
    std::mt19937_64 rng(3);
    for (const Graph& g : eight_graphs(40, 2)) {
        CAPTURE(g.label());
        const SpectralBasis b = compute_basis(g);
        const Eigen::VectorXd kernel = testing::random_real(40, rng);
        const Eigen::VectorXd m = atom_norm_map(b, kernel);
        CHECK(m.squaredNorm() / 40.0 == doctest::Approx(kernel.squaredNorm()).epsilon(1e-10));
        for (Eigen::Index i = 0; i < 40; ++i) {
            CHECK(m(i) >= std::abs(kernel(0)) - 1e-12);
            CHECK(m(i) <= std::sqrt(40.0) * b.nu()(i) * kernel.norm() + 1e-12);
            CHECK(m(i) == doctest::Approx(localize(b, kernel, static_cast<std::size_t>(i)).norm()).epsilon(1e-10));
        }
    }
}

TEST_CASE("atom norms: all-pass and vertex-transitive graphs") {
    const SpectralBasis ring = compute_basis(make_ring(20));
    const Eigen::VectorXd allpass = atom_norm_map(ring, constant(ring, 1.0));
    CHECK((allpass.array() - std::sqrt(20.0)).abs().maxCoeff() < 1e-12);
    const Eigen::VectorXd heat = (-ring.eigenvalues().array()).exp().matrix();
    const Eigen::VectorXd m = atom_norm_map(ring, heat);
    CHECK(m.maxCoeff() - m.minCoeff() < 1e-12);
}

TEST_CASE("atom norms are larger at weakly connected sensor vertices") {
    const Graph g = make_sensor(100, 1);
    const SpectralBasis b = compute_basis(g);
    const Eigen::VectorXd heat = (-10.0 * b.eigenvalues().array() / b.lambda_max()).exp().matrix();
    const Eigen::VectorXd m = atom_norm_map(b, heat);
    const Eigen::VectorXd inv_degree = g.degrees().cwiseInverse();
    CHECK(spearman(m, inv_degree) > 0.3);
}

TEST_CASE("named designs are tight on all eight graph kinds") {
    for (const Graph& g : eight_graphs(64, 1)) {
        const SpectralBasis b = compute_basis(g);
        for (auto d : {BankDesign::gabor_uniform, BankDesign::gabor_adapted, BankDesign::wavelet_log,
                       BankDesign::wavelet_adapted}) {
            CAPTURE(g.label());
            CAPTURE(to_string(d));
            const FilterBank bank = design_bank(b, d, 16);
            CHECK(bank.size() == 16);
            CHECK((bank.G().array() - 1.0).abs().maxCoeff() <= 1e-9);
            CHECK(bank.lower_bound() == doctest::Approx(64.0));
            CHECK(bank.upper_bound() == doctest::Approx(64.0));
            CHECK(bank.is_tight());
            CHECK(bank.values().minCoeff() >= 0.0);
        }
    }
}

TEST_CASE("design validation") {
    const SpectralBasis b = compute_basis(make_path(16));
    CHECK_THROWS_AS(design_bank(b, BankDesign::gabor_uniform, 1), ValidationError);
    CHECK_THROWS_AS(design_bank(b, BankDesign::custom, 4), ValidationError);
    CHECK(parse_design("wavelet_log") == BankDesign::wavelet_log);
    CHECK_THROWS_AS(parse_design("fancy"), ValidationError);
    CHECK(design_bank(b, BankDesign::gabor_uniform, 2).is_tight());
}

TEST_CASE("custom banks and their frame bounds") {
    const SpectralBasis b = compute_basis(make_sensor(32, 2));
    const FilterBank one = custom_bank(b, {parse_kernel_spec("constant:value=1")});
    CHECK(one.lower_bound() == doctest::Approx(32.0));
    CHECK(one.upper_bound() == doctest::Approx(32.0));
    const FilterBank two = custom_bank(b, {parse_kernel_spec("constant:value=1"), parse_kernel_spec("constant:value=1")});
    CHECK(two.lower_bound() == doctest::Approx(64.0));
    CHECK(two.upper_bound() == doctest::Approx(64.0));
    const FilterBank dc = custom_bank(b, {parse_kernel_spec("rect:lo=0,hi=0")});
    CHECK_FALSE(dc.is_frame());
    CHECK_THROWS_AS(global_lieb(b, dc, PNorm(2.0)), NumericalError);
    const FilterBank heat = custom_bank(b, {parse_kernel_spec("heat:tau=1")});
    CHECK(heat.lower_bound() == doctest::Approx(32.0 * heat.G().minCoeff()));
    CHECK(heat.upper_bound() == doctest::Approx(32.0 * heat.G().maxCoeff()));
}

TEST_CASE("analysis: simple banks") {
    std::mt19937_64 rng(5);
    const SpectralBasis b = compute_basis(make_comet(20, 6));
    const Eigen::VectorXd f = testing::random_real(20, rng);
    const auto c1 = analysis(b, custom_bank(b, {parse_kernel_spec("constant:value=1")}), to_signal(f));
    CHECK((c1.values.col(0).real() - std::sqrt(20.0) * f).cwiseAbs().maxCoeff() < 1e-12);
    const auto c2 = analysis(b, custom_bank(b, {parse_kernel_spec("rect:lo=0,hi=0")}), to_signal(f));
    CHECK((c2.values.col(0).array() - f.sum() / std::sqrt(20.0)).abs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(analysis(b, custom_bank(b, {parse_kernel_spec("heat:tau=1")}), Signal::Ones(5)), ValidationError);
}

TEST_CASE("analysis equals inner products with explicit atoms") {
    std::mt19937_64 rng(6);
    const SpectralBasis b = compute_basis(make_sensor(24, 6));
    const FilterBank bank = design_bank(b, BankDesign::wavelet_log, 5);
    const Signal f = testing::random_complex(24, rng);
    const auto c = analysis(b, bank, f);
    double energy = 0.0;
    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t k = 0; k < 5; ++k) {
            const Signal atom = localize(b, bank.values().col(static_cast<Eigen::Index>(k)), i);
            const Complex direct = atom.dot(f);  // <f, atom> = sum f conj(atom)
            CHECK(std::abs(c.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) - direct) < 1e-10);
            energy += std::norm(direct);
        }
    CHECK(energy == doctest::Approx(24.0 * f.squaredNorm()).epsilon(1e-10));
}

TEST_CASE("frame inequality for a non-tight bank") {
    std::mt19937_64 rng(8);
    const SpectralBasis b = compute_basis(make_erdos_renyi(30, 0.2, 1));
    const FilterBank bank = custom_bank(b, {parse_kernel_spec("heat:tau=0.5"), parse_kernel_spec("wavelet:a=1")});
    for (int t = 0; t < 20; ++t) {
        const Signal f = testing::random_complex(30, rng);
        const double e = analysis(b, bank, f).values.squaredNorm();
        CHECK(e >= bank.lower_bound() * f.squaredNorm() * (1 - 1e-8));
        CHECK(e <= bank.upper_bound() * f.squaredNorm() * (1 + 1e-8));
    }
}

TEST_CASE("global Lieb bounds") {
    const SpectralBasis b = compute_basis(make_path(64));
    const FilterBank bank = design_bank(b, BankDesign::gabor_uniform, 16);
    const auto l2 = global_lieb(b, bank, PNorm(2.0));
    CHECK(l2.atom_bound == doctest::Approx(1.0));
    const auto linf = global_lieb(b, bank, PNorm::infinity());
    CHECK(linf.atom_bound == doctest::Approx(linf.max_atom_norm / 8.0));
    CHECK(linf.atom_bound == doctest::Approx(0.45).epsilon(0.12));
    CHECK(linf.atom_bound <= linf.coherence_bound + 1e-12);
    const auto l1 = global_lieb(b, bank, PNorm(1.0));
    CHECK(l1.atom_bound == doctest::Approx(linf.atom_bound));

    std::mt19937_64 rng(2);
    for (PNorm p : {PNorm(1.0), PNorm(4.0 / 3.0), PNorm(2.0), PNorm(4.0), PNorm::infinity()})
        for (int t = 0; t < 10; ++t)
            for (const auto& r : global_lieb_check(b, bank, testing::random_unit(64, rng), p)) CHECK(r.holds);
}

TEST_CASE("global Lieb check on a non-tight bank uses its own A and B") {
    std::mt19937_64 rng(12);
    const SpectralBasis b = compute_basis(make_sensor(40, 12));
    const FilterBank bank = custom_bank(b, {parse_kernel_spec("heat:tau=2"), parse_kernel_spec("gaussian:tau=3")});
    for (PNorm p : {PNorm(1.0), PNorm(2.0), PNorm(3.0), PNorm::infinity()})
        for (int t = 0; t < 10; ++t)
            for (const auto& r : global_lieb_check(b, bank, testing::random_unit(40, rng), p)) CHECK(r.holds);
}

TEST_CASE("DWFT against an independent summation") {
    std::mt19937_64 rng(1);
    const std::size_t n = 8;
    const Signal f = testing::random_complex(n, rng), g = testing::random_complex(n, rng);
    const Eigen::MatrixXcd A = dwft(f, g);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t k = 0; k < n; ++k) {
            Complex acc = 0.0;
            for (std::size_t m = 0; m < n; ++m) {
                const std::size_t shifted = (m + n - u) % n;
                acc += f(static_cast<Eigen::Index>(m)) * std::conj(g(static_cast<Eigen::Index>(shifted))) *
                       std::exp(Complex(0.0, -2.0 * std::numbers::pi * double(k * m) / double(n)));
            }
            CHECK(std::abs(A(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(k)) - acc) < 1e-12);
        }
}

TEST_CASE("discrete Lieb: p = 2 equality, deltas and picket fences") {
    std::mt19937_64 rng(2);
    const Signal f = testing::random_complex(16, rng), g = testing::random_complex(16, rng);
    const auto r2 = lieb_discrete_check(f, g, PNorm(2.0));
    CHECK(std::abs(r2.slack) < 1e-10 * r2.rhs);
    const auto rd = lieb_discrete_check(testing::delta(16, 0), testing::delta(16, 0), PNorm(4.0));
    CHECK(rd.holds);
    const Eigen::MatrixXcd Ad = dwft(testing::delta(16, 0), testing::delta(16, 0));
    CHECK(Ad.row(0).cwiseAbs().minCoeff() == doctest::Approx(1.0));
    CHECK(Ad.bottomRows(15).cwiseAbs().maxCoeff() == 0.0);

    Signal fence = Signal::Zero(16);
    for (Eigen::Index m = 0; m < 16; m += 4) fence(m) = 0.5;
    const auto rp = lieb_discrete_check(fence, fence, PNorm(4.0));
    // |A| is 1 on 16 of 256 cells: ||A||_4 = 16^(1/4) * 1 * 1 = rhs
    CHECK(rp.lhs == doctest::Approx(2.0));
    CHECK(std::abs(rp.slack) < 1e-10);
    for (PNorm p : {PNorm(1.0), PNorm(1.5), PNorm(3.0), PNorm::infinity()}) {
        CHECK(lieb_discrete_check(f, g, p).holds);
        CHECK(std::abs(lieb_discrete_check(fence, fence, p).slack) < 1e-10);
    }
}
