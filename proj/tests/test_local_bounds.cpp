#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "gsu/error.hpp"
#include "gsu/generators.hpp"
#include "gsu/local_bounds.hpp"
#include "support.hpp"

using namespace gsu;

TEST_CASE("tolerant argmax takes the lowest index among ties") {
    Eigen::VectorXd v(4);
    v << 1.0, 3.0, 3.0 - 1e-14, 2.0;
    CHECK(tolerant_argmax(v) == 1);
    v(2) = 3.0 + 1e-14;
    CHECK(tolerant_argmax(v) == 1);
    v(2) = 3.1;
    CHECK(tolerant_argmax(v) == 2);
}

TEST_CASE("product localization on P3 against a dense heat-kernel oracle") {
    const Graph g = make_path(3);
    const SpectralBasis b = compute_basis(g);
    const Eigen::VectorXd heat = (-b.eigenvalues().array()).exp().matrix();
    const auto r = kernel_product_localization(b, heat, heat, 0, 2);
    // <T_1 g, T_3 g> = N (e^{-L} e^{-L})(1,3)
    const Eigen::MatrixXd E = (-laplacian(g)).exp();
    const double oracle = 3.0 * (E * E)(0, 2);
    CHECK(std::abs(r.via_product - oracle) < 1e-12);
    CHECK(std::abs(r.direct - oracle) < 1e-12);
    CHECK(r.difference < 1e-12);
}

TEST_CASE("product localization identity exhaustive on small graphs") {
    std::mt19937_64 rng(11);
    for (const Graph& g : {make_sensor(24, 1), make_comet(20, 8), make_modified_path(16, 30.0)}) {
        const SpectralBasis b = compute_basis(g);
        const std::size_t n = b.size();
        const Eigen::VectorXd kg = testing::random_real(n, rng), kh = testing::random_real(n, rng);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto r = kernel_product_localization(b, kg, kh, i, j);
                const Complex direct = localize(b, kh, j).dot(localize(b, kg, i));
                worst = std::max({worst, r.difference, std::abs(direct - r.via_product)});
            }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("product localization special cases") {
    const SpectralBasis b = compute_basis(make_sensor(20, 3));
    const Eigen::VectorXd heat = (-b.eigenvalues().array()).exp().matrix();
    const auto same = kernel_product_localization(b, heat, heat, 4, 4);
    CHECK(same.via_product.real() == doctest::Approx(localize(b, heat, 4).squaredNorm()));
    Eigen::VectorXd lo = Eigen::VectorXd::Zero(20), hi = Eigen::VectorXd::Zero(20);
    lo.head(10).setOnes();
    hi.tail(10).setOnes();
    CHECK(std::abs(kernel_product_localization(b, lo, hi, 2, 7).via_product) < 1e-14);
    CHECK(std::abs(kernel_product_localization(b, lo, hi, 2, 7).direct) < 1e-12);
}

TEST_CASE("product localizations and ambiguity") {
    const SpectralBasis b = compute_basis(make_sensor(30, 2));
    const FilterBank bank = design_bank(b, BankDesign::gabor_uniform, 6);
    const Eigen::MatrixXcd P = product_localizations(b, bank, 5, 2);
    for (Eigen::Index k = 0; k < 6; ++k) {
        const Signal col = localize(b, bank.values().col(2).cwiseProduct(bank.values().col(k)), 5);
        CHECK((P.col(k) - col).cwiseAbs().maxCoeff() < 1e-12);
    }
    const auto amb = ambiguity(b, bank, 5, 2);
    const auto direct = analysis(b, bank, localize(b, bank.values().col(2), 5));
    CHECK((amb.values - direct.values).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(amb.values(5, 2).real() == doctest::Approx(atom_norm_map(b, bank.values().col(2))(5) *
                                                     atom_norm_map(b, bank.values().col(2))(5)));
    // coefficient (i, k) = <T_i0 g_k0, T_i g_k> = sqrt(N) T_i0(g_k0 g_k)(i)
    CHECK((amb.values - std::sqrt(30.0) * P).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ambiguity identity with a complex basis") {
    const SpectralBasis b = compute_basis(make_ring(16), {LaplacianVariant::combinatorial, true});
    const FilterBank bank = design_bank(b, BankDesign::gabor_uniform, 4);
    const auto amb = ambiguity(b, bank, 3, 1);
    CHECK((amb.values - 4.0 * product_localizations(b, bank, 3, 1)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("ambiguity row-norm identity") {
    const SpectralBasis b = compute_basis(make_sensor(100, 1));
    const FilterBank bank = design_bank(b, BankDesign::gabor_uniform, 8);
    for (PNorm p : {PNorm(1.0), PNorm(3.0), PNorm::infinity()}) {
        const auto amb = ambiguity(b, bank, 17, 3);
        const Eigen::MatrixXcd P = product_localizations(b, bank, 17, 3);
        CHECK(amb.norm(p) == doctest::Approx(10.0 * norm(P, p)).epsilon(1e-9));
    }
}

TEST_CASE("all-pass single-kernel bank") {
    const SpectralBasis b = compute_basis(make_comet(16, 5));
    const FilterBank bank = custom_bank(b, {parse_kernel_spec("constant:value=1")});
    const auto amb = ambiguity(b, bank, 3, 0);
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(16);
    expected(3) = 16.0;
    CHECK((amb.values.col(0) - expected).cwiseAbs().maxCoeff() < 1e-10);
    for (std::size_t i = 0; i < 16; ++i) CHECK(tightness_hypotheses(b, bank, i, 0).all());
    const auto o = overlap(b, bank.values().col(0), 4, PNorm(1.0));
    CHECK(o == doctest::Approx(1.0));
}

TEST_CASE("local bound sandwich on random graphs and banks") {
    const Graph g = make_sensor(40, 7);
    const SpectralBasis b = compute_basis(g);
    for (auto d : {BankDesign::gabor_uniform, BankDesign::wavelet_adapted}) {
        const FilterBank bank = design_bank(b, d, 6);
        for (PNorm p : {PNorm(1.0), PNorm(4.0 / 3.0), PNorm(2.0), PNorm(4.0), PNorm::infinity()}) {
            for (const auto& r : local_bounds_all(b, bank, g, p)) {
                CAPTURE(r.i0);
                CAPTURE(r.k0);
                CAPTURE(p.value());
                CHECK(r.chain_holds());
                CHECK(r.k_tilde < bank.size());
                CHECK(r.i_tilde < b.size());
                CHECK(r.hop == hop_distance(g, r.i0, r.i_tilde));
            }
        }
    }
}

TEST_CASE("local bound on a non-tight bank") {
    const Graph g = make_erdos_renyi(30, 0.2, 3);
    const SpectralBasis b = compute_basis(g);
    const FilterBank bank = custom_bank(b, {parse_kernel_spec("heat:tau=0.3"), parse_kernel_spec("wavelet:a=0.5")});
    for (const auto& r : local_bounds_all(b, bank, g, PNorm::infinity())) CHECK(r.chain_holds());
    const auto two = local_bound(b, bank, g, 0, 0, PNorm(2.0));
    CHECK(two.sp == doctest::Approx(1.0));
    CHECK(two.bound_mid == doctest::Approx(std::sqrt(bank.upper_bound() / bank.lower_bound())));
    CHECK(std::isnan(two.lower));
    CHECK_FALSE(tightness_hypotheses(b, bank, 0, 0).tight_frame);
}

TEST_CASE("local bound rejects zero atoms and bad indices") {
    const Graph g = make_path(8);
    const SpectralBasis b = compute_basis(g);
    const FilterBank bank = custom_bank(b, {parse_kernel_spec("constant:value=1"), parse_kernel_spec("constant:value=0")});
    CHECK_THROWS_AS(local_bound(b, bank, g, 0, 1, PNorm::infinity()), ValidationError);
    CHECK_THROWS_AS(local_bound(b, bank, g, 8, 0, PNorm::infinity()), ValidationError);
    CHECK_THROWS_AS(local_bound(b, bank, g, 0, 2, PNorm::infinity()), ValidationError);
    CHECK(local_bounds_all(b, bank, g, PNorm::infinity()).size() == 8);
}

TEST_CASE("tight-case equality where its hypotheses hold") {
    const Graph g = make_sensor(64, 3);
    const SpectralBasis b = compute_basis(g);
    const FilterBank bank = design_bank(b, BankDesign::gabor_uniform, 8);
    std::size_t hits = 0, k_tilde_is_k0 = 0, total = 0;
    for (std::size_t i0 = 0; i0 < 64; ++i0)
        for (std::size_t k0 = 0; k0 < 8; ++k0) {
            const auto r = local_bound(b, bank, g, i0, k0, PNorm::infinity());
            ++total;
            if (r.k_tilde == k0) ++k_tilde_is_k0;
            if (!tightness_hypotheses(b, bank, i0, k0).all()) continue;
            ++hits;
            const double atom = atom_norm_map(b, bank.values().col(static_cast<Eigen::Index>(k0)))(
                static_cast<Eigen::Index>(i0));
            CHECK(std::abs(r.sp - atom / std::sqrt(bank.lower_bound())) <= 1e-10);
        }
    CHECK(hits > 0);
    CHECK(2 * k_tilde_is_k0 > total);
}

TEST_CASE("overlap") {
    std::mt19937_64 rng(4);
    const SpectralBasis b = compute_basis(make_sensor(36, 5));
    const Eigen::VectorXd g = testing::random_real(36, rng);
    for (std::size_t j = 0; j < 36; j += 5) {
        CHECK(overlap(b, g, j, PNorm(2.0)) == doctest::Approx(1.0));
        for (PNorm p : {PNorm(1.0), PNorm(3.0), PNorm::infinity()}) {
            Eigen::VectorXcd inner(36);
            const Signal tj = localize(b, g, j);
            for (std::size_t i = 0; i < 36; ++i) inner(static_cast<Eigen::Index>(i)) = tj.dot(localize(b, g, i));
            CHECK(overlap(b, g, j, p) == doctest::Approx(norm(inner, p) / inner.norm()).epsilon(1e-9));
        }
    }
    const Eigen::VectorXd heat = (-b.eigenvalues().array()).exp().matrix();
    for (std::size_t j = 0; j < 36; j += 7) {
        const double two = localize(b, heat.cwiseAbs2(), j).norm();
        CHECK(overlap(b, heat, j, PNorm(1.0)) == doctest::Approx(6.0 / two));
    }
    CHECK_THROWS_AS(overlap(b, Eigen::VectorXd::Zero(36), 0, PNorm(1.0)), ValidationError);
}

TEST_CASE("localization spread") {
    const Graph g = make_sensor(100, 1);
    const SpectralBasis b = compute_basis(g);
    const auto rows = localization_spread_stats(b, g, SpreadFamily::heat, {0.1, 10.0});
    CHECK(rows[0].mean_relative_error == doctest::Approx(0.0));
    CHECK(rows[0].mean_hop == 0.0);
    CHECK(rows[0].max_hop == 0);
    CHECK(rows[1].max_hop <= 6);
    CHECK(rows[1].mean_hop >= rows[0].mean_hop);
    Eigen::VectorXd dc = Eigen::VectorXd::Zero(100);
    dc(0) = 1.0;
    const auto flat = localization_spread(b, g, dc, 1.0);
    CHECK(flat.mean_relative_error == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(localization_spread_stats(b, g, SpreadFamily::wavelet, {}), ValidationError);
    CHECK(parse_spread_family("wavelet") == SpreadFamily::wavelet);
    CHECK(localization_spread_stats(b, g, SpreadFamily::wavelet, {1.0}).size() == 1);
}
