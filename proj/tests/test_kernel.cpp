#include <doctest.h>

#include "gsu/error.hpp"
#include "gsu/generators.hpp"
#include "gsu/kernel.hpp"

using namespace gsu;

TEST_CASE("kernel text round trip") {
    for (const std::string s : {"heat:tau=1.5", "heat:tau=2,normalized=1", "gaussian:tau=3", "lowpass:c=100",
                                "wavelet:a=0.5", "mother:center=0.25,width=2", "rect:lo=0,hi=1", "constant:value=2",
                                "warped:warp=log;mother:center=0,width=2"}) {
        CAPTURE(s);
        CHECK(describe(parse_kernel_spec(s)) == s);
    }
    CHECK_THROWS_AS(parse_kernel_spec("heat:bogus=1"), ValidationError);
    CHECK_THROWS_AS(parse_kernel_spec("nope:x=1"), ValidationError);
    CHECK_THROWS_AS(parse_kernel_spec("heat:tau=abc"), ValidationError);
    CHECK_THROWS_AS(parse_kernel_spec("warped:warp=log;warped:warp=log;constant:value=1"), ValidationError);
}

TEST_CASE("kernel sampling formulas") {
    const SpectralBasis b = compute_basis(make_path(5));
    const Eigen::ArrayXd l = b.eigenvalues().array();
    const double lmax = b.lambda_max();
    CHECK((sample_kernel(parse_kernel_spec("heat:tau=2"), b).array() - (-2.0 * l).exp()).abs().maxCoeff() < 1e-15);
    CHECK((sample_kernel(parse_kernel_spec("heat:tau=2,normalized=1"), b).array() - (-2.0 * l / lmax).exp())
              .abs()
              .maxCoeff() < 1e-15);
    CHECK((sample_kernel(parse_kernel_spec("gaussian:tau=3"), b).array() - (-(l * 3.0 / lmax).square()).exp())
              .abs()
              .maxCoeff() < 1e-15);
    CHECK((sample_kernel(parse_kernel_spec("lowpass:c=10"), b).array() - 1.0 / (1.0 + 10.0 * l / lmax))
              .abs()
              .maxCoeff() < 1e-15);
    const Eigen::VectorXd w = sample_kernel(parse_kernel_spec("wavelet:a=1"), b);
    CHECK(w(0) == 0.0);
    CHECK(w(4) == doctest::Approx(std::sqrt(40.0) * lmax * std::exp(-40.0)));
    const Eigen::VectorXd r = sample_kernel(parse_kernel_spec("rect:lo=0.5,hi=2"), b);
    CHECK(r == (l >= 0.5 && l <= 2.0).cast<double>().matrix());
}

TEST_CASE("table kernels") {
    const SpectralBasis b = compute_basis(make_path(4));
    const Kernel k = Kernel::table(Eigen::Vector4d(1, 2, 3, 4));
    CHECK(k.size() == 4);
    CHECK_THROWS_AS(Kernel::table(Eigen::Vector2d(std::nan(""), 1)), ValidationError);
    CHECK_THROWS_AS(sample_kernel(KernelSpec{TableSpec{{1.0, 2.0}}}, b), ValidationError);
    CHECK(sample_kernel(KernelSpec{TableSpec{{1.0, 2.0, 3.0, 4.0}}}, b)(2) == 3.0);
}

TEST_CASE("warps are monotone maps of [0, lmax] onto itself") {
    const SpectralBasis b = compute_basis(make_sensor(64, 3));
    const double lmax = b.lambda_max();
    for (auto kind : {WarpKind::identity, WarpKind::spectrum_cdf, WarpKind::log, WarpKind::log_spectrum_cdf}) {
        CAPTURE(to_string(kind));
        const Warp w(kind, b.eigenvalues());
        CHECK(w(0.0) == doctest::Approx(0.0));
        CHECK(w(lmax) == doctest::Approx(lmax));
        double prev = -1.0;
        for (int s = 0; s <= 200; ++s) {
            const double y = w(lmax * s / 200.0);
            CHECK(y >= prev - 1e-12);
            prev = y;
        }
        CHECK(parse_warp(to_string(kind)) == kind);
    }
}

TEST_CASE("spectrum CDF warp spreads eigenvalues evenly") {
    const SpectralBasis b = compute_basis(make_erdos_renyi(50, 0.15, 2));
    const Warp w(WarpKind::spectrum_cdf, b.eigenvalues());
    const double lmax = b.lambda_max();
    for (Eigen::Index l = 1; l + 1 < 50; ++l) {
        if (b.eigenvalues()(l) - b.eigenvalues()(l - 1) < 1e-6 || b.eigenvalues()(l + 1) - b.eigenvalues()(l) < 1e-6)
            continue;
        CHECK(w(b.eigenvalues()(l)) == doctest::Approx(lmax * static_cast<double>(l) / 49.0));
    }
}

TEST_CASE("log warp formula") {
    const SpectralBasis b = compute_basis(make_path(10));
    const Warp w(WarpKind::log, b.eigenvalues());
    const double l1 = b.lambda_min_nonzero(), lmax = b.lambda_max();
    const double x = 0.7;
    CHECK(w(x) == doctest::Approx(lmax * std::log1p(x / l1) / std::log1p(lmax / l1)));
}

TEST_CASE("warped kernels compose") {
    const SpectralBasis b = compute_basis(make_comet(30, 10));
    const Warp w(WarpKind::log, b.eigenvalues());
    const Eigen::VectorXd v = sample_kernel(parse_kernel_spec("warped:warp=log;mother:center=1,width=2"), b);
    for (Eigen::Index l = 0; l < 30; ++l) CHECK(v(l) == doctest::Approx(mother_window((w(b.eigenvalues()(l)) - 1.0) / 2.0)));
}
