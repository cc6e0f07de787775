#include <catch2/catch_amalgamated.hpp>

#include "ovk/special_functions.hpp"
#include "oracle_support.hpp"

#include <cmath>
#include <complex>

using ovk::cplx;

static double rel_err(cplx got, cplx want) {
    const double scale = std::max(1e-300, std::abs(want));
    return std::abs(got - want) / scale;
}

TEST_CASE("log_gamma basics") {
    CHECK(ovk::log_gamma(1.0) == Catch::Approx(0.0).margin(1e-15));
    CHECK(ovk::log_gamma(5.0) == Catch::Approx(std::log(24.0)).epsilon(1e-13));
    // factorial identity up to 20!
    double fact = 1.0;
    for (int k = 1; k <= 20; ++k) {
        fact *= k;
        CHECK(std::exp(ovk::log_gamma(k + 1.0)) == Catch::Approx(fact).epsilon(1e-13));
    }
    CHECK_THROWS_AS(ovk::log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ovk::log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_gamma vs extended-precision oracle") {
    for (double x : {0.5, 1.5, 7.25, 171.5, 1234.5, 1e6}) {
        const long double want = oracle::lgamma_ld(static_cast<long double>(x));
        const double got = ovk::log_gamma(x);
        CHECK(std::abs(got - static_cast<double>(want)) <=
              1e-12 * std::max(1.0, std::abs(static_cast<double>(want))));
    }
}

TEST_CASE("gamma_log_ratio") {
    // log C(10,5) = log 252
    CHECK(ovk::gamma_log_ratio({11.0}, {6.0, 6.0}) ==
          Catch::Approx(std::log(252.0)).epsilon(1e-13));
    CHECK(ovk::gamma_log_ratio({17.25}, {17.25}) == 0.0);
    // antisymmetry under swapping lists
    const double fwd = ovk::gamma_log_ratio({501.0, 3.5}, {301.0, 201.5});
    const double bwd = ovk::gamma_log_ratio({301.0, 201.5}, {501.0, 3.5});
    CHECK(fwd == -bwd);
    // big-parameter ratio vs long double oracle: n=400, L=100, k=200
    const double n = 400, L = 100, k = 200;
    const double got = ovk::gamma_log_ratio({n + L + 1}, {k + L + 1, n + 1 - k});
    const long double want = oracle::lgamma_ld(n + L + 1) -
                             oracle::lgamma_ld(k + L + 1) -
                             oracle::lgamma_ld(n + 1 - k);
    CHECK(std::abs(got - static_cast<double>(want)) <=
          1e-10 * std::abs(static_cast<double>(want)));
    CHECK_THROWS_AS(ovk::gamma_log_ratio({-1.0}, {2.0}), std::domain_error);
}

TEST_CASE("erfc_complex on the real axis") {
    CHECK(rel_err(ovk::erfc_complex(cplx(0.0, 0.0)), 1.0) < 1e-14);
    for (double x : {-4.0, -2.0, -0.7, 0.3, 1.0, 2.0, 3.5, 6.0, 10.0}) {
        const double want = std::erfc(x);
        CHECK(rel_err(ovk::erfc_complex(cplx(x, 0.0)), want) < 1e-12);
    }
}

TEST_CASE("erfc_complex vs quadrature of the defining integral") {
    // erfc(z) = 1 - (2/sqrt(pi)) int_0^z exp(-t^2) dt along the segment;
    // for Re z >= 2 the tail form int_z^{z+T} avoids the 1 - (near 1)
    // cancellation that otherwise caps the oracle near 1e-12.
    auto f = [](cplx t) { return std::exp(-t * t); };
    auto erfc_quad = [&](cplx z) {
        if (z.real() >= 2.0) {
            const cplx far = z + 14.0;
            return 2.0 / std::sqrt(ovk::kPi) *
                   oracle::integrate_segment(f, z, far, 1e-19);
        }
        return 1.0 - 2.0 / std::sqrt(ovk::kPi) *
                         oracle::integrate_segment(f, {0.0, 0.0}, z, 1e-17);
    };
    for (cplx z : {cplx(1.0, 0.0), cplx(0.5, 0.8), cplx(2.2, -1.3),
                   cplx(3.0, 2.0), cplx(0.05, 2.0), cplx(1.6, 0.01),
                   cplx(4.0, 3.0), cplx(-1.2, 2.4)}) {
        CHECK(rel_err(ovk::erfc_complex(z), erfc_quad(z)) < 1e-12);
    }
}

TEST_CASE("erfc reflection and band") {
    auto g = oracle::rng(11);
    for (int i = 0; i < 50; ++i) {
        const cplx z = oracle::random_disc(g, 5.0);
        const cplx sum = ovk::erfc_complex(z) + ovk::erfc_complex(-z);
        CHECK(std::abs(sum - 2.0) < 1e-12 * (1.0 + std::abs(ovk::erfc_complex(z))));
    }
    CHECK(ovk::erfc_band_ok(cplx(100.0, 29.0)));
    CHECK_FALSE(ovk::erfc_band_ok(cplx(0.0, 31.0)));
}

TEST_CASE("F and calF") {
    CHECK(rel_err(ovk::F_tail(cplx(0.0)), 0.5) < 1e-14);
    CHECK(rel_err(ovk::calF_tail(cplx(0.0)), 1.0) < 1e-14);
    auto g = oracle::rng(12);
    for (int i = 0; i < 50; ++i) {
        const cplx x = oracle::random_disc(g, 5.0);
        CHECK(std::abs(ovk::F_tail(x) + ovk::F_tail(-x) - 1.0) < 1e-12);
    }
}

TEST_CASE("L_rho against quadrature and limits") {
    // defining integral, z complex
    auto quad_L = [](cplx z, double rho) {
        auto f = [z](cplx xi) { return std::exp(-0.5 * (z - xi) * (z - xi)); };
        const double r = rho / ovk::kSqrt2;
        return oracle::integrate_segment(f, {-r, 0.0}, {r, 0.0}, 1e-15) /
               ovk::kSqrt2Pi;
    };
    CHECK(rel_err(ovk::L_rho(cplx(0.0), 2.0), quad_L(cplx(0.0), 2.0)) < 1e-12);
    // closed form says L_2(0) = erf(1)
    CHECK(rel_err(ovk::L_rho(cplx(0.0), 2.0), std::erf(1.0)) < 1e-12);
    for (cplx z : {cplx(0.4, -0.3), cplx(-1.0, 0.7), cplx(1.5, 1.5)}) {
        for (double rho : {0.7, 1.5, 3.0}) {
            CHECK(rel_err(ovk::L_rho(z, rho), quad_L(z, rho)) < 1e-12);
        }
    }
    // full-mass limit
    CHECK(std::abs(ovk::L_rho(cplx(0.0), 50.0) - 1.0) < 1e-12);
}

TEST_CASE("calL_rho large-rho growth") {
    // calL_rho(x) -> rho^2/2 - x^2 as rho -> infinity (the weakly
    // non-unitary window widens into the bulk).
    const double rho = 100.0, x = 0.3;
    const cplx v = ovk::calL_rho(cplx(x, 0.0), rho);
    CHECK(std::abs(v / (0.5 * rho * rho - x * x) - 1.0) < 1e-6);
}

TEST_CASE("mittag_leffler elementary cases") {
    const cplx z1(0.7, 0.2);
    CHECK(rel_err(ovk::mittag_leffler(1.0, 1.0, z1), std::exp(z1)) < 1e-13);
    const cplx z2(1.3, 0.0);
    CHECK(rel_err(ovk::mittag_leffler(1.0, 2.0, z2),
                  (std::exp(z2) - 1.0) / z2) < 1e-13);
    CHECK_THROWS_AS(ovk::mittag_leffler(0.5, 1.0, z1), std::domain_error);
    CHECK_THROWS_AS(ovk::mittag_leffler(1.0, 0.0, z1), std::domain_error);
}

TEST_CASE("mittag_leffler vs long double series") {
    auto ml_ld = [](long double a, long double b, oracle::cplxl z) {
        oracle::cplxl sum = 0.0L, pw = 1.0L;
        for (int k = 0; k < 200; ++k) {
            sum += pw * std::exp(-oracle::lgamma_ld(a * k + b));
            pw *= z;
        }
        return sum;
    };
    const double L = 2.5;
    const cplx got = ovk::mittag_leffler(1.0, L + 1.0, cplx(3.0, 0.0));
    const oracle::cplxl want = ml_ld(1.0L, L + 1.0L, oracle::cplxl(3.0L, 0.0L));
    CHECK(rel_err(got, cplx(static_cast<double>(want.real()),
                            static_cast<double>(want.imag()))) < 1e-12);
    // identity sweep: E_{1,1} = exp and E_{1,2} = (e^z - 1)/z on |z| <= 5
    auto g = oracle::rng(13);
    for (int i = 0; i < 30; ++i) {
        const cplx z = oracle::random_disc(g, 5.0);
        CHECK(rel_err(ovk::mittag_leffler(1.0, 1.0, z), std::exp(z)) < 1e-13);
        if (std::abs(z) > 1e-3)
            CHECK(rel_err(ovk::mittag_leffler(1.0, 2.0, z),
                          (std::exp(z) - 1.0) / z) < 1e-13);
    }
}

TEST_CASE("calE") {
    // x = c collapses to 1/Gamma(c)
    CHECK(rel_err(ovk::calE(1.7, cplx(0.4, 0.1), cplx(1.7, 0.0)),
                  std::exp(-std::lgamma(1.7))) < 1e-13);
    // c=1, z=0, x=3: (3-1)*E_{1,2}(0) + 1 = 2*1 + 1
    CHECK(rel_err(ovk::calE(1.0, cplx(0.0), cplx(3.0, 0.0)), 3.0) < 1e-13);
    // series oracle at c=2, z=1.5, x=0.5
    const cplx e12 = ovk::mittag_leffler(1.0, 3.0, cplx(1.5, 0.0));
    const cplx want = (cplx(0.5) - 2.0) * e12 + 1.0;
    CHECK(rel_err(ovk::calE(2.0, cplx(1.5, 0.0), cplx(0.5, 0.0)), want) < 1e-12);
}

TEST_CASE("regularized incomplete gamma") {
    CHECK(ovk::reg_incomplete_gamma_P(2.5, 0.0) == 0.0);
    for (double z : {0.2, 1.0, 3.7, 9.0}) {
        CHECK(std::abs(ovk::reg_incomplete_gamma_P(1.0, z) - (1.0 - std::exp(-z))) <
              1e-13);
    }
    // P(c,z) agrees with quadrature of t^{c-1} e^{-t} / Gamma(c); the
    // substitution t = u^2 removes the endpoint singularity at c < 1.
    for (double c : {0.5, 2.5, 7.0}) {
        for (double z : {0.3, 2.0, 8.0}) {
            auto f = [c](double u) {
                return 2.0 * std::exp((2.0 * c - 1.0) * std::log(u) - u * u);
            };
            const double want =
                oracle::integrate_real(f, 1e-30, std::sqrt(z), 1e-16) *
                std::exp(-std::lgamma(c));
            CHECK(std::abs(ovk::reg_incomplete_gamma_P(c, z) - want) < 1e-10);
        }
    }
}

TEST_CASE("P(c,z) = exp(-z) z^c E_{1,1+c}(z)") {
    for (double c : {0.5, 1.0, 2.5, 7.0}) {
        for (double z : {0.5, 2.0, 4.0, 10.0}) {
            const double lhs = ovk::reg_incomplete_gamma_P(c, z);
            const cplx rhs = std::exp(-z) * std::pow(z, c) *
                             ovk::mittag_leffler(1.0, 1.0 + c, cplx(z, 0.0));
            CHECK(std::abs(lhs - rhs.real()) < 1e-12 * std::max(1.0, lhs));
            CHECK(std::abs(rhs.imag()) < 1e-15);
        }
    }
}
