#pragma once

// Scalar special functions used by the finite-N and limiting kernels:
// log-gamma ratios, the complex complementary error function, the Gaussian
// tail pair F / calF, the window integrals L_rho / calL_rho, the
// two-parametric Mittag-Leffler family, and the regularized lower
// incomplete gamma. All functions are pure and reentrant.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace ovk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

// log Gamma(x) for x > 0. Relative error tracks libm lgamma (< few ulp).
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

// sum(log Gamma(numer)) - sum(log Gamma(denom)); never forms Gamma itself,
// so ratios like Gamma(n+L+1)/(Gamma(k+L+1)Gamma(n+1-k)) stay finite for
// n in the hundreds.
inline double gamma_log_ratio(std::span<const double> numer,
                              std::span<const double> denom) {
    double acc = 0.0;
    for (double x : numer) acc += log_gamma(x);
    for (double x : denom) acc -= log_gamma(x);
    return acc;
}

inline double gamma_log_ratio(std::initializer_list<double> numer,
                              std::initializer_list<double> denom) {
    return gamma_log_ratio(std::span<const double>(numer.begin(), numer.size()),
                           std::span<const double>(denom.begin(), denom.size()));
}

// Validity band for erfc_complex. Outside it the result may overflow or
// lose accuracy; callers that care should check first.
inline bool erfc_band_ok(cplx z) { return std::abs(z.imag()) <= 30.0; }

namespace detail {

// erf by its entire Taylor series. Cancellation costs roughly
// exp(2 Re(z)^2) in the last place, so this is reserved for |Re z| small
// where it is accurate for any imaginary part that does not overflow.
inline cplx erf_series(cplx z) {
    const cplx z2 = z * z;
    cplx u = z;            // (-1)^n z^(2n+1) / n!
    cplx sum = z;          // running sum of u_n / (2n+1)
    for (int n = 1; n < 4000; ++n) {
        u *= -z2 / static_cast<double>(n);
        const cplx term = u / static_cast<double>(2 * n + 1);
        sum += term;
        if (std::abs(term) <= 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return 2.0 / std::sqrt(kPi) * sum;
}

// Trapezoidal expansion of the Faddeeva function (Chiarella-Reichel).
// For Im(s) > 0:
//   w(s) = (ih/pi) sum_k exp(-k^2 h^2)/(s - kh) - 2 e^{-s^2} q/(1-q),
//   q = exp(2 pi i s / h),
// with discretization error O(exp(-pi^2/h^2)). h = 0.25 puts that far
// below double precision; the Gaussian factor truncates the sum at |k|h ~ 7.
inline cplx faddeeva_upper(cplx s) {
    constexpr double h = 0.25;
    constexpr int K = 28;
    cplx sum = 1.0 / s;
    for (int k = 1; k <= K; ++k) {
        const double kh = k * h;
        const double g = std::exp(-kh * kh);
        sum += g / (s - kh) + g / (s + kh);
    }
    const cplx q = std::exp(cplx(0.0, 2.0 * kPi / h) * s);
    cplx w = cplx(0.0, h / kPi) * sum;
    w -= 2.0 * std::exp(-s * s) * q / (1.0 - q);
    return w;
}

} // namespace detail

// Complementary error function of a complex argument. Strategy: reflect to
// Re z >= 0; use the erf Taylor series in the strip |Re z| < 1.5 (no
// cancellation blow-up there) and erfc(z) = e^{-z^2} w(iz) with the
// trapezoidal Faddeeva form outside the strip.
inline cplx erfc_complex(cplx z) {
    if (z.real() < 0.0) return 2.0 - erfc_complex(-z);
    if (z.real() < 1.5) return 1.0 - detail::erf_series(z);
    const cplx iz(-z.imag(), z.real());
    const cplx expmz2 = std::exp(-z * z);
    const cplx q = std::exp(-2.0 * kPi / 0.25 * z);
    constexpr double h = 0.25;
    constexpr int K = 28;
    cplx sum = 1.0 / iz;
    for (int k = 1; k <= K; ++k) {
        const double kh = k * h;
        const double g = std::exp(-kh * kh);
        sum += g / (iz - kh) + g / (iz + kh);
    }
    return expmz2 * cplx(0.0, h / kPi) * sum - 2.0 * q / (1.0 - q);
}

// Gaussian upper-tail function F(x) = erfc(x/sqrt(2))/2 and its companion
// calF(x) = exp(-x^2/2) - sqrt(2 pi) x F(x).
inline cplx F_tail(cplx x) { return 0.5 * erfc_complex(x / kSqrt2); }

inline cplx calF_tail(cplx x) {
    return std::exp(-0.5 * x * x) - kSqrt2Pi * x * F_tail(x);
}

// L_rho(z) = (1/sqrt(2 pi)) int_{-rho/sqrt2}^{rho/sqrt2} exp(-(z-xi)^2/2) dxi,
// evaluated through the closed form 1 - F(z + rho/sqrt2) - F(rho/sqrt2 - z).
inline cplx L_rho(cplx z, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("L_rho: rho must be positive");
    const double r = rho / kSqrt2;
    return 1.0 - F_tail(z + r) - F_tail(r - z);
}

// calL_rho per its defining display:
// (1/sqrt(2pi)) { (z+r) e^{-(z-r)^2/2}
//                 - (z-r) ( sqrt(2pi)(z+r) L_rho(z) + e^{-(z+r)^2/2} ) },
// r = rho/sqrt2. For large rho this grows like rho^2/2 - z^2.
inline cplx calL_rho(cplx z, double rho) {
    if (!(rho > 0.0)) throw std::domain_error("calL_rho: rho must be positive");
    const double r = rho / kSqrt2;
    const cplx a = (z + r) * std::exp(-0.5 * (z - r) * (z - r));
    const cplx b = (z - r) * (kSqrt2Pi * (z + r) * L_rho(z, rho) +
                              std::exp(-0.5 * (z + r) * (z + r)));
    return (a - b) / kSqrt2Pi;
}

// Two-parametric Mittag-Leffler function E_{a,b}(z) = sum z^k / Gamma(ak+b)
// by direct series. For the a >= 1 range required here the terms decay
// super-geometrically once ak passes |z|. The sum runs in long double so
// the alternating-tail cancellation at Re z < 0 stays below 1e-13 relative
// on the compact sets the kernels use.
inline cplx mittag_leffler(double a, double b, cplx z) {
    if (!(a >= 1.0))
        throw std::domain_error("mittag_leffler: requires a >= 1");
    if (!(b > 0.0))
        throw std::domain_error("mittag_leffler: requires b > 0");
    if (z == cplx(0.0)) return std::exp(-std::lgamma(b));
    using cplxl = std::complex<long double>;
    const cplxl zl(z.real(), z.imag());
    const long double logabs = std::log(std::abs(zl));
    const cplxl phase_step = zl / std::abs(zl);
    cplxl sum = 0.0L;
    cplxl phase = 1.0L;  // z^k / |z|^k
    for (int k = 0; k < 100000; ++k) {
        const long double mag = std::exp(
            k * logabs -
            std::lgamma(static_cast<long double>(a) * k +
                        static_cast<long double>(b)));
        sum += phase * mag;
        if (k > 0 && mag <= 1e-16L * (1.0L + std::abs(sum)) &&
            a * k + b > std::abs(z) + 2.0)
            return cplx(static_cast<double>(sum.real()),
                        static_cast<double>(sum.imag()));
        phase *= phase_step;
    }
    throw std::runtime_error("mittag_leffler: series did not converge");
}

// calE_{1,c}(z|x) = (x - c) E_{1,c+1}(z) + 1/Gamma(c).
inline cplx calE(double c, cplx z, cplx x) {
    if (!(c > 0.0)) throw std::domain_error("calE: requires c > 0");
    return (x - c) * mittag_leffler(1.0, c + 1.0, z) +
           std::exp(-std::lgamma(c));
}

// Regularized lower incomplete gamma P(c, z): series for z < c+1, Legendre
// continued fraction for the complementary part otherwise.
inline double reg_incomplete_gamma_P(double c, double z) {
    if (!(c > 0.0)) throw std::domain_error("reg_incomplete_gamma_P: c > 0");
    if (z < 0.0) throw std::domain_error("reg_incomplete_gamma_P: z >= 0");
    if (z == 0.0) return 0.0;
    const double lg = std::lgamma(c);
    if (z < c + 1.0) {
        double term = 1.0 / c;
        double sum = term;
        double ap = c;
        for (int k = 0; k < 10000; ++k) {
            ap += 1.0;
            term *= z / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-z + c * std::log(z) - lg);
    }
    // Lentz continued fraction for Q(c, z).
    const double tiny = 1e-300;
    double b = z + 1.0 - c;
    double C = 1.0 / tiny;
    double D = 1.0 / b;
    double f = D;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - c);
        b += 2.0;
        D = an * D + b;
        if (std::abs(D) < tiny) D = tiny;
        C = b + an / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const double delta = D * C;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-z + c * std::log(z) - lg) * f;
    return 1.0 - q;
}

} // namespace ovk
