#pragma once

// Deformed-weight orthogonal polynomial machinery: the auxiliary polynomial
// families g, q, qhat, ghat; the moment matrix and its LDU decomposition;
// the conditioned polynomial family P_k with norms h_k; the non-standard
// three-term recurrence, and the closed forms for Phi and alpha that the
// finite-N kernel simplification rests on.

#include "ovk/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ovk {

struct EnsembleParams {
    int N = 1;       // matrix size
    double n = 1.0;  // may be non-integer (weak regime forces it)
    double L = 0.0;

    EnsembleParams() = default;
    EnsembleParams(int N_, double n_, double L_) : N(N_), n(n_), L(L_) {
        if (N < 1) throw std::domain_error("EnsembleParams: N >= 1");
        if (L < 0.0) throw std::domain_error("EnsembleParams: L >= 0");
        if (n < L) throw std::domain_error("EnsembleParams: n >= L");
        if (n < N) throw std::domain_error("EnsembleParams: n >= N");
    }
};

// Same (n, L) with the kernel order replaced; the D-formulas evaluate
// kernels of order N-1 inside an order-N ensemble.
inline EnsembleParams with_order(const EnsembleParams& p, int order) {
    EnsembleParams q = p;
    q.N = order;
    return q;
}

namespace detail {

// log C(n+L, L+j) for real parameters.
inline double log_binom_nL(const EnsembleParams& p, int j) {
    return gamma_log_ratio({p.n + p.L + 1.0}, {p.L + j + 1.0, p.n + 1.0 - j});
}

} // namespace detail

// g_m^{(n,L)}(x). The defining display carries 1/x prefactors whose poles
// cancel identically; collecting powers of x gives
//   g_m(x) = sum_{j=0}^m [ (m+1-j) B_j - (L/n)(m-j) B_{j+1} ] x^j,
//   B_j = C(n+L, L+j),
// whose coefficients are all positive, so real x > 0 sums without
// cancellation. The x = 0 singularity of the printed form is kept as a
// domain error to preserve the documented contract.
inline cplx eval_g(int m, const EnsembleParams& p, cplx x) {
    if (m < 0) throw std::domain_error("eval_g: m >= 0");
    if (x == cplx(0.0)) throw std::domain_error("eval_g: x = 0 is singular");
    cplx sum = 0.0;
    cplx xp = 1.0;
    for (int j = 0; j <= m; ++j) {
        const double Bj = std::exp(detail::log_binom_nL(p, j));
        const double Bj1 = std::exp(detail::log_binom_nL(p, j + 1));
        sum += ((m + 1 - j) * Bj - (p.L / p.n) * (m - j) * Bj1) * xp;
        xp *= x;
    }
    return sum;
}

// log g_m(x) for real x > 0, summed in the log domain (all coefficients
// positive). Safe for n, L in the hundreds.
inline double log_g(int m, const EnsembleParams& p, double x) {
    if (!(x > 0.0)) throw std::domain_error("log_g: x > 0");
    const double lx = std::log(x);
    double lmax = -std::numeric_limits<double>::infinity();
    std::vector<double> lt(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double Bj = detail::log_binom_nL(p, j);
        const double Bj1 = detail::log_binom_nL(p, j + 1);
        // coefficient in log form: log( (m+1-j) e^{Bj} - (L/n)(m-j) e^{Bj1} )
        const double big = std::max(Bj + std::log(double(m + 1 - j)),
                                    (m > j) ? Bj1 + std::log((p.L / p.n) * (m - j))
                                            : -std::numeric_limits<double>::infinity());
        const double a = std::log(double(m + 1 - j)) + Bj - big;
        const double b = (m > j) ? std::log((p.L / p.n) * (m - j)) + Bj1 - big
                                 : -std::numeric_limits<double>::infinity();
        lt[j] = big + std::log(std::exp(a) - std::exp(b)) + j * lx;
        lmax = std::max(lmax, lt[j]);
    }
    double acc = 0.0;
    for (double t : lt) acc += std::exp(t - lmax);
    return lmax + std::log(acc);
}

// q_deg^{(n,L)}(x) = sum_{k<=deg} Gamma(L+n+1)/(Gamma(k+L+1)Gamma(n+1-k)) x^k
// via the multiplicative term recurrence. Plain-double range only; the
// kernels use the weight-fused variant instead.
inline cplx eval_q(int deg, const EnsembleParams& p, cplx x) {
    if (deg < 0) throw std::domain_error("eval_q: deg >= 0");
    if (deg > p.n) throw std::domain_error("eval_q: deg <= n");
    cplx t = std::exp(detail::log_binom_nL(p, 0));
    cplx sum = t;
    for (int k = 0; k < deg; ++k) {
        t *= x * (p.n - k) / (k + p.L + 1.0);
        sum += t;
    }
    return sum;
}

// qhat_deg(y|x) = q_deg(y) + Gamma(L+n+1)/((nx-L) Gamma(n+1) Gamma(L)).
// At L = 0 the correction vanishes (1/Gamma(0) = 0).
inline cplx eval_qhat(int deg, const EnsembleParams& p, cplx y, cplx x) {
    cplx corr = 0.0;
    if (p.L > 0.0) {
        const cplx pole = p.n * x - p.L;
        if (std::abs(pole) < 1e-12)
            throw std::domain_error("eval_qhat: pole at nx = L");
        corr = std::exp(gamma_log_ratio({p.n + p.L + 1.0}, {p.n + 1.0, p.L})) / pole;
    }
    return eval_q(deg, p, y) + corr;
}

// ghat_deg(x) = (L+deg+1) qhat_{deg+1}(x|x) - x (n-deg-1) qhat_deg(x|x).
inline cplx eval_ghat(int deg, const EnsembleParams& p, cplx x) {
    return (p.L + deg + 1.0) * eval_qhat(deg + 1, p, x, x) -
           x * (p.n - deg - 1.0) * eval_qhat(deg, p, x, x);
}

// Moment matrix entry M_{i,j} = <z^i, z^j>_omega. Tridiagonal:
//   mu_{i,j} = (i+L+2+(n-i)|a|^2) delta_{i,j} - (i+L+1) a delta_{i+1,j}
//              - (n-i-1) conj(a) delta_{i,j+1},
//   M_{i,j} = Gamma(n-i-1) Gamma(i+L+1) / Gamma(n+L+1) * mu_{i,j}.
inline cplx moment_entry(int i, int j, const EnsembleParams& p, cplx a) {
    if (i < 0 || j < 0) throw std::domain_error("moment_entry: indices >= 0");
    if (i > p.n - 2 || j > p.n - 2)
        throw std::domain_error("moment_entry: index band requires i <= n-2");
    if (std::abs(i - j) >= 2) return 0.0;
    const double scale =
        std::exp(gamma_log_ratio({p.n - i - 1.0, i + p.L + 1.0}, {p.n + p.L + 1.0}));
    if (i == j)
        return scale * (i + p.L + 2.0 + (p.n - i) * std::norm(a));
    if (j == i + 1)
        return scale * (-(i + p.L + 1.0) * a);
    return scale * (-(p.n - i - 1.0) * std::conj(a));  // i = j + 1
}

struct LduFactors {
    std::vector<double> d;    // pivots d_p
    std::vector<double> ell;  // ell_{p+1} stored as coefficient of conj(a)
    std::vector<double> u;    // u_{p+1} stored as coefficient of a
    double x = 0.0;           // |a|^2
};

// LDU pivots of the tridiagonal mu via the scalar recurrence
//   d_p = -x (p+L)(n-p-1)/d_{p-1} + p+L+2 + x(n-p),  d_0 = L+2+nx.
inline LduFactors ldu_decompose(int depth, const EnsembleParams& p, double x) {
    if (x < 0.0) throw std::domain_error("ldu_decompose: x >= 0");
    if (depth > p.n - 2)
        throw std::domain_error("ldu_decompose: depth <= n-2");
    LduFactors f;
    f.x = x;
    f.d.resize(depth + 1);
    f.ell.assign(depth + 1, 0.0);
    f.u.assign(depth + 1, 0.0);
    f.d[0] = p.L + 2.0 + p.n * x;
    for (int q = 1; q <= depth; ++q) {
        if (f.d[q - 1] <= 0.0)
            throw std::runtime_error("ldu_decompose: nonpositive pivot");
        f.d[q] = -x * (q + p.L) * (p.n - q - 1.0) / f.d[q - 1] + q + p.L + 2.0 +
                 x * (p.n - q);
        f.u[q] = -(q - 1 + p.L + 1.0) / f.d[q - 1];
        f.ell[q] = -(p.n - (q - 1) - 2.0) / f.d[q - 1];
    }
    if (f.d[depth] <= 0.0)
        throw std::runtime_error("ldu_decompose: nonpositive pivot");
    return f;
}

struct PolyFamily {
    cplx base_point;                        // the conditioning point a
    int degree = 0;                         // highest k
    std::vector<std::vector<cplx>> coeffs;  // coeffs[k][j], monic in z^k
    std::vector<double> norms;              // h_k
};

// Conditioned family: P_k(z) = sum_j a^{k-j} (g_j(x)/g_k(x)) z^j with
// x = |a|^2, norms h_k = Gamma(k+L+2)Gamma(n-k-1)/Gamma(n+L+1) *
// g_{k+1}(x)/g_k(x). The U^{-1}/L^{-1} columns give the same coefficient
// array for Q_k, so one table serves both.
inline PolyFamily build_poly_family(int maxdeg, const EnsembleParams& p, cplx a) {
    if (maxdeg > p.n - 2)
        throw std::domain_error("build_poly_family: maxdeg <= n-2");
    PolyFamily fam;
    fam.base_point = a;
    fam.degree = maxdeg;
    fam.coeffs.resize(maxdeg + 1);
    fam.norms.resize(maxdeg + 1);
    const double x = std::norm(a);
    // log g_j for the ratio table; at a = 0 the family is monomial.
    std::vector<double> lg(maxdeg + 2, 0.0);
    if (x > 0.0)
        for (int j = 0; j <= maxdeg + 1; ++j) lg[j] = log_g(j, p, x);
    else {
        // g_j(0+) limit: C(n+L,L) * (L+j+1)/(L+1)
        for (int j = 0; j <= maxdeg + 1; ++j)
            lg[j] = detail::log_binom_nL(p, 0) +
                    std::log((p.L + j + 1.0) / (p.L + 1.0));
    }
    for (int k = 0; k <= maxdeg; ++k) {
        fam.coeffs[k].assign(k + 1, cplx(0.0));
        fam.coeffs[k][k] = 1.0;
        cplx apow = 1.0;
        for (int j = k - 1; j >= 0; --j) {
            apow *= a;
            fam.coeffs[k][j] = apow * std::exp(lg[j] - lg[k]);
        }
        fam.norms[k] =
            std::exp(gamma_log_ratio({k + p.L + 2.0, p.n - k - 1.0},
                                     {p.n + p.L + 1.0}) +
                     lg[k + 1] - lg[k]);
    }
    return fam;
}

inline cplx eval_P(const PolyFamily& fam, int k, cplx z) {
    cplx acc = 0.0;
    for (int j = k; j >= 0; --j) acc = acc * z + fam.coeffs[k][j];
    return acc;
}

inline cplx eval_Q(const PolyFamily& fam, int k, cplx z) { return eval_P(fam, k, z); }

// Residual of the non-standard three-term recurrence
//   z P_k = P_{k+1} + b_k P_k + z c_k P_{k-1},
//   b_k = -a g_k/g_{k+1}, c_k = a g_{k-1}/g_k.
inline cplx three_term_residual(int k, const EnsembleParams& p, cplx a, cplx z) {
    if (k < 1) throw std::domain_error("three_term_residual: k >= 1");
    const PolyFamily fam = build_poly_family(k + 1, p, a);
    const double x = std::norm(a);
    cplx bk, ck;
    if (x > 0.0) {
        bk = -a * std::exp(log_g(k, p, x) - log_g(k + 1, p, x));
        ck = a * std::exp(log_g(k - 1, p, x) - log_g(k, p, x));
    } else {
        bk = ck = 0.0;
    }
    return z * eval_P(fam, k, z) - eval_P(fam, k + 1, z) - bk * eval_P(fam, k, z) -
           z * ck * eval_P(fam, k - 1, z);
}

// Phi_q(x) = sum_{j<=q} Gamma(n+L+1)/(Gamma(j+L+2)Gamma(n-j-1)) *
//            x^j / (g_{j+1}(x) g_j(x)), by direct summation.
inline cplx phi_direct(int q, const EnsembleParams& p, cplx x) {
    if (q < 0) return 0.0;
    if (q > p.n - 3) throw std::domain_error("phi_direct: q <= n-3");
    cplx sum = 0.0;
    cplx xp = 1.0;
    std::vector<cplx> g(q + 2);
    for (int j = 0; j <= q + 1; ++j) g[j] = eval_g(j, p, x);
    for (int j = 0; j <= q; ++j) {
        const double pref =
            std::exp(gamma_log_ratio({p.n + p.L + 1.0}, {j + p.L + 2.0, p.n - j - 1.0}));
        sum += pref * xp / (g[j + 1] * g[j]);
        xp *= x;
    }
    return sum;
}

// Closed form of Phi_q:
//   Gamma(n+1)Gamma(L+1)/Gamma(n+L+1) * ((n-1)x-(L+1))/(x(x-L/n))
//   + (-(n-q-2)x + L+q+2)/(x(x-L/n) g_{q+1}(x)).
inline cplx phi_closed(int q, const EnsembleParams& p, cplx x) {
    if (q < 0) return 0.0;
    if (q > p.n - 3) throw std::domain_error("phi_closed: q <= n-3");
    const cplx den = x * (x - p.L / p.n);
    if (std::abs(den) < 1e-300)
        throw std::domain_error("phi_closed: singular at x in {0, L/n}");
    const double c0 = std::exp(gamma_log_ratio({p.n + 1.0, p.L + 1.0}, {p.n + p.L + 1.0}));
    const cplx t1 = c0 * ((p.n - 1.0) * x - (p.L + 1.0)) / den;
    const cplx t2 =
        (-(p.n - q - 2.0) * x + (p.L + q + 2.0)) / (den * eval_g(q + 1, p, x));
    return t1 + t2;
}

// alpha_m(x, w) = sum_{s<=m} g_s(x) w^s through the closed form built from
// qhat, valid off w = 1.
inline cplx alpha_closed(int m, const EnsembleParams& p, cplx x, cplx w) {
    if (std::abs(w - 1.0) < 1e-12)
        throw std::domain_error("alpha_closed: singular at w = 1");
    if (x == cplx(0.0) || std::abs(x - p.L / p.n) < 1e-300)
        throw std::domain_error("alpha_closed: x in {0, L/n}");
    const cplx pre = (x - p.L / p.n) / x;
    const cplx omw = 1.0 - w;
    const cplx qh_xw = eval_qhat(m, p, x * w, x);
    const cplx qh_x = eval_qhat(m, p, x, x);
    const double lb =
        gamma_log_ratio({p.L + p.n + 1.0}, {p.L + m + 1.0, p.n - m});
    const cplx t1 = pre * qh_xw / (omw * omw);
    const cplx t2 = -pre * std::pow(x * w, m + 1) * std::exp(lb) / (omw * (1.0 + x));
    const cplx t3 = -pre * std::pow(w, m + 1) *
                    (p.L + m + 1.0 - (p.n - m - 1.0) * x) * qh_x / ((1.0 + x) * omw);
    const cplx t4 = -pre * std::pow(w, m + 1) * qh_x / (omw * omw);
    return t1 + t2 + t3 + t4;
}

} // namespace ovk
