#pragma once

// Finite-N objects: the deformed weight, the standard correlation kernel
// K_N, the overlap kernels K_{1,1} / K_{1,2} in direct (moment-method) and
// simplified (qhat-based) form, the determinantal D_{1,1} / D_{1,2}
// formulas, the decoupling transform, conditional-expectation ratios, and
// the quenched products.
//
// Every quantity that grows like exp(c N) is evaluated fused with the
// weight factors that shrink like exp(-c N): the "dressed" building blocks
// qhat * omega_hat stay O(1) on the droplet for N in the hundreds.

#include "ovk/finite_structures.hpp"
#include "ovk/special_functions.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ovk {

// A point with independently tracked conjugate; the decoupling transform
// exchanges zbar slots between points, so zbar == conj(z) only for
// physical points.
struct WeightedPoint {
    cplx z;
    cplx zbar;
    static WeightedPoint physical(cplx z) { return {z, std::conj(z)}; }
    bool is_physical(double tol = 1e-12) const {
        return std::abs(zbar - std::conj(z)) <= tol * (1.0 + std::abs(z));
    }
};

enum class KernelMethod { direct, simplified };

struct KernelEval {
    cplx value{};
    KernelMethod method = KernelMethod::direct;
    bool regularized = false;  // coincidence fallback fired
};

struct ConfigPoint {
    std::vector<WeightedPoint> zs;

    static ConfigPoint physical(std::vector<cplx> pts) {
        ConfigPoint c;
        for (cplx z : pts) c.zs.push_back(WeightedPoint::physical(z));
        return c;
    }
    void require_distinct() const {
        for (size_t i = 0; i < zs.size(); ++i)
            for (size_t j = i + 1; j < zs.size(); ++j)
                if (std::abs(zs[i].z - zs[j].z) < 1e-12)
                    throw std::domain_error("ConfigPoint: coincident points");
    }
};

namespace detail {

// Analytic log of the weight s^L (1+s)^{-(n+L+1)} in the product variable
// s = z zbar; equals log e^{-NQ(z)} at physical points.
inline cplx log_weightA(cplx s, const EnsembleParams& p) {
    return p.L * std::log(s) - (p.n + p.L + 1.0) * std::log(1.0 + s);
}

// log omega_hat(u, v) = L log(uv) - (n+L+1)/2 [log(1+|u|^2) + log(1+|v|^2)]
// with true conjugates of the supplied arguments.
inline cplx log_omega_hat(cplx u, cplx v, const EnsembleParams& p) {
    return p.L * std::log(u * v) -
           0.5 * (p.n + p.L + 1.0) *
               (std::log1p(std::norm(u)) + std::log1p(std::norm(v)));
}

// Dressed sum qhat_k(uv|x) * omega_hat(u,v), all factors fused in the log
// domain term by term.
inline cplx qw_dressed(int k, cplx u, cplx v, cplx x, const EnsembleParams& p) {
    const cplx lw = log_omega_hat(u, v, p);
    const cplx y = u * v;
    cplx sum = 0.0;
    if (y == cplx(0.0)) {
        sum = std::exp(log_binom_nL(p, 0) + lw);
    } else {
        const cplx ly = std::log(y);
        double lgr = log_binom_nL(p, 0);
        for (int j = 0; j <= k; ++j) {
            sum += std::exp(lgr + static_cast<double>(j) * ly + lw);
            lgr += std::log((p.n - j) / (j + p.L + 1.0));
        }
    }
    if (p.L > 0.0) {
        const cplx pole = p.n * x - p.L;
        sum += std::exp(gamma_log_ratio({p.n + p.L + 1.0}, {p.n + 1.0, p.L}) + lw) /
               pole;
    }
    return sum;
}

// (uv)^M * omega_hat(u,v), fused.
inline cplx pw_dressed(int M, cplx u, cplx v, const EnsembleParams& p) {
    return std::exp(static_cast<double>(M) * std::log(u * v) +
                    log_omega_hat(u, v, p));
}

// ghat_k(x) * omega_hat(lambdabar, lambda) with x = lambdabar*lambda.
inline cplx ghat_dressed(int k, cplx lam, cplx lambar, const EnsembleParams& p) {
    const cplx x = lam * lambar;
    return (p.L + k + 1.0) * qw_dressed(k + 1, lambar, lam, x, p) -
           x * (p.n - k - 1.0) * qw_dressed(k, lambar, lam, x, p);
}

} // namespace detail

// e^{-N Q(z)} = |z|^{2L} (1+|z|^2)^{-(n+L+1)}, evaluated without logs at
// z = 0 so the L = 0 case stays exact.
inline double gaussian_free_weight(cplx z, const EnsembleParams& p) {
    const double s = std::norm(z);
    if (s == 0.0) return p.L > 0.0 ? 0.0 : 1.0;
    return std::exp(p.L * std::log(s) - (p.n + p.L + 1.0) * std::log1p(s));
}

// The deformed weight omega(z, zbar | u, v).
inline cplx weight_omega(const WeightedPoint& z, cplx u, cplx v,
                         const EnsembleParams& p) {
    const cplx core =
        (z.z - u) * (z.zbar - v) + (1.0 + u * v) * (1.0 + z.z * z.zbar) / (p.n + p.L);
    return core * std::exp(detail::log_weightA(z.z * z.zbar, p));
}

inline cplx omega_hat(cplx u, cplx v, const EnsembleParams& p) {
    return std::exp(detail::log_omega_hat(u, v, p));
}

// varpi(z, zbar, w, wbar | lam, lambar): product of the two square-root
// factors, analytic in the independent variables.
inline cplx varpi(const WeightedPoint& z, const WeightedPoint& w,
                  const WeightedPoint& lam, const EnsembleParams& p) {
    const cplx f1 = (z.z - lam.z) * (z.zbar - lam.zbar) +
                    (1.0 + lam.z * lam.zbar) * (1.0 + z.z * z.zbar) / (p.n + p.L);
    const cplx f2 = (w.z - lam.z) * (w.zbar - lam.zbar) +
                    (1.0 + lam.z * lam.zbar) * (1.0 + w.z * w.zbar) / (p.n + p.L);
    return std::sqrt(f1) * std::sqrt(f2);
}

// Standard ISUE correlation kernel
//   K_N(z,w) = e^{-N(Q(z)+Q(w))/2} sum_{k<N} (zbar w)^k / h_k^{ISUE},
// fused in the log domain.
inline cplx kernel_KN(cplx z, cplx w, const EnsembleParams& p) {
    if (p.N > p.n) throw std::domain_error("kernel_KN: N <= n required");
    const double lw2 = 0.5 * (detail::log_weightA(cplx(std::norm(z)), p).real() +
                              detail::log_weightA(cplx(std::norm(w)), p).real());
    const cplx y = std::conj(z) * w;
    if (y == cplx(0.0)) {
        // only k = 0 survives
        return std::exp(gamma_log_ratio({p.n + p.L + 1.0}, {p.n, p.L + 1.0}) + lw2);
    }
    const cplx ly = std::log(y);
    double lgr = gamma_log_ratio({p.n + p.L + 1.0}, {p.n, p.L + 1.0});
    cplx sum = 0.0;
    for (int k = 0; k < p.N; ++k) {
        sum += std::exp(lgr + static_cast<double>(k) * ly + lw2);
        lgr += std::log((p.n - k - 1.0) / (k + p.L + 2.0));
    }
    return sum;
}

// Direct double sum for the reduced kernel,
//   G_N(x|y,z) = sum_{s,t<N} g_s y^s g_t z^t (Phi_{N-1} - Phi_{max(s,t)-1}),
// organized as backward-cumulative Phi tails against prefix sums, O(N).
// For real x > 0 everything is rescaled by a reference magnitude so the
// evaluation survives N in the hundreds; complex x uses plain arithmetic
// (small-N decoupling work only).
inline cplx GN_direct_order(int M, cplx x, cplx y, cplx z,
                            const EnsembleParams& p) {
    if (M > p.n - 2) throw std::domain_error("GN_direct: N <= n-2");
    if (x == cplx(0.0) || std::abs(x - p.L / p.n) < 1e-300)
        throw std::domain_error("GN_direct: x in {0, L/n} singular");
    std::vector<cplx> gs(M + 1);
    const bool realx = (x.imag() == 0.0 && x.real() > 0.0);
    double lref = 0.0;
    if (realx) {
        std::vector<double> lgs(M + 1);
        for (int s = 0; s <= M; ++s) lgs[s] = log_g(s, p, x.real());
        lref = lgs[M / 2];
        for (int s = 0; s <= M; ++s) gs[s] = std::exp(lgs[s] - lref);
    } else {
        for (int s = 0; s <= M; ++s) gs[s] = eval_g(s, p, x);
    }
    // Phi tail terms, carrying e^{+2 lref} so tails * g g products are exact.
    const cplx lx = std::log(x);
    std::vector<cplx> tail(M + 1, cplx(0.0));
    for (int j = M - 1; j >= 0; --j) {
        const double lgr =
            gamma_log_ratio({p.n + p.L + 1.0}, {j + p.L + 2.0, p.n - j - 1.0});
        const cplx term =
            std::exp(lgr + static_cast<double>(j) * lx + 2.0 * lref) /
            (gs[j + 1] * gs[j]);
        tail[j] = tail[j + 1] + term;
    }
    cplx G = 0.0;
    cplx S = 0.0, T = 0.0;  // prefix sums of c_s = g_s y^s, d_t = g_t z^t
    cplx yp = 1.0, zp = 1.0;
    for (int m = 0; m <= M - 1; ++m) {
        const cplx cm = gs[m] * yp;
        const cplx dm = gs[m] * zp;
        G += tail[m] * (cm * dm + cm * T + dm * S);
        S += cm;
        T += dm;
        yp *= y;
        zp *= z;
    }
    return G;
}

inline cplx GN_direct(cplx x, cplx y, cplx z, const EnsembleParams& p) {
    return GN_direct_order(p.N, x, y, z, p);
}

namespace detail {

// Reduced kernel, direct route: calK_{1,1}^{(M)}(zbar, w | lam, lambar)
// = G_M(lam lambar | zbar/lambar, w/lam).
inline cplx calK11_direct(int M, cplx zbar, cplx w, cplx lam, cplx lambar,
                          const EnsembleParams& p) {
    return GN_direct_order(M, lam * lambar, zbar / lambar, w / lam, p);
}

// Simplified route: the dressed sum frakH + frakI + frakII + frakIII times
// the compensator C_K recovers the full kernel up to the varpi factor and
// half-weights. Physical points only (true conjugates are taken).
inline cplx k11_simplified_sum(cplx z, cplx w, cplx lam,
                               const EnsembleParams& p) {
    const int N = p.N;
    const cplx zb = std::conj(z);
    const cplx lb = std::conj(lam);
    const cplx x = lam * lb;  // |lam|^2
    const cplx dz = zb - lb;
    const cplx dw = w - lam;
    const cplx zw = zb * w;

    auto QW = [&](int k, cplx u, cplx v) { return qw_dressed(k, u, v, x, p); };
    cplx A[3], B[3], C[3], D[3];  // index 0,1,2 -> order N-1, N, N+1
    for (int i = 0; i < 3; ++i) {
        const int M = N - 1 + i;
        A[i] = QW(M, lb, w);
        B[i] = QW(M, zb, lam);
        C[i] = QW(M, lb, lam);
        D[i] = QW(M, zb, w);
    }
    const cplx gw = (p.L + N + 1.0) * C[2] - x * (p.n - N - 1.0) * C[1];

    auto Qdressed = [&](int i) {
        return A[i] * B[i] - (1.0 - dz * dw / (1.0 + x)) * C[i] * D[i];
    };
    const cplx frakH = (1.0 + x) *
                       ((N + p.L + 1.0) * Qdressed(2) -
                        (p.n - N - 1.0) * x * Qdressed(1)) /
                       (dz * dz * dw * dw * gw);

    cplx frakI = ((p.L + N) * D[1] + (p.n - N - 1.0 - zw) * D[0]) /
                 ((1.0 + zw) * dz * dw);
    if (p.L > 0.0) {
        const cplx pole_part =
            std::exp(gamma_log_ratio({p.L + p.n + 1.0}, {p.n + 1.0, p.L}) +
                     log_omega_hat(zb, w, p));
        frakI -= p.n * (1.0 + x) / (p.n * x - p.L) * pole_part /
                 ((1.0 + zw) * dz * dw);
    }

    const cplx BB =
        (p.n - N - 1.0) *
        std::exp(gamma_log_ratio({p.L + p.n + 1.0}, {p.L + N + 1.0, p.n - N}) +
                 static_cast<double>(N) * std::log(zw) +
                 log_omega_hat(zb, w, p));
    const cplx frakII = -BB * (C[0] - C[1] / (p.n - N)) / (dz * dw * gw);
    const cplx frakIII = BB *
                         ((p.L + N + 1.0) / (p.n - N) * C[1] -
                          zw * C[2] / (p.n - N - 1.0)) /
                         (dz * dw * gw);
    return frakH + frakI + frakII + frakIII;
}

} // namespace detail

// Full overlap kernel K_{1,1}^{(N)}(z, zbar, w, wbar | lam, lambar).
// method selects the Prop-3.1 double sum or the Thm-3.2 simplified form;
// the simplified route requires physical points and switches to the direct
// route inside the coincidence band (regularized = true) where its
// removable denominators cancel catastrophically.
inline KernelEval K11_finite(const WeightedPoint& z, const WeightedPoint& w,
                             const WeightedPoint& lam, const EnsembleParams& p,
                             KernelMethod method = KernelMethod::simplified) {
    KernelEval out;
    out.method = method;
    const cplx vp = varpi(z, w, lam, p);
    const cplx halfw = std::exp(0.5 * detail::log_weightA(z.z * z.zbar, p) +
                                0.5 * detail::log_weightA(w.z * w.zbar, p));
    if (method == KernelMethod::direct) {
        const cplx calK =
            detail::calK11_direct(p.N, z.zbar, w.z, lam.z, lam.zbar, p);
        out.value = calK * vp * halfw;
        return out;
    }
    if (!z.is_physical() || !w.is_physical() || !lam.is_physical())
        throw std::domain_error("K11_finite: simplified route needs physical points");
    const double band = 1e-4 * (1.0 + std::abs(lam.z)) * (1.0 + std::abs(lam.z));
    if (std::abs((z.zbar - lam.zbar) * (w.z - lam.z)) < band) {
        const cplx calK =
            detail::calK11_direct(p.N, z.zbar, w.z, lam.z, lam.zbar, p);
        out.value = calK * vp * halfw;
        out.regularized = true;
        return out;
    }
    const cplx S = detail::k11_simplified_sum(z.z, w.z, lam.z, p);
    const cplx CK = std::exp(0.5 * detail::log_omega_hat(z.zbar, z.z, p) +
                             0.5 * detail::log_omega_hat(w.zbar, w.z, p) -
                             detail::log_omega_hat(z.zbar, w.z, p));
    out.value = CK * S * vp;
    return out;
}

// K_{1,2}^{(N)}(z, zbar, w, wbar | u, ubar, v, vbar): the 2x2 determinant
// of reduced kernels conditioned on the pair (u, vbar), weighted by varpi
// and the half-weights, divided by calK(ubar, v | u, vbar).
inline cplx K12_finite(const WeightedPoint& z, const WeightedPoint& w,
                       const WeightedPoint& u, const WeightedPoint& v,
                       const EnsembleParams& p) {
    auto calK = [&](cplx zb, cplx ww) {
        return detail::calK11_direct(p.N, zb, ww, u.z, v.zbar, p);
    };
    const cplx k_uv = calK(u.zbar, v.z);
    if (std::abs(k_uv) == 0.0)
        throw std::domain_error("K12_finite: vanishing conditioning kernel");
    const cplx det = k_uv * calK(z.zbar, w.z) - calK(u.zbar, w.z) * calK(z.zbar, v.z);
    const WeightedPoint cond{u.z, v.zbar};
    const cplx vp = varpi(z, w, cond, p);
    const cplx halfw = std::exp(0.5 * detail::log_weightA(z.z * z.zbar, p) +
                                0.5 * detail::log_weightA(w.z * w.zbar, p));
    return vp * halfw * det / k_uv;
}

namespace detail {

// k x k complex determinant by partial-pivoted Gaussian elimination.
inline cplx det_small(std::vector<std::vector<cplx>> m) {
    const size_t k = m.size();
    cplx det = 1.0;
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < k; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) == 0.0) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < k; ++r) {
            const cplx f = m[r][c] / m[c][c];
            for (size_t cc = c; cc < k; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

} // namespace detail

// D_{1,1}^{(N,k)}: prefactor n(x - L/n)/(x(1+x)) ghat_{N-1}(x) omegahat
// times det_{2<=i,j<=k} K_{1,1}^{(N-1)}( . | z_1). `analytic` keeps every
// factor a function of the independent (z, zbar) pairs, which the
// decoupling transform needs; physical configurations return a real value.
inline cplx D11_finite_c(const ConfigPoint& cfg, const EnsembleParams& p,
                         bool analytic_continuation = false) {
    if (cfg.zs.empty()) throw std::domain_error("D11_finite: k >= 1");
    const WeightedPoint lam = cfg.zs[0];
    const cplx x = lam.z * lam.zbar;
    const int k = static_cast<int>(cfg.zs.size());
    cplx pref;
    if (!analytic_continuation && lam.is_physical() && x.real() > 0.0) {
        // n g_{N-1}(x) A(x), log-fused (bridge form of the prefactor)
        pref = std::exp(std::log(p.n) + log_g(p.N - 1, p, x.real()) +
                        detail::log_weightA(x, p).real());
    } else {
        pref = p.n * (x - p.L / p.n) / (x * (1.0 + x)) * eval_ghat(p.N - 1, p, x) *
               std::exp(detail::log_weightA(x, p));
    }
    if (k == 1) return pref;
    const EnsembleParams pm1 = with_order(p, p.N - 1);
    std::vector<std::vector<cplx>> m(k - 1, std::vector<cplx>(k - 1));
    const KernelMethod meth =
        analytic_continuation ? KernelMethod::direct : KernelMethod::simplified;
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            m[i - 1][j - 1] =
                K11_finite(cfg.zs[i], cfg.zs[j], lam, pm1, meth).value;
    return pref * detail::det_small(std::move(m));
}

inline double D11_finite(const ConfigPoint& cfg, const EnsembleParams& p) {
    const cplx v = D11_finite_c(cfg, p);
    if (std::abs(v.imag()) > 1e-9 * std::max(1e-300, std::abs(v)))
        throw std::runtime_error("D11_finite: non-real result on physical input");
    return v.real();
}

// D_{1,2}^{(N,k)} for physical configurations, k >= 2.
inline double D12_finite(const ConfigPoint& cfg, const EnsembleParams& p) {
    if (cfg.zs.size() < 2) throw std::domain_error("D12_finite: k >= 2");
    const int k = static_cast<int>(cfg.zs.size());
    const WeightedPoint z1 = cfg.zs[0], z2 = cfg.zs[1];
    const cplx y = z1.z * z2.zbar;
    const EnsembleParams pm1 = with_order(p, p.N - 1);
    const cplx pref = -p.n * (y - p.L / p.n) / (y * (1.0 + y)) *
                      eval_ghat(p.N - 1, p, y) *
                      omega_hat(z2.zbar, z1.z, p) *
                      detail::calK11_direct(p.N - 1, z1.zbar, z2.z, z1.z, z2.zbar, p) *
                      omega_hat(z1.zbar, z2.z, p);
    cplx val = pref;
    if (k > 2) {
        std::vector<std::vector<cplx>> m(k - 2, std::vector<cplx>(k - 2));
        for (int i = 2; i < k; ++i)
            for (int j = 2; j < k; ++j)
                m[i - 2][j - 2] = K12_finite(cfg.zs[i], cfg.zs[j], z1, z2, pm1);
        val *= detail::det_small(std::move(m));
    }
    if (std::abs(val.imag()) > 1e-9 * std::max(1e-300, std::abs(val)))
        throw std::runtime_error("D12_finite: non-real result on physical input");
    return val.real();
}

// Lemma-2.3 decoupling: evaluates the transform
//   -|1+z1 conj(z2)|^{2(n+L+1)} / ((1+|z1|^2)(1+|z2|^2))^{n+L+1}
//     * T D_{1,1} / ( |1+z1 conj(z2)|^2/(n+L) - |z1-z2|^2 )
// and returns its relative deviation from D12_finite.
inline double decouple_check(const WeightedPoint& z1, const WeightedPoint& z2,
                             const ConfigPoint& rest, const EnsembleParams& p) {
    ConfigPoint cfg;
    cfg.zs = {z1, z2};
    for (const auto& w : rest.zs) cfg.zs.push_back(w);

    // T swaps the zbar slots of the first two points.
    ConfigPoint swapped = cfg;
    std::swap(swapped.zs[0].zbar, swapped.zs[1].zbar);
    const cplx TD11 = D11_finite_c(swapped, p, /*analytic_continuation=*/true);

    const double cross = std::norm(1.0 + z1.z * std::conj(z2.z));
    const double denom = cross / (p.n + p.L) - std::norm(z1.z - z2.z);
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("decouple_check: excluded hypersurface");
    const double logmag =
        (p.n + p.L + 1.0) *
        (std::log(cross) - std::log1p(std::norm(z1.z)) - std::log1p(std::norm(z2.z)));
    const cplx transform = -std::exp(logmag) * TD11 / denom;

    const double d12 = D12_finite(cfg, p);
    return std::abs(transform - d12) / std::abs(d12);
}

// E[O_{1,1} | lambda_1 = z] = D_{1,1}^{(N,1)}(z) / R_{N,1}(z).
inline double cond_exp_O11(cplx z, const EnsembleParams& p) {
    const double R = kernel_KN(z, z, p).real();
    if (!(R > 0.0)) throw std::domain_error("cond_exp_O11: vanishing density");
    const ConfigPoint cfg = ConfigPoint::physical({z});
    return D11_finite(cfg, p) / R;
}

// E[O_{1,2} | z1, z2] = D_{1,2}^{(N,2)} / Z_N^{(n,L)}(z1, z2) with
// Z_N = det of the 2x2 weighted ISUE kernel matrix.
inline double cond_exp_O12(cplx z1, cplx z2, const EnsembleParams& p) {
    const cplx k11 = kernel_KN(z1, z1, p), k22 = kernel_KN(z2, z2, p);
    const cplx k12 = kernel_KN(z1, z2, p), k21 = kernel_KN(z2, z1, p);
    const cplx Z = k11 * k22 - k12 * k21;
    if (std::abs(Z) == 0.0)
        throw std::domain_error("cond_exp_O12: degenerate denominator");
    const ConfigPoint cfg = ConfigPoint::physical({z1, z2});
    return D12_finite(cfg, p) / Z.real();
}

// Quenched (conditional-on-spectrum) expectations, Props. 2.1 / 2.2.
inline double quenched_O11(const std::vector<cplx>& lams,
                           const EnsembleParams& p) {
    if (lams.empty()) throw std::domain_error("quenched_O11: need eigenvalues");
    double logprod = 0.0;
    for (size_t j = 1; j < lams.size(); ++j) {
        const double d2 = std::norm(lams[0] - lams[j]);
        if (d2 == 0.0) throw std::domain_error("quenched_O11: coincident eigenvalues");
        logprod += std::log1p((1.0 + std::norm(lams[0])) *
                              (1.0 + std::norm(lams[j])) / ((p.n + p.L) * d2));
    }
    return std::exp(logprod);
}

inline cplx quenched_O12(const std::vector<cplx>& lams, const EnsembleParams& p) {
    if (lams.size() < 2) throw std::domain_error("quenched_O12: need two eigenvalues");
    const double d2 = std::norm(lams[0] - lams[1]);
    if (d2 == 0.0) throw std::domain_error("quenched_O12: coincident eigenvalues");
    cplx prod = -1.0 / ((p.n + p.L) * d2);
    for (size_t j = 2; j < lams.size(); ++j) {
        const cplx num =
            (1.0 + lams[0] * std::conj(lams[1])) * (1.0 + std::norm(lams[j]));
        const cplx den = (p.n + p.L) * (lams[0] - lams[j]) *
                         std::conj(lams[1] - lams[j]);
        prod *= 1.0 + num / den;
    }
    return prod;
}

} // namespace ovk
