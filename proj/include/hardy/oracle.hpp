/*
 * oracle.hpp — ground truth for the best-approximation values that does not
 * lean on any closed form.
 *
 * The distance from k to H¹₀ is approximated by minimising the discrete L¹
 * objective
 *
 *     F(c) = (1/M) Σ_j | k_j + Σ_{n=1..N} c_n t_j^n |
 *
 * over complex coefficients c with iteratively reweighted least squares:
 * each sweep solves the weighted normal equations with weights
 * w_j = 1/max(|r_j|, δ) and re-evaluates the residual.  One sweep is a
 * majorize–minimise step for the δ-floored (Huber) objective, so the
 * recorded objective history is non-increasing.
 *
 * Because the basis {t^n} is orthonormal in the unweighted discrete inner
 * product, the weighted Gram matrix is Hermitian Toeplitz with entries
 * G_{mn} = Σ_j w_j t_j^{n-m}; it is assembled from N moments in O(MN) and
 * factored by a dense Cholesky with Jacobi scaling.  Everything is
 * sequential and deterministic: identical inputs give identical reports.
 *
 * The module also carries the two optimality probes used against the solver:
 * the weak-duality bound |∫ f k dm| <= dist(k, H¹₀) for ‖f‖_∞ <= 1
 * holomorphic f, and the factorization certificate k + h = conj(I) p with
 * I unimodular and p >= 0.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "hardy/circle.hpp"

namespace hardy {

// Coefficients (c_1, ..., c_N) of a truncated H¹₀ candidate Σ c_n t^n.
// There is no constant term by construction.
struct TrigCoefficients {
    std::vector<Complex> coeffs;

    std::size_t degree() const { return coeffs.size(); }
};

struct SolveOptions {
    std::size_t max_iter = 500;
    double tol = 1e-12;             // relative objective change
    double smoothing_delta = 1e-9;  // weight floor
};

struct SolveReport {
    TrigCoefficients coefficients;
    double objective = 0.0;         // unsmoothed, of the returned coefficients
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> objective_history;   // δ-floored objective per sweep
};

// Weighted normal equations could not be factored.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluates Σ c_n t^n on the grid (Horner).
inline BoundarySamples synthesize(const TrigCoefficients& c, const CircleGrid& grid) {
    BoundarySamples out;
    out.grid = grid;
    out.values.reserve(grid.size());
    const std::size_t n = c.coeffs.size();
    for (const CirclePoint& tp : grid.points) {
        const Complex t = tp.value;
        Complex acc(0.0, 0.0);
        for (std::size_t i = n; i-- > 0;)
            acc = acc * t + c.coeffs[i];
        out.values.push_back(acc * t);
    }
    return out;
}

namespace detail {

inline double huber(double x, double delta) {
    return x >= delta ? x : (x * x + delta * delta) / (2.0 * delta);
}

// In-place lower Cholesky of a Hermitian positive-definite matrix given in
// row-major order.  Throws SolverError on a non-positive pivot.
inline void cholesky(std::vector<Complex>& a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Complex s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k)
                s -= a[i * n + k] * std::conj(a[j * n + k]);
            a[i * n + j] = s / a[j * n + j].real();
        }
        double diag = a[i * n + i].real();
        for (std::size_t k = 0; k < i; ++k)
            diag -= std::norm(a[i * n + k]);
        if (!(diag > 0.0) || !std::isfinite(diag))
            throw SolverError("weighted normal equations are ill-conditioned");
        a[i * n + i] = std::sqrt(diag);
    }
}

// Solves the Hermitian PD system G c = b through Jacobi scaling + Cholesky.
inline std::vector<Complex> solve_hermitian(std::vector<Complex> g, std::vector<Complex> b,
                                            std::size_t n) {
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = g[i * n + i].real();
        if (!(d > 0.0) || !std::isfinite(d))
            throw SolverError("weighted normal equations are ill-conditioned");
        scale[i] = 1.0 / std::sqrt(d);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i * n + j] *= scale[i] * scale[j];
    for (std::size_t i = 0; i < n; ++i)
        b[i] *= scale[i];

    cholesky(g, n);

    // L y = b
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[i];
        for (std::size_t k = 0; k < i; ++k)
            s -= g[i * n + k] * b[k];
        b[i] = s / g[i * n + i].real();
    }
    // L^H x = y
    for (std::size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (std::size_t k = i + 1; k < n; ++k)
            s -= std::conj(g[k * n + i]) * b[k];
        b[i] = s / g[i * n + i].real();
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] *= scale[i];
    return b;
}

} // namespace detail

// Minimises (1/M) Σ_j |k_j + Σ_n c_n t_j^n| over c ∈ C^N by IRLS.  Returns
// the best iterate seen (by unsmoothed objective) whether or not the
// relative-change stopping rule fired.
inline SolveReport solve_l1(const BoundarySamples& k, std::size_t n_coeffs,
                            const SolveOptions& opts = {}) {
    require_consistent(k);
    const std::size_t m = k.size();
    if (n_coeffs == 0 || n_coeffs >= m / 4)
        throw std::domain_error("solve_l1: need 1 <= N < grid.size/4");
    for (Complex v : k.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("solve_l1: non-finite sample in k");

    const std::size_t n = n_coeffs;
    const double delta = opts.smoothing_delta;
    const double inv_m = 1.0 / static_cast<double>(m);

    // flat real/imaginary arrays keep the per-sweep loops free of the
    // checked complex-multiply runtime calls
    std::vector<double> tr(m), ti(m), kr(m), ki(m), rr(m), ri(m), weights(m);
    for (std::size_t j = 0; j < m; ++j) {
        tr[j] = k.grid.points[j].value.real();
        ti[j] = k.grid.points[j].value.imag();
        kr[j] = k.values[j].real();
        ki[j] = k.values[j].imag();
        rr[j] = kr[j];
        ri[j] = ki[j];
    }

    std::vector<Complex> moments(n), rhs(n), gram(n * n);
    std::vector<double> mr(n), mi(n), br(n), bi(n), cr(n), ci(n);

    const auto objectives = [&] {
        detail::CompensatedSum plain, floored;
        for (std::size_t j = 0; j < m; ++j) {
            const double a = std::sqrt(rr[j] * rr[j] + ri[j] * ri[j]);
            plain.add(a);
            floored.add(detail::huber(a, delta));
        }
        return std::pair<double, double>{plain.value() * inv_m, floored.value() * inv_m};
    };

    SolveReport report;
    auto [obj_plain, obj_floored] = objectives();
    report.objective_history.push_back(obj_floored);

    std::vector<Complex> best(n, Complex(0.0, 0.0));
    double best_obj = obj_plain;
    double prev_floored = obj_floored;

    for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
        report.iterations = iter;

        for (std::size_t j = 0; j < m; ++j)
            weights[j] = 1.0 / std::max(std::sqrt(rr[j] * rr[j] + ri[j] * ri[j]), delta);

        // moments mu_d = Σ_j w_j t_j^d and rhs b_i = -Σ_j w_j conj(t_j^{i+1}) k_j
        // (two samples per pass: the power recurrences are latency chains)
        std::fill(mr.begin(), mr.end(), 0.0);
        std::fill(mi.begin(), mi.end(), 0.0);
        std::fill(br.begin(), br.end(), 0.0);
        std::fill(bi.begin(), bi.end(), 0.0);
        for (std::size_t j = 0; j + 1 < m; j += 2) {
            const double ar0 = tr[j], ai0 = ti[j], w0 = weights[j];
            const double ar1 = tr[j + 1], ai1 = ti[j + 1], w1 = weights[j + 1];
            double pr0 = w0, pi0 = 0.0, pr1 = w1, pi1 = 0.0;
            double qr0 = w0 * kr[j], qi0 = w0 * ki[j];
            double qr1 = w1 * kr[j + 1], qi1 = w1 * ki[j + 1];
            mr[0] += pr0 + pr1;
            mi[0] += pi0 + pi1;
            for (std::size_t d = 0; d < n; ++d) {
                double tmp0 = qr0 * ar0 + qi0 * ai0;
                qi0 = qi0 * ar0 - qr0 * ai0;
                qr0 = tmp0;
                double tmp1 = qr1 * ar1 + qi1 * ai1;
                qi1 = qi1 * ar1 - qr1 * ai1;
                qr1 = tmp1;
                br[d] -= qr0 + qr1;
                bi[d] -= qi0 + qi1;
                if (d + 1 == n)
                    break;
                tmp0 = pr0 * ar0 - pi0 * ai0;
                pi0 = pr0 * ai0 + pi0 * ar0;
                pr0 = tmp0;
                tmp1 = pr1 * ar1 - pi1 * ai1;
                pi1 = pr1 * ai1 + pi1 * ar1;
                pr1 = tmp1;
                mr[d + 1] += pr0 + pr1;
                mi[d + 1] += pi0 + pi1;
            }
        }
        for (std::size_t d = 0; d < n; ++d) {
            moments[d] = Complex(mr[d], mi[d]);
            rhs[d] = Complex(br[d], bi[d]);
        }

        // Hermitian Toeplitz Gram from the moments
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gram[i * n + j] = j >= i ? moments[j - i] : std::conj(moments[i - j]);

        std::vector<Complex> c = detail::solve_hermitian(gram, rhs, n);
        for (std::size_t i = 0; i < n; ++i) {
            cr[i] = c[i].real();
            ci[i] = c[i].imag();
        }

        // residual r = k + t · Horner(c, t)
        for (std::size_t j = 0; j + 1 < m; j += 2) {
            const double ar0 = tr[j], ai0 = ti[j];
            const double ar1 = tr[j + 1], ai1 = ti[j + 1];
            double hr0 = 0.0, hi0 = 0.0, hr1 = 0.0, hi1 = 0.0;
            for (std::size_t i = n; i-- > 0;) {
                const double tmp0 = hr0 * ar0 - hi0 * ai0 + cr[i];
                hi0 = hr0 * ai0 + hi0 * ar0 + ci[i];
                hr0 = tmp0;
                const double tmp1 = hr1 * ar1 - hi1 * ai1 + cr[i];
                hi1 = hr1 * ai1 + hi1 * ar1 + ci[i];
                hr1 = tmp1;
            }
            rr[j] = kr[j] + hr0 * ar0 - hi0 * ai0;
            ri[j] = ki[j] + hr0 * ai0 + hi0 * ar0;
            rr[j + 1] = kr[j + 1] + hr1 * ar1 - hi1 * ai1;
            ri[j + 1] = ki[j + 1] + hr1 * ai1 + hi1 * ar1;
        }

        std::tie(obj_plain, obj_floored) = objectives();
        report.objective_history.push_back(obj_floored);
        if (obj_plain < best_obj) {
            best_obj = obj_plain;
            best = std::move(c);
        }

        const double change = std::abs(prev_floored - obj_floored);
        prev_floored = obj_floored;
        if (change <= opts.tol * std::max(obj_floored, 1e-300)) {
            report.converged = true;
            break;
        }
    }

    report.coefficients.coeffs = std::move(best);
    report.objective = best_obj;
    return report;
}

// |∫ f k dm|: a lower bound for dist_{L¹}(k, H¹₀) whenever f is holomorphic
// with sup-modulus <= 1 (caller contract; a violation only prints a warning).
inline double duality_lower_bound(const BoundarySamples& k, const BoundarySamples& f) {
    require_consistent(k);
    require_consistent(f);
    require_same_grid(k, f);

    double sup = 0.0;
    for (Complex v : f.values)
        sup = std::max(sup, std::abs(v));
    if (sup > 1.0 + 1e-9)
        std::cerr << "duality_lower_bound: witness exceeds the unit ball (sup |f| = " << sup
                  << ")\n";

    detail::ComplexCompensatedSum acc;
    for (std::size_t j = 0; j < k.values.size(); ++j)
        acc.add(f.values[j] * k.values[j]);
    return std::abs(acc.value() / static_cast<double>(k.values.size()));
}

struct CertificateReport {
    bool certified = false;
    double min_real = 0.0;
    double max_abs_imag = 0.0;
    BoundarySamples p;
};

// Checks the factorization k + h = conj(I) p with p >= 0: computes
// p_j = I_j (k_j + h_j) and certifies when p is real and nonnegative
// within tol.  I must be unimodular within 1e-9.
inline CertificateReport check_certificate(const BoundarySamples& k, const BoundarySamples& h,
                                           const BoundarySamples& unimodular, double tol) {
    require_consistent(k);
    require_consistent(h);
    require_consistent(unimodular);
    require_same_grid(k, h);
    require_same_grid(k, unimodular);

    for (Complex v : unimodular.values)
        if (std::abs(std::abs(v) - 1.0) > 1e-9)
            throw std::invalid_argument("check_certificate: certificate is not unimodular");

    CertificateReport rep;
    rep.p.grid = k.grid;
    rep.p.values.reserve(k.values.size());
    rep.min_real = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k.values.size(); ++j) {
        const Complex p = unimodular.values[j] * (k.values[j] + h.values[j]);
        rep.p.values.push_back(p);
        rep.min_real = std::min(rep.min_real, p.real());
        rep.max_abs_imag = std::max(rep.max_abs_imag, std::abs(p.imag()));
    }
    rep.certified = rep.min_real >= -tol && rep.max_abs_imag <= tol;
    return rep;
}

// Discrete Fourier coefficients ĉ_k = ∫ f(t) t^{-k} dm(t), k in [kmin, kmax].
// Powers of grid points are taken by index arithmetic in the root-of-unity
// group, so the only error is from summation.
inline std::vector<Complex> fourier_coefficients(const BoundarySamples& f, int kmin, int kmax) {
    require_consistent(f);
    const std::size_t m = f.size();
    if (kmin > kmax)
        throw std::domain_error("fourier_coefficients: kmin must not exceed kmax");
    if (static_cast<std::size_t>(kmax - kmin) >= m)
        throw std::domain_error("fourier_coefficients: kmax - kmin must be below grid.size");

    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(kmax - kmin) + 1);
    const auto mm = static_cast<long long>(m);
    for (int k = kmin; k <= kmax; ++k) {
        detail::ComplexCompensatedSum acc;
        for (std::size_t j = 0; j < m; ++j) {
            // t_j^{-k} = points[(-j k) mod M]
            const long long idx = ((-static_cast<long long>(j) * k) % mm + mm) % mm;
            acc.add(f.values[j] * f.grid.points[static_cast<std::size_t>(idx)].value);
        }
        out.push_back(acc.value() / static_cast<double>(m));
    }
    return out;
}

} // namespace hardy
