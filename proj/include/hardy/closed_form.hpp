/*
 * closed_form.hpp — the explicit value of the L¹(T) best approximation of
 * conj(C_{φ,z,λ}) by H¹₀, the approximant attaining it, and the unimodular
 * certificate of optimality.
 *
 * With d = 1 - |z|² and the threshold 2/d the value is
 *
 *     e(z,λ) = 1/d + |λ|² d/4      for |λ| <= 2/d,
 *     e(z,λ) = |λ|                 for |λ| >= 2/d,
 *
 * independent of the inner weight φ, and the two expressions agree at the
 * threshold.  Writing β = λ d/2 below the threshold and β = e^{i arg λ}
 * above it, the unique best approximant is
 *
 *     h(t) = conj(β)² φ(t) ∂C/∂conj(z) + conj(λ) t conj(z) C(t,z),
 *
 * and in the subcritical regime the residual factors as the perfect square
 *
 *     conj(C_{φ,z,λ}) + h = conj(t φ(t)) (conj(C) + conj(β) t φ(t) C)²,
 *
 * which exposes the certificate I = (φ b_z + β)/(1 + conj(β) φ b_z): an
 * inner function with I·(k+h) = |k+h| >= 0 on all of T.  For |β| = 1 the
 * Möbius map degenerates to the constant β = e^{i arg λ}; that constant is
 * still a valid certificate because rotating the supercritical residual by
 * e^{i arg λ} makes it pointwise real and nonnegative.
 */

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hardy/circle.hpp"
#include "hardy/inner.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

enum class Branch { Subcritical, Critical, Supercritical };

inline const char* to_string(Branch b) {
    switch (b) {
        case Branch::Subcritical: return "subcritical";
        case Branch::Critical: return "critical";
        case Branch::Supercritical: return "supercritical";
    }
    return "?";
}

// Value, coefficient and regime for one (z, λ) query.  The value dominates
// both lower envelopes 1/(1-|z|²) and |λ|, and |beta| <= 1 always.
struct ClosedFormResult {
    double value = 0.0;
    Complex beta{0.0, 0.0};
    Branch branch = Branch::Subcritical;
};

// |λ| at which the two value branches meet: 2/(1 - |z|²).
inline double critical_threshold(DiskPoint z) {
    return 2.0 / (1.0 - std::norm(z.value));
}

// The best-approximation value e(z,λ) and its coefficient β.  Depends on φ
// not at all and on z, λ only through |z|, |λ| (and arg λ in β).  A query
// within 1e-12 of the threshold is tagged Critical and routed to the
// supercritical β = e^{i arg λ}, where both value branches coincide; arg 0
// is taken as 0 so that λ = 0 yields β = 0.
inline ClosedFormResult closed_form(DiskPoint z, Complex lambda) {
    const double d = 1.0 - std::norm(z.value);
    const double thr = 2.0 / d;
    const double al = std::abs(lambda);

    ClosedFormResult r;
    if (std::abs(al - thr) <= 1e-12)
        r.branch = Branch::Critical;
    else
        r.branch = al > thr ? Branch::Supercritical : Branch::Subcritical;

    r.value = al < thr ? 1.0 / d + al * al * d / 4.0 : al;
    if (al == 0.0)
        r.beta = Complex(0.0, 0.0);
    else if (al < thr - 1e-12)
        r.beta = lambda * (d / 2.0);
    else
        r.beta = lambda / al;
    return r;
}

// Samples of the best approximant h on the grid.  h is analytic across the
// closed disk and vanishes at the origin, so its grid mean is zero up to
// aliasing.
inline BoundarySamples best_approximant(const WeightQuery& q, const CircleGrid& grid) {
    const Complex gamma = std::conj(closed_form(q.z, q.lambda).beta);
    const Complex gamma2 = gamma * gamma;
    const Complex lam_conj = std::conj(q.lambda);
    const Complex z_conj = std::conj(q.z.value);

    BoundarySamples h;
    h.grid = grid;
    h.values.reserve(grid.size());
    for (const CirclePoint& t : grid.points) {
        const Complex phi_t = eval_inner(q.phi, t.value);
        h.values.push_back(gamma2 * phi_t * cauchy_szego_dzbar(t, q.z) +
                           lam_conj * t.value * z_conj * cauchy_szego(t, q.z));
    }
    return h;
}

// Unimodular certificate samples plus a degeneracy flag.
struct CertificateSamples {
    BoundarySamples samples;
    bool degenerate = false;    // |β| = 1: Möbius map collapsed to a constant
};

// The inner function I certifying optimality of the best approximant.
// Subcritically I(t) = (φ(t) b_z(t) + β)/(1 + conj(β) φ(t) b_z(t)); at
// |β| = 1 (critical and supercritical queries) the map degenerates and the
// constant e^{i arg λ} is returned with the flag set.
inline CertificateSamples unimodular_certificate(const WeightQuery& q, const CircleGrid& grid) {
    const Complex beta = closed_form(q.z, q.lambda).beta;

    CertificateSamples cert;
    cert.samples.grid = grid;
    cert.samples.values.reserve(grid.size());

    if (std::abs(beta) >= 1.0 - 1e-12) {
        cert.degenerate = true;
        cert.samples.values.assign(grid.size(), beta);   // beta = e^{i arg λ} here
        return cert;
    }

    const InnerFunctionSpec bz = mobius_disk_automorphism(q.z);
    const Complex beta_conj = std::conj(beta);
    for (const CirclePoint& t : grid.points) {
        const Complex u = eval_inner(q.phi, t.value) * eval_inner(bz, t.value);
        cert.samples.values.push_back((u + beta) / (1.0 + beta_conj * u));
    }
    return cert;
}

// Samples of conj(C_{φ,z,λ}) + h, recomputed from the raw kernel and the
// approximant rather than from the factored square, so the factorization
// stays available as an independent check.
inline BoundarySamples extremal_residual(const WeightQuery& q, const CircleGrid& grid) {
    const BoundarySamples kernel = sample_weighted_kernel(q, grid);
    BoundarySamples res = best_approximant(q, grid);
    for (std::size_t j = 0; j < res.values.size(); ++j)
        res.values[j] += std::conj(kernel.values[j]);
    return res;
}

} // namespace hardy
