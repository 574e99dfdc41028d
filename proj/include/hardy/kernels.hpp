/*
 * kernels.hpp — the Cauchy–Szegő kernel, its z̄-derivative, and the weighted
 * combination the whole library is about.
 *
 *     C(t,z)           = 1/(1 - t conj(z))
 *     ∂C/∂conj(z)      = t/(1 - t conj(z))²
 *     C_{φ,z,λ}(t)     = φ(t) · ∂C/∂conj(z) + λ · C(t,z)
 *
 * C reproduces H¹ through f(z) = ∫_T f(t) conj(C(t,z)) dm(t); pairing a
 * boundary function against conj(C_{φ,z,λ}) therefore returns
 * (f/φ)'(z) + conj(λ) f(z) whenever f/φ is holomorphic.  The derivative is
 * hard-coded in closed form; finite differences appear only as a test oracle.
 */

#pragma once

#include <complex>
#include <stdexcept>

#include "hardy/circle.hpp"
#include "hardy/inner.hpp"

namespace hardy {

// A (z, λ, φ) query point for the weighted kernel.
struct WeightQuery {
    DiskPoint z;
    Complex lambda{0.0, 0.0};
    InnerFunctionSpec phi;
};

inline Complex cauchy_szego(CirclePoint t, DiskPoint z) {
    return 1.0 / (1.0 - t.value * std::conj(z.value));
}

// Closed form of ∂C/∂conj(z); the denominator is bounded away from zero by
// the DiskPoint cap.
inline Complex cauchy_szego_dzbar(CirclePoint t, DiskPoint z) {
    const Complex d = 1.0 - t.value * std::conj(z.value);
    return t.value / (d * d);
}

// Samples C_{φ,z,λ} on the grid.
inline BoundarySamples sample_weighted_kernel(const WeightQuery& q, const CircleGrid& grid) {
    BoundarySamples s;
    s.grid = grid;
    s.values.reserve(grid.size());
    for (const CirclePoint& t : grid.points)
        s.values.push_back(eval_inner(q.phi, t.value) * cauchy_szego_dzbar(t, q.z) +
                           q.lambda * cauchy_szego(t, q.z));
    return s;
}

// ∫_T f(t) conj(C_{φ,z,λ}(t)) dm(t).  For f the boundary values of an H¹
// function with f/φ holomorphic this equals (f/φ)'(z) + conj(λ) f(z); the
// caller owns that analyticity contract.
inline Complex cauchy_pairing(const BoundarySamples& f, const WeightQuery& q) {
    require_consistent(f);
    detail::ComplexCompensatedSum acc;
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const CirclePoint& t = f.grid.points[j];
        const Complex kernel = eval_inner(q.phi, t.value) * cauchy_szego_dzbar(t, q.z) +
                               q.lambda * cauchy_szego(t, q.z);
        acc.add(f.values[j] * std::conj(kernel));
    }
    return acc.value() / static_cast<double>(f.values.size());
}

// ∫_T f(t) conj(C(t,z)) dm(t); reproduces f(z) for polynomial f.
inline Complex reproducing_check(const BoundarySamples& f, DiskPoint z) {
    require_consistent(f);
    detail::ComplexCompensatedSum acc;
    for (std::size_t j = 0; j < f.values.size(); ++j)
        acc.add(f.values[j] * std::conj(cauchy_szego(f.grid.points[j], z)));
    return acc.value() / static_cast<double>(f.values.size());
}

} // namespace hardy
