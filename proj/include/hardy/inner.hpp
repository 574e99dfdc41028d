/*
 * inner.hpp — finite inner functions on the unit disk.
 *
 * An inner function here is the finite product
 *
 *     φ(w) = e^{iθ} · w^n · Π_k (w - a_k)/(1 - conj(a_k) w),   |a_k| < 1,
 *
 * i.e. a unimodular constant, a monomial and a finite Blaschke product.
 * Such φ is holomorphic on a neighbourhood of the closed disk, |φ| ≤ 1
 * inside and |φ(t)| = 1 for every |t| = 1, which is what the sampling-based
 * checks downstream rely on.  Singular inner factors are out of scope: they
 * are unimodular only almost everywhere and misbehave pointwise.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/circle.hpp"

namespace hardy {

// Symbolic description of a finite inner function.
struct InnerFunctionSpec {
    double phase = 0.0;           // θ, radians
    unsigned power = 0;           // monomial exponent n
    std::vector<Complex> zeros;   // Blaschke zeros, |a_k| <= 1 - 1e-9, at most 32

    InnerFunctionSpec() = default;

    InnerFunctionSpec(double phase_, unsigned power_, std::vector<Complex> zeros_)
        : phase(phase_), power(power_), zeros(std::move(zeros_)) {
        if (zeros.size() > 32)
            throw std::domain_error("InnerFunctionSpec: at most 32 Blaschke zeros supported");
        for (Complex a : zeros)
            if (std::abs(a) > 1.0 - 1e-9)
                throw std::domain_error("InnerFunctionSpec: Blaschke zero too close to T (|a|=" +
                                        std::to_string(std::abs(a)) + ", cap 1-1e-9)");
    }
};

// Product of two inner functions: phases add, powers add, zeros concatenate.
inline InnerFunctionSpec concat(const InnerFunctionSpec& a, const InnerFunctionSpec& b) {
    std::vector<Complex> zeros = a.zeros;
    zeros.insert(zeros.end(), b.zeros.begin(), b.zeros.end());
    return InnerFunctionSpec(a.phase + b.phase, a.power + b.power, std::move(zeros));
}

// Evaluates φ(w) on the closed disk.  Factor-by-factor product; zero counts
// are small, so rounding stays below 1e-13 relative.
inline Complex eval_inner(const InnerFunctionSpec& spec, Complex w) {
    if (std::abs(w) > 1.0 + 1e-12)
        throw std::domain_error("eval_inner: |w| <= 1 required (got |w|=" +
                                std::to_string(std::abs(w)) + ")");
    Complex out = std::polar(1.0, spec.phase);
    for (unsigned k = 0; k < spec.power; ++k)
        out *= w;
    for (Complex a : spec.zeros)
        out *= (w - a) / (1.0 - std::conj(a) * w);
    return out;
}

// Boundary samples of φ; every value is unimodular within 1e-12.
inline BoundarySamples sample_inner(const InnerFunctionSpec& spec, const CircleGrid& grid) {
    return sample(grid, [&](Complex t) { return eval_inner(spec, t); });
}

// The disk automorphism b_z(w) = (w - z)/(1 - conj(z) w) as an inner-function
// spec: the single-zero Blaschke factor vanishing at z.
inline InnerFunctionSpec mobius_disk_automorphism(DiskPoint z) {
    return InnerFunctionSpec(0.0, 0, {z.value});
}

} // namespace hardy
