/*
 * schwarz_pick.hpp — the sharp derivative bound that falls out of the
 * closed-form approximation value.
 *
 * For holomorphic f with sup_D |f| <= 1, an inner φ with f/φ holomorphic,
 * z in the disk and real λ >= 0,
 *
 *     |(f/φ)'(z)| + λ |f(z)|  <=  e(z, λ),
 *
 * with e(z, λ) the closed-form best-approximation value.  Substituting
 * λ = 2|f(z)|/(1 - |z|²) turns this into the Schwarz–Pick-type inequality
 *
 *     |(f/φ)'(z)|  <=  (1 - |f(z)|²)/(1 - |z|²),
 *
 * the classical inequality when φ ≡ 1.  Equality holds for f = φ·b_z.
 *
 * The left side is evaluated two independent ways: through the kernel
 * pairing on a boundary grid and through central finite differences of the
 * structurally built quotient f/φ; a disagreement is reported as a
 * numerical failure rather than masked.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hardy/circle.hpp"
#include "hardy/closed_form.hpp"
#include "hardy/inner.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

enum class TestFunctionKind { InnerTimesMobius, BlaschkeProduct, ScaledPolynomial };

// A test function f admissible for the bound: holomorphic, sup-norm <= 1,
// and structurally divisible by the inner weight.
//
//   InnerTimesMobius  — f = φ · b_z, built from the (φ, z) of the query;
//                       the equality witness.
//   BlaschkeProduct   — f = scale · (inner spec), |scale| <= 1.
//   ScaledPolynomial  — f(w) = Σ poly[k] w^k with boundary sup <= 1,
//                       admitted by dense sampling.
struct TestFunctionSpec {
    TestFunctionKind kind = TestFunctionKind::InnerTimesMobius;
    Complex scale{1.0, 0.0};
    InnerFunctionSpec inner;
    std::vector<Complex> poly;
};

inline TestFunctionSpec inner_times_mobius() {
    return TestFunctionSpec{TestFunctionKind::InnerTimesMobius, Complex(1.0, 0.0), {}, {}};
}

inline TestFunctionSpec blaschke_product(Complex scale, InnerFunctionSpec inner) {
    if (std::abs(scale) > 1.0)
        throw std::domain_error("blaschke_product: |scale| <= 1 required");
    return TestFunctionSpec{TestFunctionKind::BlaschkeProduct, scale, std::move(inner), {}};
}

inline TestFunctionSpec scaled_polynomial(std::vector<Complex> coeffs) {
    return TestFunctionSpec{TestFunctionKind::ScaledPolynomial, Complex(1.0, 0.0), {},
                            std::move(coeffs)};
}

inline Complex eval_test_function(const TestFunctionSpec& f, const InnerFunctionSpec& phi,
                                  DiskPoint z, Complex w) {
    switch (f.kind) {
        case TestFunctionKind::InnerTimesMobius:
            return eval_inner(phi, w) * eval_inner(mobius_disk_automorphism(z), w);
        case TestFunctionKind::BlaschkeProduct:
            return f.scale * eval_inner(f.inner, w);
        case TestFunctionKind::ScaledPolynomial: {
            Complex acc(0.0, 0.0);
            for (std::size_t i = f.poly.size(); i-- > 0;)
                acc = acc * w + f.poly[i];
            return acc;
        }
    }
    throw std::logic_error("eval_test_function: unknown kind");
}

namespace detail {

// Greedily matches phi's zero multiset inside f's; returns the unmatched
// remainder of f's zeros, or throws when some zero of phi has no partner.
inline std::vector<Complex> remove_zero_multiset(const std::vector<Complex>& f_zeros,
                                                 const std::vector<Complex>& phi_zeros) {
    std::vector<Complex> rest = f_zeros;
    for (Complex a : phi_zeros) {
        bool found = false;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (std::abs(rest[i] - a) <= 1e-12) {
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument(
                "test function: inner weight does not structurally divide f (unmatched zero)");
    }
    return rest;
}

} // namespace detail

// Structural divisibility of f by φ.  Blaschke-product f must contain φ's
// monomial power and zero multiset; polynomial f is supported for
// monomial-type φ only (its low-order coefficients must vanish), because a
// coefficient list carries no usable zero multiset.
inline void require_divides(const InnerFunctionSpec& phi, const TestFunctionSpec& f) {
    switch (f.kind) {
        case TestFunctionKind::InnerTimesMobius:
            return;   // contains φ by construction
        case TestFunctionKind::BlaschkeProduct:
            if (f.inner.power < phi.power)
                throw std::invalid_argument(
                    "test function: inner weight does not structurally divide f (monomial power)");
            detail::remove_zero_multiset(f.inner.zeros, phi.zeros);
            return;
        case TestFunctionKind::ScaledPolynomial:
            if (!phi.zeros.empty())
                throw std::invalid_argument(
                    "test function: polynomial f with a Blaschke-zero weight is not structurally "
                    "verifiable; use a Blaschke-product f");
            for (std::size_t i = 0; i < phi.power && i < f.poly.size(); ++i)
                if (std::abs(f.poly[i]) > 1e-15)
                    throw std::invalid_argument(
                        "test function: inner weight does not structurally divide f (low-order "
                        "coefficient)");
            return;
    }
}

// The quotient f/φ, evaluated from the structural description.
inline Complex eval_quotient(const TestFunctionSpec& f, const InnerFunctionSpec& phi, DiskPoint z,
                             Complex w) {
    switch (f.kind) {
        case TestFunctionKind::InnerTimesMobius:
            return eval_inner(mobius_disk_automorphism(z), w);
        case TestFunctionKind::BlaschkeProduct: {
            if (f.inner.power < phi.power)
                throw std::invalid_argument(
                    "test function: inner weight does not structurally divide f (monomial power)");
            InnerFunctionSpec rest(f.inner.phase - phi.phase, f.inner.power - phi.power,
                                   detail::remove_zero_multiset(f.inner.zeros, phi.zeros));
            return f.scale * eval_inner(rest, w);
        }
        case TestFunctionKind::ScaledPolynomial: {
            Complex acc(0.0, 0.0);
            for (std::size_t i = f.poly.size(); i-- > phi.power;)
                acc = acc * w + f.poly[i];
            return acc * std::polar(1.0, -phi.phase);
        }
    }
    throw std::logic_error("eval_quotient: unknown kind");
}

// Dense-sampling admission: sup |f| on the boundary grid must stay within
// 1e-9 of the unit ball.  Polynomials get the finer grid.
inline void require_admissible(const TestFunctionSpec& f, const InnerFunctionSpec& phi,
                               DiskPoint z) {
    const std::size_t m = f.kind == TestFunctionKind::ScaledPolynomial ? 8192 : 4096;
    const CircleGrid grid = make_grid(m);
    double sup = 0.0;
    for (const CirclePoint& t : grid.points)
        sup = std::max(sup, std::abs(eval_test_function(f, phi, z, t.value)));
    if (sup > 1.0 + 1e-9)
        throw std::invalid_argument("test function: boundary sup-norm exceeds the unit ball");
}

namespace detail {

struct LhsParts {
    Complex quotient_derivative;   // (f/φ)'(z)
    Complex value_at_z;            // f(z)
};

// Evaluates (f/φ)'(z) via the kernel pairing and f(z) via the reproducing
// pairing, each cross-checked against a direct route.
inline LhsParts lhs_parts(const TestFunctionSpec& f, const InnerFunctionSpec& phi, DiskPoint z) {
    require_divides(phi, f);
    require_admissible(f, phi, z);

    const CircleGrid grid = make_grid(4096);
    const BoundarySamples fs =
        sample(grid, [&](Complex t) { return eval_test_function(f, phi, z, t); });

    LhsParts parts;
    parts.quotient_derivative = cauchy_pairing(fs, WeightQuery{z, Complex(0.0, 0.0), phi});
    parts.value_at_z = reproducing_check(fs, z);

    const double step = 1e-5;
    const Complex fd = (eval_quotient(f, phi, z, z.value + step) -
                        eval_quotient(f, phi, z, z.value - step)) /
                       (2.0 * step);
    if (std::abs(fd - parts.quotient_derivative) >
        1e-7 * std::max(1.0, std::abs(parts.quotient_derivative)))
        throw std::runtime_error(
            "derivative bound: pairing and finite-difference routes disagree");

    const Complex direct = eval_test_function(f, phi, z, z.value);
    if (std::abs(direct - parts.value_at_z) > 1e-9 * std::max(1.0, std::abs(direct)))
        throw std::runtime_error("derivative bound: reproducing pairing disagrees with f(z)");

    return parts;
}

} // namespace detail

// |(f/φ)'(z)| + λ |f(z)| for real λ >= 0.
inline double derivative_bound_lhs(const TestFunctionSpec& f, const InnerFunctionSpec& phi,
                                   DiskPoint z, double lambda) {
    if (!(lambda >= 0.0))
        throw std::domain_error("derivative_bound_lhs: lambda must be real nonnegative");
    const auto parts = detail::lhs_parts(f, phi, z);
    return std::abs(parts.quotient_derivative) + lambda * std::abs(parts.value_at_z);
}

// The sharp bound: the closed-form value e(z, λ).
inline double derivative_bound_rhs(DiskPoint z, double lambda) {
    if (!(lambda >= 0.0))
        throw std::domain_error("derivative_bound_rhs: lambda must be real nonnegative");
    return closed_form(z, Complex(lambda, 0.0)).value;
}

struct SchwarzPickReport {
    double lhs = 0.0;      // |(f/φ)'(z)|
    double rhs = 0.0;      // (1 - |f(z)|²)/(1 - |z|²)
    bool holds = false;
    double slack = 0.0;    // rhs - lhs
};

// Checks the Schwarz–Pick form.  The right side is derived twice — directly
// and through the weighted bound at λ = 2|f(z)|/(1-|z|²) — and the two
// routes must agree within 1e-9.
inline SchwarzPickReport schwarz_pick_check(const TestFunctionSpec& f,
                                            const InnerFunctionSpec& phi, DiskPoint z) {
    const auto parts = detail::lhs_parts(f, phi, z);
    const double fz = std::abs(parts.value_at_z);
    const double d = 1.0 - std::norm(z.value);

    SchwarzPickReport rep;
    rep.lhs = std::abs(parts.quotient_derivative);
    rep.rhs = (1.0 - fz * fz) / d;

    const double lambda_star = 2.0 * fz / d;
    const double rhs_via_bound = derivative_bound_rhs(z, lambda_star) - lambda_star * fz;
    if (std::abs(rhs_via_bound - rep.rhs) > 1e-9 * std::max(1.0, rep.rhs))
        throw std::runtime_error("schwarz_pick_check: the two right-hand-side routes disagree");

    rep.holds = rep.lhs <= rep.rhs + 1e-9;
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

// ── randomized admissible cases ───────────────────────────────────────────

struct AdmissibleCase {
    TestFunctionSpec f;
    InnerFunctionSpec phi;
    DiskPoint z;
    double lambda = 0.0;
};

namespace detail {

// Platform-independent uniforms: std::uniform_real_distribution is
// implementation-defined, so reproducible draws come straight from the
// engine's bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Complex uniform_disk(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double a = 2.0 * kPi * uniform01(rng);
    return std::polar(r, a);
}

} // namespace detail

// Draws a random (f, φ, z, λ) with f a Blaschke product containing φ's
// zeros and power, |z| <= 0.8 and λ in [0, 3·threshold].
inline AdmissibleCase draw_admissible_case(std::mt19937_64& rng) {
    const unsigned phi_power = static_cast<unsigned>(rng() % 3);
    const std::size_t phi_nzeros = rng() % 4;
    std::vector<Complex> phi_zeros;
    for (std::size_t i = 0; i < phi_nzeros; ++i)
        phi_zeros.push_back(detail::uniform_disk(rng, 0.7));
    InnerFunctionSpec phi(2.0 * kPi * detail::uniform01(rng), phi_power, phi_zeros);

    std::vector<Complex> f_zeros = phi_zeros;
    const std::size_t extra = rng() % 4;
    for (std::size_t i = 0; i < extra; ++i)
        f_zeros.push_back(detail::uniform_disk(rng, 0.7));
    InnerFunctionSpec f_inner(phi.phase + 2.0 * kPi * detail::uniform01(rng),
                              phi_power + static_cast<unsigned>(rng() % 3), f_zeros);
    const Complex scale =
        std::polar(0.3 + 0.7 * detail::uniform01(rng), 2.0 * kPi * detail::uniform01(rng));

    AdmissibleCase c;
    c.f = blaschke_product(scale, f_inner);
    c.phi = phi;
    c.z = DiskPoint(detail::uniform_disk(rng, 0.8));
    c.lambda = 3.0 * critical_threshold(c.z) * detail::uniform01(rng);
    return c;
}

} // namespace hardy
