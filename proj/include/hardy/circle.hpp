/*
 * circle.hpp — uniform grids on the unit circle and the norms measured on them.
 *
 * Everything downstream integrates against the normalised Lebesgue measure dm
 * on T = {|t| = 1}.  We discretise it with the M-point uniform grid
 * t_j = exp(2πi j/M) and the rectangle rule
 *
 *     ∫_T f dm  ≈  (1/M) Σ_j f(t_j),
 *
 * which is exact for trigonometric polynomials of degree < M and converges
 * geometrically for integrands analytic in an annulus around T.  All target
 * integrands here are of that kind as long as the disk parameter stays away
 * from the boundary, hence the |z| ≤ 0.99 cap on DiskPoint.
 *
 * Sums are accumulated with Neumaier compensation so that the advertised
 * 1e-12 .. 1e-14 tolerances are not eaten by plain left-to-right rounding.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// ── compensated summation ─────────────────────────────────────────────────

namespace detail {

// Neumaier variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + carry; }
};

struct ComplexCompensatedSum {
    CompensatedSum re, im;

    void add(Complex x) {
        re.add(x.real());
        im.add(x.imag());
    }

    Complex value() const { return {re.value(), im.value()}; }
};

} // namespace detail

// ── domain points ─────────────────────────────────────────────────────────

// A point on the unit circle; |value| = 1 within 1e-12.
struct CirclePoint {
    Complex value;

    explicit CirclePoint(Complex v) : value(v) {
        if (std::abs(std::abs(v) - 1.0) > 1e-12)
            throw std::domain_error("CirclePoint: |t| must equal 1 (got |t|=" +
                                    std::to_string(std::abs(v)) + ")");
    }
};

// A point in the open unit disk, capped at |z| <= 0.99 so that the uniform
// grid can still resolve the near-boundary kernels.
struct DiskPoint {
    Complex value;

    explicit DiskPoint(Complex v = Complex(0.0, 0.0)) : value(v) {
        if (std::abs(v) > 0.99)
            throw std::domain_error("DiskPoint: |z| <= 0.99 required (got |z|=" +
                                    std::to_string(std::abs(v)) + ")");
    }
};

// ── grid and samples ──────────────────────────────────────────────────────

// Uniform M-point grid on T, M a power of two >= 16.  Immutable once built.
struct CircleGrid {
    std::vector<CirclePoint> points;

    std::size_t size() const { return points.size(); }
};

inline bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

inline CircleGrid make_grid(std::size_t m) {
    if (m < 16 || !is_power_of_two(m))
        throw std::domain_error("make_grid: grid size must be a power of two >= 16 (got " +
                                std::to_string(m) + ")");
    CircleGrid grid;
    grid.points.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        grid.points.emplace_back(std::polar(1.0, 2.0 * kPi * static_cast<double>(j) /
                                                     static_cast<double>(m)));
    return grid;
}

// A function on T known through its values on a grid.
struct BoundarySamples {
    CircleGrid grid;
    std::vector<Complex> values;

    std::size_t size() const { return values.size(); }
};

// Builds samples from a callable t -> Complex.
template <typename F>
BoundarySamples sample(const CircleGrid& grid, F&& f) {
    BoundarySamples s;
    s.grid = grid;
    s.values.reserve(grid.size());
    for (const CirclePoint& t : grid.points)
        s.values.push_back(f(t.value));
    return s;
}

inline void require_consistent(const BoundarySamples& s) {
    if (s.values.size() != s.grid.size())
        throw std::invalid_argument("BoundarySamples: value count does not match grid size");
}

inline void require_same_grid(const BoundarySamples& a, const BoundarySamples& b) {
    if (a.grid.size() != b.grid.size())
        throw std::invalid_argument("BoundarySamples: operands sampled on different grids");
}

// ── integration and norms ─────────────────────────────────────────────────

// (1/M) Σ_j f(t_j): the rectangle-rule value of ∫_T f dm.
inline Complex mean_integral(const BoundarySamples& f) {
    require_consistent(f);
    detail::ComplexCompensatedSum acc;
    for (Complex v : f.values)
        acc.add(v);
    return acc.value() / static_cast<double>(f.values.size());
}

// (1/M) Σ_j |f(t_j)|: discrete L¹(T) norm.
inline double l1_norm(const BoundarySamples& f) {
    require_consistent(f);
    detail::CompensatedSum acc;
    for (Complex v : f.values)
        acc.add(std::abs(v));
    return acc.value() / static_cast<double>(f.values.size());
}

// (1/M) Σ_j |f(t_j)|²: discrete squared L²(T) norm.
inline double l2_norm_sq(const BoundarySamples& f) {
    require_consistent(f);
    detail::CompensatedSum acc;
    for (Complex v : f.values)
        acc.add(std::norm(v));
    return acc.value() / static_cast<double>(f.values.size());
}

// Convergence probe: |l1(f, 2M) - l1(f, M)|.  Smooth integrands at desk
// scale drop below 1e-10 once M >= 2048.
template <typename F>
double l1_refinement_gap(F&& f, std::size_t m) {
    const double coarse = l1_norm(sample(make_grid(m), f));
    const double fine = l1_norm(sample(make_grid(2 * m), f));
    return std::abs(fine - coarse);
}

} // namespace hardy
