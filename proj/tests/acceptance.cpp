// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hardy/circle.hpp"
#include "hardy/closed_form.hpp"
#include "hardy/inner.hpp"
#include "hardy/kernels.hpp"
#include "hardy/oracle.hpp"
#include "hardy/schwarz_pick.hpp"

using hardy::Branch;
using hardy::Complex;
using hardy::DiskPoint;
using hardy::InnerFunctionSpec;
using hardy::WeightQuery;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", num, what);
    if (!ok)
        ++failures;
}

double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

std::uint64_t property_seed() {
    if (const char* env = std::getenv("HARDY_EXTREMAL_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 20240915ull;
}

hardy::BoundarySamples conjugate_kernel(const WeightQuery& q, const hardy::CircleGrid& grid) {
    auto k = hardy::sample_weighted_kernel(q, grid);
    for (Complex& v : k.values)
        v = std::conj(v);
    return k;
}

std::vector<InnerFunctionSpec> phi_matrix() {
    return {InnerFunctionSpec{}, InnerFunctionSpec(0.0, 1, {}), InnerFunctionSpec(0.0, 3, {}),
            InnerFunctionSpec(0.0, 0, {Complex(0.4, 0.0), Complex(0.0, -0.3)})};
}

std::vector<Complex> z_matrix() {
    return {Complex(0, 0), Complex(0.3, 0), Complex(0.5, 0), Complex(0.5, 0.2)};
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. λ = 0 residual norm equals 1/(1-|z|²), under one second.
bool criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = hardy::make_grid(8192);
    bool ok = true;
    for (Complex zv : {Complex(0, 0), Complex(0.3, 0), Complex(0.5, 0), Complex(0, 0.8)}) {
        const DiskPoint z(zv);
        const double expected = 1.0 / (1.0 - std::norm(zv));
        for (const auto& phi :
             {InnerFunctionSpec{}, InnerFunctionSpec(0.0, 1, {}), InnerFunctionSpec(0.0, 3, {})}) {
            const double norm =
                hardy::l1_norm(hardy::extremal_residual({z, Complex(0, 0), phi}, grid));
            ok = ok && std::abs(norm - expected) <= 1e-9 * expected;
        }
    }
    const double dt = elapsed_s(t0);
    if (dt >= 1.0)
        std::printf("      (criterion 1 runtime %.2fs exceeds 1s)\n", dt);
    return ok && dt < 1.0;
}

// 2. Subcritical residual norms match both value routes.
bool criterion2() {
    const auto grid = hardy::make_grid(8192);
    bool ok = true;
    for (Complex zv : z_matrix()) {
        const DiskPoint z(zv);
        const double d = 1.0 - std::norm(zv);
        const double thr = 2.0 / d;
        for (double frac : {0.2, 0.5, 0.9}) {
            for (double phase : {0.0, 2.1}) {
                const Complex lam = std::polar(frac * thr, phase);
                const double branch_value = 1.0 / d + std::norm(lam) * d / 4.0;
                const Complex beta = hardy::closed_form(z, lam).beta;
                const double parseval = (1.0 + std::norm(beta)) / d;
                for (const auto& phi : phi_matrix()) {
                    const double norm =
                        hardy::l1_norm(hardy::extremal_residual({z, lam, phi}, grid));
                    ok = ok && std::abs(norm - branch_value) <= 1e-8 * branch_value;
                    ok = ok && std::abs(norm - parseval) <= 1e-10 * parseval;
                }
            }
        }
    }
    return ok;
}

// 3. Supercritical norms equal |λ| and the rotated residual is nonnegative.
bool criterion3() {
    const auto grid = hardy::make_grid(8192);
    bool ok = true;
    for (Complex zv : z_matrix()) {
        const DiskPoint z(zv);
        const double thr = hardy::critical_threshold(z);
        for (double mult : {1.0, 1.5, 10.0}) {
            const double al = mult * thr;
            const Complex lam(al, 0.0);
            const Complex rot = std::exp(Complex(0.0, -std::arg(lam)));
            for (const auto& phi : phi_matrix()) {
                const auto res = hardy::extremal_residual({z, lam, phi}, grid);
                ok = ok && std::abs(hardy::l1_norm(res) - al) <= 1e-8 * al;
                double min_re = 1e300, max_im = 0.0;
                for (Complex v : res.values) {
                    const Complex p = rot * v;
                    min_re = std::min(min_re, p.real());
                    max_im = std::max(max_im, std::abs(p.imag()));
                }
                ok = ok && min_re >= -1e-10 && max_im <= 1e-10;
            }
        }
    }
    return ok;
}

// 4. The two value branches agree at the threshold.
bool criterion4() {
    std::mt19937_64 rng(property_seed());
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const Complex z = std::polar(0.9 * u01(rng), 2.0 * hardy::kPi * u01(rng));
        const double d = 1.0 - std::norm(z);
        const double thr = 2.0 / d;
        const double sub = 1.0 / d + thr * thr * d / 4.0;
        ok = ok && std::abs(sub - thr) <= 1e-13 * thr;
    }
    return ok;
}

// 5. The IRLS oracle reproduces the closed form, and recovers the
//    approximant on the strictly subcritical part of the matrix.
bool criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = hardy::make_grid(4096);
    bool ok = true;
    for (Complex zv : z_matrix()) {
        const DiskPoint z(zv);
        const double thr = hardy::critical_threshold(z);
        std::vector<Complex> lambdas{Complex(0, 0)};
        for (double mult : {0.5, 1.0, 2.0})
            for (double phase : {0.0, 2.4})
                lambdas.push_back(std::polar(mult * thr, phase));
        for (Complex lam : lambdas) {
            const double expected = hardy::closed_form(z, lam).value;
            for (const auto& phi : phi_matrix()) {
                const WeightQuery q{z, lam, phi};
                const auto rep = hardy::solve_l1(conjugate_kernel(q, grid), 64);
                ok = ok && std::abs(rep.objective - expected) <= 1e-4 * expected;

                if (std::abs(lam) < 0.9 * thr) {   // strictly subcritical: h is recovered too
                    auto diff = hardy::synthesize(rep.coefficients, grid);
                    const auto reference = hardy::best_approximant(q, grid);
                    for (std::size_t j = 0; j < grid.size(); ++j)
                        diff.values[j] -= reference.values[j];
                    ok = ok && hardy::l1_norm(diff) <= 5e-3;
                }
            }
        }
    }
    const double dt = elapsed_s(t0);
    if (dt >= 30.0)
        std::printf("      (criterion 5 runtime %.2fs exceeds 30s)\n", dt);
    return ok && dt < 30.0;
}

// 6. The certificate certifies each subcritical case and closes the gap.
bool criterion6() {
    const auto grid = hardy::make_grid(4096);
    bool ok = true;
    for (Complex zv : z_matrix()) {
        const DiskPoint z(zv);
        const double thr = hardy::critical_threshold(z);
        for (double frac : {0.2, 0.5, 0.9}) {
            for (double phase : {0.0, 2.1}) {
                const Complex lam = std::polar(frac * thr, phase);
                for (const auto& phi : phi_matrix()) {
                    const WeightQuery q{z, lam, phi};
                    const auto k = conjugate_kernel(q, grid);
                    const auto cert = hardy::unimodular_certificate(q, grid);
                    const auto rep = hardy::check_certificate(
                        k, hardy::best_approximant(q, grid), cert.samples, 1e-9);
                    ok = ok && rep.certified;

                    const double e = hardy::closed_form(z, lam).value;
                    ok = ok && std::abs(hardy::duality_lower_bound(k, cert.samples) - e) <= 1e-9;
                }
            }
        }
    }
    return ok;
}

// 7. φ-independence and rotation invariance: closed-form route within 1e-8,
//    oracle route within 1e-4.
bool criterion7() {
    const auto grid = hardy::make_grid(8192);
    bool ok = true;

    // closed-form route: residual norms across phases of z, λ and across φ
    const double zr = 0.5, lr = 1.4;
    std::vector<double> norms;
    for (double zphase : {0.0, 1.1}) {
        for (double lphase : {0.0, 2.6}) {
            for (const auto& phi : phi_matrix()) {
                const WeightQuery q{DiskPoint(std::polar(zr, zphase)), std::polar(lr, lphase),
                                    phi};
                norms.push_back(hardy::l1_norm(hardy::extremal_residual(q, grid)));
            }
        }
    }
    for (double n : norms)
        ok = ok && std::abs(n - norms.front()) <= 1e-8 * norms.front();

    // oracle route on a reduced set
    const auto small = hardy::make_grid(4096);
    std::vector<double> objectives;
    const std::vector<InnerFunctionSpec> phis = phi_matrix();
    for (int variant = 0; variant < 4; ++variant) {
        const double zphase = variant % 2 ? 0.9 : 0.0;
        const double lphase = variant / 2 ? 1.7 : 0.0;
        const WeightQuery q{DiskPoint(std::polar(zr, zphase)), std::polar(lr, lphase),
                            phis[static_cast<std::size_t>(variant)]};
        objectives.push_back(hardy::solve_l1(conjugate_kernel(q, small), 64).objective);
    }
    for (double o : objectives)
        ok = ok && std::abs(o - objectives.front()) <= 1e-4 * objectives.front();
    return ok;
}

// 8. The sweep shows e/|λ| = 1 exactly on and above the threshold and
//    strictly above 1 below it.
bool criterion8() {
    const DiskPoint z(Complex(0.5, 0));
    const double thr = hardy::critical_threshold(z);   // 8/3
    bool ok = true;
    for (int i = 0; i <= 12; ++i) {
        const double al = 6.0 * i / 12.0;
        if (al == 0.0)
            continue;
        const double ratio = hardy::closed_form(z, Complex(al, 0)).value / al;
        if (al >= thr)
            ok = ok && ratio == 1.0;
        else
            ok = ok && ratio > 1.0;
    }
    return ok;
}

// 9. 200 seeded random admissible cases obey the bound; the equality witness
//    attains it; the Schwarz–Pick form holds, including φ ≡ 1.
bool criterion9() {
    std::mt19937_64 rng(property_seed());
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
        const auto c = hardy::draw_admissible_case(rng);
        const double lhs = hardy::derivative_bound_lhs(c.f, c.phi, c.z, c.lambda);
        const double rhs = hardy::derivative_bound_rhs(c.z, c.lambda);
        ok = ok && lhs <= rhs + 1e-9;

        ok = ok && hardy::schwarz_pick_check(c.f, c.phi, c.z).holds;
        if (i % 4 == 0)
            ok = ok && hardy::schwarz_pick_check(c.f, InnerFunctionSpec{}, c.z).holds;
    }

    const auto witness = hardy::inner_times_mobius();
    for (Complex zv : {Complex(0.2, 0), Complex(0.5, -0.3), Complex(0, 0.9)}) {
        const DiskPoint z(zv);
        const InnerFunctionSpec phi(0.8, 1, {Complex(0.3, 0.2)});
        const double lhs = hardy::derivative_bound_lhs(witness, phi, z, 0.0);
        ok = ok && std::abs(lhs - 1.0 / (1.0 - std::norm(zv))) <= 1e-9;
    }
    return ok;
}

// 10. Infrastructure: reproducing pairing, Poisson integral, unimodularity.
bool criterion10() {
    const auto grid = hardy::make_grid(4096);
    bool ok = true;

    std::mt19937_64 rng(property_seed() + 1);
    for (int k = 0; k <= 32; ++k) {
        const Complex z = std::polar(0.9 * u01(rng), 2.0 * hardy::kPi * u01(rng));
        hardy::BoundarySamples f;
        f.grid = grid;
        const auto m = static_cast<long long>(grid.size());
        for (long long j = 0; j < m; ++j)
            f.values.push_back(grid.points[static_cast<std::size_t>((j * k) % m)].value);
        ok = ok && std::abs(hardy::reproducing_check(f, DiskPoint(z)) - std::pow(z, k)) <= 1e-12;
    }

    for (Complex zv : {Complex(0.5, 0), Complex(0.2, -0.7), Complex(0, 0.9)}) {
        const auto poisson = hardy::sample(grid, [&](Complex t) {
            return Complex((1.0 - std::norm(zv)) / std::norm(1.0 - std::conj(t) * zv), 0.0);
        });
        ok = ok && std::abs(hardy::mean_integral(poisson) - 1.0) <= 1e-12;
    }

    for (const auto& phi : {InnerFunctionSpec(0.4, 2, {Complex(0.4, 0), Complex(0, -0.3)}),
                            InnerFunctionSpec(0.0, 0, {Complex(0.7, 0.2)})}) {
        for (Complex v : hardy::sample_inner(phi, grid).values)
            ok = ok && std::abs(std::abs(v) - 1.0) <= 1e-12;
    }
    return ok;
}

} // namespace

int main() {
    report(1, "lambda = 0 residual norm equals 1/(1-|z|^2) (< 1 s)", criterion1());
    report(2, "subcritical norms match the branch formula and the Parseval route", criterion2());
    report(3, "supercritical norms equal |lambda| with a nonnegative rotated residual",
           criterion3());
    report(4, "value branches agree at the threshold to 1e-13", criterion4());
    report(5, "IRLS oracle matches values to 1e-4 and approximants to 5e-3 (< 30 s)",
           criterion5());
    report(6, "factorization certificate certifies and closes the duality gap", criterion6());
    report(7, "phi-independence and rotation invariance of both routes", criterion7());
    report(8, "e/|lambda| is exactly 1 past the threshold and above 1 before it", criterion8());
    report(9, "200 random admissible cases obey the sharp bound; witness attains it",
           criterion9());
    report(10, "reproducing pairing, Poisson integral, unimodular samples", criterion10());

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
