#include "beamsplit/slab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "beamsplit/errors.hpp"

namespace beamsplit {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_two_pi(double x) {
    x = std::fmod(x, 2.0 * kPi);
    if (x < 0.0) x += 2.0 * kPi;
    return x;
}

void require_valid_internal_reflectivity(const InterfaceCoefficients& c) {
    if (!(std::abs(c.r21) < 1.0))
        throw std::domain_error("|r21| must be below 1 for the reflection ladder to converge");
}

double phase_or_nan(const SplitResult& s) {
    if (std::abs(s.a_t) < kPhaseFloor || std::abs(s.a_r) < kPhaseFloor)
        return std::numeric_limits<double>::quiet_NaN();
    return std::arg(s.a_r * std::conj(s.a_t));
}

}  // namespace

TwoPortMatrix TwoPortMatrix::identity() { return {1.0, 0.0, 0.0, 1.0}; }

TwoPortMatrix TwoPortMatrix::adjoint() const {
    return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
}

std::pair<Complex, Complex> TwoPortMatrix::apply(Complex in1, Complex in2) const {
    return {m11 * in1 + m12 * in2, m21 * in1 + m22 * in2};
}

TwoPortMatrix operator*(const TwoPortMatrix& a, const TwoPortMatrix& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

double unitarity_residual(const TwoPortMatrix& m) {
    const TwoPortMatrix p = m * m.adjoint();
    return std::max({std::abs(p.m11 - 1.0), std::abs(p.m12), std::abs(p.m21),
                     std::abs(p.m22 - 1.0)});
}

InterfaceCoefficients lossless_interface(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("reflectivity r must lie in (0, 1)");
    const double t = std::sqrt(1.0 - r * r);
    return {t, t, r, -r};
}

InterfaceCoefficients absorbing_interface(double tt, double rr) {
    if (!(tt > 0.0) || !(rr > 0.0))
        throw std::domain_error("tt and rr must be positive");
    if (!(tt + rr <= 1.0))
        throw std::domain_error("tt + rr must not exceed 1");
    return {std::sqrt(tt), std::sqrt(tt), std::sqrt(rr), -std::sqrt(rr)};
}

bool is_lossless(const InterfaceCoefficients& c, double tol) {
    return std::abs(c.r12 + c.r21) <= tol &&
           std::abs(c.t12 * c.t21 - c.r12 * c.r21 - 1.0) <= tol &&
           std::abs(c.t12 * c.t12 + c.r12 * c.r12 - 1.0) <= tol &&
           std::abs(c.t21 * c.t21 + c.r21 * c.r21 - 1.0) <= tol;
}

InternalPhase internal_phase(double n, double e, double theta, double k) {
    if (!(n > 1.0)) throw std::domain_error("refractive index n must exceed 1");
    if (!(e > 0.0)) throw std::domain_error("thickness e must be positive");
    if (!(k > 0.0)) throw std::domain_error("wavenumber k must be positive");
    if (!(std::abs(theta) < kPi / 2.0))
        throw std::domain_error("internal angle must satisfy |theta| < pi/2");
    return {k * n * e * std::cos(theta)};
}

SplitResult fp_split(const InterfaceCoefficients& c, InternalPhase phase) {
    require_valid_internal_reflectivity(c);
    const Complex one_pass = std::polar(1.0, phase.phi);
    const Complex round_trip = std::polar(1.0, 2.0 * phase.phi);
    const Complex den = 1.0 - (c.r21 * c.r21) * round_trip;
    return {c.t12 * c.t21 * one_pass / den,
            (c.r12 + c.r21 * (c.t12 * c.t21 - c.r12 * c.r21) * round_trip) / den};
}

double quadrature_phase(const SplitResult& s) {
    if (std::abs(s.a_t) < kPhaseFloor || std::abs(s.a_r) < kPhaseFloor)
        throw undefined_phase_error(
            "phase difference undefined: an output amplitude vanished");
    return std::arg(s.a_r * std::conj(s.a_t));
}

TwoPortMatrix classical_bs_matrix(const InterfaceCoefficients& c, InternalPhase phase) {
    if (!is_lossless(c))
        throw std::domain_error("classical_bs_matrix requires lossless coefficients");
    const Complex round_trip = std::polar(1.0, 2.0 * phase.phi);
    const Complex f = std::polar(1.0, phase.phi) / (1.0 - (c.r21 * c.r21) * round_trip);
    const Complex diag = c.t12 * c.t21 * f;
    const Complex off = Complex(0.0, 2.0) * c.r21 * std::sin(phase.phi) * f;
    return {diag, off, off, diag};
}

TwoPortMatrix slab_matrix(const InterfaceCoefficients& c, InternalPhase phase) {
    const SplitResult s = fp_split(c, phase);
    return {s.a_t, s.a_r, s.a_r, s.a_t};
}

TwoPortMatrix quantum_bs_matrix(QuantumForm form, double phi0) {
    const double inv_rt2 = 1.0 / std::numbers::sqrt2;
    if (form == QuantumForm::half_silvered) {
        return {inv_rt2, inv_rt2, -inv_rt2, inv_rt2};
    }
    const Complex g = std::polar(inv_rt2, phi0);
    const Complex ig = g * Complex(0.0, 1.0);
    return {ig, g, g, ig};
}

std::vector<double> balance_phases(const InterfaceCoefficients& c) {
    require_valid_internal_reflectivity(c);
    if (c.r21 == 0.0)
        throw no_solution_error("no 50/50 phase exists: the plate does not reflect");
    const double arg = c.t12 * c.t21 / (2.0 * c.r21);
    if (!(std::abs(arg) <= 1.0))
        throw no_solution_error(
            "no 50/50 phase exists: |t12 t21 / (2 r21)| exceeds 1");
    const double p0 = std::asin(std::abs(arg));
    const double candidates[] = {p0, kPi - p0, kPi + p0, 2.0 * kPi - p0};
    std::vector<double> roots;
    for (double x : candidates) {
        x = wrap_two_pi(x);
        bool duplicate = false;
        for (const double y : roots) duplicate = duplicate || std::abs(x - y) < 1e-12;
        if (duplicate) continue;
        const SplitResult s = fp_split(c, {x});
        if (std::abs(std::norm(s.a_t) - 0.5) < 1e-9 &&
            std::abs(std::norm(s.a_r) - 0.5) < 1e-9)
            roots.push_back(x);
    }
    if (roots.empty())
        throw no_solution_error(
            "no 50/50 phase exists: no candidate verified against the plate response");
    std::sort(roots.begin(), roots.end());
    return roots;
}

SweepSeries bs_sweep(const InterfaceCoefficients& c, const std::vector<double>& phi_grid,
                     Exec exec) {
    require_valid_internal_reflectivity(c);  // before the parallel region
    SweepSeries series;
    series.columns = {"phi", "i_t", "i_r", "phase_diff", "energy"};
    series.rows = detail::map_rows(phi_grid.size(), exec, [&](std::size_t i) {
        const double phi = phi_grid[i];
        const SplitResult s = fp_split(c, {phi});
        const double i_t = std::norm(s.a_t);
        const double i_r = std::norm(s.a_r);
        return std::vector<double>{phi, i_t, i_r, phase_or_nan(s), i_t + i_r};
    });
    return series;
}

}  // namespace beamsplit
