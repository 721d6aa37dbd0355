#include "beamsplit/interferometer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "beamsplit/errors.hpp"

namespace beamsplit {
namespace {

void require_lossless_split(const SplitResult& s) {
    const double energy = std::norm(s.a_t) + std::norm(s.a_r);
    if (std::abs(energy - 1.0) > 1e-9)
        throw std::domain_error("split must come from a lossless beamsplitter");
}

double arg_or_nan(Complex z) {
    if (std::abs(z) < kPhaseFloor) return std::numeric_limits<double>::quiet_NaN();
    return std::arg(z);
}

MzOutputs finish(Complex a1p, Complex a2p) {
    return {a1p, a2p, std::norm(a1p), std::norm(a2p)};
}

double phase_between(const MzOutputs& o) {
    if (std::abs(o.a1p) < kPhaseFloor || std::abs(o.a2p) < kPhaseFloor)
        throw undefined_phase_error(
            "output phase undefined: an output amplitude vanished");
    return std::arg(o.a2p * std::conj(o.a1p));
}

std::vector<double> sweep_row(double x, const MzOutputs& o) {
    const double pd = (std::abs(o.a1p) < kPhaseFloor || std::abs(o.a2p) < kPhaseFloor)
                          ? std::numeric_limits<double>::quiet_NaN()
                          : std::arg(o.a2p * std::conj(o.a1p));
    return {x, o.i1p, o.i2p, arg_or_nan(o.a1p), arg_or_nan(o.a2p), pd, o.i1p + o.i2p};
}

}  // namespace

MzOutputs mz_static(const SplitResult& s) {
    require_lossless_split(s);
    return finish(2.0 * s.a_t * s.a_r, s.a_t * s.a_t + s.a_r * s.a_r);
}

double mz_phase_static(const SplitResult& s) { return phase_between(mz_static(s)); }

MzOutputs mz_opd(const SplitResult& s, OpdSetting d, OpdArm arm) {
    require_lossless_split(s);
    const Complex e = std::polar(1.0, d.k_delta);
    const Complex a1p = s.a_t * s.a_r * (1.0 + e);
    const Complex a2p = arm == OpdArm::transmitted
                            ? s.a_t * s.a_t * e + s.a_r * s.a_r
                            : s.a_t * s.a_t + s.a_r * s.a_r * e;
    return finish(a1p, a2p);
}

double mz_phase_opd(const SplitResult& s, OpdSetting d, OpdArm arm) {
    return phase_between(mz_opd(s, d, arm));
}

MzOutputs mz_quantum(OpdSetting d, Complex in1, Complex in2) {
    if (std::abs(std::norm(in1) + std::norm(in2) - 1.0) > 1e-9)
        throw std::domain_error("input state must be normalized to unit power");
    const double inv_rt2 = 1.0 / std::numbers::sqrt2;
    const TwoPortMatrix bs{inv_rt2, Complex(0.0, inv_rt2), Complex(0.0, inv_rt2), inv_rt2};
    const TwoPortMatrix delay{std::polar(1.0, d.k_delta), 0.0, 0.0, 1.0};
    const TwoPortMatrix m = bs * delay * bs;
    // The composition acts on the column (port 2, port 1); its top output is
    // the constructive port and carries the 1' label.
    const auto [a1p, a2p] = m.apply(in2, in1);
    return finish(a1p, a2p);
}

SweepSeries mz_sweep(MzSweepMode mode, const InterfaceCoefficients& c,
                     const std::vector<double>& grid, std::optional<double> phi,
                     Exec exec) {
    if (!is_lossless(c))
        throw std::domain_error("mz_sweep requires lossless coefficients");
    SweepSeries series;
    series.columns = {"x", "i1", "i2", "phi1", "phi2", "phase_diff", "energy"};
    if (mode == MzSweepMode::internal_phase) {
        series.rows = detail::map_rows(grid.size(), exec, [&](std::size_t i) {
            const double x = grid[i];
            return sweep_row(x, mz_static(fp_split(c, {x})));
        });
    } else {
        const double phi_fixed = phi ? *phi : balance_phases(c).front();
        const SplitResult s = fp_split(c, {phi_fixed});
        series.rows = detail::map_rows(grid.size(), exec, [&](std::size_t i) {
            const double x = grid[i];
            return sweep_row(x, mz_opd(s, {x}));
        });
    }
    return series;
}

}  // namespace beamsplit
