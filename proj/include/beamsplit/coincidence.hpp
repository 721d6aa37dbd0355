#pragma once

#include "beamsplit/slab.hpp"
#include "beamsplit/sweep.hpp"

namespace beamsplit {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact

// Default angular frequency for correlation sweeps, rad/s. A fitted display
// value (chosen so the correlation curve develops over a few nanoseconds),
// not a measured physical constant.
inline constexpr double kDefaultOmega = 2.856e8;

// Parameters of the two-detector intensity-correlation model: center angular
// frequency omega, source coherence time tau_c, integration half-window tau,
// and the envelope rate delta_k_rate = c * delta_k = 2 pi / tau_c at which
// the spectral-width argument grows with time.
struct CoincidenceParams {
    double omega = kDefaultOmega;  // rad/s
    double tau_c = 0.0;            // s
    double tau = 0.0;              // s
    double delta_k_rate = 0.0;     // rad/s

    // Validates omega > 0, tau_c > 0, tau >= 0 and derives delta_k_rate.
    static CoincidenceParams make(double omega, double tau_c, double tau);

    // Matched-window regime tau_c = tau / 2, the regime the correlation
    // sweeps evaluate row by row. Requires tau > 0.
    static CoincidenceParams matched(double omega, double tau);
};

// sin(u)/u with the removable singularity filled in: sinc(0) = 1. A short
// series is used near zero so tiny arguments keep full precision.
double sinc(double u);

// Instantaneous cross-correlation of the two outputs for a unit-amplitude
// input, (i/2) e^{-2 i omega t} sinc(delta_k_rate * t). Its modulus is even
// in t and independent of omega.
Complex instantaneous_correlation(const CoincidenceParams& p, double t);

// Closed-form normalized coincidence rate (1 - sinc(2 omega tau)) / 4 in the
// matched-window regime. Zero at tau = 0, approaching 1/4 with damped
// oscillations bounded by |C - 1/4| <= 1 / (8 omega tau).
double correlation_analytic(const CoincidenceParams& p);

enum class CorrelationKernel { analytic, step, sinc_squared };

// Composite-Simpson evaluation of (1 / 2 tau) * integral of
// sin^2(2 omega t) * w(t) dt.
//   step:         w = 1 on [-tau_c, tau_c], 0 outside; the quadrature runs
//                 exactly over the support, so with tau = 2 tau_c the result
//                 reproduces correlation_analytic.
//   sinc_squared: w = sinc^2(delta_k_rate * t) over [-tau, tau], the
//                 unapproximated envelope.
// Requires quad_points >= 64. analytic is a closed form, not a quadrature
// kernel, and is rejected. tau = 0 returns 0.
double correlation_numeric(const CoincidenceParams& p, CorrelationKernel kernel,
                           int quad_points);

// Mean singles intensities over the window:
// ((1 + sinc(omega tau)) / 2, (1 - sinc(omega tau)) / 2); the pair sums to 1.
struct OutputIntensities {
    double i_t = 0.0;
    double i_r = 0.0;
};
OutputIntensities output_intensities(const CoincidenceParams& p);

// c_rt / (i_t + i_r); throws std::domain_error when the denominator is not
// positive.
double normalized_correlation(double c_rt, double i_t, double i_r);

// Correlation curve over tau_grid (entries must be >= 0). Each row is
// evaluated in the matched-window regime tau_c = tau / 2; p_template
// supplies omega. analytic rows use the closed form; step and sinc_squared
// rows run correlation_numeric with quad_points. Columns: tau, c, i_t, i_r.
SweepSeries hbt_sweep(const CoincidenceParams& p_template,
                      const std::vector<double>& tau_grid, CorrelationKernel kernel,
                      int quad_points = 10000, Exec exec = Exec::parallel);

}  // namespace beamsplit
