#include "beamsplit/coincidence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamsplit {
namespace {

// Composite Simpson rule with m subintervals (rounded up to even),
// accumulated serially in index order so results are deterministic.
template <typename F>
double simpson(F f, double a, double b, int m) {
    if (m % 2 != 0) ++m;
    const double h = (b - a) / static_cast<double>(m);
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < m; i += 2) odd += f(a + h * static_cast<double>(i));
    for (int i = 2; i < m; i += 2) even += f(a + h * static_cast<double>(i));
    return (h / 3.0) * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

CoincidenceParams CoincidenceParams::make(double omega, double tau_c, double tau) {
    if (!(omega > 0.0)) throw std::domain_error("omega must be positive");
    if (!(tau_c > 0.0)) throw std::domain_error("tau_c must be positive");
    if (!(tau >= 0.0)) throw std::domain_error("tau must be nonnegative");
    CoincidenceParams p;
    p.omega = omega;
    p.tau_c = tau_c;
    p.tau = tau;
    p.delta_k_rate = 2.0 * std::numbers::pi / tau_c;
    return p;
}

CoincidenceParams CoincidenceParams::matched(double omega, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("matched window requires tau > 0");
    return make(omega, 0.5 * tau, tau);
}

double sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
    }
    return std::sin(u) / u;
}

Complex instantaneous_correlation(const CoincidenceParams& p, double t) {
    return Complex(0.0, 0.5) * std::polar(1.0, -2.0 * p.omega * t) *
           sinc(p.delta_k_rate * t);
}

double correlation_analytic(const CoincidenceParams& p) {
    return (1.0 - sinc(2.0 * p.omega * p.tau)) / 4.0;
}

double correlation_numeric(const CoincidenceParams& p, CorrelationKernel kernel,
                           int quad_points) {
    if (kernel == CorrelationKernel::analytic)
        throw std::invalid_argument("analytic is a closed form, not a quadrature kernel");
    if (quad_points < 64) throw std::domain_error("quad_points must be at least 64");
    if (p.tau == 0.0) return 0.0;
    const double omega = p.omega;
    if (kernel == CorrelationKernel::step) {
        // The window is 1 on [-tau_c, tau_c] and 0 outside; running the
        // quadrature exactly over the support keeps the jump on a node.
        const double b = std::min(p.tau, p.tau_c);
        const double integral = simpson(
            [omega](double t) {
                const double s = std::sin(2.0 * omega * t);
                return s * s;
            },
            -b, b, quad_points);
        return integral / (2.0 * p.tau);
    }
    const double rate = p.delta_k_rate;
    const double integral = simpson(
        [omega, rate](double t) {
            const double s = std::sin(2.0 * omega * t);
            const double env = sinc(rate * t);
            return s * s * env * env;
        },
        -p.tau, p.tau, quad_points);
    return integral / (2.0 * p.tau);
}

OutputIntensities output_intensities(const CoincidenceParams& p) {
    const double s = sinc(p.omega * p.tau);
    return {(1.0 + s) / 2.0, (1.0 - s) / 2.0};
}

double normalized_correlation(double c_rt, double i_t, double i_r) {
    const double denom = i_t + i_r;
    if (!(denom > 0.0)) throw std::domain_error("intensity sum must be positive");
    return c_rt / denom;
}

SweepSeries hbt_sweep(const CoincidenceParams& p_template,
                      const std::vector<double>& tau_grid, CorrelationKernel kernel,
                      int quad_points, Exec exec) {
    if (!(p_template.omega > 0.0)) throw std::domain_error("omega must be positive");
    if (kernel != CorrelationKernel::analytic && quad_points < 64)
        throw std::domain_error("quad_points must be at least 64");
    for (const double tau : tau_grid)
        if (!(tau >= 0.0)) throw std::domain_error("tau grid entries must be nonnegative");
    const double omega = p_template.omega;
    SweepSeries series;
    series.columns = {"tau", "c", "i_t", "i_r"};
    series.rows = detail::map_rows(tau_grid.size(), exec, [&](std::size_t i) {
        const double tau = tau_grid[i];
        double c = 0.0;  // zero window integrates to zero for every kernel
        if (tau > 0.0) {
            const CoincidenceParams p = CoincidenceParams::matched(omega, tau);
            c = kernel == CorrelationKernel::analytic
                    ? correlation_analytic(p)
                    : correlation_numeric(p, kernel, quad_points);
        }
        const double s = sinc(omega * tau);
        return std::vector<double>{tau, c, (1.0 + s) / 2.0, (1.0 - s) / 2.0};
    });
    return series;
}

}  // namespace beamsplit
