#pragma once

#include <optional>

#include "beamsplit/slab.hpp"

namespace beamsplit {

// Output state of a symmetric Mach-Zehnder built from two identical plates.
// Port 1' is the constructive output: it carries all the light when the
// splitter is balanced and the arms are matched.
struct MzOutputs {
    Complex a1p, a2p;
    double i1p = 0.0;
    double i2p = 0.0;
};

// Path-difference phase k*delta accumulated in one interferometer arm.
struct OpdSetting {
    double k_delta = 0.0;
};

// Which arm carries the path-difference modulation.
enum class OpdArm { transmitted, reflected };

// Matched-arm outputs: a1p = 2 a_t a_r, a2p = a_t^2 + a_r^2.
// Requires a lossless split (|a_t|^2 + |a_r|^2 = 1 within 1e-9); then
// i1p + i2p = 1 because a_r * conj(a_t) is purely imaginary.
MzOutputs mz_static(const SplitResult& s);

// Arg(a2p * conj(a1p)) for the matched-arm interferometer. The product
// reduces to 2 (i_t - i_r) a_t conj(a_r), purely imaginary, so the value is
// +-pi/2. Throws undefined_phase_error at a balanced split (a2p = 0) or when
// the plate phase is 0 mod pi (a1p = 0).
double mz_phase_static(const SplitResult& s);

// Outputs with phase k*delta inserted in one arm:
//   transmitted: a1p = a_t a_r (1 + e^{i k delta}), a2p = a_t^2 e^{i k delta} + a_r^2
//   reflected:   same a1p,                          a2p = a_t^2 + a_r^2 e^{i k delta}
// i1p = 4 |a_t a_r|^2 cos^2(k delta / 2); a balanced lossless split gives
// the complementary pair (cos^2, sin^2) of k delta / 2.
MzOutputs mz_opd(const SplitResult& s, OpdSetting d, OpdArm arm = OpdArm::transmitted);

// Arg(a2p * conj(a1p)) under path-difference modulation. For a balanced
// split the value is 0 mod pi; the points where an output vanishes
// (k delta = 0 mod pi) throw undefined_phase_error.
double mz_phase_opd(const SplitResult& s, OpdSetting d, OpdArm arm = OpdArm::transmitted);

// Ideal quantum Mach-Zehnder: two quadrature beamsplitters around a one-arm
// delay, applied to the input state (in1, in2). Ports are labeled so that a
// unit input on port 1 yields i1p = cos^2(k delta / 2). Throws
// std::domain_error when the input norm differs from 1 by more than 1e-9.
MzOutputs mz_quantum(OpdSetting d, Complex in1 = {1.0, 0.0}, Complex in2 = {0.0, 0.0});

enum class MzSweepMode { internal_phase, opd };

// Mach-Zehnder sweep; requires lossless coefficients. internal_phase mode
// sweeps the plate phase with matched arms; opd mode sweeps k*delta at fixed
// plate phase phi (default: the first balance phase, i.e. a 50/50 split).
// Columns: x, i1, i2, phi1, phi2, phase_diff, energy; phi1/phi2 are the
// output-amplitude arguments and phase_diff = Arg(a2p * conj(a1p)), all with
// nan sentinels at undefined points.
SweepSeries mz_sweep(MzSweepMode mode, const InterfaceCoefficients& c,
                     const std::vector<double>& grid,
                     std::optional<double> phi = std::nullopt,
                     Exec exec = Exec::parallel);

}  // namespace beamsplit
