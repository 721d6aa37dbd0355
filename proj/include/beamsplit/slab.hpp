#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "beamsplit/sweep.hpp"

namespace beamsplit {

using Complex = std::complex<double>;

// Amplitudes whose magnitude falls below this floor are treated as vanished:
// phase queries on them throw undefined_phase_error and sweep columns emit a
// nan sentinel instead.
inline constexpr double kPhaseFloor = 1e-12;

// Real Fresnel amplitude coefficients of a symmetric two-face plate.
// t12, r12 act on entry into the plate (medium 1 to 2); t21, r21 act on the
// internal side (medium 2 to 1). The factories pin the sign convention
// r12 = +r, r21 = -r: external reflection positive, internal reflection
// negative, which is the Stokes time-reversal choice for a lossless face.
struct InterfaceCoefficients {
    double t12 = 0.0;
    double t21 = 0.0;
    double r12 = 0.0;
    double r21 = 0.0;
};

// Phase k*n*e*cos(theta) accumulated in one pass between the plate faces.
struct InternalPhase {
    double phi = 0.0;
};

// Output amplitudes of the plate for a unit-amplitude input on port 1.
struct SplitResult {
    Complex a_t;  // transmitted
    Complex a_r;  // reflected
};

// Row-major 2x2 transfer matrix: output = M * input, ports ordered (1, 2).
struct TwoPortMatrix {
    Complex m11, m12, m21, m22;

    static TwoPortMatrix identity();
    TwoPortMatrix adjoint() const;
    std::pair<Complex, Complex> apply(Complex in1, Complex in2) const;
};

TwoPortMatrix operator*(const TwoPortMatrix& a, const TwoPortMatrix& b);

// Largest entry of |M * adjoint(M) - I|; zero for a unitary matrix.
double unitarity_residual(const TwoPortMatrix& m);

// Lossless plate coefficients for external reflectivity r in (0, 1):
// t12 = t21 = sqrt(1 - r^2), r12 = r, r21 = -r. The returned set satisfies
// r21 = -r12, t12*t21 - r12*r21 = 1 and t^2 + r^2 = 1 on both faces.
InterfaceCoefficients lossless_interface(double r);

// Absorbing plate with round-trip transmitted power tt = t12*t21 and
// reflected power rr = -r12*r21; the remainder 1 - tt - rr is absorbed.
// Requires tt > 0, rr > 0, tt + rr <= 1.
InterfaceCoefficients absorbing_interface(double tt, double rr);

// True when c satisfies the lossless identities within tol.
bool is_lossless(const InterfaceCoefficients& c, double tol = 1e-12);

// phi = k * n * e * cos(theta).
// Requires n > 1, e > 0, k > 0 and |theta| < pi/2 (theta is the internal
// propagation angle).
InternalPhase internal_phase(double n, double e, double theta, double k);

// Sums the multiple-reflection ladder of the plate in closed form:
//   a_t = t12 t21 e^{i phi} / (1 - r21^2 e^{2 i phi})
//   a_r = (r12 + r21 (t12 t21 - r12 r21) e^{2 i phi}) / (1 - r21^2 e^{2 i phi})
// The e^{i phi} factor in a_t is the single-pass propagation referenced to
// the entry face; it carries the phase relations the interferometer results
// depend on.
SplitResult fp_split(const InterfaceCoefficients& c, InternalPhase phase);

// Arg(a_r * conj(a_t)) in (-pi, pi]. For a lossless plate the product is
// purely imaginary at every phi, so the value is +-pi/2 with the sign of
// r21 * sin(phi). Throws undefined_phase_error when either amplitude is
// below kPhaseFloor (phi = 0 mod pi in the lossless case).
double quadrature_phase(const SplitResult& s);

// Lossless plate as a two-port matrix,
//   e^{i phi} / (1 - r21^2 e^{2 i phi}) * [[t12 t21,        2 i r21 sin phi],
//                                          [2 i r21 sin phi, t12 t21       ]],
// unitary at every phi. Rejects coefficients that fail the lossless
// identities; use slab_matrix for the absorbing case.
TwoPortMatrix classical_bs_matrix(const InterfaceCoefficients& c, InternalPhase phase);

// General (possibly absorbing) plate as a symmetric two-port matrix built
// from fp_split; coincides with classical_bs_matrix for lossless input.
TwoPortMatrix slab_matrix(const InterfaceCoefficients& c, InternalPhase phase);

// Idealized beamsplitter conventions used by quantum-optics circuits.
enum class QuantumForm {
    symmetric,      // e^{i phi0}/sqrt(2) * [[i, 1], [1, i]]
    half_silvered,  // 1/sqrt(2) * [[1, 1], [-1, 1]], real entries
};

TwoPortMatrix quantum_bs_matrix(QuantumForm form, double phi0 = 0.0);

// All phi in [0, 2pi) at which the plate splits 50/50, from
// sin(phi) = t12 t21 / (2 r21): the arcsin principal value, its reflection
// through pi/2 and their translates, each verified against fp_split with
// residual |i_t - 0.5| < 1e-9. Throws no_solution_error when the arcsin
// argument exceeds 1 in magnitude or no candidate verifies.
std::vector<double> balance_phases(const InterfaceCoefficients& c);

// fp_split swept over phi_grid.
// Columns: phi, i_t, i_r, phase_diff, energy. phase_diff is quadrature_phase
// with a nan sentinel at undefined points; energy = i_t + i_r.
SweepSeries bs_sweep(const InterfaceCoefficients& c, const std::vector<double>& phi_grid,
                     Exec exec = Exec::parallel);

}  // namespace beamsplit
