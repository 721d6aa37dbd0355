// beamsplit: command-line front end for the plate beamsplitter toolkit.
// Exit codes: 0 success, 2 usage or parse error, 3 no solution exists.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beamsplit/circuit.hpp"
#include "beamsplit/coincidence.hpp"
#include "beamsplit/errors.hpp"
#include "beamsplit/interferometer.hpp"
#include "beamsplit/slab.hpp"
#include "beamsplit/sweep.hpp"
#include "beamsplit/text.hpp"

namespace {

using beamsplit::Complex;
using beamsplit::InterfaceCoefficients;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric flags share the circuit-file literal grammar, including the "pi"
// suffix ("--phi-max 2pi").
double num_flag(const std::string& name, const std::string& text) {
    const auto v = beamsplit::parse_number(text);
    if (!v) throw UsageError("invalid number for " + name + ": '" + text + "'");
    return *v;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + out_path);
    file << payload;
}

std::string format_complex(Complex z) {
    std::string out = beamsplit::format_g17(z.real());
    out += std::signbit(z.imag()) ? '-' : '+';
    out += beamsplit::format_g17(std::abs(z.imag()));
    out += 'i';
    return out;
}

struct PlateFlags {
    std::string r;
    std::string tt;
    std::string rr;
};

void add_plate_flags(CLI::App* cmd, PlateFlags& f) {
    cmd->add_option("--r", f.r, "lossless plate reflectivity, in (0, 1)");
    cmd->add_option("--tt", f.tt, "absorbing plate transmitted power t12*t21");
    cmd->add_option("--rr", f.rr, "absorbing plate reflected power -r12*r21");
}

InterfaceCoefficients plate_from_flags(const PlateFlags& f, bool lossless_only) {
    const bool has_r = !f.r.empty();
    const bool has_tt = !f.tt.empty();
    const bool has_rr = !f.rr.empty();
    if (has_r && (has_tt || has_rr))
        throw UsageError("pass either --r or both --tt and --rr, not a mixture");
    if (has_r) return beamsplit::lossless_interface(num_flag("--r", f.r));
    if (has_tt && has_rr) {
        if (lossless_only)
            throw UsageError(
                "this command requires a lossless beamsplitter: pass --r instead of "
                "--tt/--rr");
        return beamsplit::absorbing_interface(num_flag("--tt", f.tt),
                                              num_flag("--rr", f.rr));
    }
    throw UsageError("pass --r, or --tt together with --rr");
}

std::string run_balance(const InterfaceCoefficients& c) {
    const std::vector<double> roots = beamsplit::balance_phases(c);
    std::string out;
    for (const double phi : roots) {
        const beamsplit::SplitResult s = beamsplit::fp_split(c, {phi});
        const double residual = std::abs(std::norm(s.a_t) - 0.5);
        out += "phi = " + beamsplit::format_g5(phi) +
               " rad = " + beamsplit::format_g5(phi / std::numbers::pi) +
               " pi   residual = " + beamsplit::format_g5(residual) + "\n";
    }
    return out;
}

std::string run_circuit_eval(const std::string& path, const std::string& input) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot read circuit file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const std::string source = buffer.str();

    const beamsplit::circuit::ParseResult parsed = beamsplit::circuit::parse(source);
    if (!parsed.ok()) {
        std::string message;
        for (const auto& d : parsed.diagnostics) {
            if (!message.empty()) message += '\n';
            message += beamsplit::circuit::format_diagnostic(d);
        }
        throw UsageError(path + ":\n" + message);
    }

    Complex in1{1.0, 0.0};
    Complex in2{0.0, 0.0};
    const std::size_t comma = input.find(',');
    if (comma == std::string::npos)
        throw UsageError("--input needs two comma-separated amplitudes, got '" + input +
                         "'");
    const auto a = beamsplit::parse_complex(input.substr(0, comma));
    const auto b = beamsplit::parse_complex(input.substr(comma + 1));
    if (!a || !b)
        throw UsageError("invalid --input amplitude in '" + input + "'");
    in1 = *a;
    in2 = *b;

    std::string out;
    for (std::size_t i = 0; i < parsed.circuits.size(); ++i) {
        const auto& c = parsed.circuits[i];
        const beamsplit::TwoPortMatrix m = beamsplit::circuit::compile(c);
        const beamsplit::circuit::EvalResult r = beamsplit::circuit::evaluate(m, in1, in2);
        if (i != 0) out += '\n';
        out += "circuit " + c.name + "\n";
        out += "m11 = " + format_complex(m.m11) + "\n";
        out += "m12 = " + format_complex(m.m12) + "\n";
        out += "m21 = " + format_complex(m.m21) + "\n";
        out += "m22 = " + format_complex(m.m22) + "\n";
        out += "a1 = " + format_complex(r.a1) + "\n";
        out += "a2 = " + format_complex(r.a2) + "\n";
        out += "i1 = " + beamsplit::format_g17(r.i1) + "\n";
        out += "i2 = " + beamsplit::format_g17(r.i2) + "\n";
        out += "unitarity_residual = " +
               beamsplit::format_g17(beamsplit::unitarity_residual(m)) + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Wave-optics toolkit for plate beamsplitters: splitting sweeps, "
        "Mach-Zehnder interferometers, coincidence correlations and optical "
        "circuit files."};
    app.require_subcommand(1);

    // bs-sweep
    auto* bs_cmd = app.add_subcommand(
        "bs-sweep", "Sweep the plate response over the internal phase (CSV)");
    PlateFlags bs_plate;
    add_plate_flags(bs_cmd, bs_plate);
    std::string bs_phi_min = "0";
    std::string bs_phi_max = "2pi";
    int bs_steps = 1000;
    std::string bs_out;
    bs_cmd->add_option("--phi-min", bs_phi_min, "sweep start")->capture_default_str();
    bs_cmd->add_option("--phi-max", bs_phi_max, "sweep end")->capture_default_str();
    bs_cmd->add_option("--steps", bs_steps, "number of grid points")
        ->capture_default_str();
    bs_cmd->add_option("--out", bs_out, "output file (default: stdout)");
    bs_cmd->callback([&] {
        const InterfaceCoefficients c = plate_from_flags(bs_plate, false);
        const auto grid = beamsplit::linspace(num_flag("--phi-min", bs_phi_min),
                                              num_flag("--phi-max", bs_phi_max), bs_steps);
        emit(bs_out, beamsplit::to_csv(beamsplit::bs_sweep(c, grid)));
    });

    // mz-sweep
    auto* mz_cmd = app.add_subcommand(
        "mz-sweep", "Sweep a Mach-Zehnder built from two identical plates (CSV)");
    PlateFlags mz_plate;
    add_plate_flags(mz_cmd, mz_plate);
    std::string mz_mode;
    std::string mz_x_min = "0";
    std::string mz_x_max = "2pi";
    int mz_steps = 1000;
    std::string mz_phi;
    std::string mz_out;
    mz_cmd->add_option("--mode", mz_mode, "internal-phase or opd")->required();
    mz_cmd->add_option("--x-min", mz_x_min, "sweep start")->capture_default_str();
    mz_cmd->add_option("--x-max", mz_x_max, "sweep end")->capture_default_str();
    mz_cmd->add_option("--steps", mz_steps, "number of grid points")
        ->capture_default_str();
    mz_cmd->add_option("--phi", mz_phi,
                       "opd mode only: fixed plate phase (default: first 50/50 phase)");
    mz_cmd->add_option("--out", mz_out, "output file (default: stdout)");
    mz_cmd->callback([&] {
        beamsplit::MzSweepMode mode;
        if (mz_mode == "internal-phase") {
            mode = beamsplit::MzSweepMode::internal_phase;
        } else if (mz_mode == "opd") {
            mode = beamsplit::MzSweepMode::opd;
        } else {
            throw UsageError("unknown mode '" + mz_mode +
                             "' (expected internal-phase or opd)");
        }
        if (mode == beamsplit::MzSweepMode::internal_phase && !mz_phi.empty())
            throw UsageError("--phi applies only to opd mode");
        const InterfaceCoefficients c = plate_from_flags(mz_plate, true);
        const auto grid = beamsplit::linspace(num_flag("--x-min", mz_x_min),
                                              num_flag("--x-max", mz_x_max), mz_steps);
        std::optional<double> phi;
        if (!mz_phi.empty()) phi = num_flag("--phi", mz_phi);
        emit(mz_out, beamsplit::to_csv(beamsplit::mz_sweep(mode, c, grid, phi)));
    });

    // hbt
    auto* hbt_cmd = app.add_subcommand(
        "hbt", "Coincidence correlation against the detection half-window (CSV)");
    std::string hbt_omega = "2.856e8";
    std::string hbt_tau_max;
    int hbt_steps = 1000;
    std::string hbt_kernel = "analytic";
    std::string hbt_tau_c;
    std::string hbt_out;
    hbt_cmd
        ->add_option("--omega", hbt_omega,
                     "center angular frequency, rad/s (fitted display value, not a "
                     "measured constant)")
        ->capture_default_str();
    hbt_cmd->add_option("--tau-max", hbt_tau_max, "largest half-window, s")->required();
    hbt_cmd->add_option("--steps", hbt_steps, "number of grid points")
        ->capture_default_str();
    hbt_cmd
        ->add_option("--kernel", hbt_kernel,
                     "analytic, step or sinc2 (numeric kernels use 10000-point "
                     "quadrature)")
        ->capture_default_str();
    hbt_cmd->add_option(
        "--tau-c", hbt_tau_c,
        "source coherence time, s; required for step/sinc2. Rows are evaluated in "
        "the matched-window regime tau_c = tau/2, which this flag seeds.");
    hbt_cmd->add_option("--out", hbt_out, "output file (default: stdout)");
    hbt_cmd->callback([&] {
        beamsplit::CorrelationKernel kernel;
        if (hbt_kernel == "analytic") {
            kernel = beamsplit::CorrelationKernel::analytic;
        } else if (hbt_kernel == "step") {
            kernel = beamsplit::CorrelationKernel::step;
        } else if (hbt_kernel == "sinc2") {
            kernel = beamsplit::CorrelationKernel::sinc_squared;
        } else {
            throw UsageError("unknown kernel '" + hbt_kernel +
                             "' (expected analytic, step or sinc2)");
        }
        if (kernel != beamsplit::CorrelationKernel::analytic && hbt_tau_c.empty())
            throw UsageError("--tau-c is required for the step and sinc2 kernels");
        const double omega = num_flag("--omega", hbt_omega);
        const double tau_max = num_flag("--tau-max", hbt_tau_max);
        const double tau_c = hbt_tau_c.empty() ? 1.0 : num_flag("--tau-c", hbt_tau_c);
        const beamsplit::CoincidenceParams tmpl =
            beamsplit::CoincidenceParams::make(omega, tau_c, 0.0);
        const auto grid = beamsplit::linspace(0.0, tau_max, hbt_steps);
        emit(hbt_out, beamsplit::to_csv(beamsplit::hbt_sweep(tmpl, grid, kernel)));
    });

    // balance
    auto* bal_cmd = app.add_subcommand(
        "balance", "Report every plate phase that yields a 50/50 split");
    std::string bal_r;
    std::string bal_out;
    bal_cmd->add_option("--r", bal_r, "lossless plate reflectivity, in (0, 1)")
        ->required();
    bal_cmd->add_option("--out", bal_out, "output file (default: stdout)");
    bal_cmd->callback([&] {
        const InterfaceCoefficients c =
            beamsplit::lossless_interface(num_flag("--r", bal_r));
        emit(bal_out, run_balance(c));
    });

    // circuit-eval
    auto* ce_cmd = app.add_subcommand(
        "circuit-eval", "Compile a circuit file and apply it to an input state");
    std::string ce_path;
    std::string ce_input = "1,0";
    std::string ce_out;
    ce_cmd->add_option("path", ce_path, "circuit file (.osc)")->required();
    ce_cmd->add_option("--input", ce_input,
                        "input amplitudes 'a1,a2', e.g. '1,0' or '0.5+0.5i,0.5-0.5i'")
        ->capture_default_str();
    ce_cmd->add_option("--out", ce_out, "output file (default: stdout)");
    ce_cmd->callback([&] { emit(ce_out, run_circuit_eval(ce_path, ce_input)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const beamsplit::no_solution_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
