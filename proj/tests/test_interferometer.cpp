#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "beamsplit/errors.hpp"
#include "beamsplit/interferometer.hpp"
#include "beamsplit/slab.hpp"

using namespace beamsplit;

namespace {
constexpr double kPi = std::numbers::pi;

double abs_diff(Complex a, Complex b) { return std::abs(a - b); }

InterfaceCoefficients half_silvered() { return lossless_interface(std::sqrt(0.5)); }
}  // namespace

TEST_CASE("matched-arm interferometer concentrates light at a balanced split") {
    const auto c = half_silvered();
    const double root = balance_phases(c).front();
    const auto o = mz_static(fp_split(c, {root}));
    CHECK(o.i1p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(o.i2p) < 1e-12);
}

TEST_CASE("matched-arm interferometer passes everything straight through at phi = 0") {
    const auto c = half_silvered();
    const auto o = mz_static(fp_split(c, {0.0}));
    CHECK(std::abs(o.i1p) < 1e-12);
    CHECK(o.i2p == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("matched-arm outputs conserve energy for any lossless split") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> r_dist(0.05, 0.95);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
    for (int i = 0; i < 300; ++i) {
        const auto c = lossless_interface(r_dist(rng));
        const auto o = mz_static(fp_split(c, {phi_dist(rng)}));
        CHECK(std::abs(o.i1p + o.i2p - 1.0) < 1e-12);
    }
}

TEST_CASE("interferometer stages reject an absorbing split") {
    const auto s = fp_split(absorbing_interface(0.45, 0.45), {kPi / 2.0});
    CHECK_THROWS_AS(mz_static(s), std::domain_error);
    CHECK_THROWS_AS(mz_opd(s, {1.0}), std::domain_error);
}

TEST_CASE("matched-arm output phase is +-pi/2 and matches its closed form") {
    const auto c = half_silvered();
    const double phis[] = {0.2, 0.3 * kPi, 1.1, 2.5, 4.0, 5.9};
    for (const double phi : phis) {
        const auto s = fp_split(c, {phi});
        const double got = mz_phase_static(s);
        CHECK(std::abs(std::abs(got) - kPi / 2.0) < 1e-12);
        // Direct reduction: Arg(2 (i_t - i_r) a_t conj(a_r)).
        const Complex reduced =
            2.0 * (std::norm(s.a_t) - std::norm(s.a_r)) * s.a_t * std::conj(s.a_r);
        CHECK(got == doctest::Approx(std::arg(reduced)).epsilon(1e-12));
    }
}

TEST_CASE("matched-arm output phase is undefined at balance and at phi = 0 mod pi") {
    const auto c = half_silvered();
    const double root = balance_phases(c).front();
    CHECK_THROWS_AS(mz_phase_static(fp_split(c, {root})), undefined_phase_error);
    CHECK_THROWS_AS(mz_phase_static(fp_split(c, {0.0})), undefined_phase_error);
}

TEST_CASE("path-difference fringe of a balanced interferometer is cos^2 / sin^2") {
    const auto c = half_silvered();
    const auto s = fp_split(c, {balance_phases(c).front()});

    const auto at_zero = mz_opd(s, {0.0});
    CHECK(at_zero.i1p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(at_zero.i2p) < 1e-12);

    const auto at_pi = mz_opd(s, {kPi});
    CHECK(std::abs(at_pi.i1p) < 1e-12);
    CHECK(at_pi.i2p == doctest::Approx(1.0).epsilon(1e-12));

    const auto at_half = mz_opd(s, {kPi / 2.0});
    CHECK(at_half.i1p == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at_half.i2p == doctest::Approx(0.5).epsilon(1e-12));

    for (int i = 0; i <= 64; ++i) {
        const double kd = 2.0 * kPi * i / 64.0;
        const auto o = mz_opd(s, {kd});
        const double expected = std::cos(kd / 2.0) * std::cos(kd / 2.0);
        CHECK(std::abs(o.i1p - expected) < 1e-12);
        CHECK(std::abs(o.i1p + o.i2p - 1.0) < 1e-12);
    }
}

TEST_CASE("an unbalanced split cannot fully cancel the straight-through port") {
    const auto c = half_silvered();
    const auto s = fp_split(c, {0.3 * kPi});  // i_t != i_r here
    const auto o = mz_opd(s, {kPi});
    // a1p vanishes at k delta = pi, so everything exits the other port.
    CHECK(std::abs(o.i1p) < 1e-12);
    CHECK(o.i2p == doctest::Approx(1.0).epsilon(1e-12));
    // Fringe floor: min over k delta of i2p is (i_t - i_r)^2 > 0.
    const double i_t = std::norm(s.a_t);
    const double i_r = std::norm(s.a_r);
    const auto at_zero = mz_opd(s, {0.0});
    CHECK(at_zero.i2p == doctest::Approx((i_t - i_r) * (i_t - i_r)).epsilon(1e-9));
}

TEST_CASE("the two modulation arms give mirror fringes") {
    const auto c = half_silvered();
    const auto s = fp_split(c, {0.3 * kPi});
    const double kds[] = {0.3, 0.7, 1.9, 3.3, 5.1};
    for (const double kd : kds) {
        const auto t = mz_opd(s, {kd}, OpdArm::transmitted);
        const auto r = mz_opd(s, {kd}, OpdArm::reflected);
        CHECK(std::abs(t.i1p - r.i1p) < 1e-15);
        CHECK(std::abs(t.i2p - r.i2p) < 1e-15);
        // a2p(transmitted, kd) = e^{i kd} a2p(reflected, -kd)
        const auto r_neg = mz_opd(s, {-kd}, OpdArm::reflected);
        CHECK(abs_diff(t.a2p, std::polar(1.0, kd) * r_neg.a2p) < 1e-13);
    }
}

TEST_CASE("path-difference output phase sits at 0 mod pi for a balanced split") {
    const auto c = half_silvered();
    const auto s = fp_split(c, {balance_phases(c).front()});
    const double kds[] = {0.4, kPi / 2.0, 2.0, 2.8, 4.1, 6.0};
    for (const double kd : kds) {
        const double pd = mz_phase_opd(s, {kd});
        CHECK(std::abs(std::sin(pd)) < 1e-9);
    }
    CHECK_THROWS_AS(mz_phase_opd(s, {0.0}), undefined_phase_error);
    CHECK_THROWS_AS(mz_phase_opd(s, {kPi}), undefined_phase_error);
}

TEST_CASE("quantum interferometer reproduces the cos^2 / sin^2 fringe") {
    const auto at_zero = mz_quantum({0.0});
    CHECK(at_zero.i1p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(at_zero.i2p) < 1e-12);

    const auto at_pi = mz_quantum({kPi});
    CHECK(std::abs(at_pi.i1p) < 1e-12);
    CHECK(at_pi.i2p == doctest::Approx(1.0).epsilon(1e-12));

    for (int i = 0; i <= 256; ++i) {
        const double kd = 2.0 * kPi * i / 256.0;
        const auto o = mz_quantum({kd});
        const double expected = std::cos(kd / 2.0) * std::cos(kd / 2.0);
        CHECK(std::abs(o.i1p - expected) < 1e-12);
        CHECK(std::abs(o.i1p + o.i2p - 1.0) < 1e-12);
    }
}

TEST_CASE("quantum interferometer agrees with the classical balanced plate") {
    const auto c = half_silvered();
    const auto s = fp_split(c, {balance_phases(c).front()});
    for (int i = 0; i <= 256; ++i) {
        const double kd = 2.0 * kPi * i / 256.0;
        const auto classical = mz_opd(s, {kd});
        const auto quantum = mz_quantum({kd});
        CHECK(std::abs(classical.i1p - quantum.i1p) < 1e-12);
        CHECK(std::abs(classical.i2p - quantum.i2p) < 1e-12);
    }
}

TEST_CASE("quantum interferometer handles general input states") {
    // Port 2 input: the fringe swaps ports.
    const auto o = mz_quantum({0.0}, {0.0, 0.0}, {1.0, 0.0});
    CHECK(std::abs(o.i1p) < 1e-12);
    CHECK(o.i2p == doctest::Approx(1.0).epsilon(1e-12));

    // Superposition input keeps unit energy.
    const auto s = mz_quantum({1.1}, {0.6, 0.0}, {0.0, 0.8});
    CHECK(std::abs(s.i1p + s.i2p - 1.0) < 1e-12);

    CHECK_THROWS_AS(mz_quantum({0.0}, {1.0, 0.0}, {0.1, 0.0}), std::domain_error);
    CHECK_THROWS_AS(mz_quantum({0.0}, {0.0, 0.0}, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("mz_sweep exposes both modes with energy and nan bookkeeping") {
    const auto c = half_silvered();

    SUBCASE("internal phase mode") {
        // A grid that contains the exact balance root pins i2 = 0 there.
        const double root = balance_phases(c).front();
        std::vector<double> grid = linspace(0.0, 2.0 * kPi, 257);
        grid.push_back(root);
        const auto series = mz_sweep(MzSweepMode::internal_phase, c, grid);
        REQUIRE(series.columns ==
                std::vector<std::string>{"x", "i1", "i2", "phi1", "phi2", "phase_diff",
                                         "energy"});
        REQUIRE(series.rows.size() == grid.size());
        for (const auto& row : series.rows) CHECK(std::abs(row[6] - 1.0) < 1e-12);
        const auto& at_root = series.rows.back();
        CHECK(std::abs(at_root[2]) < 1e-9);
        CHECK(std::isnan(at_root[5]));  // output 2 is dark, so no phase
        // x = 0 leaves port 1 dark instead.
        CHECK(std::abs(series.rows.front()[1]) < 1e-12);
        CHECK(std::isnan(series.rows.front()[3]));
    }

    SUBCASE("opd mode defaults to the first balance phase") {
        const auto series = mz_sweep(MzSweepMode::opd, c, linspace(0.0, 2.0 * kPi, 256));
        for (const auto& row : series.rows) {
            const double expected = std::cos(row[0] / 2.0) * std::cos(row[0] / 2.0);
            CHECK(std::abs(row[1] - expected) < 1e-12);
            CHECK(std::abs(row[6] - 1.0) < 1e-12);
        }
    }

    SUBCASE("opd mode accepts an explicit plate phase") {
        const auto series =
            mz_sweep(MzSweepMode::opd, c, linspace(0.0, 2.0 * kPi, 64), 0.3 * kPi);
        const auto s = fp_split(c, {0.3 * kPi});
        const double floor_val = 4.0 * std::norm(s.a_t) * std::norm(s.a_r);
        for (const auto& row : series.rows) {
            const double expected =
                floor_val * std::cos(row[0] / 2.0) * std::cos(row[0] / 2.0);
            CHECK(std::abs(row[1] - expected) < 1e-12);
        }
    }

    SUBCASE("rejects absorbing coefficients up front") {
        CHECK_THROWS_AS(mz_sweep(MzSweepMode::internal_phase,
                                 absorbing_interface(0.45, 0.45), linspace(0.0, 1.0, 8)),
                        std::domain_error);
    }
}
