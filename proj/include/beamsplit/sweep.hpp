#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace beamsplit {

// Execution policy for grid sweeps. `parallel` partitions rows across OpenMP
// threads; every row is computed independently by the same code path and
// written to its own slot, so the result is bitwise identical to `serial`.
enum class Exec { serial, parallel };

// Ordered table of sweep rows headed by column names, ready for CSV emission.
struct SweepSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Evenly spaced grid over [lo, hi], endpoints included.
// steps == 1 degenerates to the single point {lo}.
std::vector<double> linspace(double lo, double hi, int steps);

// CSV with one header row, values at 17 significant digits, "nan" sentinels
// and LF line endings.
void write_csv(const SweepSeries& series, std::ostream& out);
std::string to_csv(const SweepSeries& series);

namespace detail {

// Maps fn over row indices [0, n). Callers must ensure fn cannot throw for
// the given inputs (sweeps validate parameters before entering the loop).
template <typename RowFn>
std::vector<std::vector<double>> map_rows(std::size_t n, Exec exec, RowFn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::vector<std::vector<double>> rows(n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            rows[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        }
        return rows;
    }
#else
    (void)exec;
#endif
    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = fn(i);
    }
    return rows;
}

}  // namespace detail
}  // namespace beamsplit
