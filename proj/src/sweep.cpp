#include "beamsplit/sweep.hpp"

#include <sstream>
#include <stdexcept>

#include "beamsplit/text.hpp"

namespace beamsplit {

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) throw std::domain_error("steps must be at least 1");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    if (steps == 1) {
        grid[0] = lo;
        return grid;
    }
    const double h = (hi - lo) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps - 1; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + h * static_cast<double>(i);
    }
    grid[static_cast<std::size_t>(steps - 1)] = hi;  // endpoint exact, no drift
    return grid;
}

void write_csv(const SweepSeries& series, std::ostream& out) {
    for (std::size_t j = 0; j < series.columns.size(); ++j) {
        if (j != 0) out << ',';
        out << series.columns[j];
    }
    out << '\n';
    for (const auto& row : series.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j != 0) out << ',';
            out << format_g17(row[j]);
        }
        out << '\n';
    }
}

std::string to_csv(const SweepSeries& series) {
    std::ostringstream out;
    write_csv(series, out);
    return out.str();
}

}  // namespace beamsplit
