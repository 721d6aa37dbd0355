#pragma once

#include <stdexcept>

namespace beamsplit {

// Thrown when a phase query is made on an amplitude that has vanished:
// the argument of a near-zero complex number is rounding noise, not data.
class undefined_phase_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a solver is asked for a configuration that does not exist,
// e.g. a 50/50 splitting phase for a plate that cannot reach 50/50.
class no_solution_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace beamsplit
