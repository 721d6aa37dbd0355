#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "beamsplit/slab.hpp"

namespace beamsplit {

// Numeric literal: optional sign, decimal digits with optional fraction and
// e-exponent, and an optional trailing "pi" multiplier ("0.5pi" is pi / 2).
// Returns nullopt on malformed input; no surrounding junk is accepted.
std::optional<double> parse_number(std::string_view text);

// Complex literal "a", "bi", "a+bi" or "a-bi"; each component follows the
// parse_number grammar.
std::optional<Complex> parse_complex(std::string_view text);

// 17-significant-digit decimal form; always round-trips the double exactly.
// nan serializes as the literal "nan".
std::string format_g17(double v);

// 5-significant-digit form for human-facing reports.
std::string format_g5(double v);

}  // namespace beamsplit
