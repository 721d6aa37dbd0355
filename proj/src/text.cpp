#include "beamsplit/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace beamsplit {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Validates the literal shape (from_chars is laxer than the grammar here:
// it would accept hex-float and junk-prefixed forms) and strips a trailing
// "pi" suffix.
bool scan_number(std::string_view text, std::string_view& mantissa, bool& has_pi) {
    has_pi = false;
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        has_pi = true;
        text.remove_suffix(2);
    }
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && is_digit(text[i])) {
        ++i;
        ++digits;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) {
            ++i;
            ++digits;
        }
    }
    if (digits == 0) return false;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < text.size() && is_digit(text[i])) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) return false;
    }
    if (i != text.size()) return false;
    mantissa = text;
    return true;
}

}  // namespace

std::optional<double> parse_number(std::string_view text) {
    std::string_view num;
    bool has_pi = false;
    if (!scan_number(text, num, has_pi)) return std::nullopt;
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);  // from_chars rejects '+'
    double v = 0.0;
    const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc{} || end != num.data() + num.size()) return std::nullopt;
    return has_pi ? v * std::numbers::pi : v;
}

std::optional<Complex> parse_complex(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.back() != 'i') {
        const auto re = parse_number(text);
        if (!re) return std::nullopt;
        return Complex(*re, 0.0);
    }
    text.remove_suffix(1);
    // Split at the last sign that is not an exponent sign; everything before
    // it is the real part, the rest (sign included) the imaginary part.
    for (std::size_t j = text.size(); j-- > 1;) {
        if ((text[j] == '+' || text[j] == '-') && text[j - 1] != 'e' && text[j - 1] != 'E') {
            const auto re = parse_number(text.substr(0, j));
            const auto im = parse_number(text.substr(j));
            if (!re || !im) return std::nullopt;
            return Complex(*re, *im);
        }
    }
    const auto im = parse_number(text);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
}

std::string format_g17(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_g5(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5g", v);
    return buf;
}

}  // namespace beamsplit
