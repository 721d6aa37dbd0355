#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "beamsplit/slab.hpp"

namespace beamsplit::circuit {

// 1-based source location of a token.
struct SourceSpan {
    int line = 0;
    int column = 0;
    int length = 0;
};

// One positioned parse or validation error; the message names the offending
// token.
struct Diagnostic {
    SourceSpan span;
    std::string message;
};

// "line L, column C: message"
std::string format_diagnostic(const Diagnostic& d);

enum class ElementKind { bs_lossless, bs_absorbing, bs_quantum, delay, phase };

// One circuit element. Which fields are meaningful depends on kind:
//   bs_lossless(r, phi), bs_absorbing(tt, rr, phi), bs_quantum(form),
//   delay(k_delta), phase(port, theta).
// span records where the element keyword appeared in the source.
struct Element {
    ElementKind kind = ElementKind::delay;
    double r = 0.0;
    double phi = 0.0;
    double tt = 0.0;
    double rr = 0.0;
    double k_delta = 0.0;
    int port = 1;
    double theta = 0.0;
    QuantumForm form = QuantumForm::symmetric;
    SourceSpan span;
};

// Structural equality; source spans are ignored.
bool operator==(const Element& a, const Element& b);

// A named element list in signal order: the first element acts first.
struct Circuit {
    std::string name;
    std::vector<Element> elements;
};
bool operator==(const Circuit& a, const Circuit& b);

// Result of parsing a source file: circuits when diagnostics is empty,
// diagnostics otherwise (never a partial tree). Parsing is total: malformed
// input produces diagnostics, not exceptions, and recovery continues on the
// next line so one bad line does not mask later errors.
struct ParseResult {
    std::vector<Circuit> circuits;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(std::string_view source);

// Canonical text form: one element per line, two-space indent, numbers at 17
// significant digits. parse(render(c)) reproduces c structurally.
std::string render(const Circuit& c);
std::string render(const std::vector<Circuit>& circuits);

struct CompileOptions {
    bool require_lossless = false;  // reject absorbing beamsplitter elements
};

// Multiplies the element matrices in signal order: for elements e1..en the
// result is M(en) * ... * M(e1), so the compiled matrix runs the signal
// through e1 first. DELAY k contributes diag(e^{i k}, 1); PHASE applies
// e^{i theta} to the named port. Throws std::domain_error on parameter
// domain violations or when require_lossless meets an absorbing element.
TwoPortMatrix compile(const Circuit& c, CompileOptions opts = {});

// Result of applying a compiled matrix to an input state; ports keep the
// matrix row order (an identity circuit returns its input unchanged).
struct EvalResult {
    Complex a1, a2;
    double i1 = 0.0;
    double i2 = 0.0;
};

EvalResult evaluate(const TwoPortMatrix& m, Complex in1, Complex in2);

}  // namespace beamsplit::circuit
