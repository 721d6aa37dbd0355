#include "beamsplit/circuit.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "beamsplit/text.hpp"

namespace beamsplit::circuit {
namespace {

struct Token {
    std::string_view text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool valid_ident(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (const char ch : s) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-')
            return false;
    }
    return true;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

struct KeyValue {
    std::string_view key;
    std::string_view value;
    SourceSpan key_span;
    SourceSpan value_span;
    bool used = false;
};

class Parser {
public:
    explicit Parser(std::string_view source) : source_(source) {}

    ParseResult run() {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= source_.size()) {
            const std::size_t nl = source_.find('\n', pos);
            const std::size_t end = nl == std::string_view::npos ? source_.size() : nl;
            ++line_no;
            handle_line(line_no, source_.substr(pos, end - pos));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (in_circuit_)
            error({line_no, 1, 1}, "missing END at end of input");
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (result.diagnostics.empty()) result.circuits = std::move(circuits_);
        return result;
    }

private:
    void error(SourceSpan span, std::string message) {
        diagnostics_.push_back({span, std::move(message)});
    }

    SourceSpan span_of(int line_no, const Token& t) const {
        return {line_no, t.column, static_cast<int>(t.text.size())};
    }

    void handle_line(int line_no, std::string_view raw) {
        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::vector<Token> tokens = tokenize(raw);
        if (tokens.empty()) return;
        const Token& head = tokens[0];

        if (head.text == "CIRCUIT") {
            if (in_circuit_) {
                error(span_of(line_no, head), "missing END before new CIRCUIT");
                finish_circuit();
            }
            begin_circuit(line_no, tokens);
            return;
        }
        if (!in_circuit_) {
            error(span_of(line_no, head),
                  "expected CIRCUIT, got " + quoted(head.text));
            return;
        }
        if (head.text == "END") {
            if (tokens.size() > 1)
                error(span_of(line_no, tokens[1]),
                      "unexpected token " + quoted(tokens[1].text) + " after END");
            finish_circuit();
            return;
        }
        if (head.text == "BS") {
            parse_bs(line_no, tokens);
            return;
        }
        if (head.text == "DELAY") {
            parse_delay(line_no, tokens);
            return;
        }
        if (head.text == "PHASE") {
            parse_phase(line_no, tokens);
            return;
        }
        error(span_of(line_no, head), "unknown element " + quoted(head.text));
    }

    void begin_circuit(int line_no, const std::vector<Token>& tokens) {
        in_circuit_ = true;
        current_ = Circuit{};
        if (tokens.size() < 2) {
            error(span_of(line_no, tokens[0]), "CIRCUIT requires a name");
            return;
        }
        if (!valid_ident(tokens[1].text)) {
            error(span_of(line_no, tokens[1]),
                  "invalid circuit name " + quoted(tokens[1].text));
            return;
        }
        current_.name = std::string(tokens[1].text);
        if (tokens.size() > 2)
            error(span_of(line_no, tokens[2]),
                  "unexpected token " + quoted(tokens[2].text) + " after circuit name");
    }

    void finish_circuit() {
        circuits_.push_back(std::move(current_));
        current_ = Circuit{};
        in_circuit_ = false;
    }

    // Collects key=value tokens from tokens[start..]; false if any token is
    // malformed or a key repeats.
    bool collect_params(int line_no, const std::vector<Token>& tokens, std::size_t start,
                        std::vector<KeyValue>& out) {
        bool ok = true;
        for (std::size_t i = start; i < tokens.size(); ++i) {
            const Token& t = tokens[i];
            const std::size_t eq = t.text.find('=');
            if (eq == std::string_view::npos || eq == 0) {
                error(span_of(line_no, t), "expected key=value, got " + quoted(t.text));
                ok = false;
                continue;
            }
            KeyValue kv;
            kv.key = t.text.substr(0, eq);
            kv.value = t.text.substr(eq + 1);
            kv.key_span = {line_no, t.column, static_cast<int>(eq)};
            kv.value_span = {line_no, t.column + static_cast<int>(eq) + 1,
                             static_cast<int>(kv.value.size())};
            bool duplicate = false;
            for (const KeyValue& prev : out) duplicate = duplicate || prev.key == kv.key;
            if (duplicate) {
                error(kv.key_span, "duplicate parameter " + quoted(kv.key));
                ok = false;
                continue;
            }
            out.push_back(kv);
        }
        return ok;
    }

    // Finds and parses a required numeric parameter; nullopt emits a
    // positioned diagnostic.
    std::optional<double> take_number(std::vector<KeyValue>& params, std::string_view key,
                                      SourceSpan anchor) {
        for (KeyValue& kv : params) {
            if (kv.key != key) continue;
            kv.used = true;
            if (kv.value.empty()) {
                error(kv.value_span.length == 0 ? kv.key_span : kv.value_span,
                      "missing value for parameter " + quoted(key));
                return std::nullopt;
            }
            const auto v = parse_number(kv.value);
            if (!v) {
                error(kv.value_span, "malformed number " + quoted(kv.value));
                return std::nullopt;
            }
            return v;
        }
        error(anchor, "missing parameter " + quoted(key));
        return std::nullopt;
    }

    void reject_unused(const std::vector<KeyValue>& params) {
        for (const KeyValue& kv : params) {
            if (!kv.used) error(kv.key_span, "unknown parameter " + quoted(kv.key));
        }
    }

    void push_element(Element e) {
        if (diagnostics_.empty()) current_.elements.push_back(std::move(e));
        // With diagnostics pending the tree is void; elements are dropped.
    }

    void parse_bs(int line_no, const std::vector<Token>& tokens) {
        const SourceSpan anchor = span_of(line_no, tokens[0]);
        if (tokens.size() < 2) {
            error(anchor, "BS requires a form: lossless, absorbing, or quantum");
            return;
        }
        const Token& form = tokens[1];
        if (form.text == "lossless") {
            std::vector<KeyValue> params;
            if (!collect_params(line_no, tokens, 2, params)) return;
            const auto r = take_number(params, "r", anchor);
            const auto phi = take_number(params, "phi", anchor);
            reject_unused(params);
            if (!r || !phi) return;
            if (!(*r > 0.0 && *r < 1.0)) {
                error(value_span_of(params, "r"),
                      "r must lie in (0, 1): " + quoted(value_text_of(params, "r")));
                return;
            }
            Element e;
            e.kind = ElementKind::bs_lossless;
            e.r = *r;
            e.phi = *phi;
            e.span = anchor;
            push_element(e);
            return;
        }
        if (form.text == "absorbing") {
            std::vector<KeyValue> params;
            if (!collect_params(line_no, tokens, 2, params)) return;
            const auto tt = take_number(params, "tt", anchor);
            const auto rr = take_number(params, "rr", anchor);
            const auto phi = take_number(params, "phi", anchor);
            reject_unused(params);
            if (!tt || !rr || !phi) return;
            if (!(*tt > 0.0)) {
                error(value_span_of(params, "tt"),
                      "tt must be positive: " + quoted(value_text_of(params, "tt")));
                return;
            }
            if (!(*rr > 0.0)) {
                error(value_span_of(params, "rr"),
                      "rr must be positive: " + quoted(value_text_of(params, "rr")));
                return;
            }
            if (!(*tt + *rr <= 1.0)) {
                error(anchor, "tt + rr must not exceed 1");
                return;
            }
            Element e;
            e.kind = ElementKind::bs_absorbing;
            e.tt = *tt;
            e.rr = *rr;
            e.phi = *phi;
            e.span = anchor;
            push_element(e);
            return;
        }
        if (form.text == "quantum") {
            if (tokens.size() < 3) {
                error(anchor, "BS quantum requires a form name: eq3a or eq3b");
                return;
            }
            const Token& which = tokens[2];
            QuantumForm qf;
            if (which.text == "eq3a") {
                qf = QuantumForm::symmetric;
            } else if (which.text == "eq3b") {
                qf = QuantumForm::half_silvered;
            } else {
                error(span_of(line_no, which),
                      "unknown quantum form " + quoted(which.text));
                return;
            }
            if (tokens.size() > 3) {
                error(span_of(line_no, tokens[3]),
                      "unexpected token " + quoted(tokens[3].text) +
                          " after quantum form");
                return;
            }
            Element e;
            e.kind = ElementKind::bs_quantum;
            e.form = qf;
            e.span = anchor;
            push_element(e);
            return;
        }
        error(span_of(line_no, form), "unknown BS form " + quoted(form.text));
    }

    void parse_delay(int line_no, const std::vector<Token>& tokens) {
        const SourceSpan anchor = span_of(line_no, tokens[0]);
        std::vector<KeyValue> params;
        if (!collect_params(line_no, tokens, 1, params)) return;
        const auto k_delta = take_number(params, "k_delta", anchor);
        reject_unused(params);
        if (!k_delta) return;
        Element e;
        e.kind = ElementKind::delay;
        e.k_delta = *k_delta;
        e.span = anchor;
        push_element(e);
    }

    void parse_phase(int line_no, const std::vector<Token>& tokens) {
        const SourceSpan anchor = span_of(line_no, tokens[0]);
        std::vector<KeyValue> params;
        if (!collect_params(line_no, tokens, 1, params)) return;
        int port = 0;
        for (KeyValue& kv : params) {
            if (kv.key != "port") continue;
            kv.used = true;
            if (kv.value == "1") {
                port = 1;
            } else if (kv.value == "2") {
                port = 2;
            } else {
                error(kv.value_span, "port must be 1 or 2: " + quoted(kv.value));
            }
        }
        if (port == 0 && diagnostics_empty_for_ports(params))
            error(anchor, "missing parameter 'port'");
        const auto theta = take_number(params, "theta", anchor);
        reject_unused(params);
        if (port == 0 || !theta) return;
        Element e;
        e.kind = ElementKind::phase;
        e.port = port;
        e.theta = *theta;
        e.span = anchor;
        push_element(e);
    }

    // True when no port parameter was present at all (as opposed to present
    // but invalid, which already produced a diagnostic).
    static bool diagnostics_empty_for_ports(const std::vector<KeyValue>& params) {
        for (const KeyValue& kv : params)
            if (kv.key == "port") return false;
        return true;
    }

    static SourceSpan value_span_of(const std::vector<KeyValue>& params,
                                    std::string_view key) {
        for (const KeyValue& kv : params)
            if (kv.key == key) return kv.value_span;
        return {};
    }

    static std::string value_text_of(const std::vector<KeyValue>& params,
                                     std::string_view key) {
        for (const KeyValue& kv : params)
            if (kv.key == key) return std::string(kv.value);
        return {};
    }

    std::string_view source_;
    std::vector<Circuit> circuits_;
    std::vector<Diagnostic> diagnostics_;
    Circuit current_;
    bool in_circuit_ = false;
};

TwoPortMatrix element_matrix(const Element& e, const CompileOptions& opts) {
    switch (e.kind) {
        case ElementKind::bs_lossless:
            return classical_bs_matrix(lossless_interface(e.r), {e.phi});
        case ElementKind::bs_absorbing:
            if (opts.require_lossless)
                throw std::domain_error(
                    "absorbing beamsplitter in a circuit that requires lossless elements");
            return slab_matrix(absorbing_interface(e.tt, e.rr), {e.phi});
        case ElementKind::bs_quantum:
            return quantum_bs_matrix(e.form);
        case ElementKind::delay:
            return {std::polar(1.0, e.k_delta), 0.0, 0.0, 1.0};
        case ElementKind::phase:
            if (e.port == 1) return {std::polar(1.0, e.theta), 0.0, 0.0, 1.0};
            return {1.0, 0.0, 0.0, std::polar(1.0, e.theta)};
    }
    throw std::logic_error("unreachable element kind");
}

}  // namespace

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream out;
    out << "line " << d.span.line << ", column " << d.span.column << ": " << d.message;
    return out.str();
}

bool operator==(const Element& a, const Element& b) {
    return a.kind == b.kind && a.r == b.r && a.phi == b.phi && a.tt == b.tt &&
           a.rr == b.rr && a.k_delta == b.k_delta && a.port == b.port &&
           a.theta == b.theta && a.form == b.form;
}

bool operator==(const Circuit& a, const Circuit& b) {
    return a.name == b.name && a.elements == b.elements;
}

ParseResult parse(std::string_view source) { return Parser(source).run(); }

std::string render(const Circuit& c) {
    std::ostringstream out;
    out << "CIRCUIT " << c.name << '\n';
    for (const Element& e : c.elements) {
        out << "  ";
        switch (e.kind) {
            case ElementKind::bs_lossless:
                out << "BS lossless r=" << format_g17(e.r) << " phi=" << format_g17(e.phi);
                break;
            case ElementKind::bs_absorbing:
                out << "BS absorbing tt=" << format_g17(e.tt) << " rr=" << format_g17(e.rr)
                    << " phi=" << format_g17(e.phi);
                break;
            case ElementKind::bs_quantum:
                out << "BS quantum "
                    << (e.form == QuantumForm::symmetric ? "eq3a" : "eq3b");
                break;
            case ElementKind::delay:
                out << "DELAY k_delta=" << format_g17(e.k_delta);
                break;
            case ElementKind::phase:
                out << "PHASE port=" << e.port << " theta=" << format_g17(e.theta);
                break;
        }
        out << '\n';
    }
    out << "END\n";
    return out.str();
}

std::string render(const std::vector<Circuit>& circuits) {
    std::string out;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        if (i != 0) out += '\n';
        out += render(circuits[i]);
    }
    return out;
}

TwoPortMatrix compile(const Circuit& c, CompileOptions opts) {
    TwoPortMatrix m = TwoPortMatrix::identity();
    for (const Element& e : c.elements) m = element_matrix(e, opts) * m;
    return m;
}

EvalResult evaluate(const TwoPortMatrix& m, Complex in1, Complex in2) {
    const auto [a1, a2] = m.apply(in1, in2);
    return {a1, a2, std::norm(a1), std::norm(a2)};
}

}  // namespace beamsplit::circuit
