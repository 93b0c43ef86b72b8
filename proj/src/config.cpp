#include "fracdiff/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>

#include "fracdiff/fdm.hpp"

namespace fracdiff {
namespace {

// --- expression grammar -----------------------------------------------------
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := number | variable | '(' expr ')' | '-' factor

struct ExprSyntaxError {
    size_t offset;
    std::string message;
};

class ExprParser {
public:
    ExprParser(std::string_view src, char var) : src_(src), var_(var) {}

    ScalarFn parse() {
        ScalarFn e = expr();
        skip_ws();
        if (pos_ != src_.size()) {
            throw ExprSyntaxError{pos_, "unexpected trailing input"};
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(
                                         src_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ScalarFn expr() {
        ScalarFn acc = term();
        for (;;) {
            if (consume('+')) {
                acc = [a = std::move(acc), b = term()](double v) {
                    return a(v) + b(v);
                };
            } else if (consume('-')) {
                acc = [a = std::move(acc), b = term()](double v) {
                    return a(v) - b(v);
                };
            } else {
                return acc;
            }
        }
    }

    ScalarFn term() {
        ScalarFn acc = factor();
        while (consume('*')) {
            acc = [a = std::move(acc), b = factor()](double v) {
                return a(v) * b(v);
            };
        }
        return acc;
    }

    ScalarFn factor() {
        skip_ws();
        if (pos_ >= src_.size()) {
            throw ExprSyntaxError{pos_, "expected a value"};
        }
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ScalarFn inner = expr();
            if (!consume(')')) {
                throw ExprSyntaxError{pos_, "expected ')'"};
            }
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return [a = factor()](double v) { return -a(v); };
        }
        if (c == var_) {
            ++pos_;
            return [](double v) { return v; };
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.data() + pos_;
            const char* end = src_.data() + src_.size();
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc()) {
                throw ExprSyntaxError{pos_, "malformed number"};
            }
            pos_ = static_cast<size_t>(ptr - src_.data());
            return [value](double) { return value; };
        }
        throw ExprSyntaxError{pos_, std::string("unexpected character '") +
                                        c + "'"};
    }

    std::string_view src_;
    char var_;
    size_t pos_ = 0;
};

// --- config parsing ---------------------------------------------------------

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view token, int line, int col) {
    token = trim(token);
    double value = 0.0;
    const char* begin = token.data();
    auto [ptr, ec] = std::from_chars(begin, begin + token.size(), value);
    if (ec != std::errc() || ptr != begin + token.size() || token.empty()) {
        throw MalformedValue("expected a number, got '" +
                                 std::string(token) + "'",
                             line, col);
    }
    return value;
}

int parse_int(std::string_view token, int line, int col) {
    token = trim(token);
    int value = 0;
    const char* begin = token.data();
    auto [ptr, ec] = std::from_chars(begin, begin + token.size(), value);
    if (ec != std::errc() || ptr != begin + token.size() || token.empty()) {
        throw MalformedValue("expected an integer, got '" +
                                 std::string(token) + "'",
                             line, col);
    }
    return value;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_expression(const std::string& source, char variable, int line,
                      int col) {
    try {
        ExprParser(source, variable).parse();
    } catch (const ExprSyntaxError& e) {
        throw MalformedValue(e.message, line,
                             col + static_cast<int>(e.offset));
    }
}

} // namespace

ScalarFn compile_expression(const std::string& source, char variable) {
    try {
        return ExprParser(source, variable).parse();
    } catch (const ExprSyntaxError& e) {
        throw MalformedValue(e.message, 0, static_cast<int>(e.offset) + 1);
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, int> seen_lines;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const size_t hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) continue;

        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw MalformedValue("expected 'key = value'", line_no, 1);
        }
        const std::string key{trim(line.substr(0, eq))};
        std::string_view value_raw = line.substr(eq + 1);
        size_t vstart = eq + 1;
        while (vstart < line.size() &&
               std::isspace(static_cast<unsigned char>(line[vstart]))) {
            ++vstart;
        }
        const int vcol = static_cast<int>(vstart) + 1;
        const std::string value{trim(value_raw)};
        seen_lines[key] = line_no;

        if (key == "alpha") {
            cfg.alphas.clear();
            size_t start = 0;
            while (start <= value.size()) {
                size_t comma = value.find(',', start);
                if (comma == std::string::npos) comma = value.size();
                const double a = parse_number(
                    std::string_view(value).substr(start, comma - start),
                    line_no, vcol);
                if (!(a > 0.0) || !(a <= 2.0)) {
                    throw MalformedValue("alpha must lie in (0, 2]", line_no,
                                         vcol);
                }
                cfg.alphas.push_back(a);
                start = comma + 1;
            }
        } else if (key == "k_alpha") {
            cfg.k_alpha = parse_number(value, line_no, vcol);
            if (!(cfg.k_alpha > 0.0)) {
                throw MalformedValue("k_alpha must be positive", line_no,
                                     vcol);
            }
        } else if (key == "L") {
            cfg.length = parse_number(value, line_no, vcol);
            if (!(cfg.length > 0.0)) {
                throw MalformedValue("L must be positive", line_no, vcol);
            }
        } else if (key == "N") {
            cfg.space_steps = parse_int(value, line_no, vcol);
            if (cfg.space_steps < 2) {
                throw MalformedValue("N must be >= 2", line_no, vcol);
            }
        } else if (key == "T") {
            cfg.final_time = parse_number(value, line_no, vcol);
            if (!(cfg.final_time > 0.0)) {
                throw MalformedValue("T must be positive", line_no, vcol);
            }
        } else if (key == "dt") {
            if (value == "auto") {
                cfg.dt.reset();
            } else {
                cfg.dt = parse_number(value, line_no, vcol);
                if (!(*cfg.dt > 0.0)) {
                    throw MalformedValue("dt must be positive or 'auto'",
                                         line_no, vcol);
                }
            }
        } else if (key == "safety") {
            cfg.safety = parse_number(value, line_no, vcol);
            if (!(cfg.safety > 0.0) || cfg.safety > 1.0) {
                throw MalformedValue("safety must lie in (0, 1]", line_no,
                                     vcol);
            }
        } else if (key == "scheme") {
            if (value == "fdm") {
                cfg.scheme = SchemeChoice::Fdm;
            } else if (value == "fem") {
                cfg.scheme = SchemeChoice::Fem;
            } else if (value == "both") {
                cfg.scheme = SchemeChoice::Both;
            } else {
                throw MalformedValue("scheme must be fdm, fem or both",
                                     line_no, vcol);
            }
        } else if (key == "ic_p0") {
            check_expression(value, 'x', line_no, vcol);
            cfg.ic_p0 = value;
        } else if (key == "ic_p1") {
            check_expression(value, 'x', line_no, vcol);
            cfg.ic_p1 = value;
        } else if (key == "bc_left") {
            check_expression(value, 't', line_no, vcol);
            cfg.bc_left = value;
        } else if (key == "bc_right") {
            check_expression(value, 't', line_no, vcol);
            cfg.bc_right = value;
        } else if (key == "probe_x") {
            cfg.probe_x = parse_number(value, line_no, vcol);
            if (*cfg.probe_x < 0.0) {
                throw MalformedValue("probe_x must be >= 0", line_no, vcol);
            }
        } else if (key == "memory_window") {
            cfg.memory_window = parse_int(value, line_no, vcol);
            if (*cfg.memory_window < 2) {
                throw MalformedValue("memory_window must be >= 2", line_no,
                                     vcol);
            }
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else {
            throw UnknownKey("unknown key '" + key + "'", line_no, 1);
        }
    }

    for (const char* required : {"alpha", "k_alpha", "L", "N", "T"}) {
        if (!seen_lines.contains(required)) {
            throw MissingRequired(std::string("missing required key '") +
                                  required + "'");
        }
    }
    if (cfg.probe_x && *cfg.probe_x > cfg.length) {
        throw MalformedValue("probe_x must lie in [0, L]",
                             seen_lines["probe_x"], 1);
    }
    return cfg;
}

std::string render(const RunConfig& cfg) {
    std::ostringstream out;
    out << "alpha = ";
    for (size_t i = 0; i < cfg.alphas.size(); ++i) {
        if (i) out << ", ";
        out << format_number(cfg.alphas[i]);
    }
    out << "\n";
    out << "k_alpha = " << format_number(cfg.k_alpha) << "\n";
    out << "L = " << format_number(cfg.length) << "\n";
    out << "N = " << cfg.space_steps << "\n";
    out << "T = " << format_number(cfg.final_time) << "\n";
    out << "dt = " << (cfg.dt ? format_number(*cfg.dt) : "auto") << "\n";
    out << "safety = " << format_number(cfg.safety) << "\n";
    out << "scheme = "
        << (cfg.scheme == SchemeChoice::Fdm
                ? "fdm"
                : cfg.scheme == SchemeChoice::Fem ? "fem" : "both")
        << "\n";
    out << "ic_p0 = " << cfg.ic_p0 << "\n";
    out << "ic_p1 = " << cfg.ic_p1 << "\n";
    out << "bc_left = " << cfg.bc_left << "\n";
    out << "bc_right = " << cfg.bc_right << "\n";
    if (cfg.probe_x) {
        out << "probe_x = " << format_number(*cfg.probe_x) << "\n";
    }
    if (cfg.memory_window) {
        out << "memory_window = " << *cfg.memory_window << "\n";
    }
    out << "output_dir = " << cfg.output_dir << "\n";
    return out.str();
}

ProblemSpec lower(const RunConfig& cfg, double alpha) {
    ProblemSpec spec;
    spec.order.alpha = alpha;
    spec.diffusivity = cfg.k_alpha;
    spec.grid.length = cfg.length;
    spec.grid.space_steps = cfg.space_steps;
    spec.grid.final_time = cfg.final_time;

    double dt = cfg.dt.value_or(
        cfg.safety *
        stable_dt_max(spec.grid.h(), alpha, spec.diffusivity));
    int steps = static_cast<int>(
        std::ceil(spec.grid.final_time / dt - 1e-12));
    spec.grid.time_steps =
        std::max(steps, spec.order.initial_condition_count());

    spec.initial_value = compile_expression(cfg.ic_p0, 'x');
    spec.initial_rate = compile_expression(cfg.ic_p1, 'x');
    spec.left_bc = compile_expression(cfg.bc_left, 't');
    spec.right_bc = compile_expression(cfg.bc_right, 't');
    return spec;
}

} // namespace fracdiff
