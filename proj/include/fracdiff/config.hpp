#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracdiff/core.hpp"

namespace fracdiff {

enum class SchemeChoice { Fdm, Fem, Both };

/// Parsed run configuration. Initial/boundary data are kept as source
/// text in the tiny polynomial grammar (constants, the variable, + - *,
/// parentheses) and compiled when the config is lowered to a
/// ProblemSpec.
struct RunConfig {
    std::vector<double> alphas;
    double k_alpha = 1.0;
    double length = 1.0;          ///< L
    int space_steps = 2;          ///< N
    double final_time = 1.0;      ///< T
    std::optional<double> dt;     ///< absent = auto from the stability bound
    double safety = 0.9;
    SchemeChoice scheme = SchemeChoice::Both;
    std::string ic_p0 = "0";      ///< expression over x
    std::string ic_p1 = "0";      ///< expression over x, alpha > 1 only
    std::string bc_left = "0";    ///< expression over t
    std::string bc_right = "0";   ///< expression over t
    std::optional<double> probe_x; ///< absent = L/2
    std::optional<int> memory_window;
    std::string output_dir = ".";

    bool operator==(const RunConfig&) const = default;

    double probe() const { return probe_x.value_or(length / 2.0); }
};

/// Parses `key = value` lines with '#' comments. Throws UnknownKey or
/// MalformedValue with a 1-based line/column position, or
/// MissingRequired when alpha, k_alpha, L, N or T is absent.
RunConfig parse_config(const std::string& text);

/// Inverse serializer: parse_config(render(c)) == c for valid configs.
/// Numbers carry 17 significant digits.
std::string render(const RunConfig& config);

/// Compiles an expression in the one-variable grammar. The offset of a
/// syntax error is reported through MalformedValue (line 0) unless the
/// caller remaps it.
ScalarFn compile_expression(const std::string& source, char variable);

/// Builds the problem statement for one sweep member. The grid's step
/// count realizes the explicit dt when one is configured; otherwise a
/// single-step placeholder is used and the solver's auto policy applies.
ProblemSpec lower(const RunConfig& config, double alpha);

} // namespace fracdiff
