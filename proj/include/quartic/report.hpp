#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quartic {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
};

/// Exact rational function rendered as coefficient lists, constant first.
struct FunctionPayload {
    std::vector<std::string> numerator;
    std::vector<std::string> denominator;
};

/// Everything a command run wants to say, in one renderable bundle.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::optional<double> value_real;
    std::optional<std::string> value_exact;
    std::optional<std::vector<std::string>> coefficients;
    std::optional<std::vector<double>> trace;
    std::vector<CheckResult> checks;
    std::optional<std::vector<std::vector<std::string>>> table;
    std::optional<FunctionPayload> function;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::string> notes;
    std::optional<std::string> timestamp;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Shortest round-trip decimal form.
std::string format_double(double x);

std::string current_timestamp_utc();

nlohmann::ordered_json to_json(const RunReport& report);

/// section,key,value rows; a table renders as a padded matrix instead.
std::string to_csv(const RunReport& report);

}  // namespace quartic
