#include "quartic/report.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <sstream>

namespace quartic {

std::string format_double(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string current_timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    j["command"] = report.command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    if (report.value_real) j["value"] = *report.value_real;
    if (report.value_exact) j["valueExact"] = *report.value_exact;
    if (report.coefficients) j["coefficients"] = *report.coefficients;
    if (report.table) j["table"] = *report.table;
    if (report.function) {
        j["function"] = {{"numerator", report.function->numerator},
                         {"denominator", report.function->denominator}};
    }
    if (report.trace) j["trace"] = *report.trace;
    if (!report.metrics.empty()) {
        nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
        for (const auto& [k, v] : report.metrics) metrics[k] = v;
        j["metrics"] = metrics;
    }
    if (!report.notes.empty()) j["notes"] = report.notes;
    if (!report.checks.empty()) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
        j["checks"] = checks;
        j["allPassed"] = report.all_passed();
    }
    if (report.timestamp) j["timestamp"] = *report.timestamp;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const RunReport& report) {
    std::ostringstream out;
    if (report.table) {
        std::size_t width = 0;
        for (const auto& row : *report.table) width = std::max(width, row.size());
        out << "m";
        for (std::size_t i = 0; i < width; ++i) out << ",d_" << i;
        out << "\r\n";
        for (std::size_t m = 0; m < report.table->size(); ++m) {
            out << m;
            const auto& row = (*report.table)[m];
            for (std::size_t i = 0; i < width; ++i)
                out << "," << (i < row.size() ? csv_escape(row[i]) : "");
            out << "\r\n";
        }
        return out.str();
    }

    out << "section,key,value\r\n";
    out << "meta,schemaVersion,1\r\n";
    out << "meta,command," << csv_escape(report.command) << "\r\n";
    if (report.timestamp) out << "meta,timestamp," << csv_escape(*report.timestamp) << "\r\n";
    for (const auto& [k, v] : report.inputs)
        out << "input," << csv_escape(k) << "," << csv_escape(v) << "\r\n";
    if (report.value_real) out << "result,value," << format_double(*report.value_real) << "\r\n";
    if (report.value_exact) out << "result,valueExact," << csv_escape(*report.value_exact) << "\r\n";
    if (report.coefficients) {
        for (std::size_t i = 0; i < report.coefficients->size(); ++i)
            out << "coefficient," << i << "," << csv_escape((*report.coefficients)[i]) << "\r\n";
    }
    if (report.function) {
        for (std::size_t i = 0; i < report.function->numerator.size(); ++i)
            out << "numerator," << i << "," << csv_escape(report.function->numerator[i]) << "\r\n";
        for (std::size_t i = 0; i < report.function->denominator.size(); ++i)
            out << "denominator," << i << "," << csv_escape(report.function->denominator[i]) << "\r\n";
    }
    if (report.trace) {
        for (std::size_t i = 0; i < report.trace->size(); ++i)
            out << "trace," << i << "," << format_double((*report.trace)[i]) << "\r\n";
    }
    for (const auto& [k, v] : report.metrics)
        out << "metric," << csv_escape(k) << "," << format_double(v) << "\r\n";
    for (const auto& c : report.checks) {
        out << "check," << csv_escape(c.name) << "," << (c.passed ? "pass" : "fail") << "\r\n";
        out << "residual," << csv_escape(c.name) << "," << format_double(c.residual) << "\r\n";
    }
    for (const auto& n : report.notes) out << "note,," << csv_escape(n) << "\r\n";
    return out.str();
}

}  // namespace quartic
