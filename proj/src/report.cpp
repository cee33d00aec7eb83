#include "rugosity/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace rugosity {

std::string format_value(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void MetricReport::add_parameter(const std::string& key, const std::string& value) {
    parameters.emplace_back(key, value);
}

void MetricReport::add_parameter(const std::string& key, double value) {
    parameters.emplace_back(key, format_value(value));
}

void MetricReport::add_parameter(const std::string& key, int value) {
    parameters.emplace_back(key, std::to_string(value));
}

void MetricReport::add_metric(const std::string& name, double value) {
    if (!std::isfinite(value)) {
        throw ValueError("metric '" + name + "' is not finite");
    }
    metrics.emplace_back(name, value);
}

std::string MetricReport::to_csv() const {
    std::string out = "# rugosity," + tool_version + "\n";
    for (const auto& [key, value] : parameters) {
        out += "# " + key + "," + value + "\n";
    }
    out += "metric,value\n";
    for (const auto& [name, value] : metrics) {
        out += name + "," + format_value(value) + "\n";
    }
    return out;
}

std::string MetricReport::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = tool_version;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : parameters) params[key] = value;
    j["parameters"] = params;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [name, value] : metrics) vals[name] = value;
    j["metrics"] = vals;
    return j.dump(2) + "\n";
}

}  // namespace rugosity
