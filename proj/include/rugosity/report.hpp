#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rugosity/errors.hpp"

namespace rugosity {

/// Ordered name -> value map of metric results plus the parameters they
/// were computed with. Values must be finite; metrics that are undefined
/// for the inputs are simply not added.
struct MetricReport {
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, double>> metrics;

    void add_parameter(const std::string& key, const std::string& value);
    void add_parameter(const std::string& key, double value);
    void add_parameter(const std::string& key, int value);

    /// Throws ValueError on non-finite values.
    void add_metric(const std::string& name, double value);

    /// Parameters as "# key,value" comment lines, then a "metric,value"
    /// header and one row per metric.
    std::string to_csv() const;

    /// {"version": ..., "parameters": {...}, "metrics": {...}} with
    /// insertion order preserved.
    std::string to_json() const;
};

/// Shortest deterministic decimal rendering used for CSV output.
std::string format_value(double value);

}  // namespace rugosity
