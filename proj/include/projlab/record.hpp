#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace projlab {

enum class AssertionStatus { pass, fail, soft_report };

std::string to_string(AssertionStatus status);

struct AssertionEntry {
    std::string name;
    AssertionStatus status = AssertionStatus::pass;
    double measured = 0;
    double threshold = 0;
    /// Soft reports only: measured value crossed the alarm threshold.
    bool alarm = false;
};

/// Named scalar results plus the parameters that produced them. Serialised flat:
/// params and results share the top level next to "name" and "assertions".
class ExperimentRecord {
public:
    explicit ExperimentRecord(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

    void param(const std::string& key, nlohmann::json value);
    void result(const std::string& key, nlohmann::json value);

    const nlohmann::json& params() const noexcept { return params_; }
    const nlohmann::json& results() const noexcept { return results_; }

    /// Hard assertion: `ok` decides pass/fail.
    void require(const std::string& name, bool ok, double measured, double threshold);
    /// Soft report: alarm raised when measured > threshold.
    void report_upper(const std::string& name, double measured, double threshold);
    /// Soft report: alarm raised when measured < threshold.
    void report_lower(const std::string& name, double measured, double threshold);

    const std::vector<AssertionEntry>& assertions() const noexcept { return assertions_; }
    bool failed() const;
    std::optional<AssertionEntry> first_failure() const;
    bool any_alarm() const;

    nlohmann::json to_json() const;

private:
    std::string name_;
    nlohmann::json params_ = nlohmann::json::object();
    nlohmann::json results_ = nlohmann::json::object();
    std::vector<AssertionEntry> assertions_;
};

}  // namespace projlab
