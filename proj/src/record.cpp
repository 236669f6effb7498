#include "projlab/record.hpp"

#include <stdexcept>

namespace projlab {

std::string to_string(AssertionStatus status) {
    switch (status) {
        case AssertionStatus::pass: return "pass";
        case AssertionStatus::fail: return "fail";
        case AssertionStatus::soft_report: return "soft-report";
    }
    return "unknown";
}

void ExperimentRecord::param(const std::string& key, nlohmann::json value) { params_[key] = std::move(value); }

void ExperimentRecord::result(const std::string& key, nlohmann::json value) {
    results_[key] = std::move(value);
}

void ExperimentRecord::require(const std::string& name, bool ok, double measured, double threshold) {
    assertions_.push_back({name, ok ? AssertionStatus::pass : AssertionStatus::fail, measured, threshold, false});
}

void ExperimentRecord::report_upper(const std::string& name, double measured, double threshold) {
    assertions_.push_back({name, AssertionStatus::soft_report, measured, threshold, measured > threshold});
}

void ExperimentRecord::report_lower(const std::string& name, double measured, double threshold) {
    assertions_.push_back({name, AssertionStatus::soft_report, measured, threshold, measured < threshold});
}

bool ExperimentRecord::failed() const { return first_failure().has_value(); }

std::optional<AssertionEntry> ExperimentRecord::first_failure() const {
    for (const auto& a : assertions_) {
        if (a.status == AssertionStatus::fail) return a;
    }
    return std::nullopt;
}

bool ExperimentRecord::any_alarm() const {
    for (const auto& a : assertions_) {
        if (a.alarm) return true;
    }
    return false;
}

nlohmann::json ExperimentRecord::to_json() const {
    nlohmann::json out = nlohmann::json::object();
    out["name"] = name_;
    for (const auto* part : {&params_, &results_}) {
        for (const auto& [key, value] : part->items()) {
            if (key == "name" || key == "assertions" || out.contains(key)) {
                throw std::logic_error("duplicate record key '" + key + "'");
            }
            out[key] = value;
        }
    }
    auto list = nlohmann::json::array();
    for (const auto& a : assertions_) {
        nlohmann::json entry = {{"name", a.name},
                                {"status", to_string(a.status)},
                                {"measured", a.measured},
                                {"threshold", a.threshold}};
        if (a.status == AssertionStatus::soft_report) entry["alarm"] = a.alarm;
        list.push_back(std::move(entry));
    }
    out["assertions"] = std::move(list);
    return out;
}

}  // namespace projlab
