#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace gmv {

struct CheckEntry {
    std::string id;
    std::string check;
    std::string status;  // pass | fail | skip | error
    double margin = 0.0;
    std::string detail;

    bool operator==(const CheckEntry&) const = default;
};

struct RunSummary {
    std::int64_t pass = 0;
    std::int64_t fail = 0;
    std::int64_t skip = 0;
    std::int64_t error = 0;
    std::int64_t graphs = 0;

    std::int64_t total() const { return pass + fail + skip + error; }
    bool operator==(const RunSummary&) const = default;
};

struct RunReport {
    std::string command;
    std::map<std::string, double> tolerances;
    std::vector<CheckEntry> results;
    RunSummary summary;
    double wall_time_s = 0.0;

    bool operator==(const RunReport&) const = default;

    nlohmann::json to_json() const;
    static RunReport from_json(const nlohmann::json& j);
};

}  // namespace gmv
