#include "gmverify/report.hpp"

namespace gmv {

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["tolerances"] = tolerances;
    nlohmann::json entries = nlohmann::json::array();
    for (const CheckEntry& e : results) {
        entries.push_back({{"id", e.id},
                           {"check", e.check},
                           {"status", e.status},
                           {"margin", e.margin},
                           {"detail", e.detail}});
    }
    j["results"] = entries;
    j["summary"] = {{"pass", summary.pass},
                    {"fail", summary.fail},
                    {"skip", summary.skip},
                    {"error", summary.error},
                    {"graphs", summary.graphs}};
    j["wall_time_s"] = wall_time_s;
    return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    for (const auto& e : j.at("results")) {
        CheckEntry entry;
        entry.id = e.at("id").get<std::string>();
        entry.check = e.at("check").get<std::string>();
        entry.status = e.at("status").get<std::string>();
        entry.margin = e.at("margin").get<double>();
        entry.detail = e.at("detail").get<std::string>();
        r.results.push_back(std::move(entry));
    }
    const auto& s = j.at("summary");
    r.summary.pass = s.at("pass").get<std::int64_t>();
    r.summary.fail = s.at("fail").get<std::int64_t>();
    r.summary.skip = s.at("skip").get<std::int64_t>();
    r.summary.error = s.at("error").get<std::int64_t>();
    r.summary.graphs = s.at("graphs").get<std::int64_t>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    return r;
}

}  // namespace gmv
