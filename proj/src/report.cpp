#include "hilb3/report.hpp"

#include <algorithm>

namespace hilb3 {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Undetermined: return "undetermined";
    }
    return "?";
}

void Report::add(std::string id, bool ok, std::string expected, std::string actual,
                 std::string provenance) {
    entries.push_back({std::move(id), ok ? Status::Pass : Status::Fail, std::move(expected),
                       std::move(actual), std::move(provenance)});
}

void Report::append(const Report& other) {
    for (const auto& e : other.entries) {
        ReportEntry c = e;
        if (!other.suite.empty()) c.id = other.suite + "/" + c.id;
        entries.push_back(std::move(c));
    }
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

}  // namespace hilb3
