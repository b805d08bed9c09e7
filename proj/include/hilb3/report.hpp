#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hilb3 {

enum class Status { Pass, Fail, Undetermined };

std::string to_string(Status s);

struct ReportEntry {
    std::string id;
    Status status = Status::Pass;
    std::string expected;
    std::string actual;
    std::string provenance;  // "fixture", "derived" or "cross-check"
};

struct Report {
    std::string suite;
    std::vector<ReportEntry> entries;
    std::optional<double> wall_ms;

    void add(std::string id, bool ok, std::string expected, std::string actual,
             std::string provenance);
    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void append(const Report& other);

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
};

}  // namespace hilb3
