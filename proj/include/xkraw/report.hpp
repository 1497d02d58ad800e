#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace xkraw {

// One verified identity instance.  lhs/rhs carry the exact values of both
// sides as strings when the check failed (empty otherwise).
struct CaseResult {
    std::string id;
    std::string params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

// Outcome of a named verification suite.
struct Report {
    std::string suite;
    std::vector<CaseResult> cases;

    int total() const { return static_cast<int>(cases.size()); }
    int failed() const;
    bool ok() const { return failed() == 0; }

    void add_pass(std::string id, std::string params);
    void add_fail(std::string id, std::string params, std::string lhs, std::string rhs);
    // Records pass/fail from an equality outcome with both sides stringified.
    void add_eq(const std::string& id, const std::string& params, bool equal,
                const std::string& lhs, const std::string& rhs);
    void merge(const Report& other);
    // Stable order by (id, params) so parallel and serial runs agree.
    void sort();

    nlohmann::json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

} // namespace xkraw
