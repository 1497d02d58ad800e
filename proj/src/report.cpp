#include "xkraw/report.hpp"

#include <algorithm>
#include <sstream>

namespace xkraw {

int Report::failed() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

void Report::add_pass(std::string id, std::string params) {
    cases.push_back({std::move(id), std::move(params), true, "", ""});
}

void Report::add_fail(std::string id, std::string params, std::string lhs, std::string rhs) {
    cases.push_back({std::move(id), std::move(params), false, std::move(lhs), std::move(rhs)});
}

void Report::add_eq(const std::string& id, const std::string& params, bool equal,
                    const std::string& lhs, const std::string& rhs) {
    if (equal)
        add_pass(id, params);
    else
        add_fail(id, params, lhs, rhs);
}

void Report::merge(const Report& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

void Report::sort() {
    std::stable_sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.params < b.params;
    });
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["params"] = c.params;
        jc["pass"] = c.pass;
        if (!c.pass) {
            jc["lhs"] = c.lhs;
            jc["rhs"] = c.rhs;
        }
        j["cases"].push_back(std::move(jc));
    }
    j["summary"] = {{"total", total()}, {"failed", failed()}};
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

} // namespace

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "suite,id,params,pass,lhs,rhs\n";
    for (const auto& c : cases)
        os << csv_escape(suite) << ',' << csv_escape(c.id) << ',' << csv_escape(c.params) << ','
           << (c.pass ? "true" : "false") << ',' << csv_escape(c.lhs) << ',' << csv_escape(c.rhs)
           << '\n';
    return os.str();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (total() - failed()) << "/" << total() << " passed\n";
    for (const auto& c : cases) {
        if (c.pass) continue;
        os << "  FAIL " << c.id << " [" << c.params << "]\n";
        os << "    lhs = " << c.lhs << "\n    rhs = " << c.rhs << "\n";
    }
    return os.str();
}

} // namespace xkraw
