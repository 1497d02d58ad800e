#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

// Path of the binary under test, injected by CTest.
std::string cli_path() {
    const char* env = std::getenv("XKRAW_CLI");
    REQUIRE_MESSAGE(env != nullptr, "XKRAW_CLI must point at the xkraw binary");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::filesystem::path tmp = std::filesystem::temp_directory_path() /
                                ("xkraw_cli_" + std::to_string(++counter) + ".out");
    std::string cmd = cli_path() + " " + args + " > " + tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    std::filesystem::remove(tmp);
    return r;
}

nlohmann::json parse_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

} // namespace

TEST_CASE("verify: restricted sweep passes and reports clean JSON") {
    RunResult r = run_cli("verify --p 1/3 --N 2 --N 3 --d-max 2 --n-max 5 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"].get<int>() > 100);
    CHECK(j["cases"].is_array());
    // sorted stable order: ids ascending
    std::string prev;
    for (const auto& c : j["cases"]) {
        std::string id = c["id"].get<std::string>();
        CHECK(prev <= id);
        prev = id;
    }
}

TEST_CASE("verify: single suite selection") {
    RunResult r = run_cli("verify --suite symmetries --p 1/2 --N 3 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    CHECK(j["suite"] == "symmetries");
    for (const auto& c : j["cases"]) CHECK(c["pass"] == true);
}

TEST_CASE("verify: injected fault flips the exit code to 1") {
    RunResult r = run_cli("verify --suite eigen --p 1/3 --N 3 --d-max 1 --n-max 4 "
                          "--inject-fault --format json");
    CHECK(r.exit_code == 1);
    nlohmann::json j = parse_json(r.output);
    CHECK(j["summary"]["failed"].get<int>() > 0);
    // failing cases expose both exact sides
    bool found = false;
    for (const auto& c : j["cases"])
        if (c["pass"] == false && c.contains("lhs") && c.contains("rhs")) found = true;
    CHECK(found);
}

TEST_CASE("verify: parallel run emits the identical report") {
    const std::string common = "verify --p 1/3 --N 3 --d-max 2 --n-max 5 --format csv";
    RunResult serial = run_cli(common + " --jobs 1");
    RunResult parallel = run_cli(common + " --jobs 4");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("verify: --out writes the report to a file") {
    std::filesystem::path out = std::filesystem::temp_directory_path() / "xkraw_report.json";
    std::filesystem::remove(out);
    RunResult r = run_cli("verify --suite eigen --p 1/2 --N 2 --format json --out " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["summary"]["failed"] == 0);
    std::filesystem::remove(out);
}

TEST_CASE("config errors exit with 2") {
    CHECK(run_cli("verify --p 0 --N 3").exit_code == 2);          // p out of range
    CHECK(run_cli("verify --p 1/2 --N 0").exit_code == 2);        // N out of range
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);     // unknown suite
    CHECK(run_cli("kraw --p 0.5").exit_code == 2);                // decimals rejected
    CHECK(run_cli("kraw --n 5..2").exit_code == 2);               // empty range
    CHECK(run_cli("xkraw --j 7").exit_code != 0);                 // out-of-range option
    CHECK(run_cli("nonsense").exit_code != 0);                    // unknown subcommand
    CHECK(run_cli("").exit_code != 0);                            // subcommand required
    CHECK(run_cli("xkraw --j 1 --d 2 --n 2").exit_code == 2);     // n = d is no member
    CHECK(run_cli("recurrence --j 1 --d 1 --n 1").exit_code == 2);
}

TEST_CASE("kraw: coefficient tables in all formats") {
    RunResult r = run_cli("kraw --p 1/2 --N 2 --n 0..2 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    REQUIRE(j["items"].size() == 3);
    CHECK(j["items"][2]["degree"] == 2);
    // K_2(x; 1/2, 2) = x^2 - 2x + 1/2, constant term first
    CHECK(j["items"][2]["coeffs"] == nlohmann::json::array({"1/2", "-2", "1"}));

    RunResult csv = run_cli("kraw --p 1/2 --N 2 --n 2 --format csv");
    CHECK(csv.output.find("2,0,1/2") != std::string::npos);

    RunResult text = run_cli("kraw --p 1/2 --N 2 --n 2");
    CHECK(text.output.find("x^2 - 2*x + 1/2") != std::string::npos);

    // non-integer degree parameter
    RunResult half = run_cli("kraw --p 1/3 --a 7/2 --n 2 --format json");
    REQUIRE(half.exit_code == 0);
    CHECK(parse_json(half.output)["items"][0]["coeffs"][0] == "35/36");
}

TEST_CASE("xkraw: member tables, including the isolated ones") {
    RunResult r = run_cli("xkraw --j 2 --d 2 --p 1/2 --N 2 --n 0 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(parse_json(r.output)["items"][0]["coeffs"] == nlohmann::json::array({"1", "-1", "1"}));

    RunResult special = run_cli("xkraw --j 2 --d 2 --p 1/2 --N 2 --n 5 --format json");
    REQUIRE(special.exit_code == 0);
    CHECK(parse_json(special.output)["items"][0]["degree"] == 7);  // N + 2d + 1

    RunResult constant = run_cli("xkraw --j 4 --d 2 --p 1/2 --N 2 --n -3 --format json");
    REQUIRE(constant.exit_code == 0);
    CHECK(parse_json(constant.output)["items"][0]["coeffs"] == nlohmann::json::array({"1"}));

    // ranges silently skip non-members (here n = d = 2)
    RunResult range = run_cli("xkraw --j 1 --d 2 --p 1/3 --N 4 --n 0..3 --format json");
    REQUIRE(range.exit_code == 0);
    CHECK(parse_json(range.output)["items"].size() == 3);
}

TEST_CASE("recurrence: methods agree and the table is exact") {
    RunResult r = run_cli("recurrence --j 2 --d 1 --p 1/3 --N 4 --n 0..6 --method both --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    CHECK(j["items"].is_array());
    CHECK(!j["items"].empty());
    CHECK(j.contains("q_pi"));

    // the (2,2) closed forms are attached when they apply
    RunResult r22 = run_cli("recurrence --j 2 --d 2 --p 1/2 --N 3 --n 0..3 --format json");
    REQUIRE(r22.exit_code == 0);
    nlohmann::json j22 = parse_json(r22.output);
    bool any_closed = false;
    for (const auto& row : j22["items"])
        if (row.contains("closed")) {
            any_closed = true;
            CHECK(row["match"] == true);
        }
    CHECK(any_closed);
}

TEST_CASE("resultant: closed form verified over the default parameter list") {
    RunResult r = run_cli("resultant --p 1/3 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"] == 220);

    RunResult r2 = run_cli("resultant --p 1/2 --a -2..3 --a 7/2 --n-max 4 --format json");
    REQUIRE(r2.exit_code == 0);
    CHECK(parse_json(r2.output)["summary"]["failed"] == 0);

    CHECK(run_cli("resultant --p 1").exit_code == 2);
}

TEST_CASE("family22: the full explicit family checks out") {
    RunResult r = run_cli("family22 --p 1/2 --N 3 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse_json(r.output);
    CHECK(j["summary"]["failed"] == 0);

    CHECK(run_cli("family22 --p 1/2 --N 2").exit_code == 2);  // needs N >= 3
}
