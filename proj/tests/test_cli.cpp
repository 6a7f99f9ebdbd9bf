#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dap/construct.hpp"
#include "dap/dyck.hpp"
#include "support/oracles.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, bool keep_stderr = false) {
    std::string command = std::string(DAP_CLI_PATH) + " " + args +
                          (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
        output.append(buffer, got);
    }
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string strip(const std::string& text) {
    auto end = text.find_last_not_of(" \n\t");
    return end == std::string::npos ? "" : text.substr(0, end + 1);
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << contents;
    return path;
}

} // namespace

TEST_CASE("mul emits a three-step replayable trace") {
    auto r = run_cli("--field Q mul 3 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("result") == "6");
    CHECK(j.at("op") == "mul");
    CHECK(j.at("steps").size() == 3);
    dap::Trace trace = dap::Trace::from_json(r.output);
    CHECK_NOTHROW(dap::replay(trace));
}

TEST_CASE("construction results respect --trace none and --aux") {
    CHECK(strip(run_cli("--field Q --trace none add 1/2 1/3").output) == "5/6");
    CHECK(strip(run_cli("--field Q --trace none sub 5 3").output) == "2");
    CHECK(strip(run_cli("--field Q --trace none ldiv 6 2").output) == "3");
    CHECK(strip(run_cli("--field Q --trace none --aux 2,7 mul -4 1/2").output) == "-2");
    CHECK(strip(run_cli("--field F:5 --trace none add 3 4").output) == "2");
}

TEST_CASE("ratio, line equation, and midpoint commands") {
    CHECK(strip(run_cli("--field HQ ratio2 j i").output) == "-k");
    CHECK(strip(run_cli("--field Q ratio3 7 3 1").output) == "3");
    CHECK(strip(run_cli("--field Q ratio2 5 0").output) == "inf");
    auto lineq = nlohmann::json::parse(run_cli("--field Q lineq 3 1").output);
    CHECK(lineq.at("M") == "1/2");
    CHECK(lineq.at("N") == "-1/2");
    CHECK(strip(run_cli("--field F:2 midpoint 0 1").output) == "none");
    CHECK(strip(run_cli("--field F:2 midpoint 1 1").output) == "all");
    CHECK(strip(run_cli("--field Q midpoint 2 4").output) == "3");
}

TEST_CASE("mathematical errors exit 1 with machine-readable JSON") {
    auto r = run_cli("--field Q ldiv 1 0");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("error") == "DivisionByZero");

    auto aux = run_cli("--field Q --aux 3,0 add 1 2");
    CHECK(aux.exit_code == 1);
    CHECK(nlohmann::json::parse(aux.output).at("error") == "AuxOnLine");

    auto undefined = run_cli("--field Q ratio2 0 0");
    CHECK(undefined.exit_code == 1);
    CHECK(nlohmann::json::parse(undefined.output).at("error") == "UndefinedRatio");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("add 1").exit_code == 2);
    CHECK(run_cli("check everything").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("check suites emit reports and status-carrying exit codes") {
    auto r = run_cli("--field F:3 --samples 30 check ratio2");
    CHECK(r.exit_code == 0);
    auto report = nlohmann::json::parse(r.output);
    REQUIRE(report.is_array());
    bool any_fail = false;
    for (const auto& e : report) {
        if (e.at("status") == "fail") any_fail = true;
        CHECK(e.contains("identity"));
        CHECK(e.contains("lhs"));
        CHECK(e.contains("rhs"));
    }
    CHECK_FALSE(any_fail);

    CHECK(run_cli("--field F:2 --samples 20 check desargues").exit_code == 0);
    CHECK(run_cli("--field HQ --samples 15 check preservation").exit_code == 0);
}

TEST_CASE("dyck subcommands work against a polygon file") {
    auto path = write_temp("dap_cli_polygon.json", oracle::sample_polygon().to_json(2));

    auto validated = run_cli("dyck validate " + path.string());
    CHECK(validated.exit_code == 0);
    auto report = nlohmann::json::parse(validated.output);
    CHECK(report.is_array());

    auto presented = run_cli("dyck present " + path.string() + " B4");
    CHECK(presented.exit_code == 0);
    auto word = nlohmann::json::parse(presented.output);
    CHECK(word.at("word").at("A") == 1);
    CHECK(word.at("word").at("B") == 1);
    CHECK(word.at("path_measure") == 2);

    auto reached = run_cli("dyck reach " + path.string() + " A B1");
    CHECK(reached.exit_code == 0);
    auto path_json = nlohmann::json::parse(reached.output);
    CHECK(path_json.at("length") == 3);
    CHECK(path_json.at("path") == nlohmann::json::array({"A", "B", "C", "B1"}));

    auto missing = run_cli("dyck present " + path.string() + " nowhere");
    CHECK(missing.exit_code == 1);
    CHECK(nlohmann::json::parse(missing.output).at("error") == "UnknownVertex");
}

TEST_CASE("dyck validate exits 1 on an invalid polygon") {
    auto polygon = oracle::sample_polygon();
    polygon.edges = {{"A", "A-C"}, {"A-C", "B3"}, {"B3", "A"},
                     {"B", "B-C"}, {"B-C", "B4"}, {"B4", "B"}};
    polygon.cycles = {{"A", "A-C", "B3"}, {"B", "B-C", "B4"}};
    auto path = write_temp("dap_cli_invalid_polygon.json", polygon.to_json(2));
    auto r = run_cli("dyck validate " + path.string());
    CHECK(r.exit_code == 1);
    auto report = nlohmann::json::parse(r.output);
    bool any_fail = false;
    for (const auto& e : report) {
        if (e.at("status") == "fail") any_fail = true;
    }
    CHECK(any_fail);
}

TEST_CASE("SVG tracing renders rationals and falls back with a warning") {
    auto svg = run_cli("--field Q --trace svg add 1 2");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.rfind("<svg", 0) == 0);
    CHECK(svg.output.find("</svg>") != std::string::npos);

    auto fallback = run_cli("--field HQ --trace svg mul i j", /*keep_stderr=*/true);
    CHECK(fallback.exit_code == 0);
    CHECK(fallback.output.find("warning") != std::string::npos);
    CHECK(fallback.output.find("\"op\"") != std::string::npos);
}

TEST_CASE("--out writes the trace and prints the result") {
    auto out_path = std::filesystem::temp_directory_path() / "dap_cli_trace.json";
    std::filesystem::remove(out_path);
    auto r = run_cli("--field Q --out " + out_path.string() + " mul 3 2");
    CHECK(r.exit_code == 0);
    CHECK(strip(r.output) == "6");
    std::ifstream file(out_path);
    REQUIRE(file.good());
    std::string contents((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
    CHECK_NOTHROW(dap::replay(dap::Trace::from_json(contents)));
}

TEST_CASE("CLI output literals parse back into the scalar grammar") {
    for (const char* field : {"Q", "F:5", "F:2^2", "HQ"}) {
        auto spec = dap::FieldSpec::parse(field);
        auto r = run_cli(std::string("--field ") + field + " --trace none mul 1 1");
        CHECK(r.exit_code == 0);
        CHECK(dap::Scalar::parse(spec, strip(r.output)) == dap::Scalar::one(spec));
    }
}
