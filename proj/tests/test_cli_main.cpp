// Drives the installed CLI binary end to end: output format, exit codes,
// file artifacts, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meanineq/registry.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

RunResult run(const std::string& args) {
    const fs::path out_file = fs::temp_directory_path() / "meanineq_cli_out.txt";
    const std::string cmd = std::string(MEANINEQ_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_file);
    return r;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text) n += (c == '\n');
    return n;
}

} // namespace

TEST_CASE("eval prints 15 significant digits") {
    auto r = run("eval A 2 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
    CHECK(run("eval gini:2,1 1 2").out == "1.66666666666667\n");
    CHECK(run("eval N3 1 4").out == "2.33333333333333\n");
}

TEST_CASE("eval exit codes") {
    CHECK(run("eval NOSUCH 1 2").exit_code == 2);
    CHECK(run("eval A 0 2").exit_code == 3);
    CHECK(run("eval A -1 2").exit_code == 3);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("curve emits the requested CSV") {
    const fs::path csv = fs::temp_directory_path() / "meanineq_curve.csv";
    auto r = run("curve eq8.06 --points 5 --xmax 10 --out " + csv.string());
    CHECK(r.exit_code == 0);
    const std::string body = slurp(csv);
    CHECK(count_lines(body) == 6); // header + 5 rows
    CHECK(body.rfind("x,gap\n", 0) == 0);
    std::istringstream in(body);
    std::string line;
    std::getline(in, line);
    int row = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double x = std::stod(line.substr(0, comma));
        const double gap = std::stod(line.substr(comma + 1));
        CHECK(gap >= 0.0);
        if (row == 2) {
            CHECK(x == 1.0);
            CHECK(std::fabs(gap) <= 1e-14);
        }
        ++row;
    }
    CHECK(row == 5);
    CHECK(run("curve not-an-id --out " + csv.string()).exit_code == 2);
    CHECK(run("curve eq16.2 --out " + csv.string()).exit_code == 2); // distribution level
}

TEST_CASE("certify --all proves everything") {
    auto r = run("certify --all");
    CHECK(r.exit_code == 0);
    int proved = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) proved += line.find("Proved") != std::string::npos;
    CHECK(proved == 43);
}

TEST_CASE("certify --cert prints the landmark trace") {
    const fs::path cert = fs::path(MEANINEQ_SOURCE_DIR) / "data" / "certificates" / "thm21.p04.json";
    auto r = run("certify --cert " + cert.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Proved") != std::string::npos);
    CHECK(r.out.find("135168000") != std::string::npos);
}

TEST_CASE("a tampered certificate file fails with its step index") {
    const fs::path src = fs::path(MEANINEQ_SOURCE_DIR) / "data" / "certificates" / "thm21.p20.json";
    std::string text = slurp(src);
    // Bump one digit inside the stored split payload.
    const auto pos = text.find("\"t\": \"");
    REQUIRE(pos != std::string::npos);
    const auto digit = text.find_first_of("0123456789", pos + 6);
    REQUIRE(digit != std::string::npos);
    text[digit] = text[digit] == '9' ? '8' : text[digit] + 1;
    const fs::path tampered = fs::temp_directory_path() / "tampered_cert.json";
    std::ofstream(tampered, std::ios::binary) << text;
    auto r = run("certify --cert " + tampered.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("Failed at step") != std::string::npos);
}

TEST_CASE("a syntactically broken certificate exits 2") {
    const fs::path broken = fs::temp_directory_path() / "broken_cert.json";
    std::ofstream(broken, std::ios::binary) << "{ this is not json\n";
    CHECK(run("certify --cert " + broken.string()).exit_code == 2);
}

TEST_CASE("registry export matches the library") {
    const fs::path out = fs::temp_directory_path() / "registry_cli.json";
    CHECK(run("registry export --out " + out.string()).exit_code == 0);
    std::ostringstream expected;
    meanineq::registry::export_json(expected);
    CHECK(slurp(out) == expected.str());
}

TEST_CASE("verify-all JSON reports are byte-identical across runs") {
    const fs::path a = fs::temp_directory_path() / "report_a.json";
    const fs::path b = fs::temp_directory_path() / "report_b.json";
    const std::string flags = "verify-all --grid 64 --samples 50 --format json --out ";
    CHECK(run(flags + a.string()).exit_code == 0);
    CHECK(run(flags + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    const std::string report = slurp(a);
    CHECK(report.back() == '\n');

    const auto doc = nlohmann::json::parse(report);
    const auto& summary = doc.at("summary");
    CHECK(summary.at("total").get<long>() >= 100);
    CHECK(summary.at("total").get<long>() ==
          summary.at("passed").get<long>() + summary.at("failed").get<long>());
    CHECK(summary.at("failed").get<long>() == 0);
    CHECK(summary.at("proved_exact").get<long>() == 43);
    long exact = 0;
    for (const auto& row : doc.at("results")) {
        CHECK(row.at("id").is_string());
        CHECK(row.at("min_value").is_number());
        CHECK(row.at("argmin_x").is_number());
        const std::string verdict = row.at("verdict").get<std::string>();
        CHECK((verdict == "pass" || verdict == "fail"));
        const std::string method = row.at("method").get<std::string>();
        CHECK((method == "numeric" || method == "exact"));
        exact += method == "exact";
    }
    CHECK(exact == 43);
    CHECK(doc.at("results").size() == static_cast<size_t>(summary.at("total").get<long>()));
}

TEST_CASE("verify-all rejects bad flags") {
    CHECK(run("verify-all --format yaml").exit_code == 2);
    CHECK(run("verify-all --grid 4").exit_code == 2);
    CHECK(run("verify-all --xmax 0.5").exit_code == 2);
}
