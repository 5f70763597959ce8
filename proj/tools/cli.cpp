// Command-line front end: evaluate kernels, run the verification suites,
// check certificates, export the registry, dump gap curves.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 domain error, 4 I/O error.

#include "meanineq/certify.hpp"
#include "meanineq/distributions.hpp"
#include "meanineq/errors.hpp"
#include "meanineq/kernels.hpp"
#include "meanineq/numverify.hpp"
#include "meanineq/registry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace meanineq;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct RunSummary {
    long total = 0;
    long passed = 0;
    long failed = 0;
    long proved_exact = 0;
    double wall_time_seconds = 0.0;
};

struct ResultRow {
    std::string id;
    bool pass = false;
    double min_value = 0.0;
    double argmin_x = 0.0;
    std::string method; // "numeric" or "exact"
    std::string detail; // failure reason for exact rows
};

int cmd_eval(const std::string& kernel, double a, double b) {
    kernels::KernelKind kind = kernels::KernelKind::parse(kernel);
    const double value = kernels::eval_kernel(kind, kernels::PositivePair::checked(a, b));
    std::printf("%.15g\n", value);
    return kExitOk;
}

int cmd_curve(const std::string& id, int points, double x_max, const std::string& out_path) {
    const registry::Statement* stmt = registry::find(id);
    if (!stmt) {
        std::cerr << "unknown statement id \"" << id << "\"\n";
        return kExitUsage;
    }
    if (stmt->level != registry::Level::Kernel) {
        std::cerr << "statement " << id << " is distribution-level; curves need a kernel-level id\n";
        return kExitUsage;
    }
    if (points < 2 || !(x_max > 1.0)) {
        std::cerr << "need --points >= 2 and --xmax > 1\n";
        return kExitUsage;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return kExitIo;
    }
    out << "x,gap\n";
    const double u_max = std::log(x_max);
    char line[80];
    for (int i = 0; i < points; ++i) {
        const double u = -u_max + 2.0 * u_max * static_cast<double>(i) / (points - 1);
        const double x = std::exp(u);
        const double gap = kernels::eval_combination(stmt->combo, kernels::PositivePair{x, 1.0});
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", x, gap);
        out << line;
    }
    if (!out.good()) {
        std::cerr << "write failed: " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

void print_cert_result(const certify::CertResult& res, bool with_trace) {
    if (res.proved) {
        std::printf("%-12s Proved\n", res.statement_id.c_str());
    } else {
        std::printf("%-12s Failed at step %d: %s\n", res.statement_id.c_str(), res.failed_step, res.reason.c_str());
    }
    if (with_trace) {
        for (size_t i = 0; i < res.trace.size(); ++i) {
            std::printf("  step %zu: %s %s\n", i, res.trace[i].step.c_str(), res.trace[i].detail.c_str());
        }
    }
}

int cmd_certify(const std::vector<std::string>& cert_paths, bool all) {
    bool every_proved = true;
    if (all) {
        for (const auto& cert : certify::builtin_certificates()) {
            certify::CertResult res = certify::check_certificate(cert);
            print_cert_result(res, false);
            every_proved = every_proved && res.proved;
        }
    }
    for (const auto& path : cert_paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "cannot open " << path << "\n";
            return kExitIo;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        certify::Certificate cert = certify::parse_certificate(text);
        certify::CertResult res = certify::check_certificate(cert);
        print_cert_result(res, true);
        every_proved = every_proved && res.proved;
    }
    return every_proved ? kExitOk : kExitVerifyFailed;
}

int cmd_registry_export(const std::string& out_path) {
    registry::export_json_file(out_path);
    return kExitOk;
}

int cmd_verify_all(double tol, int grid, uint64_t seed, double x_max, int samples, int jobs,
                   const std::string& format, const std::string& out_path) {
    numverify::VerifyConfig cfg;
    cfg.tol_rel = tol;
    cfg.grid_points = grid;
    cfg.seed = seed;
    cfg.x_max = x_max;
    cfg.distribution_samples = samples;
    try {
        cfg.check();
    } catch (const Error& e) {
        std::cerr << "bad configuration: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<ResultRow> rows;
    for (const auto& rep : numverify::verify_all(cfg, jobs)) {
        rows.push_back({rep.statement_id, rep.pass, rep.min_value, rep.argmin_x, "numeric", ""});
    }
    for (const auto& cert : certify::builtin_certificates()) {
        certify::CertResult res = certify::check_certificate(cert);
        // Exact rows certify "min 0 attained on the diagonal"; the numbers
        // are nominal since the proof is symbolic.
        rows.push_back({res.statement_id, res.proved, 0.0, 1.0, "exact",
                        res.proved ? "" : ("step " + std::to_string(res.failed_step) + ": " + res.reason)});
    }

    RunSummary summary;
    summary.total = static_cast<long>(rows.size());
    for (const auto& r : rows) {
        (r.pass ? summary.passed : summary.failed) += 1;
        if (r.method == "exact" && r.pass) summary.proved_exact += 1;
    }
    summary.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string rendered;
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["summary"] = {{"total", summary.total},
                          {"passed", summary.passed},
                          {"failed", summary.failed},
                          {"proved_exact", summary.proved_exact},
                          {"seed", cfg.seed},
                          {"tol", cfg.tol_rel},
                          {"grid", cfg.grid_points}};
        auto results = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json jr;
            jr["id"] = r.id;
            jr["verdict"] = r.pass ? "pass" : "fail";
            jr["min_value"] = r.min_value;
            jr["argmin_x"] = r.argmin_x;
            jr["method"] = r.method;
            if (!r.detail.empty()) jr["detail"] = r.detail;
            results.push_back(std::move(jr));
        }
        doc["results"] = std::move(results);
        rendered = doc.dump(2) + "\n";
    } else {
        // Text report: failures first.
        std::string text;
        char line[256];
        for (const auto& r : rows) {
            if (r.pass) continue;
            std::snprintf(line, sizeof line, "FAIL %-12s method=%s min=%.6g at x=%.6g %s\n", r.id.c_str(),
                          r.method.c_str(), r.min_value, r.argmin_x, r.detail.c_str());
            text += line;
        }
        for (const auto& r : rows) {
            if (!r.pass) continue;
            std::snprintf(line, sizeof line, "pass %-12s method=%s min=%.6g at x=%.6g\n", r.id.c_str(),
                          r.method.c_str(), r.min_value, r.argmin_x);
            text += line;
        }
        std::snprintf(line, sizeof line,
                      "summary: total=%ld passed=%ld failed=%ld proved_exact=%ld wall_time=%.2fs\n", summary.total,
                      summary.passed, summary.failed, summary.proved_exact, summary.wall_time_seconds);
        text += line;
        rendered = std::move(text);
    }

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitIo;
        }
        out << rendered;
        if (!out.good()) {
            std::cerr << "write failed: " << out_path << "\n";
            return kExitIo;
        }
    }
    std::fprintf(stderr, "verified %ld statements, %ld exact certificates in %.2fs: %s\n",
                 summary.total - summary.proved_exact, summary.proved_exact, summary.wall_time_seconds,
                 summary.failed == 0 ? "all pass" : "FAILURES PRESENT");
    return summary.failed == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mean-inequality registry, numeric verifier and certificate checker"};
    app.require_subcommand(1);

    // eval
    std::string eval_kernel_name;
    double eval_a = 0, eval_b = 0;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a kernel at (a, b)");
    eval_cmd->add_option("kernel", eval_kernel_name, "Kernel name (A, G, N2, gini:r,s, power:r, lehmer:r, I, ...)")
        ->required();
    eval_cmd->add_option("a", eval_a, "First argument")->required();
    eval_cmd->add_option("b", eval_b, "Second argument")->required();

    // verify-all
    double va_tol = 1e-10, va_xmax = 1e12;
    int va_grid = 4096, va_samples = 1000, va_jobs = 1;
    uint64_t va_seed = numverify::VerifyConfig{}.seed;
    std::string va_format = "text", va_out;
    auto* va_cmd = app.add_subcommand("verify-all", "Verify every registry statement and certificate");
    va_cmd->add_option("--tol", va_tol, "Relative tolerance");
    va_cmd->add_option("--grid", va_grid, "Grid points per statement");
    va_cmd->add_option("--seed", va_seed, "Seed for distribution sampling");
    va_cmd->add_option("--xmax", va_xmax, "Upper end of the probe range");
    va_cmd->add_option("--samples", va_samples, "Distribution-level sample count");
    va_cmd->add_option("--jobs", va_jobs, "Worker threads");
    va_cmd->add_option("--format", va_format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    va_cmd->add_option("--out", va_out, "Write the report to this path");

    // curve
    std::string curve_id, curve_out;
    int curve_points = 256;
    double curve_xmax = 1e6;
    auto* curve_cmd = app.add_subcommand("curve", "Dump a statement's gap profile as CSV");
    curve_cmd->add_option("statement", curve_id, "Registry statement id")->required();
    curve_cmd->add_option("--points", curve_points, "Row count");
    curve_cmd->add_option("--xmax", curve_xmax, "Range is [1/xmax, xmax]");
    curve_cmd->add_option("--out", curve_out, "Output CSV path")->required();

    // certify
    std::vector<std::string> certify_paths;
    bool certify_all = false;
    auto* certify_cmd = app.add_subcommand("certify", "Check proof certificates");
    certify_cmd->add_option("--cert", certify_paths, "Certificate JSON file (repeatable)");
    certify_cmd->add_flag("--all", certify_all, "Check the 43 built-in certificates");

    // registry export
    auto* registry_cmd = app.add_subcommand("registry", "Registry operations");
    registry_cmd->require_subcommand(1);
    std::string export_out;
    auto* export_cmd = registry_cmd->add_subcommand("export", "Write the statement catalog as JSON");
    export_cmd->add_option("--out", export_out, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval_cmd) return cmd_eval(eval_kernel_name, eval_a, eval_b);
        if (*va_cmd)
            return cmd_verify_all(va_tol, va_grid, va_seed, va_xmax, va_samples, va_jobs, va_format, va_out);
        if (*curve_cmd) return cmd_curve(curve_id, curve_points, curve_xmax, curve_out);
        if (*certify_cmd) {
            if (!certify_all && certify_paths.empty()) {
                std::cerr << "certify: pass --all and/or --cert PATH\n";
                return kExitUsage;
            }
            return cmd_certify(certify_paths, certify_all);
        }
        if (*export_cmd) return cmd_registry_export(export_out);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
