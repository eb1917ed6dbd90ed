// koszulkit: check quadratic presentations, emit fixtures, compare reports.

#include "koszulkit/fixtures.hpp"
#include "koszulkit/io.hpp"
#include "koszulkit/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace koszulkit;
using nlohmann::json;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void print_table(const json& rep) {
    if (rep.contains("error")) {
        std::cout << rep["error"]["kind"].get<std::string>() << " error: " << rep["error"]["message"].get<std::string>()
                  << "\n";
    }
    if (!rep.contains("results")) return;
    std::vector<std::string> order{"validate"};
    for (const auto& c : rep["checks"])
        if (c != "validate") order.push_back(c);
    for (const auto& name : order) {
        if (!rep["results"].contains(name)) continue;
        const json& r = rep["results"][name];
        std::cout << (r.value("pass", false) ? "PASS  " : "FAIL  ") << name;
        if (name == "koszul") std::cout << "  " << r["verdict"]["summary"].get<std::string>();
        if (name == "hilbert") std::cout << "  h = " << r["h"].dump();
        if (name == "dual") std::cout << "  dim H^! = " << r["hdual"].dump();
        if (name == "takiff" && !r.value("applicable", true)) std::cout << "  (not a Lie action)";
        if (r.contains("skipped")) std::cout << "  skipped: " << r["skipped"].get<std::string>();
        std::cout << "\n";
        if (name == "roundtrip")
            for (const auto& row : r["table"])
                std::cout << "        " << row["module"].get<std::string>() << ": A "
                          << (row["A"]["ok"].get<bool>() ? "pass" : "fail") << " (" << row["A"]["cells_checked"]
                          << " cells), B " << (row["B"]["ok"].get<bool>() ? "pass" : "fail") << " ("
                          << row["B"]["cells_checked"] << " cells)\n";
    }
}

int run_check(const JobSpec& job, const std::string& out) {
    JobResult r = run_job(job);
    if (out == "-") {
        std::cout << r.report.dump(2) << "\n";
    } else {
        print_table(r.report);
        if (!out.empty()) write_json_file(out, r.report);
    }
    return r.exit_code;
}

int run_fixtures(const std::string& name, const std::string& dir, bool list) {
    if (list) {
        for (const auto& n : builtin_fixture_names()) std::cout << n << "\n";
        return 0;
    }
    Fixture f;
    try {
        f = builtin_fixture(name);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::filesystem::create_directories(dir);
    const auto base = std::filesystem::path(dir) / name;
    write_json_file(base.string() + ".presentation.json", presentation_to_json(f.presentation));
    std::cout << base.string() << ".presentation.json\n";
    if (f.action) {
        write_json_file(base.string() + ".action.json", action_to_json(*f.action));
        std::cout << base.string() << ".action.json\n";
    }
    return 0;
}

int run_diff(const std::string& a, const std::string& b) {
    json ja, jb;
    try {
        ja = read_json_file(a);
        jb = read_json_file(b);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::vector<std::string> diffs;
    if (reports_equal(ja, jb, &diffs)) {
        std::cout << "reports agree (timing ignored)\n";
        return 0;
    }
    for (const auto& d : diffs) std::cout << d << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koszul duality checks for smash products of quadratic algebras"};
    app.require_subcommand(1);

    JobSpec job;
    std::string checks, out;
    auto* check = app.add_subcommand("check", "run checks on a presentation");
    check->add_option("--input", job.input, "presentation JSON")->required();
    check->add_option("--action", job.action, "A_0 action JSON");
    check->add_option("--max-degree", job.max_degree, "truncation degree N")->default_val(4);
    check->add_option("--checks", checks, "comma list of " + [] {
        std::string s;
        for (const auto& n : check_names()) s += n + ",";
        return s + "all";
    }())->required();
    check->add_option("--out", out, "report JSON path, '-' for stdout");
    check->add_option("--seed", job.seed, "seed for randomized checks")->default_val(job.seed);
    check->add_option("--jobs", job.jobs, "worker threads for homology")->default_val(1)->check(CLI::Range(1u, 256u));

    std::string fixture, dir = ".";
    bool list = false;
    auto* fix = app.add_subcommand("fixtures", "write a built-in fixture as JSON");
    fix->add_option("name", fixture, "sym_N, ext_N, free_N, dual_numbers, c2_sign_takiff, ...");
    fix->add_option("--out-dir", dir, "output directory")->default_val(".");
    fix->add_flag("--list", list, "list fixture names");

    std::string ra, rb;
    auto* diff = app.add_subcommand("report-diff", "compare two reports ignoring timing");
    diff->add_option("a", ra)->required();
    diff->add_option("b", rb)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) {
            job.checks = split_commas(checks);
            return run_check(job, out);
        }
        if (*fix) {
            if (!list && fixture.empty()) {
                std::cerr << "fixtures: a name or --list is required\n";
                return 2;
            }
            return run_fixtures(fixture, dir, list);
        }
        if (*diff) return run_diff(ra, rb);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
