#include "koszulkit/fixtures.hpp"
#include "koszulkit/io.hpp"
#include "koszulkit/report.hpp"

#include <doctest.h>

using namespace koszulkit;
using nlohmann::json;

namespace {

JobSpec job_for(const std::string& fixture, int N, std::vector<std::string> checks) {
    Fixture f = builtin_fixture(fixture);
    JobSpec job;
    job.presentation_json = presentation_to_json(f.presentation);
    if (f.action) job.action_json = action_to_json(*f.action);
    job.max_degree = N;
    job.checks = std::move(checks);
    return job;
}

} // namespace

TEST_CASE("presentation JSON round trip") {
    for (const char* name : {"sym_3", "ext_2", "free_2", "dual_numbers", "sl2_adjoint_takiff"}) {
        Fixture f = builtin_fixture(name);
        json j = presentation_to_json(f.presentation);
        QuadraticPresentation back = presentation_from_json(j);
        CHECK(back.gen_names == f.presentation.gen_names);
        CHECK(back.relations.basis() == f.presentation.relations.basis());
        CHECK(presentation_to_json(back) == j);
    }
    json j = json::parse(R"({"generators":["x","y"],"relations":[{"terms":[{"c":"1","m":["x","y"]},{"c":"-1/2","m":["y","x"]}]}]})");
    QuadraticPresentation p = presentation_from_json(j);
    CHECK(p.relations.dim() == 1);
    CHECK(p.relations.contains(Vec{Rat(0), Rat(2), Rat(-1), Rat(0)}));
}

TEST_CASE("malformed inputs raise parse errors") {
    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"relations":[]})")), ParseError);
    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"generators":["x","x"]})")), ParseError);
    CHECK_THROWS_AS(
        presentation_from_json(json::parse(R"({"generators":["x"],"relations":[{"terms":[{"c":"1","m":["x","q"]}]}]})")),
        ParseError);
    CHECK_THROWS_AS(
        presentation_from_json(json::parse(R"({"generators":["x"],"relations":[{"terms":[{"c":"1/0","m":["x","x"]}]}]})")),
        ParseError);
    CHECK_THROWS_AS(action_from_json(json::parse(R"({"lie":{},"bialgebra":{}})"), 1), ParseError);
    CHECK_THROWS_AS(mat_from_json(json::parse(R"([["1","2"]])"), 1, 3), ParseError);
}

TEST_CASE("action JSON round trip") {
    for (const char* name : {"c2_sign_takiff", "sweedler_optional", "sl2_adjoint_takiff"}) {
        Fixture f = builtin_fixture(name);
        json j = action_to_json(*f.action);
        ActionProvider back = action_from_json(j, f.presentation.num_generators());
        CHECK(action_to_json(back) == j);
        CHECK(back.modules.size() == f.action->modules.size());
        for (const auto& g : back.generators()) CHECK(back.act_on_v(g) == f.action->act_on_v(g));
    }
    // an unlisted [f, e] defaults to -[e, f]
    json lie = json::parse(R"({"lie":{"basis":["e","h","f"],
        "brackets":{"e,f":[{"c":"1","b":"h"}],"h,e":[{"c":"2","b":"e"}],"h,f":[{"c":"-2","b":"f"}]},
        "action":{}}})");
    ActionProvider p = action_from_json(lie, 0);
    CHECK(p.lie().bracket[2][0][1] == -1);
    CHECK(validate_lie(p.lie()).ok);
}

TEST_CASE("check names") {
    CHECK_THROWS_AS(expand_checks({}), UsageError);
    CHECK_THROWS_AS(expand_checks({"koszul", "bogus"}), UsageError);
    CHECK(expand_checks({"roundtrip", "validate"}) == std::vector<std::string>{"validate", "roundtrip"});
    CHECK(expand_checks({"all"}) == check_names());
}

TEST_CASE("jobs: exit codes and verdicts") {
    JobResult r = run_job(job_for("sym_3", 6, {"koszul"}));
    CHECK(r.exit_code == 0);
    CHECK(r.report["schema"] == "koszulkit/1");
    CHECK(r.report["results"]["koszul"]["verdict"]["summary"] == "Koszul up to 6");

    CHECK(run_job(job_for("sym_2", 3, {})).exit_code == 2);

    JobSpec missing;
    missing.input = "/nonexistent/p.json";
    missing.checks = {"hilbert"};
    CHECK(run_job(missing).exit_code == 2);

    JobSpec nk;
    nk.presentation_json = json::parse(
        R"({"generators":["x","y","z"],"relations":[{"terms":[{"c":"1","m":["z","x"]}]},
            {"terms":[{"c":"1","m":["x","y"]},{"c":"1","m":["z","z"]}]}]})");
    nk.max_degree = 4;
    nk.checks = {"koszul", "duality"};
    JobResult bad = run_job(nk);
    CHECK(bad.exit_code == 1);
    CHECK(bad.report["results"]["koszul"]["verdict"]["summary"] == "not Koszul: homology at (-2,4)");
    CHECK(bad.report["results"]["duality"]["pass"] == true);  // the verdicts agree
}

TEST_CASE("invalid actions fail validation and skip dependent checks") {
    JobSpec job = job_for("c2_sign_takiff", 3, {"smash"});
    (*job.action_json)["bialgebra"]["counit"] = {"1", "2"};
    JobResult r = run_job(job);
    CHECK(r.exit_code == 1);
    CHECK(r.report["results"]["validate"]["pass"] == false);
    CHECK(r.report["results"]["smash"].contains("skipped"));
}

TEST_CASE("reports are deterministic") {
    JobResult a = run_job(job_for("c2_sign_takiff", 3, {"all"}));
    JobResult b = run_job(job_for("c2_sign_takiff", 3, {"all"}));
    CHECK(a.exit_code == 0);
    json x = a.report, y = b.report;
    x.erase("timing");
    y.erase("timing");
    CHECK(x.dump() == y.dump());
    CHECK(reports_equal(a.report, b.report));
    y["results"]["hilbert"]["h"][1] = 7;
    std::vector<std::string> diffs;
    CHECK_FALSE(reports_equal(x, y, &diffs));
    CHECK(diffs.size() == 1);
}
