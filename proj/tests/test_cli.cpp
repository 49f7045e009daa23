#include "doctest.h"
#include "commands.hpp"

#include <filesystem>
#include <fstream>

using namespace relag::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(RELAG_FIXTURE_DIR) + "/" + name; }

Options opts(const std::string& command, std::vector<std::string> files)
{
    Options o;
    o.command = command;
    for (auto& f : files) o.files.push_back(fixture(f));
    return o;
}

void check_verifies(const RunResult& r)
{
    REQUIRE(r.report["status"] == "ok");
    auto v = verify_report(r.report, RELAG_FIXTURE_DIR, 20);
    for (auto& f : v.failures) MESSAGE(f);
    CHECK(v.ok);
    CHECK(v.checks > 0);
}

}  // namespace

TEST_CASE("check-pair on S(2,4) reports the pair with m = l = 1") {
    auto r = run(opts("check-pair", {"s24.alg", "s24_q.mod"}));
    CHECK(r.exit_code == 0);
    const auto& res = r.report["result"];
    CHECK(res["is_pair"] == true);
    CHECK(res["n"] == 4);
    CHECK(res["m"]["text"] == "exact(1)");
    CHECK(res["l"]["text"] == "exact(1)");
    CHECK(res["auslander_pair"] == true);
    check_verifies(r);
}

TEST_CASE("report schema and inputs") {
    auto r = run(opts("hom", {"s24_q.mod", "s24_545.mod"}));
    const auto& rep = r.report;
    CHECK(rep["schema"] == 1);
    CHECK(rep["command"] == "hom");
    CHECK(rep["tool_version"].get<std::string>().rfind("relag ", 0) == 0);
    // the module files and the algebra they name
    CHECK(rep["inputs"]["files"].size() == 3);
    for (auto& f : rep["inputs"]["files"]) CHECK(f["fnv1a64"].get<std::string>().size() == 16);
    CHECK(rep["inputs"]["flags"]["cap"] == 24);
    CHECK(rep["inputs"]["flags"]["max_path_len"] == 20);
    CHECK(rep["result"]["dim"] == 3);
    check_verifies(r);
}

TEST_CASE("FNV-1a digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("tau of a projective module is zero") {
    auto o = opts("tau", {"twoloop_p1.mod"});
    o.n = 1;
    auto r = run(o);
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["zero"] == true);
    CHECK(r.report["result"]["dims"] == nlohmann::json({0, 0}));
    check_verifies(r);
}

TEST_CASE("every command's report verifies") {
    std::vector<Options> runs;
    runs.push_back(opts("hom", {"s24_q.mod", "s24_q.mod"}));
    auto ext = opts("ext", {"lambda_q.mod", "lambda_q.mod"});
    ext.degree = 4;
    runs.push_back(ext);
    runs.push_back(opts("resolve", {"s24_545.mod"}));
    auto inj = opts("resolve", {"ringel_t3.mod"});
    inj.injective = true;
    runs.push_back(inj);
    runs.push_back(opts("pd", {"lambda_q.mod"}));
    runs.push_back(opts("id", {"ringel_t3.mod"}));
    runs.push_back(opts("gldim", {"s24.alg"}));
    runs.push_back(opts("gldim", {"dualnumbers.alg"}));
    auto tau = opts("tau", {"lambda_q.mod"});
    tau.n = 2;
    runs.push_back(tau);
    tau.inverse = true;
    runs.push_back(tau);
    runs.push_back(opts("domdim", {"s24.alg", "s24_q.mod"}));
    auto codom = opts("domdim", {"s24_545.mod", "s24_q.mod"});
    codom.codominant = true;
    runs.push_back(codom);
    runs.push_back(opts("addq-dim", {"s24_545.mod", "s24_q.mod"}));
    auto cogen = opts("quasi-degree", {"lambda_q.mod"});
    cogen.cogenerator = true;
    runs.push_back(cogen);
    runs.push_back(opts("check-ig", {"s24.alg"}));
    auto qpct = opts("check-qpct", {"lambda_q.mod"});
    qpct.qn = 4;
    qpct.qm = 1;
    qpct.ql = 1;
    runs.push_back(qpct);
    runs.push_back(opts("correspond", {"s24_q.mod"}));
    auto back = opts("correspond", {"lambda_q.mod"});
    back.from_qpct = true;
    back.qn = 4;
    back.qm = 1;
    back.ql = 1;
    runs.push_back(back);
    runs.push_back(opts("cm-check", {"s24_545.mod"}));
    auto window = opts("window", {"lambda_q.mod", "lambda_q.mod"});
    window.left_depth = 1;
    window.right_depth = 1;
    runs.push_back(window);
    runs.push_back(opts("theorem-b", {"s24_q.mod"}));
    for (auto& o : runs) {
        CAPTURE(o.command);
        auto r = run(o);
        CHECK(r.exit_code != 2);
        check_verifies(r);
    }
}

TEST_CASE("mathematical no exits with 1") {
    CHECK(run(opts("check-ig", {"lambda.alg"})).exit_code == 1);
    CHECK(run(opts("cm-check", {"s24_545.mod"})).exit_code == 1);

    auto below = opts("check-qpct", {"lambda_q.mod"});
    below.qn = 3;
    below.qm = 1;
    below.ql = 1;
    auto r = run(below);
    CHECK(r.exit_code == 1);
    CHECK(r.report["result"].contains("hypothesis_violated"));

    auto forced = opts("correspond", {"twoloop_p1.mod"});
    forced.force_below_bound = true;
    auto f = run(forced);
    CHECK(f.exit_code == 1);
    CHECK(f.report["status"] == "ok");
    CHECK(f.report["result"]["round_trip_failure"]["expected"] == 6);
    CHECK(f.report["result"]["round_trip_failure"]["actual"] == 8);
}

TEST_CASE("errors exit with 2 and a structured diagnostic") {
    auto missing = run(opts("hom", {"no_such.mod", "s24_q.mod"}));
    CHECK(missing.exit_code == 2);
    CHECK(missing.report["status"] == "error");

    auto dir = std::filesystem::temp_directory_path() / "relag_cli_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "bad.alg") << "field GF(2)\nvertices 1 2\narrow a : 1 -> 3\n";
    }
    Options o;
    o.command = "gldim";
    o.files = {(dir / "bad.alg").string()};
    auto bad = run(o);
    CHECK(bad.exit_code == 2);
    CHECK(bad.report["error"]["type"] == "parse");
    CHECK(bad.report["error"]["line"] == 3);

    {
        std::ofstream(dir / "shape.mod") << "algebra " << fixture("s24.alg") << "\nside left\nspace 3 = 1\n"
                                         << "map alpha = [[1,0]]\n";
    }
    o.command = "pd";
    o.files = {(dir / "shape.mod").string()};
    auto shape = run(o);
    CHECK(shape.exit_code == 2);
    CHECK(shape.report["error"]["type"] == "parse");

    auto wrong = run(opts("hom", {"s24_q.mod"}));
    CHECK(wrong.exit_code == 2);
    CHECK(wrong.report["error"]["type"] == "usage");
    std::filesystem::remove_all(dir);
}

TEST_CASE("identical inputs give byte-identical reports") {
    auto o = opts("correspond", {"s24_q.mod"});
    o.seed = 11;
    CHECK(run(o).report.dump(2) == run(o).report.dump(2));
}

TEST_CASE("verify rejects tampered certificates and results") {
    auto r = run(opts("pd", {"s24_q.mod"}));
    auto bad_result = r.report;
    bad_result["result"]["value"]["value"] = 2;
    CHECK(!verify_report(bad_result, RELAG_FIXTURE_DIR, 20).ok);

    auto h = run(opts("hom", {"s24_q.mod", "s24_q.mod"}));
    auto bad_map = h.report;
    bool flipped = false;
    for (auto& [name, m] : bad_map["certificates"]["maps"].items()) {
        for (auto& block : m["blocks"])
            if (!block.empty() && !block[0].empty()) {
                block[0][0] = block[0][0] == "0" ? "1" : "0";
                flipped = true;
                break;
            }
        if (flipped) break;
    }
    REQUIRE(flipped);
    CHECK(!verify_report(bad_map, RELAG_FIXTURE_DIR, 20).ok);

    auto bad_schema = h.report;
    bad_schema["schema"] = 2;
    CHECK(!verify_report(bad_schema, RELAG_FIXTURE_DIR, 20).ok);
}
