#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nckit/cli.hpp"
#include "nckit/json_io.hpp"

using namespace nckit;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = nckit::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path write_fixture(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "nckit_cli_tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

const char* kOctahedron = R"({"maximal": [["0+","1+","2+"],["0+","1+","2-"],["0+","1-","2+"],
  ["0+","1-","2-"],["0-","1+","2+"],["0-","1+","2-"],["0-","1-","2+"],["0-","1-","2-"]]})";

const char* kHollowTriangle = R"({"maximal": [["a","b"],["b","c"],["a","c"]]})";

const char* kPathPresentation = R"({"complex": {"maximal": [["a","b"],["b","c"]]}, "variant": "full"})";

}  // namespace

TEST_CASE("usage errors exit with code 3") {
    CHECK(run_cli({}).code == 3);
    CHECK(run_cli({"frobnicate"}).code == 3);
    CHECK(run_cli({"homology"}).code == 3);                       // missing input
    CHECK(run_cli({"clifford", "--n", "2", "--bogus"}).code == 3);
    CHECK(run_cli({"complex", "/nonexistent/path.json"}).code == 3);

    fs::path bad = write_fixture("bad.json", "{not json");
    RunResult r = run_cli({"homology", bad.string()});
    CHECK(r.code == 3);
    CHECK(r.err.find("error:") != std::string::npos);

    fs::path hollow = write_fixture("hollow.json", kHollowTriangle);
    CHECK(run_cli({"complex", hollow.string(), "--op", "bogus"}).code == 3);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("complex") != std::string::npos);
}

TEST_CASE("homology subcommand") {
    fs::path octa = write_fixture("octa.json", kOctahedron);
    RunResult r = run_cli({"homology", octa.string(), "--no-timestamp"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["subcommand"] == "homology");
    CHECK(j["pass"] == true);
    CHECK(j["homology"]["0"]["betti"] == 1);
    CHECK(j["homology"]["1"]["betti"] == 0);
    CHECK(j["homology"]["2"]["betti"] == 1);
    CHECK(j["homology"]["1"]["torsion"].empty());
    CHECK(j["rank_K0"] == 2);
    CHECK(j["rank_K1"] == 0);
}

TEST_CASE("complex subcommand operations") {
    fs::path hollow = write_fixture("hollow.json", kHollowTriangle);

    RunResult info = run_cli({"complex", hollow.string(), "--no-timestamp"});
    REQUIRE(info.code == 0);
    Json ij = info.json();
    CHECK(ij["info"]["num_vertices"] == 3);
    CHECK(ij["info"]["dimension"] == 1);

    RunResult flag = run_cli({"complex", hollow.string(), "--op", "flag", "--no-timestamp"});
    REQUIRE(flag.code == 0);
    Json fj = flag.json();
    REQUIRE(fj["complex"]["maximal"].size() == 1);
    CHECK(fj["complex"]["maximal"][0].size() == 3);

    RunResult skel = run_cli({"complex", hollow.string(), "--op", "skeleton", "--k", "0",
                              "--no-timestamp"});
    REQUIRE(skel.code == 0);
    CHECK(skel.json()["complex"]["maximal"].size() == 3);  // three isolated vertices

    RunResult bary = run_cli({"complex", hollow.string(), "--op", "barycentric",
                              "--no-timestamp"});
    REQUIRE(bary.code == 0);
    CHECK(bary.json()["complex"]["vertices"].size() == 6);  // 3 vertices + 3 edges
}

TEST_CASE("verify-hom subcommand verdicts drive the exit code") {
    fs::path pres = write_fixture("path_pres.json", kPathPresentation);
    fs::path good = write_fixture("id_assign.json", R"({"images": {
        "a": [{"coeff": 1, "word": ["a"]}],
        "b": [{"coeff": 1, "word": ["b"]}],
        "c": [{"coeff": 1, "word": ["c"]}]}})");
    RunResult ok = run_cli({"verify-hom", pres.string(), good.string(), "--no-timestamp"});
    CHECK(ok.code == 0);
    CHECK(ok.json()["checks"][0]["verdict"] == "Verified");

    // sends the vanishing product h_a h_c onto h_a h_b != 0
    fs::path bad = write_fixture("crossing_assign.json", R"({"images": {
        "a": [{"coeff": 1, "word": ["a"]}],
        "b": [{"coeff": 1, "word": ["b"]}],
        "c": [{"coeff": 1, "word": ["b"]}]}})");
    RunResult fail = run_cli({"verify-hom", pres.string(), bad.string(), "--no-timestamp"});
    CHECK(fail.code == 1);
    CHECK(fail.json()["checks"][0]["verdict"] == "Failed");

    fs::path missing = write_fixture("missing_assign.json", R"({"images": {
        "a": [{"coeff": 1, "word": ["a"]}]}})");
    CHECK(run_cli({"verify-hom", pres.string(), missing.string()}).code == 3);
}

TEST_CASE("verify-rep, clifford, crossed, cutoff, sigma-f all pass") {
    fs::path octa = write_fixture("octa.json", kOctahedron);
    RunResult vr = run_cli({"verify-rep", "--complex", octa.string(), "--dim", "3",
                            "--seed", "1", "--no-timestamp"});
    CHECK(vr.code == 0);
    CHECK(vr.json()["config"]["seed"] == 1);

    CHECK(run_cli({"clifford", "--n", "2", "--no-timestamp"}).code == 0);
    CHECK(run_cli({"crossed", "--group", "cyclic:2", "--seed", "0", "--no-timestamp"}).code == 0);
    CHECK(run_cli({"crossed", "--group", "cyclic:4", "--subgroup", "0,2", "--seed", "0",
                   "--no-timestamp"}).code == 0);

    fs::path pts = write_fixture("points.json", R"([[0.5, 0.3, 0.2]])");
    RunResult cut = run_cli({"cutoff", "--group", "cyclic:3", "--points", pts.string(),
                             "--no-timestamp"});
    CHECK(cut.code == 0);
    CHECK(cut.json()["num_sample_points"] == 3);

    RunResult sf = run_cli({"sigma-f", "--group", "zn:1", "--F", "-1,0,1", "--window", "ball:3",
                            "--no-timestamp"});
    REQUIRE(sf.code == 0);
    CHECK(sf.json()["info"]["num_vertices"] == 7);
}

TEST_CASE("reports are deterministic without timestamps") {
    fs::path octa = write_fixture("octa.json", kOctahedron);
    RunResult a = run_cli({"homology", octa.string(), "--no-timestamp"});
    RunResult b = run_cli({"homology", octa.string(), "--no-timestamp"});
    CHECK(a.out == b.out);

    // timestamped reports include the field; suppressed ones don't
    RunResult ts = run_cli({"homology", octa.string()});
    CHECK(ts.json().contains("timestamp"));
    CHECK(!a.json().contains("timestamp"));
}

TEST_CASE("output redirection and tolerance overrides") {
    fs::path octa = write_fixture("octa.json", kOctahedron);
    fs::path outp = fs::temp_directory_path() / "nckit_cli_tests" / "report.json";
    fs::remove(outp);
    RunResult r = run_cli({"homology", octa.string(), "-o", outp.string(), "--no-timestamp"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(outp);
    REQUIRE(f.good());
    Json j;
    f >> j;
    CHECK(j["pass"] == true);

    CHECK(run_cli({"clifford", "--n", "1", "--tol", "eps_idem=1e-6", "--no-timestamp"}).code == 0);
    CHECK(run_cli({"clifford", "--n", "1", "--tol", "bogus=1"}).code == 3);
}
