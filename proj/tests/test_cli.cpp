#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wallscope/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = wallscope::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("walls") {
    const RunResult r = run_cli({"walls", "--char", "1,0,-6,15"});
    REQUIRE(r.status == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.size() == 4);
    const std::vector<std::string> centers = {"-4", "-9/2", "-11/2", "-13/2"};
    const std::vector<std::string> radii = {"4", "33/4", "73/4", "121/4"};
    for (int i = 0; i < 4; ++i) {
        CHECK(arr[i]["center"] == centers[i]);
        CHECK(arr[i]["radius_sq"] == radii[i]);
    }
    // byte-identical reruns
    CHECK(run_cli({"walls", "--char", "1,0,-6,15"}).out == r.out);
}

TEST_CASE("euler") {
    const RunResult r = run_cli({"euler", "--e", "0,1,-9/2,61/6", "--f", "1,-1,-3/2,29/6"});
    CHECK(r.status == 0);
    CHECK(r.out == "-13\n");
    const RunResult frac = run_cli({"euler", "--e", "1,0,0,0", "--f", "0,0,0,1/2"});
    CHECK(frac.out == "1/2\n");
}

TEST_CASE("points") {
    const RunResult r = run_cli({"points", "--n", "6", "--pos", "collinear", "--deg", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"h0\":3,\"h1\":3}\n");
}

TEST_CASE("hyperbola") {
    const RunResult r = run_cli({"hyperbola", "--char", "1,0,-6,15"});
    CHECK(r.status == 0);
    CHECK(r.out == "beta^2 - alpha^2 = 12\n");
    const RunResult j = run_cli({"hyperbola", "--char", "1,0,-6,15", "--json"});
    const json h = json::parse(j.out);
    CHECK(h["beta_sq"] == "1");
    CHECK(h["const"] == "-12");
}

TEST_CASE("destab json shape") {
    const RunResult r = run_cli({"destab", "--char", "1,0,-6,15", "--json"});
    REQUIRE(r.status == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.size() == 12);
    CHECK(arr[0]["sub"] == json::array({"1", "-2", "2", "-4/3"}));
    CHECK(arr[0]["quot"] == json::array({"0", "2", "-8", "49/3"}));
    CHECK(arr[0]["wall"]["center"] == "-4");
    CHECK(arr[0]["annotations"]["sub"] == "LineBundle(-2)");
    CHECK(arr[0]["annotations"]["quot"] == "QuadricSheaf(-3)");
    CHECK(arr[0]["side_note"] == "left+right");
    const json& last = arr[11];
    CHECK(last["sub"] == json::array({"1", "-1", "1/2", "-37/6"}));
    CHECK(last["annotations"]["quot"] == "PlaneSheaf(-6)");
}

TEST_CASE("dtpt") {
    const RunResult r = run_cli({"dtpt", "--char", "1,0,-6,15", "--json"});
    REQUIRE(r.status == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.size() == 6);
    CHECK(arr[0]["ideal"] == json::array({"1", "0", "-6", "16"}));
    CHECK(arr[5]["torsion_length"] == 6);
    // domain error: not an ideal-sheaf-shaped class
    CHECK(run_cli({"dtpt", "--char", "0,0,6,-15"}).status == 1);
}

TEST_CASE("ext") {
    const RunResult r = run_cli({"ext", "--wall", "green", "--json"});
    REQUIRE(r.status == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.size() == 4);
    CHECK(arr[2]["direction"] == "BA");
    CHECK(arr[2]["dim"] == 13);
    CHECK(run_cli({"ext", "--wall", "teal"}).status == 1);
    const RunResult all = run_cli({"ext", "--json"});
    CHECK(json::parse(all.out).size() == 33);
}

TEST_CASE("components") {
    const RunResult pt = run_cli({"components", "--side", "pt", "--json"});
    REQUIRE(pt.status == 0);
    const json arr = json::parse(pt.out);
    REQUIRE(arr.size() == 8);
    CHECK(arr[0]["total_dim"] == 24);
    CHECK(arr[7]["total_dim"] == 36);
    const RunResult hilb = run_cli({"components", "--side", "hilb"});
    CHECK(hilb.status == 0);
    CHECK(hilb.out.find("H1") != std::string::npos);
    CHECK(hilb.out.find("expected") != std::string::npos);
    const RunResult both = run_cli({"components", "--json"});
    CHECK(json::parse(both.out).size() == 13);
    CHECK(run_cli({"components", "--side", "nope"}).status == 2);
}

TEST_CASE("chambers") {
    const RunResult r = run_cli({"chambers"});
    CHECK(r.status == 0);
    CHECK(r.out == "N0 0\nN1 1\nN2 1\nN3 2\nN4 4\nN5 7\nN6 8\n");
    const RunResult j = run_cli({"chambers", "--json"});
    const json arr = json::parse(j.out);
    REQUIRE(arr.size() == 7);
    CHECK(arr[5]["components"] == 7);
    CHECK(arr[5]["destab_strata"].size() == 3);
}

TEST_CASE("genus-bound") {
    CHECK(run_cli({"genus-bound", "--deg", "6"}).out == "10\n");
    CHECK(run_cli({"genus-bound", "--deg", "6", "--nonplanar"}).out == "6\n");
    CHECK(run_cli({"genus-bound", "--deg", "2", "--nonplanar"}).status == 1);
}

TEST_CASE("plot") {
    const RunResult r = run_cli({"plot", "--char", "1,0,-6,15"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("<svg") == 0);
    CHECK(r.out == run_cli({"plot", "--char", "1,0,-6,15"}).out);

    const std::string path = "test_plot_out.svg";
    const RunResult f = run_cli({"plot", "--char", "1,0,-6,15", "--out", path});
    CHECK(f.status == 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == r.out);
    std::remove(path.c_str());

    CHECK(run_cli({"plot", "--char", "1,0,-6,15", "--out", "/nonexistent/dir/x.svg"}).status == 1);
    CHECK(run_cli({"plot", "--char", "1,0,-6,15", "--samples", "1"}).status == 1);
}

TEST_CASE("exit codes") {
    const RunResult bad = run_cli({"walls", "--char", "1,0,-6,x"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("x") != std::string::npos);
    CHECK(run_cli({"walls", "--char", "1,0,-6"}).status == 2);
    CHECK(run_cli({"nonsense"}).status == 2);
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"walls", "--char", "2,0,-6,15"}).status == 1);  // unsupported rank
    CHECK(run_cli({"--help"}).status == 0);
}

}  // TEST_SUITE
