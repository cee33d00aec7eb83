#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rugosity/mask_core.hpp"
#include "rugosity/report.hpp"
#include "rugosity/synth.hpp"

#include "testutil.hpp"

using namespace rugosity;
namespace fs = std::filesystem;

TEST_CASE("report: csv layout is stable") {
    MetricReport r;
    r.tool_version = "9.9.9";
    r.add_parameter("ndim", 2);
    r.add_parameter("dims", "4x4");
    r.add_metric("dsc", 1.0);
    r.add_metric("rvd", 0.25);
    CHECK(r.to_csv() ==
          "# rugosity,9.9.9\n"
          "# ndim,2\n"
          "# dims,4x4\n"
          "metric,value\n"
          "dsc,1\n"
          "rvd,0.25\n");
}

TEST_CASE("report: json carries version, parameters and metrics") {
    MetricReport r;
    r.tool_version = "9.9.9";
    r.add_parameter("window", 7);
    r.add_metric("hdd", 20.0);
    const nlohmann::json j = nlohmann::json::parse(r.to_json());
    CHECK(j["version"] == "9.9.9");
    CHECK(j["parameters"]["window"] == "7");
    CHECK(j["metrics"]["hdd"] == 20.0);
}

TEST_CASE("report: non-finite metrics are rejected") {
    MetricReport r;
    CHECK_THROWS_AS(r.add_metric("bad", std::nan("")), ValueError);
}

TEST_CASE("format_value is plain and deterministic") {
    CHECK(format_value(0.1) == "0.1");
    CHECK(format_value(20.0) == "20");
    CHECK(format_value(-0.5) == "-0.5");
}

// ---------------------------------------------------------------------------
// End-to-end command-line checks. The test harness exports RUGOSITY_CLI
// with the path of the built binary.
// ---------------------------------------------------------------------------

namespace {

struct CliFixture {
    std::string cli;
    fs::path dir;

    CliFixture() {
        const char* env = std::getenv("RUGOSITY_CLI");
        REQUIRE_MESSAGE(env != nullptr, "RUGOSITY_CLI must point at the rugosity binary");
        cli = env;
        dir = fs::temp_directory_path() /
              ("rugosity_cli_test_" + std::to_string(static_cast<unsigned>(::getpid())));
        fs::create_directories(dir);
    }
    ~CliFixture() { std::error_code ec; fs::remove_all(dir, ec); }

    int run(const std::string& args, const std::string& stdout_file = "") const {
        std::string cmd = cli + " " + args;
        if (!stdout_file.empty()) cmd += " > " + (dir / stdout_file).string();
        cmd += " 2> " + (dir / "stderr.txt").string();
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    }

    std::string slurp(const std::string& name) const {
        std::ifstream in(dir / name, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cli: identical masks score perfectly") {
    CliFixture fx;
    REQUIRE(fx.run("synth " + fx.path("disk.mvox") + " --kind disk --extent 64 --radius 18") == 0);
    REQUIRE(fx.run("metrics " + fx.path("disk.mvox") + " " + fx.path("disk.mvox") +
                   " --format json", "m.json") == 0);
    const nlohmann::json j = nlohmann::json::parse(fx.slurp("m.json"));
    CHECK(j["metrics"]["dsc"] == 1.0);
    CHECK(j["metrics"]["hdd"] == 0.0);
    CHECK(j["metrics"]["ard_grid"] == 0.0);
    CHECK(j["metrics"]["rr"] == 0.0);
    CHECK(j["metrics"]["svd"] == 0.0);
    CHECK(j["parameters"]["window"] == "4");  // 7% of 64
}

TEST_CASE("cli: missing input exits 2 with a diagnostic") {
    CliFixture fx;
    CHECK(fx.run("metrics " + fx.path("absent.mvox") + " " + fx.path("absent.mvox")) == 2);
    CHECK(!fx.slurp("stderr.txt").empty());
}

TEST_CASE("cli: mismatched grids exit 3") {
    CliFixture fx;
    REQUIRE(fx.run("synth " + fx.path("a.mvox") + " --kind disk --extent 64 --radius 18") == 0);
    REQUIRE(fx.run("synth " + fx.path("b.mvox") + " --kind disk --extent 60 --radius 18") == 0);
    CHECK(fx.run("metrics " + fx.path("a.mvox") + " " + fx.path("b.mvox")) == 3);
}

TEST_CASE("cli: strict mode turns degenerate metrics into exit 4") {
    CliFixture fx;
    // An empty ground truth leaves most metrics undefined.
    VoxelMask empty = testutil::empty_mask(testutil::dims2(32, 32));
    save_mvox(fx.path("empty.mvox"), empty);
    REQUIRE(fx.run("synth " + fx.path("p.mvox") + " --kind disk --extent 32 --radius 9") == 0);
    CHECK(fx.run("metrics " + fx.path("p.mvox") + " " + fx.path("empty.mvox") + " --strict") == 4);
    // Without --strict the computable subset is still reported.
    CHECK(fx.run("metrics " + fx.path("p.mvox") + " " + fx.path("empty.mvox"),
                 "partial.csv") == 0);
    CHECK(fx.slurp("partial.csv").find("dsc,0") != std::string::npos);
}

TEST_CASE("cli: sweep emits the pinned header and one row per window") {
    CliFixture fx;
    REQUIRE(fx.run("synth " + fx.path("d.mvox") + " --kind disk --extent 64 --radius 18") == 0);
    REQUIRE(fx.run("sweep " + fx.path("d.mvox") + " " + fx.path("d.mvox") + " 4 4",
                   "sweep.csv") == 0);
    const std::string csv = fx.slurp("sweep.csv");
    CHECK(csv.substr(0, 28) == "window,ri_gt,ri_pred,rr\n4,0.");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

    CHECK(fx.run("sweep " + fx.path("d.mvox") + " " + fx.path("d.mvox") + " 9 5") == 2);
    CHECK(fx.run("sweep " + fx.path("d.mvox") + " " + fx.path("d.mvox") + " 1 100") == 2);
}

TEST_CASE("cli: smoothing an already-smooth mask is byte-identical") {
    CliFixture fx;
    REQUIRE(fx.run("synth " + fx.path("in.mvox") + " --kind disk --extent 100 --radius 25.49") == 0);
    REQUIRE(fx.run("smooth " + fx.path("in.mvox") + " " + fx.path("out.mvox") +
                   " --format json", "s.json") == 0);
    CHECK(fx.slurp("in.mvox") == fx.slurp("out.mvox"));
    const nlohmann::json j = nlohmann::json::parse(fx.slurp("s.json"));
    CHECK(j["metrics"]["iterations"] == 1.0);
    CHECK(j["metrics"]["converged"] == 1.0);
    CHECK(j["parameters"]["route"] == "roughness");
}

TEST_CASE("cli: smoothing against a reference reports the reference route") {
    CliFixture fx;
    REQUIRE(fx.run("synth " + fx.path("gt.mvox") + " --kind disk --extent 100 --radius 25.49") == 0);
    REQUIRE(fx.run("synth " + fx.path("sp.mvox") +
                   " --kind disk --extent 100 --radius 25.49 --spike 15:2:irreg:0") == 0);
    REQUIRE(fx.run("smooth " + fx.path("sp.mvox") + " " + fx.path("sm.mvox") + " --gt " +
                   fx.path("gt.mvox") + " --format json", "r.json") == 0);
    const nlohmann::json j = nlohmann::json::parse(fx.slurp("r.json"));
    CHECK(j["parameters"]["route"] == "reference");
    CHECK(j["metrics"]["converged"] == 1.0);
    CHECK(fx.slurp("sm.mvox") == fx.slurp("gt.mvox"));
}

TEST_CASE("cli: synth rejects shapes that do not fit") {
    CliFixture fx;
    CHECK(fx.run("synth " + fx.path("x.mvox") +
                 " --kind disk --extent 100 --radius 40 --spike 25:1:irreg:0") == 2);
    CHECK(fx.run("synth " + fx.path("x.mvox") + " --kind nonsense --extent 100") == 2);
}

TEST_CASE("cli: paper suite lands on disk and parses back") {
    CliFixture fx;
    REQUIRE(fx.run("synth --paper-suite " + fx.path("suite")) == 0);
    for (const std::string& name : synth::PaperSuite::names()) {
        const VoxelMask m = load_mvox(fx.path("suite/" + name + ".mvox"));
        CHECK(m.foreground_count() > 0);
    }
    // Regenerating must reproduce the exact same bytes.
    REQUIRE(fx.run("synth --paper-suite " + fx.path("suite2")) == 0);
    CHECK(fx.slurp("suite/many3d.mvox") == fx.slurp("suite2/many3d.mvox"));
}

TEST_CASE("cli: --out writes the report to a file") {
    CliFixture fx;
    REQUIRE(fx.run("synth " + fx.path("d.mvox") + " --kind disk --extent 64 --radius 18") == 0);
    REQUIRE(fx.run("metrics " + fx.path("d.mvox") + " " + fx.path("d.mvox") + " --out " +
                   fx.path("report.csv")) == 0);
    const std::string csv = fx.slurp("report.csv");
    CHECK(csv.find("metric,value") != std::string::npos);
    CHECK(csv.find("jsc,1") != std::string::npos);
}
