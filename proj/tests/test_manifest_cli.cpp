#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "holderlab/json_io.hpp"
#include "holderlab/manifest.hpp"

using namespace holderlab;
namespace fs = std::filesystem;

namespace {

const std::string kManifest = std::string(HL_DATA_DIR) + "/manifests/curated.json";

struct CliResult {
    int exit_code;
    nlohmann::json out;
    std::string raw_out, raw_err;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "hl_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(HL_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ostringstream so, se;
    so << std::ifstream(out).rdbuf();
    se << std::ifstream(err).rdbuf();
    r.raw_out = so.str();
    r.raw_err = se.str();
    if (!r.raw_out.empty() && (r.raw_out[0] == '{' || r.raw_out[0] == '['))
        r.out = nlohmann::json::parse(r.raw_out);
    return r;
}

}  // namespace

TEST_CASE("manifest loads and round-trips canonically") {
    InstanceManifest m = InstanceManifest::load(kManifest);
    CHECK(m.instances().size() == 25);
    CHECK(m.find("cantor").cube->digit_count() == 2);
    CHECK(m.find("cross5").cube->digit_count() == 20);
    CHECK(m.find("lam_23").ratios[0].base_name() == "lambda");
    CHECK(!m.find("lam_23").ratios[0].concrete());
    CHECK(m.find("half_23").ratios[0].concrete());
    CHECK(m.find("half_23").ratios[0].to_exact() ==
          ExactPositive::from_rational(Rational(1, 4)));

    nlohmann::json serialized = m.to_json();
    InstanceManifest again = InstanceManifest::from_json(serialized);
    CHECK(again.to_json() == serialized);
    CHECK(again.instances().size() == m.instances().size());
    for (const auto& inst : m.instances()) {
        const auto& other = again.find(inst.id);
        CHECK(other.kind == inst.kind);
        if (inst.cube) CHECK(*other.cube == *inst.cube);
        if (!inst.ratios.empty()) {
            REQUIRE(other.ratios.size() == inst.ratios.size());
            for (std::size_t i = 0; i < inst.ratios.size(); ++i)
                CHECK(other.ratios[i] == inst.ratios[i]);
        }
    }
}

TEST_CASE("manifest validation failures") {
    auto parse = [](const char* text) { return InstanceManifest::from_json(nlohmann::json::parse(text)); };
    CHECK_THROWS_AS(parse(R"({"instances":[
        {"kind":"fractal_cube","id":"a","n":3,"d":1,"digits":[[0]]},
        {"kind":"fractal_cube","id":"a","n":3,"d":1,"digits":[[0]]}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"instances":[
        {"kind":"self_similar","id":"x","ratios":[
            {"kind":"power","base":"nope","num":1,"den":1},
            {"kind":"rational","num":1,"den":2}]}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"instances":[
        {"kind":"fractal_cube","id":"bad","n":3,"d":2,"digits":[[0,0],[3,1]]}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"instances":[
        {"kind":"self_similar","id":"big","ratios":[
            {"kind":"rational","num":3,"den":2},
            {"kind":"rational","num":1,"den":2}]}]})"),
                    std::invalid_argument);
}

TEST_CASE("cli classify emits a verdict JSON and exit 0") {
    CliResult r = run_cli("classify " + kManifest + " cantor corners3d --mode holder");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "strictly_holder_equivalent");
    CHECK(r.out.at("exponent").at("num") == "1");
    CHECK(r.out.at("exponent").at("den") == "3");
    CHECK(r.out.contains("witness"));

    r = run_cli("classify " + kManifest + " cantor cantor9 --mode lipschitz");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "lipschitz_equivalent");

    r = run_cli("classify " + kManifest + " ss_quarter_eighth ss_half_32 --mode holder");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "strictly_holder_equivalent");

    r = run_cli("classify " + kManifest + " lam_23 lam_15 --mode lipschitz");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "lipschitz_equivalent");

    r = run_cli("classify " + kManifest + " ss_half_third ss_three_branch --mode holder");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "unknown");

    r = run_cli("classify " + kManifest + " cantor cantor --mode lipschitz");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "lipschitz_equivalent");

    // verdict content never affects the exit code
    r = run_cli("classify " + kManifest + " cantor triple5 --mode holder");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("kind") == "not_equivalent");
    CHECK(r.out.contains("reason"));
}

TEST_CASE("cli exit code 2 on input errors") {
    CHECK(run_cli("classify " + kManifest + " cantor nope --mode holder").exit_code == 2);
    CHECK(run_cli("classify " + kManifest + " cantor ss_half_third --mode holder").exit_code == 2);
    CHECK(run_cli("classify /no/such/file.json a b").exit_code == 2);
    // uncertified cube without the override
    CliResult r = run_cli("classify " + kManifest + " cantor diag2 --mode holder");
    CHECK(r.exit_code == 2);
    CHECK(r.raw_err.find("totally disconnected") != std::string::npos);
    // override accepted
    r = run_cli("classify " + kManifest + " cantor diag2 --mode holder --assume-td");
    CHECK(r.exit_code == 0);
    // full cube is never classifiable
    CHECK(run_cli("classify " + kManifest + " cantor full2 --mode holder --assume-td").exit_code ==
          2);
}

TEST_CASE("cli check-td statuses") {
    CliResult r = run_cli("check-td " + kManifest + " dust3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("status") == "certified");
    CHECK(r.out.at("depth") == 1);

    r = run_cli("check-td " + kManifest + " full2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("status") == "full_cube");

    r = run_cli("check-td " + kManifest + " diag2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("status") == "unknown");
    CHECK(r.out.at("max_component_cells").get<std::int64_t>() >= 256);

    r = run_cli("check-td " + kManifest + " diag2 --max-depth 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("status") == "unknown");
    CHECK(r.out.at("depth") == 3);

    // a tiny cell cap trips the growth bound instead of the depth bound
    r = run_cli("check-td " + kManifest + " diag2 --max-cells 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("status") == "unknown");
    CHECK(r.out.at("depth").get<std::int64_t>() <= 3);

    // certified statuses expose the census
    r = run_cli("check-td " + kManifest + " diag3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("status") == "certified");
    REQUIRE(r.out.contains("census"));
    CHECK(r.out.at("census").size() == 1);
    CHECK(r.out.at("census")[0].size() == 2);  // the two-cell diagonal pair

    CHECK(run_cli("check-td " + kManifest + " ss_half_third").exit_code == 2);
}

TEST_CASE("cli verify passes witnesses and rejects witness-free pairs") {
    CliResult r = run_cli("verify " + kManifest + " cantor corners3d --depth 6");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("pass") == true);
    CHECK(r.out.at("pair_count") == 64 * 63 / 2);

    r = run_cli("verify " + kManifest + " ss_half_third ss_quarter_ninth --depth 8");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("pass") == true);
    CHECK(r.out.at("observed_extremes").at("min") == "1");
    CHECK(r.out.at("observed_extremes").at("max") == "1");

    // the {2/3, 1/5} pattern has a verdict but no witness
    r = run_cli("verify " + kManifest + " ss_quarter_eighth ss_half_32 --depth 6");
    CHECK(r.exit_code == 2);
    CHECK(r.raw_err.find("no witness") != std::string::npos);

    // not-equivalent pairs have no witness either
    r = run_cli("verify " + kManifest + " cantor triple5 --depth 6");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli verify respects the pair budget environment variable") {
    // budget 1000 pairs forces a tiny default depth but still succeeds
    std::string cmd = "env HOLDER_LAB_MAX_PAIRS=1000 " + std::string(HL_CLI_PATH) + " verify " +
                      kManifest + " cantor corners3d";
    fs::path dir = fs::temp_directory_path() / "hl_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / "env_out.txt";
    int status = std::system((cmd + " > " + out.string() + " 2>/dev/null").c_str());
    REQUIRE(WIFEXITED(status));
    REQUIRE(WEXITSTATUS(status) == 0);
    std::ostringstream so;
    so << std::ifstream(out).rdbuf();
    nlohmann::json doc = nlohmann::json::parse(so.str());
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("pair_count").get<std::uint64_t>() <= 1000);
}

TEST_CASE("cli render matches the golden bytes") {
    fs::path dir = fs::temp_directory_path() / "hl_cli_test";
    fs::create_directories(dir);
    fs::path out_pbm = dir / "cross5.pbm";
    CliResult r = run_cli("render " + kManifest + " cross5 --depth 1 --out " + out_pbm.string());
    REQUIRE(r.exit_code == 0);
    std::ostringstream rendered, golden;
    rendered << std::ifstream(out_pbm, std::ios::binary).rdbuf();
    golden << std::ifstream(std::string(HL_GOLDEN_DIR) + "/cross5_depth1.pbm", std::ios::binary)
                  .rdbuf();
    CHECK(rendered.str() == golden.str());

    CHECK(run_cli("render " + kManifest + " corners3d --depth 1 --out " +
                  (dir / "c3.pbm").string())
              .exit_code == 2);
}

TEST_CASE("cli dimension on the stated examples") {
    CliResult r = run_cli("dimension " + kManifest + " cross5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("exact_form") == "log(20)/log(5)");
    CHECK(r.out.at("value_12") == "1.861353116147");

    r = run_cli("dimension " + kManifest + " ss_quarter_eighth");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("value_12") == "0.405685231376");

    r = run_cli("dimension " + kManifest + " ss_uniform5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("value").get<double>() ==
          doctest::Approx(std::log(3.0) / std::log(5.0)).epsilon(1e-11));

    // undeclared base: no numeric dimension
    CHECK(run_cli("dimension " + kManifest + " lam_23").exit_code == 2);
    // declared base works
    r = run_cli("dimension " + kManifest + " half_23");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.at("value").get<double>() == doctest::Approx(0.405685231375824).epsilon(1e-9));
    CHECK(run_cli("dimension " + kManifest + " nope").exit_code == 2);
}
