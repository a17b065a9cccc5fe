#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "gencase/config.hpp"
#include "gencase/errors.hpp"
#include "gencase/report.hpp"
#include "gencase/runner.hpp"

using namespace gencase;
using namespace gencase::cli;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string g_gencase_bin;  // set from GENCASE_BIN for end-to-end runs

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("gencase_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const std::string& path) { return report::read_text_file(path); }

} // namespace

int main(int argc, char** argv) {
    if (const char* bin = std::getenv("GENCASE_BIN")) g_gencase_bin = bin;
    doctest::Context ctx(argc, argv);
    return ctx.run();
}

TEST_CASE("config parsing: keys, comments, and rejection of junk") {
    const auto cfg = parse_config_text(
        "# density of a reference set\n"
        "set = first_bit_zero\n"
        "n_min = 2\n"
        "n_max = 10   # inclusive\n"
        "mode = exact\n"
        "seed = 99\n"
        "threads = 2\n"
        "label = demo\n");
    CHECK(cfg.set == "first_bit_zero");
    CHECK(cfg.n_min == 2);
    CHECK(cfg.n_max == 10);
    CHECK(cfg.mode == strata::Mode::exact);
    CHECK(cfg.has_seed);
    CHECK(cfg.seed == 99);
    CHECK(cfg.threads == 2);
    CHECK(cfg.label == "demo");

    const auto poly = parse_config_text("fuel_coeff = 2\nfuel_degree = 2\nfuel_offset = 10\n");
    CHECK(poly.fuel.fuel_for(4) == 2 * 16 + 10);
    const auto fixed = parse_config_text("fuel = 512\n");
    CHECK(fixed.fuel.fuel_for(4) == 512);

    CHECK_THROWS_AS(parse_config_text("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("mode = quantum\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("n_min\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("seed = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("fuel = 5\nfuel_degree = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("n_step = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("confidence = 1.5\n"), ConfigError);
}

TEST_CASE("density verb writes the documented profile schema") {
    const auto dir = fresh_dir("density");
    ExperimentConfig cfg;
    cfg.set = "not_all_zeros";
    cfg.n_min = 1;
    cfg.n_max = 8;
    cfg.has_seed = true;
    cfg.seed = 1;
    const auto paths = run_experiment("density", cfg, dir.string());

    const auto doc = ordered_json::parse(slurp(paths.json_path));
    CHECK(doc["tool"] == "gencase");
    CHECK(doc["version"] == "0.1.0");
    CHECK(doc["verb"] == "density");
    CHECK(doc["config"]["seed"] == 1);
    CHECK(doc["config"]["sphere_cap"] == 24);
    CHECK(doc["config"]["tape_cap"] == 20);
    CHECK(doc["config"].contains("fuel"));
    CHECK_FALSE(doc["config"].contains("threads"));
    CHECK(doc["results"]["estimated_membership"] == false);
    CHECK(doc["results"]["set_label"] == "not_all_zeros");
    REQUIRE(doc["results"]["points"].size() == 8);
    CHECK(doc["results"]["points"][2]["value_num"] == "7");
    CHECK(doc["results"]["points"][2]["value_den"] == "8");
    CHECK(doc["results"]["classification"]["class"] == "strongly_generic");

    const std::string csv = slurp(paths.csv_path);
    CHECK(csv.find("set_label,n,mode,value") == 0);
    CHECK(csv.find("not_all_zeros,3,exact,0.875,7,8") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("run_experiment rejects bad configs without leaving files") {
    const auto dir = fresh_dir("badcfg");
    ExperimentConfig cfg;  // no seed
    cfg.set = "all";
    cfg.n_min = 1;
    cfg.n_max = 4;
    CHECK_THROWS_AS(run_experiment("density", cfg, dir.string()), ConfigError);

    cfg.has_seed = true;
    cfg.seed = 5;
    cfg.set = "no_such_set";
    CHECK_THROWS_AS(run_experiment("density", cfg, dir.string()), ConfigError);

    cfg.set = "";
    CHECK_THROWS_AS(run_experiment("density", cfg, dir.string()), ConfigError);

    ExperimentConfig check_cfg;
    check_cfg.has_seed = true;
    check_cfg.seed = 5;
    check_cfg.candidate = "identity";
    check_cfg.inverter = "no_such_inverter";
    check_cfg.n_min = 2;
    check_cfg.n_max = 5;
    CHECK_THROWS_AS(run_experiment("check", check_cfg, dir.string()), ConfigError);

    ExperimentConfig cap_cfg;
    cap_cfg.has_seed = true;
    cap_cfg.seed = 5;
    cap_cfg.set = "all";
    cap_cfg.n_min = 30;
    cap_cfg.n_max = 30;
    CHECK_THROWS_AS(run_experiment("density", cap_cfg, dir.string()), CapExceededError);

    CHECK(fs::is_empty(dir));
    fs::remove_all(dir);
}

TEST_CASE("check verb records verdicts and plans") {
    const auto dir = fresh_dir("check");
    ExperimentConfig cfg;
    cfg.candidate = "identity";
    cfg.inverter = "brute_force";
    cfg.n_min = 2;
    cfg.n_max = 6;
    cfg.has_seed = true;
    cfg.seed = 3;
    cfg.fuel = harness::FuelSchedule::fixed(1 << 16);
    const auto paths = run_experiment("check", cfg, dir.string());
    const auto doc = ordered_json::parse(slurp(paths.json_path));
    CHECK(doc["results"]["verdicts"]["strong_ppt_violated"] == true);
    CHECK(doc["results"]["spheres"][0]["plan"]["k"] == 8);
    CHECK(doc["results"]["spheres"][0]["plan"]["epsilon"] == 0.25);
    CHECK(doc["results"]["spheres"][2]["n"] == 4);
    CHECK(doc["results"]["spheres"][2]["plan"]["k"] == 64);
    CHECK(doc["results"]["spheres"][2]["success_density"]["value_num"] == "1");
    fs::remove_all(dir);
}

TEST_CASE("delta and ratio verbs produce row-per-input tables") {
    const auto dir = fresh_dir("tables");
    ExperimentConfig cfg;
    cfg.candidate = "genease";
    cfg.inverter = "genease_fast";
    cfg.n_min = 4;
    cfg.n_max = 4;
    cfg.has_seed = true;
    cfg.seed = 9;
    cfg.fuel = harness::FuelSchedule::poly(4.0, 1.0, 64);

    const auto delta_paths = run_experiment("delta", cfg, dir.string());
    const auto delta_doc = ordered_json::parse(slurp(delta_paths.json_path));
    REQUIRE(delta_doc["results"]["rows"].size() == 16);
    uint64_t winners = 0;
    for (const auto& row : delta_doc["results"]["rows"]) {
        if (row["delta"].get<double>() == 1.0) ++winners;
    }
    CHECK(winners == 12);  // 16 * (1 - 2^-2)

    const auto ratio_paths = run_experiment("ratio", cfg, dir.string());
    const auto ratio_doc = ordered_json::parse(slurp(ratio_paths.json_path));
    REQUIRE(ratio_doc["results"]["rows"].size() == 16);
    uint64_t infinite = 0;
    for (const auto& row : ratio_doc["results"]["rows"]) {
        if (row["is_infinite"].get<bool>()) ++infinite;
    }
    CHECK(infinite == 4);
    fs::remove_all(dir);
}

TEST_CASE("amplify verb reports base and amplified densities with the plan") {
    const auto dir = fresh_dir("amplify");
    ExperimentConfig cfg;
    cfg.candidate = "genease";
    cfg.inverter = "genease_fast";
    cfg.n_min = 4;
    cfg.n_max = 6;
    cfg.has_seed = true;
    cfg.seed = 4;
    cfg.fuel = harness::FuelSchedule::poly(8.0, 1.0, 64);
    const auto paths = run_experiment("amplify", cfg, dir.string());
    const auto doc = ordered_json::parse(slurp(paths.json_path));
    REQUIRE(doc["results"]["rows"].size() == 3);
    for (const auto& row : doc["results"]["rows"]) {
        // amplification never shrinks a success set
        CHECK(row["amplified_density"]["value"].get<double>() >=
              row["base_density"]["value"].get<double>());
    }
    CHECK(doc["results"]["rows"][0]["plan"]["k"] == 64);
    fs::remove_all(dir);
}

TEST_CASE("reports are byte-identical across reruns and thread counts") {
    const auto dir_a = fresh_dir("det_a");
    const auto dir_b = fresh_dir("det_b");
    ExperimentConfig cfg;
    cfg.candidate = "identity";
    cfg.inverter = "random_guess";
    cfg.n_min = 4;
    cfg.n_max = 8;
    cfg.has_seed = true;
    cfg.seed = 1234;
    cfg.mode = strata::Mode::sampled;
    cfg.samples = 64;
    cfg.trials = 64;
    cfg.fuel = harness::FuelSchedule::fixed(4096);

    cfg.threads = 1;
    const auto a = run_experiment("check", cfg, dir_a.string());
    cfg.threads = 4;
    const auto b = run_experiment("check", cfg, dir_b.string());
    CHECK(slurp(a.json_path) == slurp(b.json_path));
    CHECK(slurp(a.csv_path) == slurp(b.csv_path));

    // a different seed must actually change a sampled report
    cfg.seed = 4321;
    const auto c = run_experiment("check", cfg, dir_b.string());
    CHECK(slurp(a.json_path) != slurp(c.json_path));

    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
}

TEST_CASE("compare aligns common radii and flags disjoint ranges") {
    const auto dir = fresh_dir("compare");
    ExperimentConfig cfg;
    cfg.set = "first_bit_zero";
    cfg.n_min = 2;
    cfg.n_max = 10;
    cfg.has_seed = true;
    cfg.seed = 7;
    const auto exact_run = run_experiment("density", cfg, dir.string());

    cfg.mode = strata::Mode::sampled;
    cfg.samples = 2000;
    cfg.label = "sampled_run";
    const auto sampled_run = run_experiment("density", cfg, dir.string());

    const auto cmp_paths =
        run_compare({exact_run.json_path, sampled_run.json_path}, dir.string());
    const auto doc = ordered_json::parse(slurp(cmp_paths.json_path));
    REQUIRE(doc["results"]["rows"].size() == 9);
    const double hw = hoeffding_half_width(2000);
    for (const auto& row : doc["results"]["rows"]) {
        CHECK(std::abs(row["deltas"][1].get<double>()) <= hw);
    }

    // identical reports compare with all-zero deltas
    const auto cmp_same =
        report::compare_reports({exact_run.json_path, exact_run.json_path});
    for (const auto& row : cmp_same.rows) CHECK(row.deltas[1] == 0.0);

    // disjoint ranges error out
    cfg.mode = strata::Mode::exact;
    cfg.n_min = 12;
    cfg.n_max = 14;
    cfg.label = "disjoint";
    const auto far_run = run_experiment("density", cfg, dir.string());
    CHECK_THROWS_AS(report::compare_reports({exact_run.json_path, far_run.json_path}),
                    ConfigError);
    CHECK_THROWS_AS(report::compare_reports({exact_run.json_path}), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("gencase binary: exit codes and report files end to end") {
    REQUIRE_MESSAGE(!g_gencase_bin.empty(), "GENCASE_BIN not set");
    const auto dir = fresh_dir("e2e");
    const auto cfg_path = dir / "exp.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "candidate = identity\ninverter = brute_force\n"
            << "n_min = 2\nn_max = 5\nseed = 11\nfuel = 65536\n";
    }
    const std::string base = "cd " + dir.string() + " && " + g_gencase_bin;
    CHECK(std::system((base + " check --config exp.cfg --out out >cli.log 2>&1").c_str()) == 0);
    CHECK(fs::exists(dir / "out" / "check_identity_brute_force.json"));
    CHECK(fs::exists(dir / "out" / "check_identity_brute_force.csv"));

    // config error: unknown inverter, distinct exit code, no partial report
    {
        std::ofstream cfg(dir / "bad.cfg");
        cfg << "candidate = identity\ninverter = ghost\nn_min = 2\nn_max = 4\nseed = 1\n";
    }
    int rc = std::system((base + " check --config bad.cfg --out bad_out >bad.log 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    CHECK(!fs::exists(dir / "bad_out" / "check_identity_ghost.json"));

    // cap violation: exact density beyond the sphere cap
    {
        std::ofstream cfg(dir / "cap.cfg");
        cfg << "set = all\nn_min = 30\nn_max = 30\nseed = 1\nmode = exact\n";
    }
    rc = std::system((base + " density --config cap.cfg >cap.log 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 3);

    // io error: unwritable output path
    rc = std::system(
        (base + " check --config exp.cfg --out /proc/gencase_denied >io.log 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 4);

    // missing config file
    rc = std::system((base + " density --config missing.cfg >miss.log 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 4);

    // --seed override + --sampled flag reach the report
    rc = std::system(
        (base + " check --config exp.cfg --out seeded --seed 99 --sampled >s.log 2>&1").c_str());
    CHECK(rc == 0);
    const auto doc = ordered_json::parse(
        slurp((dir / "seeded" / "check_identity_brute_force.json").string()));
    CHECK(doc["config"]["seed"] == 99);
    CHECK(doc["config"]["mode"] == "sampled");

    // compare subcommand aligns the two check reports written above
    rc = std::system((base +
                      " compare out/check_identity_brute_force.json"
                      " seeded/check_identity_brute_force.json --out cmp >c.log 2>&1")
                         .c_str());
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "cmp" / "compare.json"));
    CHECK(fs::exists(dir / "cmp" / "compare.csv"));

    fs::remove_all(dir);
}
