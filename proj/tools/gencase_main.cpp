#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gencase/errors.hpp"
#include "gencase/runner.hpp"
#include "gencase/version.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir = ".";
    bool seed_set = false;
    uint64_t seed = 0;
    bool force_exact = false;
    bool force_sampled = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "experiment config file")->required();
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--seed", flags.seed, "seed override")->each([&flags](const std::string&) {
        flags.seed_set = true;
    });
    auto* exact = cmd->add_flag("--exact", flags.force_exact, "force exact mode");
    cmd->add_flag("--sampled", flags.force_sampled, "force sampled mode")->excludes(exact);
}

int run_verb(const std::string& verb, const CommonFlags& flags) {
    gencase::cli::ExperimentConfig cfg = gencase::cli::parse_config_file(flags.config_path);
    if (flags.seed_set) {
        cfg.seed = flags.seed;
        cfg.has_seed = true;
    }
    if (flags.force_exact) cfg.mode = gencase::strata::Mode::exact;
    if (flags.force_sampled) cfg.mode = gencase::strata::Mode::sampled;
    const auto paths = gencase::cli::run_experiment(verb, cfg, flags.out_dir);
    std::cout << paths.summary << "\n";
    std::cout << "wrote " << paths.json_path << "\n";
    std::cout << "wrote " << paths.csv_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gencase: generic-case analysis workbench for one-way-function candidates"};
    app.set_version_flag("--version", gencase::kVersion);
    app.require_subcommand(1);

    CommonFlags density_flags, delta_flags, check_flags, amplify_flags, ratio_flags;
    auto* density = app.add_subcommand("density", "spherical density profile of a reference set");
    add_common(density, density_flags);
    auto* delta = app.add_subcommand("delta", "per-input inversion success probabilities");
    add_common(delta, delta_flags);
    auto* check = app.add_subcommand("check", "security definition checks over a radius range");
    add_common(check, check_flags);
    auto* amplify = app.add_subcommand("amplify", "success densities before and after amplification");
    add_common(amplify, amplify_flags);
    auto* ratio = app.add_subcommand("ratio", "achievement ratio tables");
    add_common(ratio, ratio_flags);

    std::vector<std::string> compare_paths;
    std::string compare_out = ".";
    auto* compare = app.add_subcommand("compare", "align per-radius values of written reports");
    compare->add_option("reports", compare_paths, "report JSON paths")->expected(-2);
    compare->add_option("--out", compare_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (density->parsed()) return run_verb("density", density_flags);
        if (delta->parsed()) return run_verb("delta", delta_flags);
        if (check->parsed()) return run_verb("check", check_flags);
        if (amplify->parsed()) return run_verb("amplify", amplify_flags);
        if (ratio->parsed()) return run_verb("ratio", ratio_flags);
        if (compare->parsed()) {
            const auto paths = gencase::cli::run_compare(compare_paths, compare_out);
            std::cout << paths.summary << "\n";
            std::cout << "wrote " << paths.json_path << "\n";
            std::cout << "wrote " << paths.csv_path << "\n";
            return 0;
        }
    } catch (const gencase::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gencase::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gencase::CapExceededError& e) {
        std::cerr << "cap violation: " << e.what() << "\n";
        return 3;
    } catch (const gencase::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
