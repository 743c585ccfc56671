#include "dupsys/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
    CLI::App app{"Simulator and exact analyzer for tandem and interspersed duplication string systems"};
    app.require_subcommand(1);

    dupsys::CommandOptions options;
    std::string config, out;
    std::uint64_t seeds = 0;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config, "key = value configuration file");
        sub->add_option("--out", out, "output directory");
        sub->add_flag("--quiet", options.quiet, "only report errors and failures");
    };

    CLI::App *simulate = app.add_subcommand("simulate", "evolve s0 and write k-mer frequency trajectories");
    add_common(simulate);
    simulate->add_option("--seeds", seeds, "number of trajectories, seeded seed, seed+1, ...")->check(CLI::PositiveNumber);
    CLI::App *analyze = app.add_subcommand("analyze", "rate matrix, null space and limiting k-mer frequencies");
    add_common(analyze);
    CLI::App *entropy = app.add_subcommand("entropy", "entropy upper bounds from the limiting measures");
    add_common(entropy);
    CLI::App *verify = app.add_subcommand("verify", "run the oracle and invariant suites on the frozen corpus");
    add_common(verify);
    verify->add_flag("--self-test", options.self_test, "check that a deliberately wrong formula is caught");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : dupsys::kExitValidation;
    }
    if (!config.empty()) options.config = config;
    if (!out.empty()) options.out = out;
    if (seeds > 0) options.seeds = seeds;

    if (simulate->parsed()) return dupsys::cmd_simulate(options, std::cout, std::cerr);
    if (analyze->parsed()) return dupsys::cmd_analyze(options, std::cout, std::cerr);
    if (entropy->parsed()) return dupsys::cmd_entropy(options, std::cout, std::cerr);
    return dupsys::cmd_verify(options, std::cout, std::cerr);
}
