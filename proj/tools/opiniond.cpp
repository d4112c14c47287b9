#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "opinion/commands.hpp"
#include "opinion/config.hpp"
#include "opinion/errors.hpp"
#include "opinion/version.hpp"

namespace {

struct CliState {
    std::string config_path;
    // (config key, raw value) in the order options fire; applied after the file.
    std::vector<std::pair<std::string, std::string>> overrides;
};

void add_override(CLI::App* cmd, CliState& state, const std::string& flag,
                  const std::string& key, const std::string& help) {
    cmd->add_option(flag, help)
        ->type_name("VALUE")
        ->each([&state, key](const std::string& value) { state.overrides.emplace_back(key, value); });
}

void add_common_options(CLI::App* cmd, CliState& state) {
    cmd->add_option("--config", state.config_path, "config file (sectioned key=value)")
        ->type_name("FILE");
    add_override(cmd, state, "--source", "source", "graph source: 'generate' or an edge-list path");
    add_override(cmd, state, "--nodes", "nodes", "node count for generated graphs");
    add_override(cmd, state, "--edges-per-node", "edges_per_node",
                 "leaders each generated node follows");
    add_override(cmd, state, "--prune-threshold", "prune_threshold",
                 "total-degree cutoff for prune");
    add_override(cmd, state, "--b", "b", "benefit per agreeing leader");
    add_override(cmd, state, "--c", "c", "cost per disagreeing leader");
    add_override(cmd, state, "--omega1", "omega1", "trustworthiness coefficient");
    add_override(cmd, state, "--omega2", "omega2", "expertise coefficient");
    add_override(cmd, state, "--omega3", "omega3", "stubbornness coefficient");
    add_override(cmd, state, "--alpha", "alpha", "trustworthiness exponent");
    add_override(cmd, state, "--beta", "beta", "stubbornness scale");
    add_override(cmd, state, "--mu", "mu", "expertise mean");
    add_override(cmd, state, "--sigma2", "sigma2", "expertise variance");
    add_override(cmd, state, "--strategy", "strategy",
                 "seeding strategy: random | top_in_degree | top_expertise");
    add_override(cmd, state, "--fraction", "fraction", "initial fraction holding opinion A");
    add_override(cmd, state, "--leader-count", "leader_count", "K for top-K seeding");
    add_override(cmd, state, "--epsilon", "epsilon", "max |delta prop_A| counted as quiet");
    add_override(cmd, state, "--window", "window", "consecutive quiet steps required");
    add_override(cmd, state, "--max-steps", "max_steps", "hard step cap");
    add_override(cmd, state, "--replications", "replications", "independent runs to aggregate");
    add_override(cmd, state, "--vary", "vary",
                 "sweep dimension: init-prop | bc | seeding | alpha | sigma2");
    add_override(cmd, state, "--values", "values", "comma-separated sweep grid");
    add_override(cmd, state, "--resample-expertise", "resample_expertise",
                 "redraw expertise per replication (true/false)");
    add_override(cmd, state, "--seed", "seed", "master seed");
    add_override(cmd, state, "--out", "output_dir", "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic simulator of binary opinion formation on follow graphs"};
    app.set_version_flag("--version",
                         std::string(opinion::kToolName) + " " + opinion::kToolVersion);
    app.require_subcommand(1);
    CliState state;
    add_common_options(app.add_subcommand("stats", "topological summary of a graph"), state);
    add_common_options(app.add_subcommand("prune", "iteratively strip low-degree nodes"), state);
    add_common_options(app.add_subcommand("generate", "emit a preferential-attachment graph"),
                       state);
    add_common_options(
        app.add_subcommand("simulate", "replicated opinion-formation runs on one setting"), state);
    add_common_options(app.add_subcommand("sweep", "simulate across a parameter grid"), state);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // bad usage is a config error
    }

    try {
        opinion::RunConfig cfg;
        if (!state.config_path.empty()) {
            std::ifstream in(state.config_path);
            if (!in) throw opinion::IoError("cannot open config file " + state.config_path);
            cfg = opinion::parse_config_file(in, state.config_path);
        }
        opinion::apply_overrides(cfg, state.overrides);

        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "stats")
            opinion::commands::run_stats(cfg);
        else if (sub == "prune")
            opinion::commands::run_prune(cfg);
        else if (sub == "generate")
            opinion::commands::run_generate(cfg);
        else if (sub == "simulate")
            opinion::commands::run_simulate(cfg);
        else
            opinion::commands::run_sweep(cfg);
        return 0;
    } catch (const opinion::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const opinion::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
