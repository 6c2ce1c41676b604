// rgglab: experiment driver. One subcommand per experiment family, each reading a
// JSON config and writing long-format CSV.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rgglab/experiments.hpp"

namespace {

struct Options {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> threads;
};

void write_file(const std::string& path, const std::vector<rgglab::ExperimentRecord>& records) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    rgglab::write_csv(os, records);
    if (!os) throw std::runtime_error("write failed: " + path);
}

int run(rgglab::ExperimentKind kind, const Options& opt) {
    rgglab::ExperimentSpec spec = rgglab::load_spec(opt.config, kind);
    if (!opt.out.empty()) spec.output = opt.out;
    if (opt.seed) spec.base_seed = *opt.seed;
    if (opt.trials) spec.trials = *opt.trials;
    if (opt.threads) spec.threads = *opt.threads;
    rgglab::validate(spec);

    const rgglab::ExperimentOutput result = rgglab::run_experiment(spec);
    if (spec.output.empty()) {
        rgglab::write_csv(std::cout, result.records);
    } else {
        write_file(spec.output, result.records);
        if (!result.timings.empty()) write_file(spec.output + ".timing.csv", result.timings);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random geometric graph and PRM experiments"};
    app.require_subcommand(1);

    Options opt;
    const rgglab::ExperimentKind kinds[] = {
        rgglab::ExperimentKind::connectivity, rgglab::ExperimentKind::stretch,  rgglab::ExperimentKind::obstacle,
        rgglab::ExperimentKind::planner,      rgglab::ExperimentKind::integral, rgglab::ExperimentKind::calibrate};
    const char* help[] = {
        "largest-component deficit in the empty cube",
        "maximum stretch among sampled vertex pairs",
        "roadmap deficit and origin-center stretch among box obstacles",
        "PRM variants: success, path length, timing",
        "Penrose integral estimate for the linear-decay soft graph",
        "radius reaching nbr(n) neighbors",
    };
    std::vector<std::pair<CLI::App*, rgglab::ExperimentKind>> subs;
    for (std::size_t i = 0; i < std::size(kinds); ++i) {
        CLI::App* sub = app.add_subcommand(rgglab::experiment_name(kinds[i]), help[i]);
        sub->add_option("--config", opt.config, "JSON config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out, "CSV output path (default: config output, else stdout)");
        sub->add_option("--seed", opt.seed, "base seed override");
        sub->add_option("--trials", opt.trials, "trial count override")->check(CLI::PositiveNumber);
        sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
        subs.emplace_back(sub, kinds[i]);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& [sub, kind] : subs) {
            if (sub->parsed()) return run(kind, opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "rgglab: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
