// Command-line driver: run one configuration, sweep an axis, or validate.

#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "swarmsim/error.hpp"
#include "swarmsim/harness.hpp"

namespace {

std::unique_ptr<std::ofstream> open_dump(const std::string& path) {
    if (path.empty()) return nullptr;
    auto os = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*os) throw swarmsim::SimError(swarmsim::ErrorKind::Io, "cannot open " + path);
    return os;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swarm exploration and cooperative disarmament simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int reps = 0;
    std::string events_path;
    std::string pheromone_path;
    std::string ledger_path;
    std::string axis;
    std::vector<double> values;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* run_cmd = app.add_subcommand("run", "Run one configuration with one seed");
    run_cmd->add_option("config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--seed", seed, "Root seed (default: run.seed from the config)");
    run_cmd->add_option("--out", out_dir, "Directory for raw.csv and summary.csv (default: raw CSV to stdout)");
    run_cmd->add_option("--dump-events", events_path, "Write the event log to this file");
    run_cmd->add_option("--dump-pheromone", pheromone_path, "Write the per-step pheromone matrix to this file");
    run_cmd->add_option("--dump-ledger", ledger_path, "Write the energy debit ledger to this file");

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one configuration axis with replications");
    sweep_cmd->add_option("config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
    sweep_cmd->add_option("--axis", axis, "Dotted config path, e.g. weights.w1 (default: the config's sweep block)");
    sweep_cmd->add_option("--values", values, "Axis values")->delimiter(',');
    sweep_cmd->add_option("--seed", seed, "Root seed (default: run.seed from the config)");
    sweep_cmd->add_option("--reps", reps, "Replications per axis value");
    sweep_cmd->add_option("--out", out_dir, "Output directory")->required();
    sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a configuration");
    validate_cmd->add_option("config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    std::string stage = "config";
    try {
        swarmsim::Config config = swarmsim::load_config(config_path);
        if (seed != 0) config.seed = seed;

        if (validate_cmd->parsed()) {
            std::cout << swarmsim::render_config(config);
            return 0;
        }

        if (run_cmd->parsed()) {
            stage = "run";
            auto events = open_dump(events_path);
            auto pheromone = open_dump(pheromone_path);
            auto ledger = open_dump(ledger_path);
            swarmsim::Simulation sim(config, config.seed, events != nullptr);
            sim.set_pheromone_sink(pheromone.get());
            while (!sim.terminated()) sim.step();

            swarmsim::ResultTable table;
            table.axis = "run";
            table.rows.push_back({0.0, 0, config, sim.result()});
            stage = "output";
            if (events) sim.events().write(*events);
            if (ledger) sim.ledger().write_csv(*ledger);
            if (out_dir.empty()) {
                swarmsim::write_raw_csv(table, std::cout);
            } else {
                swarmsim::write_results(table, out_dir);
            }
            return 0;
        }

        stage = "sweep";
        swarmsim::SweepSpec spec = config.sweep.value_or(swarmsim::SweepSpec{});
        if (!axis.empty()) spec.axis = axis;
        if (!values.empty()) spec.values = values;
        if (reps > 0) spec.replications = reps;
        if (spec.axis.empty() || spec.values.empty()) {
            throw swarmsim::SimError(swarmsim::ErrorKind::Validation,
                                     "sweep needs an axis and values (flags or the config's sweep block)");
        }
        const auto table = swarmsim::sweep(config, spec, jobs);
        stage = "output";
        swarmsim::write_results(table, out_dir);
        std::cerr << "wrote " << table.rows.size() << " runs to " << out_dir << '\n';
        return 0;
    } catch (const swarmsim::SimError& e) {
        std::cerr << "swarmsim: " << stage << " failed (" << swarmsim::to_string(e.kind()) << "): " << e.what()
                  << '\n';
    } catch (const std::exception& e) {
        std::cerr << "swarmsim: " << stage << " failed: " << e.what() << '\n';
    }
    return 1;
}
