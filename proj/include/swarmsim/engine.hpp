#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swarmsim/energy.hpp"
#include "swarmsim/event_log.hpp"
#include "swarmsim/explore.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/pheromone.hpp"
#include "swarmsim/recruit.hpp"
#include "swarmsim/robot.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/weights.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

enum class ScenarioMode { Static, Dynamic };

const char* to_string(ScenarioMode m) noexcept;

struct Scenario {
    ScenarioMode mode = ScenarioMode::Static;
    double p_explode = 5e-4;  // per armed target per step
    int blast_radius = 2;     // Chebyshev cells
    int max_steps = 20000;

    bool dynamic() const noexcept { return mode == ScenarioMode::Dynamic; }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct SweepSpec {
    std::string axis;
    std::vector<double> values;
    int replications = 1;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

/// Complete, validated configuration of one experiment.
struct Config {
    int m = 50;
    int n = 50;
    ObstacleSpec obstacles;
    int targets = 10;
    SwarmParams swarm;
    PheromoneParams pheromone;
    ExploreParams explore;
    FireflyParams firefly;
    bool gamma_from_grid = true;  // firefly.gamma tracks 1 / max(m, n)
    EnergyParams energy;
    Scenario scenario;
    Weights weights;
    UrgeMode urge = UrgeMode::UnexploredFraction;
    double visit_time = 1.0;  // T_e
    std::uint64_t seed = 1;
    int replications = 1;
    std::optional<SweepSpec> sweep;

    /// Checks every cross-field and per-module invariant; throws SimError.
    void validate() const;

    friend bool operator==(const Config&, const Config&) = default;
};

using TransitionMatrix = std::array<std::array<long, kRobotStateCount>, kRobotStateCount>;

struct RunResult {
    int steps = 0;
    double tesc = 0.0;
    double f1 = 0.0;
    int f2 = 0;
    double alive_fraction = 0.0;
    int targets_found = 0;
    bool completed = false;
    std::uint64_t seed = 0;
    double objective = 0.0;
    TransitionMatrix transitions{};  // counts of observed from -> to edges
    std::vector<CoalitionRecord> coalitions;
};

/// Fixed placement overriding the random one. `targets` replaces the
/// config's target count; `robots` must hold one cell per robot.
struct Layout {
    std::vector<Coord> targets;
    std::vector<Coord> robots;
    std::vector<Heading> headings;  // optional, defaults to E
};

class Simulation {
public:
    Simulation(const Config& config, std::uint64_t seed, bool record_events = false);
    Simulation(const Config& config, std::uint64_t seed, const Layout& layout, bool record_events = false);

    /// Advances one time step and returns the number of events it logged.
    std::size_t step();

    bool terminated() const noexcept { return terminated_; }
    bool completed() const noexcept { return completed_; }
    int current_step() const noexcept { return step_; }

    RunResult result() const;

    const Config& config() const noexcept { return config_; }
    const World& world() const noexcept { return world_; }
    const PheromoneField& field() const noexcept { return field_; }
    const std::vector<Robot>& robots() const noexcept { return robots_; }
    const EnergyLedger& ledger() const noexcept { return ledger_; }
    const MissionTally& tally() const noexcept { return tally_; }
    const EventLog& events() const noexcept { return log_; }
    const TransitionMatrix& transitions() const noexcept { return transitions_; }
    int alive_count() const noexcept;

    /// Streams the pheromone matrix after every step as "step,y,v1..vm" rows.
    void set_pheromone_sink(std::ostream* os) { pheromone_sink_ = os; }

private:
    void place_robots(Rng& placement);
    void add_robot(Coord pos, Heading heading);
    void set_state(Robot& robot, RobotState to, const char* reason);
    void charge(Robot& robot, double amount, DebitCategory category);
    void kill(Robot& robot, const char* reason);
    bool request_live(const HelpRequest& req) const;
    void purge_requests();
    std::vector<std::vector<HelpRequest>> communicate();
    void tick_executions();
    void form_coalitions();
    void apply_moves(const std::vector<RobotAction>& actions, std::vector<bool>& moved);
    void update_pheromone(const std::vector<bool>& moved);
    void maybe_explode();
    void explode(std::size_t target, bool chained);
    void update_tally();
    void check_termination();

    Config config_;
    std::uint64_t seed_;
    World world_;
    PheromoneField field_;
    std::vector<Robot> robots_;
    std::vector<Rng> robot_rng_;
    Rng pheromone_rng_;
    Rng shuffle_rng_;
    Rng explosion_rng_;
    EnergyLedger ledger_;
    MissionTally tally_;
    EventLog log_;
    TransitionMatrix transitions_{};
    std::vector<int> found_step_;  // per target, -1 until discovered
    std::ostream* pheromone_sink_ = nullptr;
    int step_ = 0;
    bool terminated_ = false;
    bool completed_ = false;
};

/// Runs to termination.
RunResult run(const Config& config, std::uint64_t seed);

/// Targets whose explosion draw comes up, each with probability p_explode.
/// Only Hidden, Found and Disarming targets are eligible.
std::vector<std::size_t> maybe_explode(const std::vector<Target>& targets, const Scenario& scenario, Rng& rng);

}  // namespace swarmsim
