#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swarmsim/explore.hpp"
#include "swarmsim/recruit.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

enum class RobotState : std::uint8_t { Forager, Coordinator, Recruited, Waiting, Execution, Dead };

inline constexpr int kRobotStateCount = 6;

const char* to_string(RobotState s) noexcept;

/// Compass heading, counter-clockwise in 45 degree steps starting east.
enum class Heading : std::uint8_t { E, NE, N, NW, W, SW, S, SE };

Heading heading_of(int dx, int dy);

/// Turn between two headings in multiples of 45 degrees, 0..4.
int turn_steps(Heading a, Heading b) noexcept;

struct Robot {
    int id = 0;
    Coord pos;
    Heading heading = Heading::E;
    RobotState state = RobotState::Forager;
    double energy = 0.0;
    std::vector<HelpRequest> rr;     // accepted help requests
    std::optional<Coord> committed;  // target currently pursued or served
    int exec_remaining = 0;
    int arrived_step = 0;            // step the robot started waiting
    std::vector<std::pair<Coord, int>> first_heard;  // first receipt step per target

    bool alive() const noexcept { return state != RobotState::Dead; }
};

/// Whether `from -> to` is an edge of the robot behavior graph (the Dead
/// sink included).
bool is_allowed_transition(RobotState from, RobotState to) noexcept;

struct SwarmParams {
    int robots = 25;
    int r_min = 3;
    double transmission_range = 6.0;
    bool coordinator_counts = true;
    int disarm_steps = 5;  // duration of Execution

    void validate() const;

    friend bool operator==(const SwarmParams&, const SwarmParams&) = default;
};

/// Help requests delivered this step, indexed by robot id. Every Coordinator
/// reaches every alive non-Coordinator, non-Execution robot strictly closer
/// than the transmission range.
std::vector<std::vector<HelpRequest>> deliver_packets(std::span<const Robot> robots, double transmission_range,
                                                      int step);

enum class ActionKind : std::uint8_t { Move, Stay, Broadcast, DisarmTick };

struct RobotAction {
    ActionKind kind = ActionKind::Stay;
    Coord desired;  // Move only
    RobotState next_state = RobotState::Forager;
    const char* reason = "";
};

struct DecisionContext {
    const World& world;
    const PheromoneField& field;
    const SwarmParams& swarm;
    const FireflyParams& firefly;
    const ExploreParams& explore;
    Weights weights;
    UrgeMode urge_mode = UrgeMode::UnexploredFraction;
};

/// Per-robot decision against the step-start snapshot. Updates the robot's
/// request list and commitment; the caller applies the returned state and
/// action. Coalition formation and Execution ticks are target-level and are
/// handled by the engine.
RobotAction step_robot(Robot& robot, std::span<const HelpRequest> inbox, const DecisionContext& ctx, Rng& rng);

/// Arrival at a target: any cell of its 8-neighborhood (the target cell itself
/// is held by the coordinator).
inline bool arrived_at(Coord pos, Coord target) noexcept { return chebyshev(pos, target) <= 1; }

}  // namespace swarmsim
