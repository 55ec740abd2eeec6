#include "swarmsim/robot.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "swarmsim/error.hpp"

namespace swarmsim {

const char* to_string(RobotState s) noexcept {
    switch (s) {
        case RobotState::Forager: return "forager";
        case RobotState::Coordinator: return "coordinator";
        case RobotState::Recruited: return "recruited";
        case RobotState::Waiting: return "waiting";
        case RobotState::Execution: return "execution";
        case RobotState::Dead: return "dead";
    }
    return "?";
}

Heading heading_of(int dx, int dy) {
    static constexpr Heading table[3][3] = {
        // dy = -1            dy = 0        dy = +1
        {Heading::SW, Heading::W, Heading::NW},  // dx = -1
        {Heading::S, Heading::E, Heading::N},    // dx = 0 (no move keeps E)
        {Heading::SE, Heading::E, Heading::NE},  // dx = +1
    };
    if (dx < -1 || dx > 1 || dy < -1 || dy > 1) throw std::logic_error("heading of a non-unit step");
    return table[dx + 1][dy + 1];
}

int turn_steps(Heading a, Heading b) noexcept {
    const int d = std::abs(static_cast<int>(a) - static_cast<int>(b));
    return std::min(d, 8 - d);
}

bool is_allowed_transition(RobotState from, RobotState to) noexcept {
    using S = RobotState;
    if (from == S::Dead) return false;
    if (to == S::Dead) return true;
    switch (from) {
        case S::Forager: return to == S::Coordinator || to == S::Recruited;
        case S::Recruited: return to == S::Forager || to == S::Coordinator || to == S::Waiting;
        case S::Waiting: return to == S::Execution || to == S::Forager;
        case S::Coordinator: return to == S::Execution;
        case S::Execution: return to == S::Forager;
        case S::Dead: return false;
    }
    return false;
}

void SwarmParams::validate() const {
    if (robots < 1) throw SimError(ErrorKind::Validation, "swarm.robots must be >= 1");
    if (r_min < 1) throw SimError(ErrorKind::Validation, "swarm.r_min must be >= 1");
    if (r_min > robots) {
        throw SimError(ErrorKind::Validation, "swarm.r_min exceeds swarm.robots: coalition infeasible");
    }
    if (!(transmission_range > 0.0)) throw SimError(ErrorKind::Validation, "swarm.r_t must be positive");
    if (disarm_steps < 1) throw SimError(ErrorKind::Validation, "swarm.disarm_steps must be >= 1");
}

std::vector<std::vector<HelpRequest>> deliver_packets(std::span<const Robot> robots, double transmission_range,
                                                      int step) {
    std::vector<std::vector<HelpRequest>> inbox(robots.size());
    for (const Robot& sender : robots) {
        if (sender.state != RobotState::Coordinator) continue;
        const HelpRequest packet{sender.id, sender.pos, step};
        for (const Robot& rx : robots) {
            if (rx.id == sender.id || !rx.alive()) continue;
            if (rx.state == RobotState::Coordinator || rx.state == RobotState::Execution) continue;
            if (euclidean(sender.pos, rx.pos) < transmission_range) {
                inbox[static_cast<std::size_t>(rx.id)].push_back(packet);
            }
        }
    }
    return inbox;
}

namespace {

RobotAction explore_action(Robot& robot, const DecisionContext& ctx, Rng& rng, const char* reason) {
    robot.rr.clear();
    robot.committed.reset();
    const MoveDecision d = forager_move(robot.pos, ctx.world, ctx.field, ctx.explore, rng);
    if (d.stay) return {ActionKind::Stay, robot.pos, RobotState::Forager, reason};
    return {ActionKind::Move, d.cell, RobotState::Forager, reason};
}

void merge_requests(std::vector<HelpRequest>& into, std::span<const HelpRequest> inbox) {
    for (const HelpRequest& req : inbox) {
        const auto same = std::find_if(into.begin(), into.end(), [&](const HelpRequest& r) {
            return r.target_pos == req.target_pos;
        });
        if (same == into.end()) {
            into.push_back(req);
        } else {
            same->coordinator_id = req.coordinator_id;
        }
    }
}

}  // namespace

RobotAction step_robot(Robot& robot, std::span<const HelpRequest> inbox, const DecisionContext& ctx, Rng& rng) {
    if (!robot.alive()) throw std::logic_error("step_robot on a dead robot");

    if (robot.state == RobotState::Execution) {
        return {ActionKind::DisarmTick, robot.pos, RobotState::Execution, ""};
    }
    if (robot.state == RobotState::Coordinator) {
        return {ActionKind::Broadcast, robot.pos, RobotState::Coordinator, ""};
    }

    // Discovery by co-location. An orphaned Found target (its coordinator
    // died) is taken over the same way.
    if (const auto t = ctx.world.target_at(robot.pos)) {
        const Target& target = ctx.world.targets()[*t];
        if (target.status == TargetStatus::Hidden ||
            (target.status == TargetStatus::Found && !target.coordinator)) {
            robot.rr.clear();
            robot.committed = target.pos;
            return {ActionKind::Stay, robot.pos, RobotState::Coordinator, "found-target"};
        }
    }

    if (robot.state == RobotState::Waiting) {
        return {ActionKind::Stay, robot.pos, RobotState::Waiting, ""};
    }

    std::vector<HelpRequest> candidates = robot.state == RobotState::Recruited ? robot.rr
                                                                                 : std::vector<HelpRequest>{};
    merge_requests(candidates, inbox);

    if (candidates.empty()) {
        return explore_action(robot, ctx, rng, robot.state == RobotState::Recruited ? "no-requests" : "");
    }
    if (should_abandon(robot.pos, candidates, ctx.swarm.transmission_range, ctx.firefly)) {
        return explore_action(robot, ctx, rng, "abandon");
    }
    const double urge = exploration_urge(ctx.world, ctx.field, robot.pos, ctx.urge_mode);
    if (!accept_recruitment(robot.pos, candidates, ctx.weights, ctx.firefly, urge)) {
        return explore_action(robot, ctx, rng, "reject");
    }

    const Coord target = choose_target(robot.pos, candidates, ctx.firefly).target_pos;
    robot.rr = std::move(candidates);
    robot.committed = target;

    if (robot.state == RobotState::Recruited && arrived_at(robot.pos, target)) {
        return {ActionKind::Stay, robot.pos, RobotState::Waiting, "arrived"};
    }
    const char* reason = robot.state == RobotState::Forager ? "accept" : "";
    if (arrived_at(robot.pos, target)) {
        return {ActionKind::Stay, robot.pos, RobotState::Recruited, reason};
    }
    const StepDelta d = firefly_step(robot.pos, target, ctx.firefly, rng);
    const Coord desired{robot.pos.x + d.dx, robot.pos.y + d.dy};
    return {ActionKind::Move, desired, RobotState::Recruited, reason};
}

}  // namespace swarmsim
