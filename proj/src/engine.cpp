#include "swarmsim/engine.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "swarmsim/error.hpp"
#include "swarmsim/format.hpp"

namespace swarmsim {

const char* to_string(ScenarioMode m) noexcept { return m == ScenarioMode::Static ? "static" : "dynamic"; }

void Config::validate() const {
    if (m < 2 || n < 2) throw SimError(ErrorKind::InvalidDimensions, "world.m and world.n must be >= 2");
    if (targets < 0) throw SimError(ErrorKind::Validation, "world.targets must be >= 0");
    swarm.validate();
    pheromone.validate();
    explore.validate();
    firefly.validate();
    energy.validate();
    weights.validate();
    if (!(scenario.p_explode >= 0.0 && scenario.p_explode <= 1.0)) {
        throw SimError(ErrorKind::Validation, "scenario.p_explode must lie in [0,1]");
    }
    if (scenario.blast_radius < 0) throw SimError(ErrorKind::Validation, "scenario.blast_radius must be >= 0");
    if (scenario.max_steps < 1) throw SimError(ErrorKind::Validation, "run.max_steps must be >= 1");
    if (!(visit_time >= 0.0)) throw SimError(ErrorKind::Validation, "weights.visit_time must be >= 0");
    if (replications < 1) throw SimError(ErrorKind::Validation, "run.replications must be >= 1");
    if (static_cast<long>(targets) + swarm.robots > static_cast<long>(m) * n) {
        throw SimError(ErrorKind::InfeasiblePlacement, "targets and robots exceed the grid size");
    }
}

std::vector<std::size_t> maybe_explode(const std::vector<Target>& targets, const Scenario& scenario, Rng& rng) {
    std::vector<std::size_t> out;
    if (!scenario.dynamic()) return out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!is_armed(targets[i].status)) continue;
        if (rng.bernoulli(scenario.p_explode)) out.push_back(i);
    }
    return out;
}

namespace {

World make_world(const Config& c, std::uint64_t seed) {
    Rng placement = Rng::derive(seed, "world");
    return World::create(c.m, c.n, c.obstacles, c.targets, placement, c.swarm.robots);
}

World make_world(const Config& c, std::uint64_t seed, const Layout& layout) {
    Rng placement = Rng::derive(seed, "world");
    World w = World::create(c.m, c.n, c.obstacles, 0, placement, c.swarm.robots);
    for (Coord t : layout.targets) w.place_target(t);
    return w;
}

}  // namespace

Simulation::Simulation(const Config& config, std::uint64_t seed, bool record_events)
    : config_(config),
      seed_(seed),
      world_(make_world(config, seed)),
      field_(config.m, config.n, config.pheromone),
      pheromone_rng_(Rng::derive(seed, "pheromone")),
      shuffle_rng_(Rng::derive(seed, "shuffle")),
      explosion_rng_(Rng::derive(seed, "explosion")),
      ledger_(static_cast<std::size_t>(config.swarm.robots)),
      log_(record_events),
      found_step_(world_.targets().size(), -1) {
    config_.validate();
    Rng placement = Rng::derive(seed, "robots");
    place_robots(placement);
    update_tally();
}

Simulation::Simulation(const Config& config, std::uint64_t seed, const Layout& layout, bool record_events)
    : config_(config),
      seed_(seed),
      world_(make_world(config, seed, layout)),
      field_(config.m, config.n, config.pheromone),
      pheromone_rng_(Rng::derive(seed, "pheromone")),
      shuffle_rng_(Rng::derive(seed, "shuffle")),
      explosion_rng_(Rng::derive(seed, "explosion")),
      ledger_(static_cast<std::size_t>(config.swarm.robots)),
      log_(record_events),
      found_step_(world_.targets().size(), -1) {
    config_.targets = static_cast<int>(layout.targets.size());
    config_.validate();
    if (layout.robots.size() != static_cast<std::size_t>(config_.swarm.robots)) {
        throw SimError(ErrorKind::InfeasiblePlacement, "layout robot count differs from swarm.robots");
    }
    tally_.visits.assign(layout.robots.size(), 1);
    for (std::size_t i = 0; i < layout.robots.size(); ++i) {
        const Coord c = layout.robots[i];
        if (!world_.accessible(c)) {
            throw SimError(ErrorKind::InfeasiblePlacement, "layout robot cell is not free");
        }
        add_robot(c, i < layout.headings.size() ? layout.headings[i] : Heading::E);
    }
    update_tally();
}

void Simulation::place_robots(Rng& placement) {
    std::vector<Coord> free = world_.free_cells();
    const auto count = static_cast<std::size_t>(config_.swarm.robots);
    if (free.size() < count) throw SimError(ErrorKind::InfeasiblePlacement, "not enough free cells for robots");
    tally_.visits.assign(count, 1);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + placement.index(free.size() - i);
        std::swap(free[i], free[j]);
        add_robot(free[i], static_cast<Heading>(placement.index(8)));
    }
}

void Simulation::add_robot(Coord pos, Heading heading) {
    Robot r;
    r.id = static_cast<int>(robots_.size());
    r.pos = pos;
    r.heading = heading;
    r.energy = config_.energy.budget;
    world_.occupy(r.pos, r.id);
    world_.mark_explored(r.pos);
    robot_rng_.push_back(Rng::derive(seed_, "robot", robots_.size()));
    robots_.push_back(std::move(r));
}

int Simulation::alive_count() const noexcept {
    return static_cast<int>(std::count_if(robots_.begin(), robots_.end(), [](const Robot& r) { return r.alive(); }));
}

void Simulation::set_state(Robot& robot, RobotState to, const char* reason) {
    if (robot.state == to) return;
    if (!is_allowed_transition(robot.state, to)) {
        throw std::logic_error(std::string("illegal transition ") + to_string(robot.state) + " -> " + to_string(to));
    }
    ++transitions_[static_cast<std::size_t>(robot.state)][static_cast<std::size_t>(to)];
    Event e;
    e.step = step_;
    e.kind = EventKind::State;
    e.subject = robot.id;
    e.from = robot.state;
    e.to = to;
    e.reason = reason;
    log_.push(e);
    robot.state = to;
}

void Simulation::charge(Robot& robot, double amount, DebitCategory category) {
    debit(ledger_, robot, amount, category, step_, config_.scenario.dynamic());
    Event e;
    e.step = step_;
    e.kind = EventKind::Debit;
    e.subject = robot.id;
    e.category = category;
    e.amount = amount;
    log_.push(e);
}

void Simulation::kill(Robot& robot, const char* reason) {
    if (!robot.alive()) return;
    if (robot.state == RobotState::Coordinator && robot.committed) {
        if (const auto t = world_.target_at(*robot.committed)) world_.targets()[*t].coordinator.reset();
    }
    set_state(robot, RobotState::Dead, reason);
    Event e;
    e.step = step_;
    e.kind = EventKind::Death;
    e.subject = robot.id;
    e.reason = reason;
    log_.push(e);
    world_.vacate(robot.pos);
    robot.rr.clear();
}

bool Simulation::request_live(const HelpRequest& req) const {
    const auto t = world_.target_at(req.target_pos);
    if (!t) return false;
    const Target& target = world_.targets()[*t];
    return target.status == TargetStatus::Found && target.coordinator.has_value();
}

void Simulation::purge_requests() {
    for (Robot& r : robots_) {
        if (!r.alive()) continue;
        std::erase_if(r.rr, [this](const HelpRequest& req) { return !request_live(req); });
        if (r.state == RobotState::Waiting && !(r.committed && request_live({-1, *r.committed, 0}))) {
            r.committed.reset();
            r.rr.clear();
            set_state(r, RobotState::Forager, "target-lost");
        }
    }
}

std::vector<std::vector<HelpRequest>> Simulation::communicate() {
    auto inbox = deliver_packets(robots_, config_.swarm.transmission_range, step_);
    const double tx = tx_cost(config_.energy, config_.swarm.transmission_range);
    const double rx = rx_cost(config_.energy);
    for (Robot& r : robots_) {
        if (r.state != RobotState::Coordinator) continue;
        Event e;
        e.step = step_;
        e.kind = EventKind::Broadcast;
        e.subject = r.id;
        e.a = r.pos;
        log_.push(e);
        charge(r, tx, DebitCategory::Tx);
    }
    for (Robot& r : robots_) {
        for (const HelpRequest& req : inbox[static_cast<std::size_t>(r.id)]) {
            Event e;
            e.step = step_;
            e.kind = EventKind::Receive;
            e.subject = r.id;
            e.other = req.coordinator_id;
            log_.push(e);
            charge(r, rx, DebitCategory::Rx);
            const bool heard = std::any_of(r.first_heard.begin(), r.first_heard.end(),
                                           [&](const auto& p) { return p.first == req.target_pos; });
            if (!heard) r.first_heard.emplace_back(req.target_pos, step_);
        }
    }
    return inbox;
}

void Simulation::tick_executions() {
    const double per_step = config_.energy.disarm_cost / config_.swarm.disarm_steps;
    for (std::size_t ti = 0; ti < world_.targets().size(); ++ti) {
        Target& target = world_.targets()[ti];
        if (target.status != TargetStatus::Disarming) continue;
        bool done = false;
        int members = 0;
        for (Robot& r : robots_) {
            if (r.state != RobotState::Execution || r.committed != target.pos) continue;
            ++members;
            charge(r, per_step, DebitCategory::Disarm);
            if (--r.exec_remaining <= 0) done = true;
        }
        if (!done || members == 0) continue;
        target.status = TargetStatus::Disarmed;
        target.coordinator.reset();
        ++tally_.disarmed;
        Event e;
        e.step = step_;
        e.kind = EventKind::Disarm;
        e.subject = static_cast<int>(ti);
        e.a = target.pos;
        e.other = target.arrived;
        log_.push(e);
        for (Robot& r : robots_) {
            if (r.state != RobotState::Execution || r.committed != target.pos) continue;
            r.committed.reset();
            r.rr.clear();
            r.exec_remaining = 0;
            set_state(r, RobotState::Forager, "disarmed");
        }
        target.arrived = 0;
    }
}

void Simulation::form_coalitions() {
    const bool counts = config_.swarm.coordinator_counts;
    const int r_min = config_.swarm.r_min;
    for (std::size_t ti = 0; ti < world_.targets().size(); ++ti) {
        Target& target = world_.targets()[ti];
        if (target.status != TargetStatus::Found || !target.coordinator) continue;
        Robot& coord = robots_[static_cast<std::size_t>(*target.coordinator)];

        std::vector<Robot*> waiting;
        for (Robot& r : robots_) {
            if (r.state == RobotState::Waiting && r.committed == target.pos) waiting.push_back(&r);
        }
        target.arrived = static_cast<int>(waiting.size()) + (counts ? 1 : 0);
        const int needed_recruits = r_min - (counts ? 1 : 0);
        if (static_cast<int>(waiting.size()) < needed_recruits) continue;

        std::stable_sort(waiting.begin(), waiting.end(), [](const Robot* a, const Robot* b) {
            return a->arrived_step != b->arrived_step ? a->arrived_step < b->arrived_step : a->id < b->id;
        });
        const auto k = static_cast<std::size_t>(needed_recruits);
        target.status = TargetStatus::Disarming;
        target.arrived = r_min;
        tally_.coalitions.push_back({static_cast<int>(ti), step_, static_cast<int>(k) + 1, r_min});

        coord.exec_remaining = config_.swarm.disarm_steps;
        set_state(coord, RobotState::Execution, "coalition");
        tally_.spans.push_back({coord.id, static_cast<int>(ti), found_step_[ti], step_});
        for (std::size_t i = 0; i < waiting.size(); ++i) {
            Robot& r = *waiting[i];
            if (i < k) {
                int heard = r.arrived_step;
                for (const auto& [pos, s] : r.first_heard) {
                    if (pos == target.pos) heard = s;
                }
                tally_.spans.push_back({r.id, static_cast<int>(ti), heard, r.arrived_step});
                r.rr.clear();
                r.exec_remaining = config_.swarm.disarm_steps;
                set_state(r, RobotState::Execution, "coalition");
            } else {
                r.rr.clear();
                r.committed.reset();
                set_state(r, RobotState::Forager, "coalition-full");
            }
        }
    }
}

void Simulation::apply_moves(const std::vector<RobotAction>& actions, std::vector<bool>& moved) {
    std::vector<int> order;
    for (const Robot& r : robots_) {
        if (r.alive()) order.push_back(r.id);
    }
    shuffle_rng_.shuffle(order);
    for (int id : order) {
        Robot& r = robots_[static_cast<std::size_t>(id)];
        const RobotAction& act = actions[static_cast<std::size_t>(id)];
        if (act.kind == ActionKind::DisarmTick || r.state == RobotState::Execution) continue;
        if (act.kind != ActionKind::Move) {
            charge(r, movement_cost(config_.energy, r.heading, r.heading, false), DebitCategory::Mobility);
            continue;
        }
        const MoveOutcome out = resolve_move(world_, r.pos, act.desired, robot_rng_[static_cast<std::size_t>(id)]);
        if (out.stayed) {
            charge(r, movement_cost(config_.energy, r.heading, r.heading, false), DebitCategory::Mobility);
            continue;
        }
        const Heading next = heading_of(out.cell.x - r.pos.x, out.cell.y - r.pos.y);
        charge(r, movement_cost(config_.energy, r.heading, next, true), DebitCategory::Mobility);
        Event e;
        e.step = step_;
        e.kind = EventKind::Move;
        e.subject = id;
        e.a = r.pos;
        e.b = out.cell;
        e.other = out.fallback ? 1 : 0;
        log_.push(e);
        world_.vacate(r.pos);
        world_.occupy(out.cell, id);
        r.pos = out.cell;
        r.heading = next;
        world_.mark_explored(out.cell);
        ++tally_.visits[static_cast<std::size_t>(id)];
        moved[static_cast<std::size_t>(id)] = true;
    }
}

void Simulation::update_pheromone(const std::vector<bool>& moved) {
    std::vector<Increments> deposits;
    for (const Robot& r : robots_) {
        if (!r.alive() || r.state != RobotState::Forager || !moved[static_cast<std::size_t>(r.id)]) continue;
        deposits.push_back(field_.deposit(r.pos, pheromone_rng_));
        Event e;
        e.step = step_;
        e.kind = EventKind::Deposit;
        e.subject = r.id;
        e.a = r.pos;
        log_.push(e);
    }
    field_.step_update(deposits);
    if (pheromone_sink_ != nullptr) {
        for (int y = 1; y <= config_.n; ++y) {
            *pheromone_sink_ << step_ << ',' << y;
            for (int x = 1; x <= config_.m; ++x) *pheromone_sink_ << ',' << format_double(field_.level({x, y}));
            *pheromone_sink_ << '\n';
        }
    }
}

void Simulation::explode(std::size_t ti, bool chained) {
    Target& target = world_.targets()[ti];
    target.status = TargetStatus::Exploded;
    target.coordinator.reset();
    Event e;
    e.step = step_;
    e.kind = EventKind::Explode;
    e.subject = static_cast<int>(ti);
    e.a = target.pos;
    e.other = chained ? 1 : 0;
    log_.push(e);
    const int radius = config_.scenario.blast_radius;
    for (Robot& r : robots_) {
        if (r.alive() && chebyshev(r.pos, target.pos) <= radius) kill(r, "explosion");
    }
    world_.mark_inaccessible_region(target.pos, radius);
    for (std::size_t other = 0; other < world_.targets().size(); ++other) {
        Target& t = world_.targets()[other];
        if (other == ti || !is_armed(t.status) || chebyshev(t.pos, target.pos) > radius) continue;
        t.status = TargetStatus::Exploded;
        t.coordinator.reset();
        Event c;
        c.step = step_;
        c.kind = EventKind::Explode;
        c.subject = static_cast<int>(other);
        c.a = t.pos;
        c.other = 1;
        log_.push(c);
    }
}

void Simulation::maybe_explode() {
    for (std::size_t ti : swarmsim::maybe_explode(world_.targets(), config_.scenario, explosion_rng_)) {
        // An earlier blast this step may already have taken this one out.
        if (is_armed(world_.targets()[ti].status)) explode(ti, false);
    }
}

void Simulation::update_tally() {
    tally_.total_steps = step_;
    tally_.explored_cells = world_.explored_count();
    tally_.unexplored_cells = world_.unexplored_count();
    tally_.inaccessible_cells = world_.inaccessible_count();
    tally_.alive = alive_count();
}

void Simulation::check_termination() {
    const auto& ts = world_.targets();
    if (config_.scenario.dynamic()) {
        const bool no_armed = std::none_of(ts.begin(), ts.end(), [](const Target& t) { return is_armed(t.status); });
        completed_ = world_.unexplored_count() == 0 && no_armed;
        terminated_ = completed_ || tally_.alive == 0;
    } else {
        completed_ = world_.unexplored_count() == 0 && f2(world_) == static_cast<int>(ts.size());
        terminated_ = completed_;
    }
    if (step_ >= config_.scenario.max_steps) terminated_ = true;
}

std::size_t Simulation::step() {
    if (terminated_) throw SimError(ErrorKind::Terminated, "step on a terminated simulation");
    ++step_;
    const std::size_t events_before = log_.events().size();

    purge_requests();
    const auto inbox = communicate();

    const DecisionContext ctx{world_, field_, config_.swarm, config_.firefly, config_.explore, config_.weights,
                              config_.urge};
    std::vector<RobotAction> actions(robots_.size());
    for (Robot& r : robots_) {
        if (!r.alive()) continue;
        actions[static_cast<std::size_t>(r.id)] =
            step_robot(r, inbox[static_cast<std::size_t>(r.id)], ctx, robot_rng_[static_cast<std::size_t>(r.id)]);
    }
    for (Robot& r : robots_) {
        if (!r.alive()) continue;
        const RobotAction& act = actions[static_cast<std::size_t>(r.id)];
        if (act.next_state == r.state) continue;
        if (act.next_state == RobotState::Coordinator) {
            const std::size_t ti = *world_.target_at(r.pos);
            Target& target = world_.targets()[ti];
            target.status = TargetStatus::Found;
            target.coordinator = r.id;
            if (found_step_[ti] < 0) found_step_[ti] = step_;
        }
        if (act.next_state == RobotState::Waiting) r.arrived_step = step_;
        set_state(r, act.next_state, act.reason);
    }

    tick_executions();
    form_coalitions();

    std::vector<bool> moved(robots_.size(), false);
    apply_moves(actions, moved);
    update_pheromone(moved);

    if (config_.scenario.dynamic()) {
        maybe_explode();
        for (Robot& r : robots_) {
            if (r.alive() && r.energy <= 0.0) kill(r, "energy");
        }
    }

    update_tally();
    check_termination();
    return log_.events().size() - events_before;
}

RunResult Simulation::result() const {
    RunResult res;
    res.steps = step_;
    res.tesc = tesc(ledger_);
    res.f1 = f1(world_);
    res.f2 = f2(world_);
    res.alive_fraction = static_cast<double>(alive_count()) / static_cast<double>(robots_.size());
    res.targets_found = static_cast<int>(std::count_if(found_step_.begin(), found_step_.end(), [](int s) { return s >= 0; }));
    res.completed = completed_;
    res.seed = seed_;
    res.objective = weighted_objective(tally_, config_.weights, config_.visit_time);
    res.transitions = transitions_;
    res.coalitions = tally_.coalitions;
    return res;
}

RunResult run(const Config& config, std::uint64_t seed) {
    Simulation sim(config, seed);
    while (!sim.terminated()) sim.step();
    return sim.result();
}

}  // namespace swarmsim
