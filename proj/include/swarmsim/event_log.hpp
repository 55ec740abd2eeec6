#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swarmsim/energy.hpp"
#include "swarmsim/robot.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

enum class EventKind : std::uint8_t { Move, Deposit, Broadcast, Receive, State, Explode, Death, Disarm, Debit };

const char* to_string(EventKind k) noexcept;

/// One simulation event. Fields beyond `step`, `kind` and `subject` are used
/// per kind; see format_event for the line layout.
struct Event {
    int step = 0;
    EventKind kind = EventKind::Move;
    int subject = 0;  // robot id, or target index for explode/disarm
    int other = 0;    // coordinator id (receive), coalition size (disarm), chained flag (explode), fallback flag (move)
    Coord a;
    Coord b;
    double amount = 0.0;
    RobotState from = RobotState::Forager;
    RobotState to = RobotState::Forager;
    DebitCategory category = DebitCategory::Mobility;
    const char* reason = "";
};

/// Line form "step kind payload...":
///   move      robot x0 y0 x1 y1 fallback
///   deposit   robot x y
///   broadcast robot x y
///   receive   robot coordinator
///   state     robot from to reason
///   explode   target x y chained
///   death     robot reason
///   disarm    target x y coalition_size
///   debit     robot category amount
std::string format_event(const Event& e);

class EventLog {
public:
    explicit EventLog(bool enabled = false) : enabled_(enabled) {}

    bool enabled() const noexcept { return enabled_; }
    void push(const Event& e) {
        if (enabled_) events_.push_back(e);
    }
    const std::vector<Event>& events() const noexcept { return events_; }
    void write(std::ostream& os) const;

private:
    bool enabled_;
    std::vector<Event> events_;
};

}  // namespace swarmsim
