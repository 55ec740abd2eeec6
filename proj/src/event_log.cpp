#include "swarmsim/event_log.hpp"

#include <locale>
#include <ostream>
#include <sstream>

#include "swarmsim/format.hpp"

namespace swarmsim {

const char* to_string(EventKind k) noexcept {
    switch (k) {
        case EventKind::Move: return "move";
        case EventKind::Deposit: return "deposit";
        case EventKind::Broadcast: return "broadcast";
        case EventKind::Receive: return "receive";
        case EventKind::State: return "state";
        case EventKind::Explode: return "explode";
        case EventKind::Death: return "death";
        case EventKind::Disarm: return "disarm";
        case EventKind::Debit: return "debit";
    }
    return "?";
}

std::string format_event(const Event& e) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << e.step << ' ' << to_string(e.kind) << ' ' << e.subject;
    switch (e.kind) {
        case EventKind::Move:
            os << ' ' << e.a.x << ' ' << e.a.y << ' ' << e.b.x << ' ' << e.b.y << ' ' << e.other;
            break;
        case EventKind::Deposit:
        case EventKind::Broadcast:
            os << ' ' << e.a.x << ' ' << e.a.y;
            break;
        case EventKind::Receive:
            os << ' ' << e.other;
            break;
        case EventKind::State:
            os << ' ' << to_string(e.from) << ' ' << to_string(e.to) << ' ' << (*e.reason ? e.reason : "-");
            break;
        case EventKind::Explode:
        case EventKind::Disarm:
            os << ' ' << e.a.x << ' ' << e.a.y << ' ' << e.other;
            break;
        case EventKind::Death:
            os << ' ' << e.reason;
            break;
        case EventKind::Debit:
            os << ' ' << to_string(e.category) << ' ' << format_double(e.amount);
            break;
    }
    return os.str();
}

void EventLog::write(std::ostream& os) const {
    for (const Event& e : events_) os << format_event(e) << '\n';
}

}  // namespace swarmsim
