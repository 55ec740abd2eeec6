#include "swarmsim/metrics.hpp"

#include <algorithm>

namespace swarmsim {

double weighted_objective(const MissionTally& tally, const Weights& weights, double visit_time) {
    weights.validate();
    double exploration = 0.0;
    for (long v : tally.visits) exploration += visit_time * static_cast<double>(v);
    double coordination = 0.0;
    for (const CoordinationSpan& s : tally.spans) coordination += static_cast<double>(s.end - s.start);
    return weights.w1 * exploration + weights.w2 * coordination;
}

double f1(const World& world) {
    const int denom = world.explored_count() + world.unexplored_count() + world.inaccessible_count();
    if (denom == 0) return 1.0;
    return static_cast<double>(world.explored_count()) / denom;
}

int f2(const World& world) {
    const auto& ts = world.targets();
    return static_cast<int>(
        std::count_if(ts.begin(), ts.end(), [](const Target& t) { return t.status == TargetStatus::Disarmed; }));
}

ConstraintReport check_constraints(const MissionTally& tally, const World& world, int r_min) {
    ConstraintReport report;
    report.cells_missing = world.unexplored_count() + world.inaccessible_count();
    report.every_cell_visited = report.cells_missing == 0;
    for (std::size_t i = 0; i < world.targets().size(); ++i) {
        if (world.targets()[i].status != TargetStatus::Disarmed) continue;
        const auto rec = std::find_if(tally.coalitions.begin(), tally.coalitions.end(),
                                      [&](const CoalitionRecord& c) { return c.target == static_cast<int>(i); });
        if (rec == tally.coalitions.end() || rec->counted != r_min) {
            report.coalitions_exact = false;
            report.bad_coalitions.push_back(static_cast<int>(i));
        }
    }
    return report;
}

}  // namespace swarmsim
