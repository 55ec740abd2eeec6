#pragma once

#include <vector>

#include "swarmsim/weights.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

struct CoordinationSpan {
    int robot = 0;
    int target = 0;
    int start = 0;  // first receipt of the request (discovery for the coordinator)
    int end = 0;    // arrival (Execution start for the coordinator)
};

struct CoalitionRecord {
    int target = 0;
    int step = 0;      // Execution start
    int members = 0;   // robots entering Execution together
    int counted = 0;   // members counted toward R_min
};

struct MissionTally {
    int total_steps = 0;
    std::vector<long> visits;  // cells entered per robot, initial cell included
    std::vector<CoordinationSpan> spans;
    std::vector<CoalitionRecord> coalitions;
    int disarmed = 0;
    int explored_cells = 0;
    int unexplored_cells = 0;
    int inaccessible_cells = 0;
    int alive = 0;
};

/// w1 * T_e * (total visits) + w2 * (total coordination time). Throws
/// SimError(WeightConstraint) on invalid weights.
double weighted_objective(const MissionTally& tally, const Weights& weights, double visit_time);

/// Explored share of the non-obstacle cells.
double f1(const World& world);

/// Number of Disarmed targets.
int f2(const World& world);

struct ConstraintReport {
    bool every_cell_visited = false;   // no Unexplored or Inaccessible cell left
    bool coalitions_exact = true;      // every Disarmed target had exactly R_min counted members
    int cells_missing = 0;
    std::vector<int> bad_coalitions;   // target indices

    bool satisfied() const noexcept { return every_cell_visited && coalitions_exact; }
};

ConstraintReport check_constraints(const MissionTally& tally, const World& world, int r_min);

}  // namespace swarmsim
