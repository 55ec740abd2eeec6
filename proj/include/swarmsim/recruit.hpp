#pragma once

#include <span>

#include "swarmsim/pheromone.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/weights.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

/// Help-request packet broadcast by a coordinator.
struct HelpRequest {
    int coordinator_id = -1;
    Coord target_pos;
    int issued_step = 0;
};

struct FireflyParams {
    double alpha = 0.2;         // randomization weight
    double beta0 = 0.5;         // attractiveness at r = 0
    double gamma = 1.0 / 50.0;  // light absorption, 1/max(m,n) by default
    double delta_margin = 2.0;  // abandonment hysteresis, cells

    void validate() const;

    friend bool operator==(const FireflyParams&, const FireflyParams&) = default;
};

/// beta0 * exp(-gamma * r^2)
double attractiveness(const FireflyParams& params, double r);

/// Brightest request as seen from `robot_pos`; ties go to the smallest
/// (y, x) target coordinate.
const HelpRequest& choose_target(Coord robot_pos, std::span<const HelpRequest> requests,
                                 const FireflyParams& params);

struct StepDelta {
    int dx = 0;
    int dy = 0;

    friend bool operator==(const StepDelta&, const StepDelta&) = default;
};

/// Discretized firefly move with explicit per-axis sigma values.
StepDelta firefly_step(Coord robot_pos, Coord target_pos, const FireflyParams& params, double sigma_x,
                       double sigma_y);

/// Discretized firefly move, sigma ~ U(0,1) drawn per axis.
StepDelta firefly_step(Coord robot_pos, Coord target_pos, const FireflyParams& params, Rng& rng);

/// True when every requested target lies at least R_t + delta_margin away.
bool should_abandon(Coord robot_pos, std::span<const HelpRequest> requests, double transmission_range,
                    const FireflyParams& params);

enum class UrgeMode {
    UnexploredFraction,  // share of accessible neighbors still unexplored
    PheromoneContrast,   // 1 - min/max neighbor pheromone (0 when max is 0)
};

/// Exploration urge in [0, 1] at `pos`; zero when no neighbor is accessible.
double exploration_urge(const World& world, const PheromoneField& field, Coord pos, UrgeMode mode);

struct RecruitmentScores {
    double recruit = 0.0;  // w2 * beta* / beta0
    double explore = 0.0;  // w1 * urge
};

RecruitmentScores recruitment_scores(Coord robot_pos, std::span<const HelpRequest> requests,
                                     const Weights& weights, const FireflyParams& params, double urge);

/// Accepts when the recruitment score is at least the exploration score.
bool accept_recruitment(Coord robot_pos, std::span<const HelpRequest> requests, const Weights& weights,
                        const FireflyParams& params, double urge);

}  // namespace swarmsim
