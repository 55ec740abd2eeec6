#include "swarmsim/recruit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmsim/error.hpp"

namespace swarmsim {

void Weights::validate() const {
    if (!(w1 >= 0.0 && w2 >= 0.0) || std::abs(w1 + w2 - 1.0) > 1e-9) {
        throw SimError(ErrorKind::WeightConstraint,
                       "weights must be non-negative with w1 + w2 = 1 (got w1=" + std::to_string(w1) +
                           ", w2=" + std::to_string(w2) + ")");
    }
}

void FireflyParams::validate() const {
    if (!(beta0 > 0.0)) throw SimError(ErrorKind::Validation, "firefly.beta0 must be positive");
    if (!(gamma > 0.0)) throw SimError(ErrorKind::Validation, "firefly.gamma must be positive");
    if (!(alpha >= 0.0)) throw SimError(ErrorKind::Validation, "firefly.alpha must be >= 0");
    if (!(delta_margin >= 0.0)) throw SimError(ErrorKind::Validation, "firefly.delta must be >= 0");
}

double attractiveness(const FireflyParams& params, double r) {
    return params.beta0 * std::exp(-params.gamma * r * r);
}

const HelpRequest& choose_target(Coord robot_pos, std::span<const HelpRequest> requests,
                                 const FireflyParams& params) {
    if (requests.empty()) throw SimError(ErrorKind::EmptyRequests, "no help requests to choose from");
    const HelpRequest* best = &requests[0];
    double best_beta = attractiveness(params, euclidean(robot_pos, best->target_pos));
    for (const HelpRequest& req : requests.subspan(1)) {
        const double beta = attractiveness(params, euclidean(robot_pos, req.target_pos));
        const bool lex_smaller = std::pair(req.target_pos.y, req.target_pos.x) <
                                 std::pair(best->target_pos.y, best->target_pos.x);
        if (beta > best_beta || (beta == best_beta && lex_smaller)) {
            best = &req;
            best_beta = beta;
        }
    }
    return *best;
}

namespace {

int sign_of(double s) { return (s > 0.0) - (s < 0.0); }

}  // namespace

StepDelta firefly_step(Coord robot_pos, Coord target_pos, const FireflyParams& params, double sigma_x,
                       double sigma_y) {
    const double pull = attractiveness(params, euclidean(robot_pos, target_pos));
    const double sx = pull * (target_pos.x - robot_pos.x) + params.alpha * (sigma_x - 0.5);
    const double sy = pull * (target_pos.y - robot_pos.y) + params.alpha * (sigma_y - 0.5);
    return {sign_of(sx), sign_of(sy)};
}

StepDelta firefly_step(Coord robot_pos, Coord target_pos, const FireflyParams& params, Rng& rng) {
    const double sigma_x = rng.uniform01();
    const double sigma_y = rng.uniform01();
    return firefly_step(robot_pos, target_pos, params, sigma_x, sigma_y);
}

bool should_abandon(Coord robot_pos, std::span<const HelpRequest> requests, double transmission_range,
                    const FireflyParams& params) {
    const double limit = transmission_range + params.delta_margin;
    return std::all_of(requests.begin(), requests.end(), [&](const HelpRequest& r) {
        return euclidean(robot_pos, r.target_pos) >= limit;
    });
}

double exploration_urge(const World& world, const PheromoneField& field, Coord pos, UrgeMode mode) {
    const std::vector<Coord> options = world.neighbors(pos);
    if (options.empty()) return 0.0;
    switch (mode) {
        case UrgeMode::UnexploredFraction: {
            const auto fresh = std::count_if(options.begin(), options.end(), [&](Coord c) {
                return world.state(c) == CellState::Unexplored;
            });
            return static_cast<double>(fresh) / static_cast<double>(options.size());
        }
        case UrgeMode::PheromoneContrast: {
            double lo = field.level(options[0]);
            double hi = lo;
            for (Coord c : options) {
                lo = std::min(lo, field.level(c));
                hi = std::max(hi, field.level(c));
            }
            return hi > 0.0 ? 1.0 - lo / hi : 0.0;
        }
    }
    return 0.0;
}

RecruitmentScores recruitment_scores(Coord robot_pos, std::span<const HelpRequest> requests,
                                     const Weights& weights, const FireflyParams& params, double urge) {
    const HelpRequest& best = choose_target(robot_pos, requests, params);
    const double beta_star = attractiveness(params, euclidean(robot_pos, best.target_pos)) / params.beta0;
    return {weights.w2 * beta_star, weights.w1 * urge};
}

bool accept_recruitment(Coord robot_pos, std::span<const HelpRequest> requests, const Weights& weights,
                        const FireflyParams& params, double urge) {
    const RecruitmentScores s = recruitment_scores(robot_pos, requests, weights, params, urge);
    return s.recruit >= s.explore;
}

}  // namespace swarmsim
