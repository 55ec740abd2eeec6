#include "swarmsim/explore.hpp"

#include <cmath>

#include "swarmsim/error.hpp"

namespace swarmsim {

void ExploreParams::validate() const {
    if (!(eta_base > 0.0 && eta_base <= 1.0)) {
        throw SimError(ErrorKind::Validation, "explore.eta_base must lie in (0,1]");
    }
    if (!(phi > 0.0)) throw SimError(ErrorKind::Validation, "explore.phi must be positive");
    if (!(lambda >= 0.0)) throw SimError(ErrorKind::Validation, "explore.lambda must be >= 0");
}

double draw_heuristic(const ExploreParams& params, Rng& rng) {
    switch (params.heuristic) {
        case HeuristicMode::Jitter: return std::pow(params.eta_base, rng.uniform01());
        case HeuristicMode::Uniform: return rng.uniform_open01();
        case HeuristicMode::Constant: return params.eta_base;
    }
    return params.eta_base;
}

namespace {

double raw_score(double tau, double eta, const ExploreParams& params) {
    return std::pow(tau + kTauFloor, params.phi) * std::pow(eta, params.lambda);
}

}  // namespace

std::vector<CellScore> transition_distribution(const PheromoneField& field, std::span<const Coord> options,
                                               const ExploreParams& params, std::span<const double> eta) {
    if (options.empty()) throw SimError(ErrorKind::EmptyOptions, "transition over an empty neighbor set");
    std::vector<CellScore> out;
    out.reserve(options.size());
    double total = 0.0;
    for (std::size_t i = 0; i < options.size(); ++i) {
        const double s = raw_score(field.level(options[i]), eta[i], params);
        out.push_back({options[i], s});
        total += s;
    }
    for (CellScore& cs : out) cs.probability /= total;
    return out;
}

std::vector<CellScore> transition_distribution(const PheromoneField& field, std::span<const Coord> options,
                                               const ExploreParams& params, Rng& rng) {
    std::vector<double> eta(options.size());
    for (double& e : eta) e = draw_heuristic(params, rng);
    return transition_distribution(field, options, params, eta);
}

Coord select_next_cell(std::span<const CellScore> scores, Rng& rng) {
    if (scores.empty()) throw SimError(ErrorKind::EmptyOptions, "selection over an empty score set");
    double best = scores[0].probability;
    for (const CellScore& s : scores) best = std::min(best, s.probability);
    std::vector<Coord> tied;
    for (const CellScore& s : scores) {
        if (s.probability == best) tied.push_back(s.cell);
    }
    if (tied.size() == 1) return tied.front();
    return tied[rng.index(tied.size())];
}

Coord sample_next_cell(std::span<const CellScore> scores, Rng& rng) {
    if (scores.empty()) throw SimError(ErrorKind::EmptyOptions, "selection over an empty score set");
    double u = rng.uniform01();
    for (const CellScore& s : scores) {
        if (u < s.probability) return s.cell;
        u -= s.probability;
    }
    return scores.back().cell;
}

MoveDecision forager_move(Coord pos, const World& world, const PheromoneField& field,
                          const ExploreParams& params, Rng& rng) {
    const std::vector<Coord> options = world.neighbors(pos);
    if (options.empty()) return {pos, true};

    std::vector<double> eta(options.size());
    for (double& e : eta) e = draw_heuristic(params, rng);

    if (params.selection == SelectionRule::Sample) {
        const auto scores = transition_distribution(field, options, params, eta);
        return {sample_next_cell(scores, rng), false};
    }
    // The argmin of the normalized distribution is the argmin of the raw
    // scores; skip the division.
    std::vector<CellScore> raw;
    raw.reserve(options.size());
    for (std::size_t i = 0; i < options.size(); ++i) {
        raw.push_back({options[i], raw_score(field.level(options[i]), eta[i], params)});
    }
    return {select_next_cell(raw, rng), false};
}

MoveOutcome resolve_move(const World& world, Coord from, Coord desired, Rng& rng) {
    if (desired == from) return {from, false, true};
    if (world.accessible(desired) && chebyshev(from, desired) == 1) return {desired, false, false};
    const std::vector<Coord> options = world.neighbors(from);
    if (options.empty()) return {from, true, true};
    return {options[rng.index(options.size())], true, false};
}

}  // namespace swarmsim
