#pragma once

#include <span>
#include <vector>

#include "swarmsim/pheromone.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

/// Added to every pheromone level inside the transition rule only, so an
/// untouched neighborhood yields a uniform choice instead of 0/0.
inline constexpr double kTauFloor = 1e-12;

enum class HeuristicMode {
    Jitter,    // eta = eta_base^u, u ~ U(0,1): multiplicative noise in (eta_base, 1]
    Uniform,   // eta ~ U(0,1)
    Constant,  // eta = eta_base, cancels out of the rule
};

enum class SelectionRule {
    ArgMin,  // move to the least probable (least pheromone) neighbor
    Sample,  // draw a neighbor from the distribution
};

struct ExploreParams {
    double phi = 1.0;
    double lambda = 1.0;
    double eta_base = 0.9;
    HeuristicMode heuristic = HeuristicMode::Jitter;
    SelectionRule selection = SelectionRule::ArgMin;

    void validate() const;

    friend bool operator==(const ExploreParams&, const ExploreParams&) = default;
};

struct CellScore {
    Coord cell;
    double probability = 0.0;
};

double draw_heuristic(const ExploreParams& params, Rng& rng);

/// Normalized transition probabilities over `options` given explicit
/// heuristic values, one per option.
std::vector<CellScore> transition_distribution(const PheromoneField& field, std::span<const Coord> options,
                                               const ExploreParams& params, std::span<const double> eta);

/// As above with heuristic values drawn per option from `rng`.
std::vector<CellScore> transition_distribution(const PheromoneField& field, std::span<const Coord> options,
                                               const ExploreParams& params, Rng& rng);

/// Least-probability cell; exact ties broken uniformly with `rng`.
Coord select_next_cell(std::span<const CellScore> scores, Rng& rng);

/// Draws a cell proportionally to its probability.
Coord sample_next_cell(std::span<const CellScore> scores, Rng& rng);

struct MoveDecision {
    Coord cell;
    bool stay = false;
};

/// Forager choice over the currently accessible neighbors of `pos`. Stays put
/// when fully enclosed.
MoveDecision forager_move(Coord pos, const World& world, const PheromoneField& field,
                          const ExploreParams& params, Rng& rng);

struct MoveOutcome {
    Coord cell;
    bool fallback = false;
    bool stayed = false;
};

/// Commits a desired one-cell move against the live world. A blocked target
/// falls back to a uniformly random accessible neighbor, or to staying put.
MoveOutcome resolve_move(const World& world, Coord from, Coord desired, Rng& rng);

}  // namespace swarmsim
