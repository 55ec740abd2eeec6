#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "swarmsim/rng.hpp"

namespace swarmsim {

/// Grid coordinate, 1-based: x is the column in [1..m], y the row in [1..n].
struct Coord {
    int x = 1;
    int y = 1;

    friend auto operator<=>(const Coord&, const Coord&) = default;
};

double euclidean(Coord a, Coord b) noexcept;
int chebyshev(Coord a, Coord b) noexcept;

enum class CellState : std::uint8_t { Unexplored, Explored, Obstacle, Inaccessible };

enum class TargetStatus : std::uint8_t { Hidden, Found, Disarming, Disarmed, Exploded };

const char* to_string(TargetStatus s) noexcept;

inline bool is_armed(TargetStatus s) noexcept {
    return s == TargetStatus::Hidden || s == TargetStatus::Found || s == TargetStatus::Disarming;
}

struct Target {
    Coord pos;
    TargetStatus status = TargetStatus::Hidden;
    int arrived = 0;
    std::optional<int> coordinator;
};

struct ObstacleSpec {
    enum class Kind { None, Density, List };
    Kind kind = Kind::None;
    double density = 0.0;
    std::vector<Coord> cells;

    static ObstacleSpec none() { return {}; }
    static ObstacleSpec uniform(double p) { return {Kind::Density, p, {}}; }
    static ObstacleSpec list(std::vector<Coord> cells) { return {Kind::List, 0.0, std::move(cells)}; }

    friend bool operator==(const ObstacleSpec&, const ObstacleSpec&) = default;
};

class World {
public:
    /// Builds the grid, lays obstacles and places targets uniformly on free
    /// cells. `reserved_cells` free cells must remain for robot placement.
    static World create(int m, int n, const ObstacleSpec& obstacles, int target_count, Rng& rng,
                        int reserved_cells = 0);

    int width() const noexcept { return m_; }
    int height() const noexcept { return n_; }
    int cell_count() const noexcept { return m_ * n_; }

    bool in_bounds(Coord c) const noexcept {
        return c.x >= 1 && c.x <= m_ && c.y >= 1 && c.y <= n_;
    }

    CellState state(Coord c) const { return cells_[index(c)]; }

    /// In bounds, neither Obstacle nor Inaccessible, and unoccupied.
    bool accessible(Coord c) const noexcept;

    /// Accessible subset of the 8-neighborhood, in fixed scan order
    /// (y-major, then x).
    std::vector<Coord> neighbors(Coord c) const;

    void mark_explored(Coord c);

    /// Turns Unexplored cells within Chebyshev `radius` of `center` into
    /// Inaccessible. Returns how many changed.
    int mark_inaccessible_region(Coord center, int radius);

    std::optional<int> occupant(Coord c) const;
    void occupy(Coord c, int robot_id);
    void vacate(Coord c);

    std::vector<Target>& targets() noexcept { return targets_; }
    const std::vector<Target>& targets() const noexcept { return targets_; }
    std::optional<std::size_t> target_at(Coord c) const;
    /// Adds a Hidden target on a free cell; used for scripted layouts.
    void place_target(Coord c);

    /// Cells free of obstacles, targets and robots, in scan order.
    std::vector<Coord> free_cells() const;

    int explored_count() const noexcept { return explored_; }
    int unexplored_count() const noexcept { return unexplored_; }
    int inaccessible_count() const noexcept { return inaccessible_; }
    int obstacle_count() const noexcept { return obstacles_; }

    std::size_t index(Coord c) const noexcept {
        return static_cast<std::size_t>(c.y - 1) * static_cast<std::size_t>(m_) +
               static_cast<std::size_t>(c.x - 1);
    }
    Coord coord(std::size_t i) const noexcept {
        return {static_cast<int>(i % static_cast<std::size_t>(m_)) + 1,
                static_cast<int>(i / static_cast<std::size_t>(m_)) + 1};
    }

private:
    World(int m, int n);

    // Free cells cut off from the largest open region become obstacles, so
    // every remaining cell can be reached.
    void seal_pockets();

    int m_;
    int n_;
    std::vector<CellState> cells_;
    std::vector<int> occupancy_;  // -1 = empty
    std::vector<int> target_index_;  // -1 = none
    std::vector<Target> targets_;
    int explored_ = 0;
    int unexplored_ = 0;
    int inaccessible_ = 0;
    int obstacles_ = 0;
};

}  // namespace swarmsim
