#include "swarmsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "swarmsim/error.hpp"

namespace swarmsim {

double euclidean(Coord a, Coord b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

int chebyshev(Coord a, Coord b) noexcept {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

const char* to_string(TargetStatus s) noexcept {
    switch (s) {
        case TargetStatus::Hidden: return "hidden";
        case TargetStatus::Found: return "found";
        case TargetStatus::Disarming: return "disarming";
        case TargetStatus::Disarmed: return "disarmed";
        case TargetStatus::Exploded: return "exploded";
    }
    return "?";
}

World::World(int m, int n)
    : m_(m),
      n_(n),
      cells_(static_cast<std::size_t>(m) * n, CellState::Unexplored),
      occupancy_(cells_.size(), -1),
      target_index_(cells_.size(), -1),
      unexplored_(m * n) {}

World World::create(int m, int n, const ObstacleSpec& obstacles, int target_count, Rng& rng,
                    int reserved_cells) {
    if (m < 2 || n < 2) {
        throw SimError(ErrorKind::InvalidDimensions,
                       "grid must be at least 2x2, got " + std::to_string(m) + "x" + std::to_string(n));
    }
    if (target_count < 0 || reserved_cells < 0) {
        throw SimError(ErrorKind::InfeasiblePlacement, "negative entity count");
    }
    World w(m, n);

    auto set_obstacle = [&w](std::size_t i) {
        if (w.cells_[i] == CellState::Obstacle) return;
        w.cells_[i] = CellState::Obstacle;
        --w.unexplored_;
        ++w.obstacles_;
    };
    switch (obstacles.kind) {
        case ObstacleSpec::Kind::None:
            break;
        case ObstacleSpec::Kind::Density:
            if (!(obstacles.density >= 0.0 && obstacles.density <= 1.0)) {
                throw SimError(ErrorKind::Validation, "obstacle density must lie in [0,1]");
            }
            for (std::size_t i = 0; i < w.cells_.size(); ++i) {
                if (rng.bernoulli(obstacles.density)) set_obstacle(i);
            }
            break;
        case ObstacleSpec::Kind::List:
            for (Coord c : obstacles.cells) {
                if (!w.in_bounds(c)) {
                    throw SimError(ErrorKind::Validation, "obstacle (" + std::to_string(c.x) + "," +
                                                              std::to_string(c.y) + ") out of bounds");
                }
                set_obstacle(w.index(c));
            }
            break;
    }

    if (w.obstacles_ > 0) w.seal_pockets();

    std::vector<Coord> free = w.free_cells();
    if (static_cast<long>(free.size()) < static_cast<long>(target_count) + reserved_cells) {
        throw SimError(ErrorKind::InfeasiblePlacement,
                       std::to_string(target_count) + " targets and " + std::to_string(reserved_cells) +
                           " robots do not fit in " + std::to_string(free.size()) + " free cells");
    }
    // Partial Fisher-Yates: the first target_count entries are a uniform sample.
    for (int i = 0; i < target_count; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) + rng.index(free.size() - static_cast<std::size_t>(i));
        std::swap(free[static_cast<std::size_t>(i)], free[j]);
        const Coord c = free[static_cast<std::size_t>(i)];
        w.target_index_[w.index(c)] = static_cast<int>(w.targets_.size());
        w.targets_.push_back(Target{c, TargetStatus::Hidden, 0, std::nullopt});
    }
    return w;
}

void World::place_target(Coord c) {
    if (!in_bounds(c) || cells_[index(c)] != CellState::Unexplored || target_index_[index(c)] >= 0 ||
        occupancy_[index(c)] >= 0) {
        throw SimError(ErrorKind::InfeasiblePlacement,
                       "target cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is not free");
    }
    target_index_[index(c)] = static_cast<int>(targets_.size());
    targets_.push_back(Target{c, TargetStatus::Hidden, 0, std::nullopt});
}

void World::seal_pockets() {
    // Label 8-connected components of non-obstacle cells; keep the largest.
    std::vector<int> label(cells_.size(), -1);
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < cells_.size(); ++start) {
        if (cells_[start] == CellState::Obstacle || label[start] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        std::size_t size = 0;
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const Coord c = coord(stack.back());
            stack.pop_back();
            ++size;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const Coord nb{c.x + dx, c.y + dy};
                    if (!in_bounds(nb)) continue;
                    const std::size_t j = index(nb);
                    if (cells_[j] == CellState::Obstacle || label[j] >= 0) continue;
                    label[j] = id;
                    stack.push_back(j);
                }
            }
        }
        sizes.push_back(size);
    }
    if (sizes.size() <= 1) return;
    const auto keep = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (label[i] >= 0 && label[i] != keep) {
            cells_[i] = CellState::Obstacle;
            --unexplored_;
            ++obstacles_;
        }
    }
}

bool World::accessible(Coord c) const noexcept {
    if (!in_bounds(c)) return false;
    const std::size_t i = index(c);
    const CellState s = cells_[i];
    return s != CellState::Obstacle && s != CellState::Inaccessible && occupancy_[i] < 0;
}

std::vector<Coord> World::neighbors(Coord c) const {
    std::vector<Coord> out;
    out.reserve(8);
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const Coord nb{c.x + dx, c.y + dy};
            if (accessible(nb)) out.push_back(nb);
        }
    }
    return out;
}

void World::mark_explored(Coord c) {
    CellState& s = cells_[index(c)];
    switch (s) {
        case CellState::Explored:
            return;
        case CellState::Unexplored:
            s = CellState::Explored;
            --unexplored_;
            ++explored_;
            return;
        case CellState::Obstacle:
            throw std::logic_error("mark_explored on an obstacle cell");
        case CellState::Inaccessible:
            throw std::logic_error("mark_explored on an inaccessible cell");
    }
}

int World::mark_inaccessible_region(Coord center, int radius) {
    int changed = 0;
    for (int y = center.y - radius; y <= center.y + radius; ++y) {
        for (int x = center.x - radius; x <= center.x + radius; ++x) {
            const Coord c{x, y};
            if (!in_bounds(c)) continue;
            CellState& s = cells_[index(c)];
            if (s == CellState::Unexplored) {
                s = CellState::Inaccessible;
                --unexplored_;
                ++inaccessible_;
                ++changed;
            }
        }
    }
    return changed;
}

std::optional<int> World::occupant(Coord c) const {
    const int id = occupancy_[index(c)];
    if (id < 0) return std::nullopt;
    return id;
}

void World::occupy(Coord c, int robot_id) {
    int& slot = occupancy_[index(c)];
    if (slot >= 0 && slot != robot_id) throw std::logic_error("cell already occupied");
    slot = robot_id;
}

void World::vacate(Coord c) { occupancy_[index(c)] = -1; }

std::optional<std::size_t> World::target_at(Coord c) const {
    const int t = target_index_[index(c)];
    if (t < 0) return std::nullopt;
    return static_cast<std::size_t>(t);
}

std::vector<Coord> World::free_cells() const {
    std::vector<Coord> out;
    out.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] == CellState::Obstacle || cells_[i] == CellState::Inaccessible) continue;
        if (occupancy_[i] >= 0 || target_index_[i] >= 0) continue;
        out.push_back(coord(i));
    }
    return out;
}

}  // namespace swarmsim
