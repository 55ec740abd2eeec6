#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <span>
#include <vector>

#include "swarmsim/rng.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

struct PheromoneParams {
    double delta_tau0 = 2.0;  // deposit at the robot's own cell
    double a1 = 0.5;          // distance decay constant
    double a2 = 0.5;          // noise scale constant
    double rho = 0.1;         // evaporation rate
    int sensing_range = 4;    // diffusion radius R_s, cells

    void validate() const;

    friend bool operator==(const PheromoneParams&, const PheromoneParams&) = default;
};

struct Deposit {
    Coord cell;
    double amount = 0.0;
};

using Increments = std::vector<Deposit>;

/// Per-cell repulsive pheromone levels. Starts at zero everywhere.
class PheromoneField {
public:
    PheromoneField(int m, int n, PheromoneParams params);

    const PheromoneParams& params() const noexcept { return params_; }
    int width() const noexcept { return m_; }
    int height() const noexcept { return n_; }

    double level(Coord c) const { return levels_[index(c)]; }
    void set_level(Coord c, double v) { levels_[index(c)] = v; }
    std::span<const double> levels() const noexcept { return levels_; }

    /// Increments laid by a robot at `pos`: delta_tau0 * exp(-r / a1) - eps / a2
    /// for every in-bounds cell within Euclidean distance sensing_range, clamped
    /// at zero. `noise()` is called once per covered cell in scan order.
    template <typename NoiseFn>
    Increments deposit(Coord pos, NoiseFn&& noise) const {
        Increments out;
        const int rs = params_.sensing_range;
        const double rs_sq = static_cast<double>(rs) * rs;
        for (int y = pos.y - rs; y <= pos.y + rs; ++y) {
            for (int x = pos.x - rs; x <= pos.x + rs; ++x) {
                if (x < 1 || x > m_ || y < 1 || y > n_) continue;
                const double dx = x - pos.x;
                const double dy = y - pos.y;
                const double d_sq = dx * dx + dy * dy;
                if (d_sq > rs_sq) continue;
                const double r = std::sqrt(d_sq);
                const double eps = noise();
                const double amount = params_.delta_tau0 * std::exp(-r / params_.a1) - eps / params_.a2;
                out.push_back({Coord{x, y}, std::max(0.0, amount)});
            }
        }
        return out;
    }

    /// Deposit with eps ~ Uniform(0,1) drawn from `rng`.
    Increments deposit(Coord pos, Rng& rng) const {
        return deposit(pos, [&rng] { return rng.uniform_open01(); });
    }

    /// Multiplies every level by (1 - rho).
    void evaporate();

    /// One time step: evaporate the previous field, then add all increments.
    void step_update(std::span<const Increments> deposits);

    /// Matrix dump, one grid row per line, rows y = 1..n.
    void write_csv(std::ostream& os) const;

private:
    std::size_t index(Coord c) const noexcept {
        return static_cast<std::size_t>(c.y - 1) * static_cast<std::size_t>(m_) +
               static_cast<std::size_t>(c.x - 1);
    }

    int m_;
    int n_;
    PheromoneParams params_;
    std::vector<double> levels_;
};

}  // namespace swarmsim
