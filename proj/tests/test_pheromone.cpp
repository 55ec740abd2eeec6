#include <doctest.h>

#include <cmath>

#include "swarmsim/pheromone.hpp"

using namespace swarmsim;

namespace {

double amount_at(const Increments& inc, Coord c) {
    for (const Deposit& d : inc)
        if (d.cell == c) return d.amount;
    return 0.0;
}

}  // namespace

TEST_CASE("deposit amounts follow the distance decay with zero noise") {
    PheromoneField field(11, 11, PheromoneParams{});
    const Increments inc = field.deposit({6, 6}, [] { return 0.0; });
    CHECK(amount_at(inc, {6, 6}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(amount_at(inc, {7, 6}) == doctest::Approx(0.270670566473225383788).epsilon(1e-14));
    CHECK(amount_at(inc, {7, 7}) == doctest::Approx(0.118211493123912475526).epsilon(1e-14));
    // Beyond R_s = 4 nothing is laid: (6,11) is at distance 5.
    for (const Deposit& d : inc) CHECK(euclidean(d.cell, {6, 6}) <= 4.0);
    CHECK(amount_at(inc, {6, 11}) == 0.0);
    // The full disk of radius 4 holds 49 lattice points.
    CHECK(inc.size() == 49);
}

TEST_CASE("deposit is clipped at the grid boundary and never negative") {
    PheromoneField field(5, 5, PheromoneParams{});
    Rng rng(9);
    const Increments inc = field.deposit({1, 1}, rng);
    for (const Deposit& d : inc) {
        CHECK(d.amount >= 0.0);
        CHECK(field.level(d.cell) == 0.0);
        CHECK(d.cell.x >= 1);
        CHECK(d.cell.y >= 1);
    }
    // Large noise drives far cells below zero before clamping.
    const Increments noisy = field.deposit({3, 3}, [] { return 0.99; });
    CHECK(amount_at(noisy, {5, 5}) == 0.0);
    CHECK(amount_at(noisy, {3, 3}) == doctest::Approx(2.0 - 1.98));
}

TEST_CASE("evaporation") {
    PheromoneParams p;
    p.rho = 0.1;
    PheromoneField field(3, 3, p);
    field.set_level({2, 2}, 10.0);
    field.evaporate();
    CHECK(field.level({2, 2}) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(field.level({1, 1}) == 0.0);

    p.rho = 1.0;
    PheromoneField full(3, 3, p);
    full.set_level({1, 2}, 3.5);
    full.evaporate();
    for (double v : full.levels()) CHECK(v == 0.0);
}

TEST_CASE("step_update evaporates then sums all robots' increments") {
    PheromoneField field(5, 5, PheromoneParams{});
    field.set_level({3, 3}, 4.0);
    const Increments a{{{3, 3}, 2.0}};
    const Increments b{{{3, 3}, 2.0 * std::exp(-2.0)}};
    field.step_update(std::vector<Increments>{a, b});
    CHECK(field.level({3, 3}) == doctest::Approx(5.87067056647322538).epsilon(1e-14));

    PheromoneField quiet(5, 5, PheromoneParams{});
    quiet.set_level({1, 1}, 1.0);
    quiet.step_update({});
    CHECK(quiet.level({1, 1}) == doctest::Approx(0.9));

    PheromoneField fresh(5, 5, PheromoneParams{});
    fresh.step_update(std::vector<Increments>{Increments{{{2, 2}, 2.0}}});
    CHECK(fresh.level({2, 2}) == 2.0);
}

TEST_CASE("field without robots decays geometrically to zero") {
    PheromoneField field(4, 4, PheromoneParams{});
    field.set_level({2, 3}, 5.0);
    double prev = 5.0;
    for (int t = 0; t < 500; ++t) {
        field.step_update({});
        const double now = field.level({2, 3});
        CHECK(now <= prev);
        CHECK(now >= 0.0);
        prev = now;
    }
    CHECK(prev < 1e-20);
}

TEST_CASE("superposition and locality against a brute-force reference") {
    // Reference: per cell, (1 - rho) * prev + sum over robots of the clamped
    // distance-decay formula, using the same noise sequence order.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PheromoneParams p;
        Rng setup(seed);
        const int m = 3 + static_cast<int>(setup.index(8));
        const int n = 3 + static_cast<int>(setup.index(8));
        PheromoneField field(m, n, p);
        std::vector<double> ref(static_cast<std::size_t>(m * n));
        for (int y = 1; y <= n; ++y)
            for (int x = 1; x <= m; ++x) {
                const double v = setup.uniform01() * 3.0;
                field.set_level({x, y}, v);
                ref[static_cast<std::size_t>((y - 1) * m + x - 1)] = v;
            }
        std::vector<Coord> robots;
        for (int k = 0; k < 3; ++k)
            robots.push_back({1 + static_cast<int>(setup.index(static_cast<std::size_t>(m))),
                              1 + static_cast<int>(setup.index(static_cast<std::size_t>(n)))});

        Rng noise_impl(seed * 7);
        std::vector<Increments> deposits;
        for (Coord r : robots) deposits.push_back(field.deposit(r, noise_impl));
        for (std::size_t k = 0; k < robots.size(); ++k)
            for (const Deposit& d : deposits[k]) CHECK(euclidean(d.cell, robots[k]) <= p.sensing_range);
        field.step_update(deposits);

        Rng noise_ref(seed * 7);
        for (double& v : ref) v *= (1.0 - p.rho);
        for (Coord r : robots) {
            for (int y = 1; y <= n; ++y)
                for (int x = 1; x <= m; ++x) {
                    const double dist = std::hypot(x - r.x, y - r.y);
                    if (dist > p.sensing_range) continue;
                    const double eps = noise_ref.uniform_open01();
                    const double inc = p.delta_tau0 * std::exp(-dist / p.a1) - eps / p.a2;
                    ref[static_cast<std::size_t>((y - 1) * m + x - 1)] += inc > 0 ? inc : 0.0;
                }
        }
        for (int y = 1; y <= n; ++y)
            for (int x = 1; x <= m; ++x) {
                const double want = ref[static_cast<std::size_t>((y - 1) * m + x - 1)];
                const double got = field.level({x, y});
                CHECK(got >= 0.0);
                CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
            }
    }
}
