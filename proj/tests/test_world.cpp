#include <doctest.h>

#include <algorithm>
#include <set>

#include "swarmsim/error.hpp"
#include "swarmsim/world.hpp"

using namespace swarmsim;

namespace {

// Brute-force reference: scan the whole grid for cells at Chebyshev distance 1.
std::set<Coord> reference_neighbors(const World& w, Coord c) {
    std::set<Coord> out;
    for (int y = 1; y <= w.height(); ++y) {
        for (int x = 1; x <= w.width(); ++x) {
            const Coord p{x, y};
            if (chebyshev(p, c) != 1) continue;
            const CellState s = w.state(p);
            if (s == CellState::Obstacle || s == CellState::Inaccessible || w.occupant(p)) continue;
            out.insert(p);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("new world places hidden targets on distinct free cells") {
    Rng rng(1);
    World w = World::create(50, 50, ObstacleSpec::none(), 10, rng);
    CHECK(w.cell_count() == 2500);
    CHECK(w.targets().size() == 10);
    CHECK(w.unexplored_count() == 2500);
    std::set<Coord> seen;
    for (const Target& t : w.targets()) {
        CHECK(t.status == TargetStatus::Hidden);
        CHECK(w.in_bounds(t.pos));
        seen.insert(t.pos);
    }
    CHECK(seen.size() == 10);
}

TEST_CASE("smallest world has no targets") {
    Rng rng(7);
    World w = World::create(2, 2, ObstacleSpec::none(), 0, rng);
    CHECK(w.cell_count() == 4);
    CHECK(w.unexplored_count() == 4);
    CHECK(w.targets().empty());
}

TEST_CASE("world creation errors") {
    Rng rng(3);
    std::vector<Coord> all;
    for (int y = 1; y <= 5; ++y)
        for (int x = 1; x <= 5; ++x) all.push_back({x, y});
    try {
        World::create(5, 5, ObstacleSpec::list(all), 1, rng);
        FAIL("expected infeasible placement");
    } catch (const SimError& e) {
        CHECK(e.kind() == ErrorKind::InfeasiblePlacement);
    }
    try {
        World::create(1, 5, ObstacleSpec::none(), 0, rng);
        FAIL("expected invalid dimensions");
    } catch (const SimError& e) {
        CHECK(e.kind() == ErrorKind::InvalidDimensions);
    }
    CHECK_THROWS_AS(World::create(4, 4, ObstacleSpec::none(), 10, rng, 7), SimError);
}

TEST_CASE("target placement is reproducible under a fixed seed") {
    Rng a(42);
    Rng b(42);
    const World wa = World::create(30, 20, ObstacleSpec::uniform(0.1), 8, a);
    const World wb = World::create(30, 20, ObstacleSpec::uniform(0.1), 8, b);
    REQUIRE(wa.targets().size() == wb.targets().size());
    for (std::size_t i = 0; i < wa.targets().size(); ++i) CHECK(wa.targets()[i].pos == wb.targets()[i].pos);
    for (int y = 1; y <= 20; ++y)
        for (int x = 1; x <= 30; ++x) CHECK(wa.state({x, y}) == wb.state({x, y}));
}

TEST_CASE("neighbors: interior, corner, and fully blocked") {
    Rng rng(1);
    World w = World::create(5, 5, ObstacleSpec::none(), 0, rng);
    CHECK(w.neighbors({3, 3}).size() == 8);
    CHECK(w.neighbors({1, 1}).size() == 3);
    int id = 0;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            if (dx != 0 || dy != 0) w.occupy({3 + dx, 3 + dy}, id++);
    CHECK(w.neighbors({3, 3}).empty());
}

TEST_CASE("neighbors match a brute-force enumerator on random small grids") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        World w = World::create(6, 5, ObstacleSpec::uniform(0.2), 1, rng);
        // Sprinkle robots and an inaccessible patch.
        const auto free = w.free_cells();
        for (std::size_t i = 0; i < free.size(); i += 4) w.occupy(free[i], static_cast<int>(i));
        w.mark_inaccessible_region({static_cast<int>(rng.index(6)) + 1, static_cast<int>(rng.index(5)) + 1}, 0);
        for (int y = 1; y <= 5; ++y) {
            for (int x = 1; x <= 6; ++x) {
                const auto got = w.neighbors({x, y});
                const std::set<Coord> as_set(got.begin(), got.end());
                CHECK(as_set.size() == got.size());
                CHECK(as_set == reference_neighbors(w, {x, y}));
            }
        }
    }
}

TEST_CASE("mark_explored is idempotent and rejects obstacle and inaccessible cells") {
    Rng rng(1);
    World w = World::create(4, 4, ObstacleSpec::list({{1, 1}}), 0, rng);
    w.mark_explored({2, 2});
    CHECK(w.state({2, 2}) == CellState::Explored);
    CHECK(w.explored_count() == 1);
    w.mark_explored({2, 2});
    CHECK(w.explored_count() == 1);
    CHECK_THROWS_AS(w.mark_explored({1, 1}), std::logic_error);
    w.mark_inaccessible_region({4, 4}, 0);
    CHECK_THROWS_AS(w.mark_explored({4, 4}), std::logic_error);
}

TEST_CASE("mark_inaccessible_region covers the Chebyshev ball of Unexplored cells only") {
    Rng rng(1);
    World w = World::create(7, 7, ObstacleSpec::list({{1, 1}}), 0, rng);
    CHECK(w.mark_inaccessible_region({4, 4}, 1) == 9);
    for (int y = 1; y <= 7; ++y)
        for (int x = 1; x <= 7; ++x)
            CHECK((w.state({x, y}) == CellState::Inaccessible) == (chebyshev({x, y}, {4, 4}) <= 1));

    World w2 = World::create(7, 7, ObstacleSpec::none(), 0, rng);
    CHECK(w2.mark_inaccessible_region({2, 6}, 0) == 1);
    CHECK(w2.state({2, 6}) == CellState::Inaccessible);

    World w3 = World::create(5, 5, ObstacleSpec::list({{1, 1}}), 0, rng);
    for (int y = 1; y <= 3; ++y)
        for (int x = 1; x <= 3; ++x)
            if (!(x == 1 && y == 1)) w3.mark_explored({x, y});
    CHECK(w3.mark_inaccessible_region({2, 2}, 1) == 0);
    CHECK(w3.state({1, 1}) == CellState::Obstacle);
    CHECK(w3.state({2, 2}) == CellState::Explored);
}

TEST_CASE("enclosed pockets are sealed so all free cells are reachable") {
    // A ring of obstacles around (3,3) on a 5x5 grid.
    std::vector<Coord> ring;
    for (int y = 2; y <= 4; ++y)
        for (int x = 2; x <= 4; ++x)
            if (!(x == 3 && y == 3)) ring.push_back({x, y});
    Rng rng(5);
    World w = World::create(5, 5, ObstacleSpec::list(ring), 0, rng);
    CHECK(w.state({3, 3}) == CellState::Obstacle);
    CHECK(w.unexplored_count() == 16);
}
