#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "rgglab/grid_index.hpp"
#include "support/oracles.hpp"

using namespace rgglab;

TEST_CASE("radius neighbors match a linear scan") {
    for (std::size_t d : {1u, 2u, 3u, 6u}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            oracle::Gen gen(seed * 31 + d);
            const PointSet pts = gen.points(700, d);
            for (double r : {0.0, 0.01, 0.05, 0.2, 0.7, 2.0}) {
                const GridIndex index(pts, std::max(r, 0.05));
                for (int q = 0; q < 40; ++q) {
                    const auto x = gen.point(d);
                    CAPTURE(d);
                    CAPTURE(r);
                    CHECK(radius_neighbors(pts, index, x, r) == oracle::neighbors(pts, x, r));
                }
            }
        }
    }
}

TEST_CASE("cell side smaller or larger than the radius stays exact") {
    oracle::Gen gen(8);
    const PointSet pts = gen.points(500, 3);
    for (double h : {1e-9, 0.003, 0.02, 0.1, 0.5, 3.0}) {
        const GridIndex index(pts, h);
        for (int q = 0; q < 30; ++q) {
            const auto x = gen.point(3);
            CHECK(radius_neighbors(pts, index, x, 0.08) == oracle::neighbors(pts, x, 0.08));
        }
    }
}

TEST_CASE("vertex queries exclude the vertex itself") {
    oracle::Gen gen(9);
    const PointSet pts = gen.points(300, 2);
    const GridIndex index(pts, 0.1);
    for (std::size_t v = 0; v < pts.size(); v += 7) {
        auto expected = oracle::neighbors(pts, pts[v], 0.1);
        expected.erase(std::find(expected.begin(), expected.end(), v));
        CHECK(radius_neighbors(pts, index, v, 0.1) == expected);
    }
}

TEST_CASE("boundary points and exact distances") {
    const PointSet pts(2, {0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.5, 0.5, 0.25, 0.5});
    const GridIndex index(pts, 0.25);
    CHECK(radius_neighbors(pts, index, Point{1.0, 1.0}, 0.0) == std::vector<std::size_t>{1});
    CHECK(radius_neighbors(pts, index, Point{0.5, 0.5}, 0.25) == std::vector<std::size_t>{3, 4});
    CHECK(radius_neighbors(pts, index, Point{1.0, 0.5}, 0.5) == std::vector<std::size_t>{1, 2, 3});
    CHECK(index.cell_of(Point{1.0, 1.0}) == std::vector<std::int64_t>{4, 4});
}

TEST_CASE("high dimension falls back to occupied cells") {
    oracle::Gen gen(10);
    const PointSet pts = gen.points(400, 12);
    const GridIndex index(pts, 0.3);
    CHECK(index.occupied_cells() <= pts.size());
    for (int q = 0; q < 20; ++q) {
        const auto x = gen.point(12);
        CHECK(radius_neighbors(pts, index, x, 0.9) == oracle::neighbors(pts, x, 0.9));
    }
}

TEST_CASE("grid index errors") {
    const PointSet pts(2, {0.1, 0.2});
    const GridIndex index(pts, 0.1);
    CHECK_THROWS_AS(radius_neighbors(pts, index, Point{0.1, 0.2, 0.3}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(radius_neighbors(pts, index, Point{0.1, 0.2}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridIndex(pts, -0.5), std::invalid_argument);
    const PointSet empty(2, {});
    const GridIndex none(empty, 0.1);
    CHECK(radius_neighbors(empty, none, Point{0.1, 0.2}, 0.5).empty());
}
