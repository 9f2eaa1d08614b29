#pragma once

#include <cstdint>
#include <queue>
#include <random>
#include <unordered_map>
#include <vector>

#include "gridfrechet/core.hpp"

namespace testutil {

using namespace gridfrechet;

inline GridWalk make_walk(std::vector<std::vector<std::int64_t>> coords) {
    std::vector<GridPoint> pts;
    pts.reserve(coords.size());
    for (auto& c : coords) pts.push_back(GridPoint{std::move(c)});
    return validate_walk(std::move(pts));
}

// Unconstrained random walk (multiplicity unbounded); deliberately independent
// of the library's generator module.
inline GridWalk random_walk(std::size_t d, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GridPoint> pts;
    GridPoint cur;
    cur.coords.assign(d, 0);
    pts.reserve(n);
    pts.push_back(cur);
    for (std::size_t i = 1; i < n; ++i) {
        cur.coords[rng() % d] += (rng() & 1) ? 1 : -1;
        pts.push_back(cur);
    }
    return validate_walk(std::move(pts));
}

// Breadth-first shortest path between two cells of the box [lo,hi]^d, one
// unit step along one axis at a time.
inline int bfs_box_distance(const GridPoint& from, const GridPoint& to, std::int64_t lo,
                            std::int64_t hi) {
    std::unordered_map<GridPoint, int, PointHash> dist;
    std::queue<GridPoint> frontier;
    dist.emplace(from, 0);
    frontier.push(from);
    while (!frontier.empty()) {
        const GridPoint p = frontier.front();
        frontier.pop();
        const int dp = dist.at(p);
        if (p == to) return dp;
        for (std::size_t axis = 0; axis < p.dimension(); ++axis) {
            for (const int s : {-1, 1}) {
                GridPoint next = p;
                next.coords[axis] += s;
                if (next.coords[axis] < lo || next.coords[axis] > hi) continue;
                if (dist.emplace(next, dp + 1).second) frontier.push(next);
            }
        }
    }
    return -1;
}

// k-fold refinement: coordinates scaled by k, each edge replaced by k unit
// steps. Independent of the library's bisect_walk.
inline GridWalk subdivide_walk(const GridWalk& w, std::int64_t k) {
    std::vector<GridPoint> pts;
    GridPoint cur = w.vertices.front();
    for (auto& c : cur.coords) c *= k;
    pts.push_back(cur);
    for (std::size_t i = 1; i < w.size(); ++i) {
        GridPoint target = w.vertices[i];
        for (auto& c : target.coords) c *= k;
        for (std::size_t axis = 0; axis < cur.dimension(); ++axis) {
            while (cur.coords[axis] != target.coords[axis]) {
                cur.coords[axis] += target.coords[axis] > cur.coords[axis] ? 1 : -1;
                pts.push_back(cur);
            }
        }
    }
    return validate_walk(std::move(pts));
}

}  // namespace testutil
