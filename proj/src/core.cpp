#include "gridfrechet/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace gridfrechet {

std::int64_t l1_distance(const GridPoint& p, const GridPoint& q) {
    if (p.dimension() != q.dimension())
        throw dimension_mismatch("l1_distance: dimensions " + std::to_string(p.dimension()) +
                                 " and " + std::to_string(q.dimension()));
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        sum += std::abs(p.coords[i] - q.coords[i]);
    return sum;
}

std::int64_t linf_distance(const GridPoint& p, const GridPoint& q) {
    if (p.dimension() != q.dimension())
        throw dimension_mismatch("linf_distance: dimensions " + std::to_string(p.dimension()) +
                                 " and " + std::to_string(q.dimension()));
    std::int64_t best = 0;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        best = std::max(best, std::abs(p.coords[i] - q.coords[i]));
    return best;
}

std::int64_t point_distance(const GridPoint& p, const GridPoint& q, Metric metric) {
    return metric == Metric::L1 ? l1_distance(p, q) : linf_distance(p, q);
}

GridWalk validate_walk(std::vector<GridPoint> points) {
    if (points.empty()) throw input_error("walk must contain at least one vertex");
    const std::size_t d = points.front().dimension();
    if (d == 0) throw input_error("walk vertices must have dimension >= 1");
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k].dimension() != d)
            throw dimension_mismatch("vertex at index " + std::to_string(k) + " has dimension " +
                                     std::to_string(points[k].dimension()) + ", expected " +
                                     std::to_string(d));
        for (std::int64_t c : points[k].coords)
            if (c < -kMaxCoordinate || c > kMaxCoordinate)
                throw input_error("coordinate out of range at index " + std::to_string(k));
    }
    for (std::size_t k = 0; k + 1 < points.size(); ++k)
        if (l1_distance(points[k], points[k + 1]) != 1)
            throw input_error("non-unit step at index " + std::to_string(k));
    GridWalk walk;
    walk.vertices = std::move(points);
    return walk;
}

std::int64_t multiplicity(const GridWalk& walk) {
    std::unordered_map<GridPoint, std::int64_t, PointHash> counts;
    counts.reserve(walk.size() * 2);
    std::int64_t best = 0;
    for (const GridPoint& v : walk.vertices) best = std::max(best, ++counts[v]);
    return best;
}

MembershipIndex build_membership_index(const GridWalk& walk) {
    MembershipIndex index;
    index.dimension = walk.dimension();
    index.entries.reserve(walk.size() * 2);
    for (std::size_t k = 0; k < walk.size(); ++k) index.entries[walk.vertices[k]].push_back(k);
    return index;
}

std::span<const std::size_t> lookup_occurrences(const MembershipIndex& index, const GridPoint& p) {
    if (p.dimension() != index.dimension)
        throw dimension_mismatch("lookup_occurrences: point dimension " +
                                 std::to_string(p.dimension()) + ", index dimension " +
                                 std::to_string(index.dimension));
    auto it = index.entries.find(p);
    if (it == index.entries.end()) return {};
    return {it->second.data(), it->second.size()};
}

}  // namespace gridfrechet
