#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "gridfrechet/errors.hpp"

namespace gridfrechet {

// Coordinates are capped so every distance and distance sum computed by the
// library stays exact in 64-bit integer arithmetic.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 40;

struct GridPoint {
    std::vector<std::int64_t> coords;

    std::size_t dimension() const { return coords.size(); }
    bool operator==(const GridPoint&) const = default;
};

struct PointHash {
    std::size_t operator()(const GridPoint& p) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.coords.size();
        for (std::int64_t c : p.coords) {
            std::uint64_t x = static_cast<std::uint64_t>(c);
            x *= 0xff51afd7ed558ccdULL;
            x ^= x >> 33;
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

enum class Metric { L1, LINF };

std::int64_t l1_distance(const GridPoint& p, const GridPoint& q);
std::int64_t linf_distance(const GridPoint& p, const GridPoint& q);
std::int64_t point_distance(const GridPoint& p, const GridPoint& q, Metric metric);

// A walk in the grid graph: consecutive vertices at l1 distance exactly 1.
// Construct through validate_walk so the invariant always holds.
struct GridWalk {
    std::vector<GridPoint> vertices;

    std::size_t size() const { return vertices.size(); }
    std::size_t dimension() const { return vertices.front().dimension(); }
};

// Checks nonemptiness, uniform dimension, the coordinate cap, and unit steps;
// reports the first offending index. Returns the walk on success.
GridWalk validate_walk(std::vector<GridPoint> points);

// Largest number of times any single vertex is visited (lambda of the walk).
std::int64_t multiplicity(const GridWalk& walk);

// Vertex -> sorted list of indices where the walk visits it.
struct MembershipIndex {
    std::size_t dimension = 0;
    std::unordered_map<GridPoint, std::vector<std::size_t>, PointHash> entries;
};

MembershipIndex build_membership_index(const GridWalk& walk);

// Occurrence indices of p in the indexed walk; empty span if absent.
std::span<const std::size_t> lookup_occurrences(const MembershipIndex& index, const GridPoint& p);

}  // namespace gridfrechet
