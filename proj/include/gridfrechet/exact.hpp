#pragma once

#include <cstdint>
#include <span>

#include "gridfrechet/core.hpp"

namespace gridfrechet {

// The exact operations work on arbitrary lattice point sequences so they can
// also run on simplified curves, whose edges are longer than one unit.

// True iff the discrete Frechet distance between P and Q is <= delta.
bool exact_decide(std::span<const GridPoint> P, std::span<const GridPoint> Q, std::int64_t delta,
                  Metric metric);

// Discrete Frechet distance via the classic min-max dynamic program.
std::int64_t exact_distance(std::span<const GridPoint> P, std::span<const GridPoint> Q,
                            Metric metric);

struct MonotoneWalkOracleLimit {
    std::size_t max_cells = 64;  // refuse instances with |P| * |Q| beyond this
};

// Reference oracle: enumerates every monotone index walk from (0,0) to
// (|P|-1,|Q|-1) explicitly and takes the min over walks of the max pairwise
// distance. No recurrence is shared with exact_distance.
std::int64_t brute_force_distance(std::span<const GridPoint> P, std::span<const GridPoint> Q,
                                  Metric metric, MonotoneWalkOracleLimit limit = {});

inline bool exact_decide(const GridWalk& P, const GridWalk& Q, std::int64_t delta, Metric metric) {
    return exact_decide(std::span<const GridPoint>(P.vertices),
                        std::span<const GridPoint>(Q.vertices), delta, metric);
}

inline std::int64_t exact_distance(const GridWalk& P, const GridWalk& Q, Metric metric) {
    return exact_distance(std::span<const GridPoint>(P.vertices),
                          std::span<const GridPoint>(Q.vertices), metric);
}

inline std::int64_t brute_force_distance(const GridWalk& P, const GridWalk& Q, Metric metric,
                                         MonotoneWalkOracleLimit limit = {}) {
    return brute_force_distance(std::span<const GridPoint>(P.vertices),
                                std::span<const GridPoint>(Q.vertices), metric, limit);
}

}  // namespace gridfrechet
