#pragma once

#include <cstdint>
#include <vector>

#include "gridfrechet/core.hpp"
#include "gridfrechet/rational.hpp"

namespace gridfrechet {

// Greedy ball-exit subsequence of a walk. Invariants:
//   indices[0] == 0, indices are strictly increasing, indices.back() == n-1;
//   every edge except possibly the last has l1 length > alpha;
//   every source vertex in [indices[t], indices[t+1]) lies within l1 distance
//   alpha of the walk vertex at indices[t].
struct SimplifiedCurve {
    std::size_t source_length = 0;
    std::vector<std::size_t> indices;
    std::vector<GridPoint> points;  // walk vertex at each kept index
    Rational alpha;

    std::size_t size() const { return indices.size(); }
};

// edge_of[k] is the simplified edge t with k in [indices[t], indices[t+1]);
// the final source vertex maps to the last edge. All zero when the simplified
// curve has a single vertex and hence no edges.
struct SimplificationTable {
    std::vector<std::size_t> edge_of;
};

struct Simplification {
    SimplifiedCurve curve;
    SimplificationTable table;
};

// alpha >= 0, compared exactly in rational arithmetic: the next kept index is
// the first vertex at l1 distance strictly greater than alpha from the
// current anchor. The discrete Frechet distance between walk and output is at
// most alpha.
Simplification simplify(const GridWalk& walk, const Rational& alpha);

}  // namespace gridfrechet
