#include "gridfrechet/simplify.hpp"

namespace gridfrechet {

Simplification simplify(const GridWalk& walk, const Rational& alpha) {
    if (alpha < Rational(0)) throw input_error("simplification radius must be >= 0");
    const std::size_t n = walk.size();

    Simplification out;
    out.curve.source_length = n;
    out.curve.alpha = alpha;

    std::vector<std::size_t>& idx = out.curve.indices;
    idx.push_back(0);
    std::size_t anchor = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (Rational(l1_distance(walk.vertices[anchor], walk.vertices[k])) > alpha) {
            idx.push_back(k);
            anchor = k;
        }
    }
    if (idx.back() != n - 1) idx.push_back(n - 1);  // final vertex always kept

    out.curve.points.reserve(idx.size());
    for (std::size_t i : idx) out.curve.points.push_back(walk.vertices[i]);

    out.table.edge_of.assign(n, 0);
    if (idx.size() >= 2) {
        for (std::size_t t = 0; t + 1 < idx.size(); ++t)
            for (std::size_t k = idx[t]; k < idx[t + 1]; ++k) out.table.edge_of[k] = t;
        out.table.edge_of[n - 1] = idx.size() - 2;  // last vertex -> last edge
    }
    return out;
}

}  // namespace gridfrechet
