#include "gridfrechet/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace gridfrechet {

namespace {

void check_inputs(std::span<const GridPoint> P, std::span<const GridPoint> Q) {
    if (P.empty() || Q.empty()) throw input_error("curves must be nonempty");
    if (P.front().dimension() != Q.front().dimension())
        throw dimension_mismatch("curve dimensions " + std::to_string(P.front().dimension()) +
                                 " and " + std::to_string(Q.front().dimension()));
}

// Contiguous coordinate storage; the per-cell distance loops dominate the DP.
struct FlatCurve {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::int64_t> coords;

    explicit FlatCurve(std::span<const GridPoint> pts)
        : n(pts.size()), d(pts.front().dimension()) {
        coords.reserve(n * d);
        for (const GridPoint& p : pts)
            coords.insert(coords.end(), p.coords.begin(), p.coords.end());
    }

    std::int64_t dist(std::size_t i, const FlatCurve& o, std::size_t j, Metric metric) const {
        const std::int64_t* a = coords.data() + i * d;
        const std::int64_t* b = o.coords.data() + j * d;
        std::int64_t acc = 0;
        if (metric == Metric::L1) {
            for (std::size_t k = 0; k < d; ++k) acc += std::abs(a[k] - b[k]);
        } else {
            for (std::size_t k = 0; k < d; ++k) acc = std::max(acc, std::abs(a[k] - b[k]));
        }
        return acc;
    }
};

// delta = 0 asks whether the two sequences are equal after collapsing
// consecutive repeats: a monotone all-zero-distance walk exists exactly when
// the collapsed sequences coincide. Linear time instead of the full DP.
bool equal_up_to_stutter(std::span<const GridPoint> P, std::span<const GridPoint> Q) {
    std::size_t i = 0, j = 0;
    if (!(P[0] == Q[0])) return false;
    while (i + 1 < P.size() || j + 1 < Q.size()) {
        bool advanced = false;
        if (i + 1 < P.size() && P[i + 1] == P[i]) {
            ++i;
            advanced = true;
        }
        if (j + 1 < Q.size() && Q[j + 1] == Q[j]) {
            ++j;
            advanced = true;
        }
        if (advanced) continue;
        if (i + 1 < P.size() && j + 1 < Q.size() && P[i + 1] == Q[j + 1]) {
            ++i;
            ++j;
            continue;
        }
        return false;
    }
    return true;
}

}  // namespace

bool exact_decide(std::span<const GridPoint> P, std::span<const GridPoint> Q, std::int64_t delta,
                  Metric metric) {
    check_inputs(P, Q);
    if (delta < 0) return false;
    if (delta == 0) return equal_up_to_stutter(P, Q);
    if (Q.size() > P.size()) std::swap(P, Q);  // rows over the shorter curve

    FlatCurve fp(P), fq(Q);
    if (fp.dist(0, fq, 0, metric) > delta) return false;
    if (fp.dist(fp.n - 1, fq, fq.n - 1, metric) > delta) return false;

    const std::size_t m = fq.n;
    std::vector<char> prev(m, 0), cur(m, 0);
    for (std::size_t i = 0; i < fp.n; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) {
            char reach = 0;
            if (fp.dist(i, fq, j, metric) <= delta) {
                if (i == 0 && j == 0)
                    reach = 1;
                else
                    reach = (i > 0 && prev[j]) || (j > 0 && cur[j - 1]) ||
                            (i > 0 && j > 0 && prev[j - 1]);
            }
            cur[j] = reach;
            any = any || reach;
        }
        if (!any) return false;
        std::swap(prev, cur);
    }
    return prev[m - 1] != 0;
}

std::int64_t exact_distance(std::span<const GridPoint> P, std::span<const GridPoint> Q,
                            Metric metric) {
    check_inputs(P, Q);
    if (Q.size() > P.size()) std::swap(P, Q);

    FlatCurve fp(P), fq(Q);
    const std::size_t m = fq.n;
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> prev(m, inf), cur(m, inf);
    for (std::size_t i = 0; i < fp.n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::int64_t best;
            if (i == 0 && j == 0)
                best = 0;
            else {
                best = inf;
                if (i > 0) best = std::min(best, prev[j]);
                if (j > 0) best = std::min(best, cur[j - 1]);
                if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
            }
            cur[j] = std::max(fp.dist(i, fq, j, metric), best);
        }
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

namespace {

struct WalkEnumerator {
    const FlatCurve& fp;
    const FlatCurve& fq;
    Metric metric;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();

    void dfs(std::size_t i, std::size_t j, std::int64_t running_max) {
        running_max = std::max(running_max, fp.dist(i, fq, j, metric));
        if (i + 1 == fp.n && j + 1 == fq.n) {
            best = std::min(best, running_max);
            return;
        }
        if (i + 1 < fp.n) dfs(i + 1, j, running_max);
        if (j + 1 < fq.n) dfs(i, j + 1, running_max);
        if (i + 1 < fp.n && j + 1 < fq.n) dfs(i + 1, j + 1, running_max);
    }
};

}  // namespace

std::int64_t brute_force_distance(std::span<const GridPoint> P, std::span<const GridPoint> Q,
                                  Metric metric, MonotoneWalkOracleLimit limit) {
    check_inputs(P, Q);
    if (P.size() * Q.size() > limit.max_cells)
        throw input_error("instance too large for the monotone walk oracle: " +
                          std::to_string(P.size() * Q.size()) + " cells > " +
                          std::to_string(limit.max_cells));
    FlatCurve fp(P), fq(Q);
    WalkEnumerator e{fp, fq, metric};
    e.dfs(0, 0, 0);
    return e.best;
}

}  // namespace gridfrechet
