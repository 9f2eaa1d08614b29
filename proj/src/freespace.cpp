#include "gridfrechet/freespace.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace gridfrechet {

namespace {

using Callback = std::function<void(const GridPoint&)>;

void shell_l1_rec(const GridPoint& center, GridPoint& scratch, std::size_t i,
                  std::int64_t remaining, const Callback& fn) {
    const std::size_t d = scratch.dimension();
    if (i + 1 == d) {
        scratch.coords[i] = center.coords[i] - remaining;
        fn(scratch);
        if (remaining > 0) {
            scratch.coords[i] = center.coords[i] + remaining;
            fn(scratch);
        }
        return;
    }
    for (std::int64_t o = -remaining; o <= remaining; ++o) {
        scratch.coords[i] = center.coords[i] + o;
        shell_l1_rec(center, scratch, i + 1, remaining - std::abs(o), fn);
    }
}

void shell_linf_rec(const GridPoint& center, GridPoint& scratch, std::size_t i,
                    std::int64_t radius, bool saturated, const Callback& fn) {
    const std::size_t d = scratch.dimension();
    if (i + 1 == d) {
        if (saturated) {
            for (std::int64_t o = -radius; o <= radius; ++o) {
                scratch.coords[i] = center.coords[i] + o;
                fn(scratch);
            }
        } else {
            scratch.coords[i] = center.coords[i] - radius;
            fn(scratch);
            scratch.coords[i] = center.coords[i] + radius;
            fn(scratch);
        }
        return;
    }
    for (std::int64_t o = -radius; o <= radius; ++o) {
        scratch.coords[i] = center.coords[i] + o;
        shell_linf_rec(center, scratch, i + 1, radius, saturated || std::abs(o) == radius, fn);
    }
}

}  // namespace

void for_each_shell_point(const GridPoint& center, std::int64_t radius, Metric metric,
                          const Callback& fn) {
    if (radius < 0) throw input_error("shell radius must be >= 0");
    if (center.dimension() == 0) throw input_error("shell center must have dimension >= 1");
    if (radius == 0) {
        fn(center);
        return;
    }
    GridPoint scratch = center;
    if (metric == Metric::L1)
        shell_l1_rec(center, scratch, 0, radius, fn);
    else
        shell_linf_rec(center, scratch, 0, radius, false, fn);
}

Shell enumerate_shell(const GridPoint& center, std::int64_t radius, Metric metric) {
    Shell shell;
    shell.center = center;
    shell.radius = radius;
    shell.metric = metric;
    for_each_shell_point(center, radius, metric,
                         [&](const GridPoint& p) { shell.points.push_back(p); });
    return shell;
}

namespace {

struct RowBuilder {
    // column -> (run_start, run_end); std::map keeps the output sorted
    std::map<std::size_t, std::pair<bool, bool>> marks;

    void mark_start(std::size_t col) { marks[col].first = true; }
    void mark_end(std::size_t col) { marks[col].second = true; }

    SwitchingCellRow finish(std::size_t n_cols) {
        SwitchingCellRow row;
        row.n_cols = n_cols;
        row.cells.reserve(marks.size());
        for (const auto& [col, tags] : marks)
            row.cells.push_back({col, tags.first, tags.second});
        return row;
    }
};

}  // namespace

SwitchingCellRow switching_cells_row(const GridWalk& P, const SimplifiedCurve& P_alpha,
                                     const SimplificationTable& table,
                                     const MembershipIndex& index, const GridPoint& q,
                                     std::int64_t radius, Metric metric) {
    if (radius < 0) throw input_error("radius must be >= 0");
    if (q.dimension() != P.dimension())
        throw dimension_mismatch("switching_cells_row: vertex dimension " +
                                 std::to_string(q.dimension()) + ", walk dimension " +
                                 std::to_string(P.dimension()));
    if (P_alpha.source_length != P.size() || table.edge_of.size() != P.size())
        throw internal_error("simplification does not belong to this walk");

    const std::size_t K = P_alpha.size();
    std::vector<signed char> memo(K, -1);
    auto is_zero = [&](std::size_t col) {
        signed char& m = memo[col];
        if (m < 0) m = point_distance(P_alpha.points[col], q, metric) <= radius ? 1 : 0;
        return m == 1;
    };

    RowBuilder builder;
    if (is_zero(0)) {
        builder.mark_start(0);
        if (K == 1 || !is_zero(1)) builder.mark_end(0);
    }
    if (K >= 2 && is_zero(K - 1)) {
        builder.mark_end(K - 1);
        if (!is_zero(K - 2)) builder.mark_start(K - 1);
    }

    if (K >= 2) {
        // Any 0/1 transition between columns t and t+1 leaves a walk vertex at
        // distance exactly radius (entering) or radius+1 (leaving) inside the
        // half-open source range of edge t, so the two shells witness them all.
        for (std::int64_t r : {radius, radius + 1}) {
            for_each_shell_point(q, r, metric, [&](const GridPoint& v) {
                for (std::size_t k : lookup_occurrences(index, v)) {
                    const std::size_t t = table.edge_of[k];
                    if (t + 1 >= K || P_alpha.indices[t] > k)
                        throw internal_error("simplification table inconsistent at index " +
                                             std::to_string(k));
                    const bool a = is_zero(t);
                    const bool b = is_zero(t + 1);
                    if (a == b) continue;
                    if (a)
                        builder.mark_end(t);
                    else
                        builder.mark_start(t + 1);
                }
            });
        }
    }
    return builder.finish(K);
}

SwitchingCellRow direct_switching_scan(std::span<const GridPoint> p_alpha_points,
                                       const GridPoint& q, std::int64_t radius, Metric metric) {
    if (radius < 0) throw input_error("radius must be >= 0");
    if (p_alpha_points.empty()) throw input_error("curve must be nonempty");
    const std::size_t K = p_alpha_points.size();
    std::vector<char> zero(K);
    for (std::size_t i = 0; i < K; ++i)
        zero[i] = point_distance(p_alpha_points[i], q, metric) <= radius ? 1 : 0;

    SwitchingCellRow row;
    row.n_cols = K;
    for (std::size_t i = 0; i < K; ++i) {
        if (!zero[i]) continue;
        const bool start = i == 0 || !zero[i - 1];
        const bool end = i + 1 == K || !zero[i + 1];
        if (start || end) row.cells.push_back({i, start, end});
    }
    return row;
}

std::vector<ColumnInterval> row_zero_intervals(
    const SwitchingCellRow& row, const std::function<bool(std::size_t)>& probe_zero) {
    const auto& cells = row.cells;
    std::vector<ColumnInterval> intervals;

    bool open = false;
    std::size_t open_lo = 0;
    std::size_t prev_col = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const SwitchingCell& c = cells[i];
        if (c.column >= row.n_cols || (i > 0 && c.column <= prev_col))
            throw internal_error("switching columns not strictly increasing");
        prev_col = c.column;
        if (!c.run_start && !c.run_end) throw internal_error("switching cell without tag");
        if (c.run_start) {
            if (open) throw internal_error("switching tags not alternating");
            open = true;
            open_lo = c.column;
        }
        if (c.run_end) {
            if (!open) throw internal_error("switching tags not alternating");
            intervals.push_back({open_lo, c.column});
            open = false;
        }
    }
    if (open) throw internal_error("switching tags not alternating");

    // The stretch between consecutive switching columns is constant; one probe
    // each confirms it, plus one before the first and one after the last.
    auto expect = [&](std::size_t col, bool want_zero) {
        if (probe_zero(col) != want_zero)
            throw internal_error("probe at column " + std::to_string(col) +
                                 " contradicts switching tags");
    };
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const std::size_t a = cells[i].column;
        const std::size_t b = cells[i + 1].column;
        if (b > a + 1) expect((a + b) / 2, cells[i].run_start && !cells[i].run_end);
    }
    if (!cells.empty()) {
        if (cells.front().column > 0) expect(cells.front().column / 2, false);
        if (cells.back().column + 1 < row.n_cols)
            expect((cells.back().column + row.n_cols) / 2, false);
    }
    return intervals;
}

bool interval_reachability(const RowZeroIntervals& rows, std::size_t n_cols) {
    if (rows.empty() || n_cols == 0) return false;

    using Earliest = std::optional<std::size_t>;
    std::vector<Earliest> cur(rows[0].size());
    for (std::size_t t = 0; t < rows[0].size(); ++t) {
        if (rows[0][t].lo == 0) {
            cur[t] = 0;
            break;
        }
    }

    for (std::size_t j = 1; j < rows.size(); ++j) {
        const auto& src = rows[j - 1];
        const auto& dst = rows[j];
        std::vector<Earliest> nxt(dst.size());
        bool any = false;
        for (std::size_t s = 0; s < src.size(); ++s) {
            if (!cur[s]) continue;
            const std::size_t c = *cur[s];
            const std::size_t window_hi = src[s].hi + 1;  // diagonal step may advance a column
            auto it = std::lower_bound(dst.begin(), dst.end(), c,
                                       [](const ColumnInterval& iv, std::size_t v) {
                                           return iv.hi < v;
                                       });
            for (std::size_t t = static_cast<std::size_t>(it - dst.begin());
                 t < dst.size() && dst[t].lo <= window_hi; ++t) {
                const std::size_t enter = std::max(c, dst[t].lo);
                if (enter > dst[t].hi) continue;
                if (!nxt[t] || *nxt[t] > enter) {
                    nxt[t] = enter;
                    any = true;
                }
            }
        }
        if (!any) return false;
        cur = std::move(nxt);
    }

    const auto& last = rows.back();
    for (std::size_t t = 0; t < last.size(); ++t)
        if (cur[t] && last[t].lo <= n_cols - 1 && n_cols - 1 <= last[t].hi) return true;
    return false;
}

namespace detail {

bool switching_decide(const GridWalk& col_walk, const SimplifiedCurve& col_alpha,
                      const SimplificationTable& col_table, const MembershipIndex& col_index,
                      std::span<const GridPoint> row_points, std::int64_t radius, Metric metric) {
    RowZeroIntervals rows;
    rows.reserve(row_points.size());
    for (const GridPoint& q : row_points) {
        SwitchingCellRow row =
            switching_cells_row(col_walk, col_alpha, col_table, col_index, q, radius, metric);
        rows.push_back(row_zero_intervals(row, [&](std::size_t i) {
            return point_distance(col_alpha.points[i], q, metric) <= radius;
        }));
        if (rows.back().empty()) return false;  // fully blocked row
    }
    return interval_reachability(rows, col_alpha.size());
}

}  // namespace detail

bool freespace_decide(const GridWalk& P, const SimplifiedCurve& P_alpha,
                      const SimplificationTable& table_P, const MembershipIndex& index_P,
                      const GridWalk& Q, const SimplifiedCurve& Q_alpha,
                      const SimplificationTable& table_Q, const MembershipIndex& index_Q,
                      std::int64_t radius, Metric metric) {
    if (P.dimension() != Q.dimension())
        throw dimension_mismatch("freespace_decide: dimensions " + std::to_string(P.dimension()) +
                                 " and " + std::to_string(Q.dimension()));
    if (radius < 0) throw input_error("radius must be >= 0");
    if (P_alpha.size() >= Q_alpha.size())
        return detail::switching_decide(P, P_alpha, table_P, index_P, Q_alpha.points, radius,
                                        metric);
    return detail::switching_decide(Q, Q_alpha, table_Q, index_Q, P_alpha.points, radius, metric);
}

}  // namespace gridfrechet
