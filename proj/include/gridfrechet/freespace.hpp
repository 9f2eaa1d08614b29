#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gridfrechet/core.hpp"
#include "gridfrechet/simplify.hpp"

namespace gridfrechet {

// All lattice points at distance exactly `radius` from `center`.
struct Shell {
    GridPoint center;
    std::int64_t radius = 0;
    Metric metric = Metric::L1;
    std::vector<GridPoint> points;  // lexicographically sorted
};

Shell enumerate_shell(const GridPoint& center, std::int64_t radius, Metric metric);

// Allocation-free shell traversal for hot loops; visits points in the same
// lexicographic order as enumerate_shell, reusing one scratch point.
void for_each_shell_point(const GridPoint& center, std::int64_t radius, Metric metric,
                          const std::function<void(const GridPoint&)>& fn);

// One row of the free-space matrix against a fixed vertex q, described only
// by its switching columns: zero cells that start or end a maximal zero run.
// Tags alternate start, end, start, ... along the row; an isolated zero cell
// carries both.
struct SwitchingCell {
    std::size_t column = 0;
    bool run_start = false;
    bool run_end = false;

    bool operator==(const SwitchingCell&) const = default;
};

struct SwitchingCellRow {
    std::size_t n_cols = 0;
    std::vector<SwitchingCell> cells;  // sorted by column, deduplicated

    bool operator==(const SwitchingCellRow&) const = default;
};

// Switching columns of the row of P_alpha against q at threshold `radius`,
// found without scanning all columns: every 0/1 transition between adjacent
// columns forces an original-walk vertex at distance exactly radius or
// radius+1 from q (distance changes by at most 1 per step), so probing the
// occurrence lists of the two shells around q finds every transition. The two
// boundary columns are tested directly.
SwitchingCellRow switching_cells_row(const GridWalk& P, const SimplifiedCurve& P_alpha,
                                     const SimplificationTable& table,
                                     const MembershipIndex& index, const GridPoint& q,
                                     std::int64_t radius, Metric metric);

// Reference oracle: computes the same row by scanning every column.
SwitchingCellRow direct_switching_scan(std::span<const GridPoint> p_alpha_points,
                                       const GridPoint& q, std::int64_t radius, Metric metric);

struct ColumnInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;  // inclusive

    bool operator==(const ColumnInterval&) const = default;
};

// Maximal zero intervals of a row. The stretch between consecutive switching
// columns is constant (an interior transition would itself be a switching
// cell), so one probe per gap plus one before the first and after the last
// switching column settles the whole row: at most |cells| + 1 probes.
// probe_zero(i) must return whether column i is a zero cell. Throws
// internal_error if tags do not alternate or a probe contradicts them.
std::vector<ColumnInterval> row_zero_intervals(const SwitchingCellRow& row,
                                               const std::function<bool(std::size_t)>& probe_zero);

using RowZeroIntervals = std::vector<std::vector<ColumnInterval>>;

// Monotone reachability over rows of zero intervals: from column c in an
// interval [l, r] of row j one can reach columns [c, r+1] of row j+1. Accepts
// iff the interval of the last row containing column n_cols-1 is reached.
bool interval_reachability(const RowZeroIntervals& rows, std::size_t n_cols);

// Full decision d_dF(P_alpha, Q_alpha) <= radius via switching cells. Rows
// range over the shorter simplified curve; shells are drawn around its
// vertices and resolved in the membership index of the longer original walk.
bool freespace_decide(const GridWalk& P, const SimplifiedCurve& P_alpha,
                      const SimplificationTable& table_P, const MembershipIndex& index_P,
                      const GridWalk& Q, const SimplifiedCurve& Q_alpha,
                      const SimplificationTable& table_Q, const MembershipIndex& index_Q,
                      std::int64_t radius, Metric metric);

namespace detail {

// Column side fixed to the longer curve by the caller; only that side's
// table and membership index are consulted.
bool switching_decide(const GridWalk& col_walk, const SimplifiedCurve& col_alpha,
                      const SimplificationTable& col_table, const MembershipIndex& col_index,
                      std::span<const GridPoint> row_points, std::int64_t radius, Metric metric);

}  // namespace detail

}  // namespace gridfrechet
