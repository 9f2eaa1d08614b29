#include "gridfrechet/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gridfrechet/exact.hpp"
#include "gridfrechet/freespace.hpp"
#include "gridfrechet/simplify.hpp"

namespace gridfrechet {

namespace {

using i128 = __int128;

std::int64_t isqrt128(i128 x) {
    if (x < 0) throw internal_error("isqrt of negative value");
    auto s = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return static_cast<std::int64_t>(s);
}

// floor(delta * num / den) without building an intermediate Rational, since
// delta may be near the coordinate cap.
std::int64_t floor_scaled(std::int64_t delta, std::int64_t num, std::int64_t den) {
    i128 t = i128(delta) * num;
    return static_cast<std::int64_t>(t / den);  // operands nonnegative
}

void check_pair(const GridWalk& P, const GridWalk& Q) {
    if (P.dimension() != Q.dimension())
        throw dimension_mismatch("walk dimensions " + std::to_string(P.dimension()) + " and " +
                                 std::to_string(Q.dimension()));
}

}  // namespace

MethodChoice select_method(const Rational& alpha, const Rational& eps, std::size_t n,
                           std::int64_t lambda, std::size_t d) {
    if (d < 2) throw input_error("select_method requires dimension >= 2");
    if (n < 2) throw input_error("select_method requires n >= 2");
    if (lambda < 1) throw input_error("select_method requires lambda >= 1");
    if (eps <= Rational(0)) throw input_error("eps must be positive");

    const double e = eps.to_double();
    const double nn = static_cast<double>(n);
    const double star = std::pow(std::pow(e, static_cast<double>(d - 1)) * nn /
                                     (std::log(nn) * static_cast<double>(lambda)),
                                 1.0 / static_cast<double>(d));
    const double effective = std::max(alpha.to_double(), 1.0);
    MethodChoice choice;
    choice.alpha_star = star;
    choice.kind = effective >= star ? DeciderMethod::SimplifiedDP : DeciderMethod::SwitchingCells;
    return choice;
}

DeciderVerdict approx_decide(const GridWalk& P, const GridWalk& Q, std::int64_t delta,
                             const Rational& eps, Metric metric,
                             std::optional<DeciderMethod> forced) {
    check_pair(P, Q);
    if (delta < 0) throw input_error("delta must be >= 0");
    if (eps <= Rational(0)) throw input_error("eps must be positive");

    if (delta == 0) return exact_decide(P, Q, 0, metric) ? DeciderVerdict::LE : DeciderVerdict::GT;

    // alpha = delta*eps/4 keeps both certificates valid around the rounded
    // threshold R = floor((1+eps/2)*delta): if d <= delta then
    // d(P_a,Q_a) <= delta + 2*floor(alpha) <= R, and if the simplified
    // distance exceeds R then d > R+1-eps*delta/2-1 > delta exactly.
    const Rational alpha = Rational(delta) * eps / 4;
    const std::int64_t R = floor_scaled(delta, 2 * eps.den() + eps.num(), 2 * eps.den());

    Simplification SP = simplify(P, alpha);
    Simplification SQ = simplify(Q, alpha);

    DeciderMethod method;
    if (forced) {
        method = *forced;
    } else if (P.dimension() < 2 || std::max(P.size(), Q.size()) < 2) {
        method = DeciderMethod::SimplifiedDP;  // crossover formula needs d >= 2, n >= 2
    } else {
        const std::int64_t lam = std::max(multiplicity(P), multiplicity(Q));
        const std::size_t n = std::max(P.size(), Q.size());
        method = select_method(alpha, eps, n, lam, P.dimension()).kind;
    }

    bool within;
    if (method == DeciderMethod::SimplifiedDP) {
        within = exact_decide(std::span<const GridPoint>(SP.curve.points),
                              std::span<const GridPoint>(SQ.curve.points), R, metric);
    } else {
        // Only the column (longer) side needs its table and membership index.
        const bool p_cols = SP.curve.size() >= SQ.curve.size();
        const GridWalk& cw = p_cols ? P : Q;
        const Simplification& cs = p_cols ? SP : SQ;
        const Simplification& rs = p_cols ? SQ : SP;
        MembershipIndex ci = build_membership_index(cw);
        within = detail::switching_decide(cw, cs.curve, cs.table, ci, rs.curve.points, R, metric);
    }
    return within ? DeciderVerdict::LE : DeciderVerdict::GT;
}

ApproxResult approx_distance(const GridWalk& P, const GridWalk& Q, const Rational& eps,
                             Metric metric, std::optional<DeciderMethod> forced) {
    check_pair(P, Q);
    if (eps <= Rational(0)) throw input_error("eps must be positive");

    ApproxResult result;
    result.eps = eps;
    auto decide = [&](std::int64_t delta, const Rational& tol) {
        ++result.decider_calls;
        return approx_decide(P, Q, delta, tol, metric, forced);
    };

    const std::int64_t dist0 = point_distance(P.vertices.front(), Q.vertices.front(), metric);
    const auto extent = static_cast<std::int64_t>(P.size() + Q.size());
    const std::int64_t lo_init = std::max<std::int64_t>(0, dist0 - extent);

    if (decide(0, eps) == DeciderVerdict::LE) {
        result.value = 0;
        return result;
    }

    // Invariants: d > lo and d <= U. Each LE answer at delta certifies
    // d <= (1+eps')*delta, each GT answer certifies d > delta.
    std::int64_t lo = lo_init > 0 ? lo_init - 1 : 0;
    std::int64_t U = dist0 + extent;
    const Rational inner = (eps < Rational(3) ? eps : Rational(3)) / 3;  // clamp keeps LE contractive

    // Termination: at loop entry U > (1+eps)(lo+1) >= (1+inner)^2 (lo+1), so
    // delta = floor(sqrt((lo+1)U)) satisfies lo+1 <= delta <= U-1 and
    // (1+inner)*delta < U. A GT answer raises lo to delta; an LE answer
    // lowers U to floor((1+inner)*delta) <= U-1. Both strictly shrink [lo, U].
    auto done = [&]() {
        return i128(U) * eps.den() <= i128(lo + 1) * (eps.den() + eps.num());
    };
    while (!done()) {
        const std::int64_t delta = isqrt128(i128(lo + 1) * U);
        if (decide(delta, inner) == DeciderVerdict::GT)
            lo = delta;
        else
            U = floor_scaled(delta, inner.den() + inner.num(), inner.den());
    }
    result.value = U;
    return result;
}

GridWalk bisect_walk(const GridWalk& walk) {
    std::vector<GridPoint> out;
    out.reserve(walk.size() * 2 - 1);
    const std::size_t d = walk.dimension();
    for (std::size_t k = 0; k < walk.size(); ++k) {
        GridPoint doubled;
        doubled.coords.resize(d);
        for (std::size_t i = 0; i < d; ++i) doubled.coords[i] = 2 * walk.vertices[k].coords[i];
        out.push_back(std::move(doubled));
        if (k + 1 < walk.size()) {
            GridPoint mid;
            mid.coords.resize(d);
            for (std::size_t i = 0; i < d; ++i)
                mid.coords[i] = walk.vertices[k].coords[i] + walk.vertices[k + 1].coords[i];
            out.push_back(std::move(mid));
        }
    }
    return validate_walk(std::move(out));
}

Rational continuous_distance(const GridWalk& P, const GridWalk& Q, const Rational& eps,
                             Metric metric) {
    check_pair(P, Q);
    const ApproxResult r = approx_distance(bisect_walk(P), bisect_walk(Q), eps, metric);
    return Rational(r.value, 2);
}

}  // namespace gridfrechet
