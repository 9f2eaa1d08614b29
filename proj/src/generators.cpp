#include "gridfrechet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

namespace gridfrechet {

namespace {

using i128 = __int128;

void diagonal_rec(std::size_t i, std::int64_t remaining, GridPoint& scratch,
                  std::vector<GridPoint>& out) {
    const std::size_t d = scratch.dimension();
    if (i + 1 == d) {
        scratch.coords[i] = remaining;
        out.push_back(scratch);
        return;
    }
    for (std::int64_t v = 0; v <= remaining; ++v) {
        scratch.coords[i] = v;
        diagonal_rec(i + 1, remaining - v, scratch, out);
    }
}

GridPoint axis_point(std::size_t d, std::size_t axis, std::int64_t value) {
    GridPoint p;
    p.coords.assign(d, 0);
    p.coords[axis] = value;
    return p;
}

// Relabels coordinates so position 0 lands on axis s and the last position on
// axis t; the remaining axes fill the middle in increasing order.
void permute_axes(std::vector<GridPoint>& pts, std::size_t d, std::size_t s_axis,
                  std::size_t t_axis) {
    if (s_axis == 0 && t_axis == d - 1) return;
    std::vector<std::size_t> perm(d);
    perm[0] = s_axis;
    perm[d - 1] = t_axis;
    std::size_t next = 0;
    for (std::size_t i = 1; i + 1 < d; ++i) {
        while (next == s_axis || next == t_axis) ++next;
        perm[i] = next++;
    }
    for (GridPoint& p : pts) {
        GridPoint r;
        r.coords.assign(d, 0);
        for (std::size_t i = 0; i < d; ++i) r.coords[perm[i]] = p.coords[i];
        p = std::move(r);
    }
}

// Simple path from (a+1)e_s to a*e_t inside diagonals a and a+1 of the
// nonnegative orthant, covering all of diagonal a. Base case: the planar
// zigzag. Higher dimensions: slices over the last coordinate, where slice m
// is the same construction at radius a-m in one dimension less; entry/exit
// axes alternate between 0 and 1 so consecutive slices join by one +e_last
// step.
std::vector<GridPoint> layer_points(std::size_t d, std::int64_t a, std::size_t s_axis,
                                    std::size_t t_axis) {
    if (d == 2) {
        std::vector<GridPoint> pts;
        pts.reserve(static_cast<std::size_t>(2 * a + 2));
        pts.push_back({{a + 1, 0}});
        for (std::int64_t k = 0; k < a; ++k) {
            pts.push_back({{a - k, k}});
            pts.push_back({{a - k, k + 1}});
        }
        pts.push_back({{0, a}});
        if (s_axis == 1)
            for (GridPoint& p : pts) std::swap(p.coords[0], p.coords[1]);
        return pts;
    }

    std::vector<GridPoint> pts;
    for (std::int64_t m = 0; m <= a; ++m) {
        const std::size_t entry = (m % 2 == 0) ? 0 : 1;
        std::vector<GridPoint> sub = layer_points(d - 1, a - m, entry, 1 - entry);
        for (GridPoint& p : sub) {
            p.coords.push_back(m);
            pts.push_back(std::move(p));
        }
    }
    permute_axes(pts, d, s_axis, t_axis);
    return pts;
}

// Unsigned product of a power and two extra factors, little-endian limbs.
// The feasibility tests below multiply up to eight 64-bit factors, which can
// exceed 128 bits; comparisons must stay exact.
struct BigUint {
    std::vector<std::uint64_t> limbs;
    void mul(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (std::uint64_t& l : limbs) {
            const unsigned __int128 cur = static_cast<unsigned __int128>(l) * m + carry;
            l = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry) limbs.push_back(static_cast<std::uint64_t>(carry));
    }
};

int compare(const BigUint& a, const BigUint& b) {
    if (a.limbs.size() != b.limbs.size()) return a.limbs.size() < b.limbs.size() ? -1 : 1;
    for (std::size_t i = a.limbs.size(); i-- > 0;)
        if (a.limbs[i] != b.limbs[i]) return a.limbs[i] < b.limbs[i] ? -1 : 1;
    return 0;
}

BigUint big_pow_mul(std::uint64_t base, std::size_t exp, std::uint64_t m1, std::uint64_t m2) {
    BigUint out;
    out.limbs = {1};
    for (std::size_t i = 0; i < exp; ++i) out.mul(base);
    out.mul(m1);
    out.mul(m2);
    return out;
}

}  // namespace

std::vector<GridPoint> enumerate_diagonal(std::size_t d, std::int64_t r, BandSign sign) {
    if (d < 1) throw input_error("enumerate_diagonal requires dimension >= 1");
    if (r < 0) throw input_error("enumerate_diagonal requires r >= 0");
    std::vector<GridPoint> out;
    GridPoint scratch;
    scratch.coords.assign(d, 0);
    diagonal_rec(0, r, scratch, out);
    if (sign == BandSign::Negative)
        for (GridPoint& p : out)
            for (std::int64_t& c : p.coords) c = -c;
    return out;
}

GridWalk layer_path(std::size_t d, std::int64_t a, std::size_t s_axis, std::size_t t_axis) {
    if (d < 2) throw input_error("layer_path requires dimension >= 2");
    if (a < 1) throw input_error("layer_path requires a >= 1");
    if (s_axis == t_axis || s_axis >= d || t_axis >= d)
        throw input_error("layer_path axes must be distinct and < d");
    return validate_walk(layer_points(d, a, s_axis, t_axis));
}

GridWalk band_path(const BandSpec& spec) {
    const std::size_t d = spec.dimension;
    if (d < 2) throw input_error("band_path requires dimension >= 2");
    if (spec.a < 1) throw input_error("band_path requires a >= 1");
    if (spec.w < 1) throw input_error("band_path requires w >= 1");
    if (spec.lambda < 1) throw input_error("band_path requires lambda >= 1");

    // One route through all layers. Forward layers run (r+1)e_0 ... r*e_{d-1}
    // and are extended one step to (r+1)e_{d-1}; odd layers are traversed in
    // reverse, ending at (r+1)e_0. A forward layer that follows a reversed one
    // is entered at its second vertex r*e_0, which adjoins the previous end
    // and avoids duplicating any vertex of the route.
    std::vector<GridPoint> route;
    for (std::int64_t k = 0; k < spec.w; ++k) {
        const std::int64_t r = spec.a + 2 * k;
        std::vector<GridPoint> layer = layer_points(d, r, 0, d - 1);
        if (k % 2 == 0) {
            const std::size_t from = (k > 0) ? 1 : 0;
            for (std::size_t i = from; i < layer.size(); ++i) route.push_back(layer[i]);
            route.push_back(axis_point(d, d - 1, r + 1));
        } else {
            for (std::size_t i = layer.size(); i-- > 0;) route.push_back(layer[i]);
        }
    }

    // lambda alternating passes, dropping the shared endpoint at every turn
    // so no vertex is visited more than lambda times.
    std::vector<GridPoint> full = route;
    for (std::int64_t pass = 1; pass < spec.lambda; ++pass) {
        if (pass % 2 == 1) {
            for (std::size_t i = route.size() - 1; i-- > 0;) full.push_back(route[i]);
        } else {
            for (std::size_t i = 1; i < route.size(); ++i) full.push_back(route[i]);
        }
    }

    if (spec.sign == BandSign::Negative)
        for (GridPoint& p : full)
            for (std::int64_t& c : p.coords) c = -c;
    return validate_walk(std::move(full));
}

GridWalk embed_product(const GridWalk& origin, const GridWalk& signal,
                       const std::vector<std::size_t>& cuts) {
    if (cuts.size() != origin.size() - 1)
        throw input_error("embed_product needs exactly |origin|-1 cuts, got " +
                          std::to_string(cuts.size()));
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] >= signal.size())
            throw input_error("cut " + std::to_string(i) + " out of range");
        if (i > 0 && cuts[i] < cuts[i - 1])
            throw input_error("cuts must be non-decreasing (violated at " + std::to_string(i) +
                              ")");
    }

    auto combine = [&](std::size_t t, std::size_t j) {
        GridPoint p;
        p.coords.reserve(origin.dimension() + signal.dimension());
        p.coords = origin.vertices[t].coords;
        p.coords.insert(p.coords.end(), signal.vertices[j].coords.begin(),
                        signal.vertices[j].coords.end());
        return p;
    };

    std::vector<GridPoint> out;
    out.reserve(signal.size() + origin.size() - 1);
    out.push_back(combine(0, 0));
    std::size_t j = 0;
    for (std::size_t t = 0; t < origin.size(); ++t) {
        if (t > 0) out.push_back(combine(t, j));  // origin advances, signal holds
        const std::size_t stop = (t + 1 < origin.size()) ? cuts[t] : signal.size() - 1;
        while (j < stop) {
            ++j;
            out.push_back(combine(t, j));
        }
    }
    return validate_walk(std::move(out));
}

GridWalk scale_discretize_1d(const std::vector<std::int64_t>& values, std::int64_t C) {
    if (values.empty()) throw input_error("scale_discretize_1d needs at least one value");
    if (C < 1) throw input_error("scale factor must be >= 1");
    for (std::int64_t v : values)
        if (std::abs(v) > kMaxCoordinate / C)
            throw input_error("scaled value exceeds the coordinate cap");

    std::vector<GridPoint> out;
    std::int64_t cur = C * values.front();
    out.push_back({{cur}});
    for (std::size_t k = 1; k < values.size(); ++k) {
        const std::int64_t target = C * values[k];
        const std::int64_t step = target > cur ? 1 : -1;
        while (cur != target) {
            cur += step;
            out.push_back({{cur}});
        }
    }
    return validate_walk(std::move(out));
}

GridWalk random_lambda_walk(std::size_t d, std::size_t n, std::int64_t lambda,
                            std::uint64_t seed) {
    if (d < 1) throw input_error("random_lambda_walk requires dimension >= 1");
    if (n < 1) throw input_error("random_lambda_walk requires n >= 1");
    if (lambda < 1) throw input_error("random_lambda_walk requires lambda >= 1");

    std::mt19937_64 rng(seed);
    std::unordered_map<GridPoint, std::int64_t, PointHash> counts;
    counts.reserve(n * 2);

    GridPoint cur;
    cur.coords.assign(d, 0);
    std::vector<GridPoint> out;
    out.reserve(n);
    out.push_back(cur);
    counts[cur] = 1;

    // Directions: +e_0 plus both signs of every other axis. Axis 0 never
    // decreases, so cur+e_0 always enters unvisited territory and a valid
    // step exists at every position; lateral steps are rejection sampled
    // against the multiplicity bound.
    const std::size_t n_dirs = 2 * d - 1;
    auto apply_dir = [&](std::size_t dir, GridPoint& p) {
        if (dir == 0) {
            p.coords[0] += 1;
        } else {
            const std::size_t axis = (dir + 1) / 2;
            p.coords[axis] += (dir % 2 == 1) ? 1 : -1;
        }
    };
    auto admissible = [&](const GridPoint& p) {
        auto it = counts.find(p);
        return it == counts.end() || it->second < lambda;
    };

    GridPoint cand;
    for (std::size_t step = 1; step < n; ++step) {
        bool placed = false;
        for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
            cand = cur;
            apply_dir(static_cast<std::size_t>(rng() % n_dirs), cand);
            placed = admissible(cand);
        }
        for (std::size_t dir = 1; dir < n_dirs && !placed; ++dir) {
            cand = cur;
            apply_dir(dir, cand);
            placed = admissible(cand);
        }
        if (!placed) {
            cand = cur;
            apply_dir(0, cand);  // the always-fresh axis step
        }
        ++counts[cand];
        out.push_back(cand);
        cur = cand;
    }
    return validate_walk(std::move(out));
}

HardnessParams hardness_params(std::size_t d, std::int64_t lambda, const Rational& eps,
                               std::int64_t N) {
    if (d < 3) throw input_error("hardness_params requires dimension >= 3");
    if (d > 8) throw input_error("hardness_params supports dimension <= 8");
    if (lambda < 1 || lambda > 1'000'000)
        throw input_error("hardness_params requires lambda in [1, 10^6]");
    if (N < 1 || N > 1'000'000'000)
        throw input_error("hardness_params requires N in [1, 10^9]");
    if (eps <= Rational(0) || eps > Rational(1))
        throw input_error("hardness_params requires eps in (0, 1]");
    if (eps.den() > 1'000'000'000)
        throw input_error("hardness_params requires an eps denominator <= 10^9");

    HardnessParams hp;
    hp.d = d;
    hp.lambda = lambda;
    hp.eps = eps;
    hp.N = N;

    const std::uint64_t p = static_cast<std::uint64_t>(eps.num());
    const std::uint64_t q = static_cast<std::uint64_t>(eps.den());
    const std::uint64_t ul = static_cast<std::uint64_t>(lambda);
    const std::uint64_t un = static_cast<std::uint64_t>(N);

    // a = smallest integer with (a/d)^(d-1) >= N*q/(lambda*p), i.e.
    // a^(d-1) * lambda * p >= d^(d-1) * N * q, compared exactly.
    const BigUint rhs = big_pow_mul(d, d - 1, un, q);
    auto big_enough = [&](std::int64_t a) {
        return compare(big_pow_mul(static_cast<std::uint64_t>(a), d - 1, ul, p), rhs) >= 0;
    };
    const double estimate =
        static_cast<double>(d) *
        std::pow(static_cast<double>(N) / (static_cast<double>(lambda) * eps.to_double()),
                 1.0 / static_cast<double>(d - 1));
    std::int64_t hi = std::max<std::int64_t>(4, static_cast<std::int64_t>(estimate) + 4);
    while (!big_enough(hi)) hi *= 2;
    std::int64_t lo = 1;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (big_enough(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    hp.a = lo;

    hp.w_raw = static_cast<std::int64_t>(i128(p) * hp.a / q);  // floor(eps * a)
    hp.w = std::max<std::int64_t>(1, hp.w_raw);
    hp.c_scale = 10 * hp.w;

    // Feasibility: eps * a_real > 1 where a_real = d*(N/(lambda*eps))^(1/(d-1)).
    // Raising both sides to the (d-1) gives the exact integer form below; it
    // is also equivalent to eps exceeding the threshold reported for display.
    std::uint64_t d_pow = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) d_pow *= d;
    hp.feasible = compare(big_pow_mul(p, d - 2, d_pow, un), big_pow_mul(q, d - 2, ul, 1)) > 0;

    const double dd = static_cast<double>(d);
    const double e = eps.to_double();
    hp.n_derived = dd * std::pow(static_cast<double>(N), dd / (dd - 1)) *
                   std::pow(e, (dd - 2) / (dd - 1)) /
                   std::pow(static_cast<double>(lambda), 1.0 / (dd - 1));
    hp.threshold = std::pow(dd, -(dd - 1) / (dd - 2)) *
                   std::pow(static_cast<double>(lambda) / hp.n_derived, 1.0 / (dd - 2));
    return hp;
}

}  // namespace gridfrechet
