#pragma once

#include <cstdint>
#include <optional>

#include "gridfrechet/core.hpp"
#include "gridfrechet/rational.hpp"

namespace gridfrechet {

enum class DeciderVerdict {
    LE,  // certifies d_dF <= (1+eps) * delta
    GT,  // certifies d_dF > delta
};

enum class DeciderMethod { SimplifiedDP, SwitchingCells };

struct MethodChoice {
    DeciderMethod kind = DeciderMethod::SimplifiedDP;
    // Crossover radius (eps^(d-1) * n / (ln(n) * lambda))^(1/d); irrational in
    // general, kept as double since only the comparison against alpha matters.
    double alpha_star = 0.0;
};

// SimplifiedDP iff max(alpha, 1) >= alpha_star. Requires d >= 2, n >= 2.
MethodChoice select_method(const Rational& alpha, const Rational& eps, std::size_t n,
                           std::int64_t lambda, std::size_t d);

// Approximate decision: simplifies both walks with alpha = delta*eps/4 and
// decides d_dF(P_alpha, Q_alpha) <= floor((1+eps/2)*delta) by the method
// select_method picks (or `forced`). delta = 0 falls back to the exact test.
DeciderVerdict approx_decide(const GridWalk& P, const GridWalk& Q, std::int64_t delta,
                             const Rational& eps, Metric metric,
                             std::optional<DeciderMethod> forced = std::nullopt);

struct ApproxResult {
    std::int64_t value = 0;  // d_dF(P,Q) <= value <= (1+eps) * d_dF(P,Q)
    Rational eps;
    int decider_calls = 0;
};

// Geometric search over the decider with inner tolerance eps/3.
ApproxResult approx_distance(const GridWalk& P, const GridWalk& Q, const Rational& eps,
                             Metric metric, std::optional<DeciderMethod> forced = std::nullopt);

// Doubles all coordinates and inserts each edge midpoint: 2n-1 vertices on
// the doubled lattice, multiplicity at most twice the input's.
GridWalk bisect_walk(const GridWalk& walk);

// (1+eps)-approximate continuous Frechet distance; always a multiple of 1/2.
// On the bisected walks the discrete and continuous distances coincide, so
// this is approx_distance(bisect(P), bisect(Q)) divided by two.
Rational continuous_distance(const GridWalk& P, const GridWalk& Q, const Rational& eps,
                             Metric metric);

}  // namespace gridfrechet
