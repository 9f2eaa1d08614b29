#pragma once

#include <cstdint>
#include <vector>

#include "gridfrechet/core.hpp"
#include "gridfrechet/rational.hpp"

namespace gridfrechet {

enum class BandSign { Positive, Negative };

// All lattice points with nonnegative (Positive) or nonpositive (Negative)
// coordinates whose coordinate sum has absolute value r. Lexicographically
// sorted; size is binomial(r+d-1, d-1).
std::vector<GridPoint> enumerate_diagonal(std::size_t d, std::int64_t r, BandSign sign);

// Simple path inside diagonals r and r+1 of the nonnegative orthant, from
// (r+1)*e_s to r*e_t, visiting every point of diagonal r. Axes are 0-based;
// requires d >= 2 and s != t. Built by the slice recursion over the last
// coordinate with the base zigzag in two dimensions.
GridWalk layer_path(std::size_t d, std::int64_t a, std::size_t s_axis, std::size_t t_axis);

struct BandSpec {
    std::size_t dimension = 2;  // >= 2
    std::int64_t a = 1;         // innermost diagonal, >= 1
    std::int64_t w = 1;         // number of layers, >= 1
    std::int64_t lambda = 1;    // back-and-forth passes, >= 1
    BandSign sign = BandSign::Positive;
};

// Walk inside the band of diagonals a .. a+2w-1 covering every point of the
// diagonals a, a+2, ..., a+2(w-1), traversed lambda times (alternating
// direction, shared endpoints deduplicated). Multiplicity <= lambda.
GridWalk band_path(const BandSpec& spec);

// Product embedding: holds `origin` fixed while emitting runs of `signal`,
// advancing origin by one step at each cut. cuts must be non-decreasing
// indices into signal with |cuts| == |origin|-1. Output dimension is
// dim(origin)+dim(signal) with origin coordinates first; output length is
// |signal| + |origin| - 1.
GridWalk embed_product(const GridWalk& origin, const GridWalk& signal,
                       const std::vector<std::size_t>& cuts);

// 1-dimensional walk through C*values[0], C*values[1], ... in unit steps.
// Length is 1 + C * sum of |values[k+1]-values[k]|.
GridWalk scale_discretize_1d(const std::vector<std::int64_t>& values, std::int64_t C);

// Seed-deterministic random walk of n vertices with multiplicity <= lambda.
// Axis 0 never decreases, so the step +e_0 always enters fresh territory and
// the construction can never strand itself; lateral steps are rejection
// sampled against the multiplicity bound.
GridWalk random_lambda_walk(std::size_t d, std::size_t n, std::int64_t lambda,
                            std::uint64_t seed);

struct HardnessParams {
    std::size_t d = 3;
    std::int64_t lambda = 1;
    Rational eps;
    std::int64_t N = 1;
    std::int64_t a = 0;      // ceil(d * (N/(lambda*eps))^(1/(d-1)))
    std::int64_t w_raw = 0;  // floor(eps * a), before clamping
    std::int64_t w = 1;      // max(1, w_raw)
    std::int64_t c_scale = 10;  // separation constant 10*w used by the constructions
    bool feasible = false;   // eps above the threshold, equivalent to eps * a_real > 1
    double threshold = 0.0;  // d^(-(d-1)/(d-2)) * (lambda/n_derived)^(1/(d-2))
    double n_derived = 0.0;  // d * N^(d/(d-1)) * eps^((d-2)/(d-1)) / lambda^(1/(d-1))
};

// Derives the construction parameters for target size N. Requires d >= 3,
// lambda >= 1, N >= 1 and eps in (0, 1]. All integer outputs are computed in
// exact arithmetic; feasibility uses the equivalent integer test
// d^(d-1) * N * p^(d-2) > lambda * q^(d-2) for eps = p/q.
HardnessParams hardness_params(std::size_t d, std::int64_t lambda, const Rational& eps,
                               std::int64_t N);

}  // namespace gridfrechet
