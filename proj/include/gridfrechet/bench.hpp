#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridfrechet {

struct BenchRecord {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t lambda = 1;
    std::string eps;  // exact rational text; "0" when the run takes no eps
    std::string algo;
    std::int64_t value = 0;
    std::int64_t decider_calls = 0;
    std::int64_t wall_time_ns = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "d,n,m,lambda,eps,algo,value,decider_calls,wall_time_ns,seed";

std::string to_csv(const BenchRecord& r);

// Lower-middle order statistic; input copied, order irrelevant.
std::int64_t median_ns(std::vector<std::int64_t> samples);

// Least-squares slope of log2(time) against log2(size) over (size, time_ns)
// points. Needs two distinct sizes; times are clamped below at 1 ns.
double fit_log2_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace gridfrechet
