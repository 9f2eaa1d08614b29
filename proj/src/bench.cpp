#include "gridfrechet/bench.hpp"

#include <algorithm>
#include <cmath>

#include "gridfrechet/errors.hpp"

namespace gridfrechet {

std::string to_csv(const BenchRecord& r) {
    std::string out;
    out += std::to_string(r.d);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.lambda);
    out += ',';
    out += r.eps.empty() ? "0" : r.eps;
    out += ',';
    out += r.algo;
    out += ',';
    out += std::to_string(r.value);
    out += ',';
    out += std::to_string(r.decider_calls);
    out += ',';
    out += std::to_string(r.wall_time_ns);
    out += ',';
    out += std::to_string(r.seed);
    return out;
}

std::int64_t median_ns(std::vector<std::int64_t> samples) {
    if (samples.empty()) throw input_error("median of an empty sample set");
    const std::size_t mid = (samples.size() - 1) / 2;
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(mid),
                     samples.end());
    return samples[mid];
}

double fit_log2_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw input_error("slope fit needs at least two points");
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto& [n, t] : points)
        logs.emplace_back(std::log2(n), std::log2(std::max(t, 1.0)));
    double mx = 0, my = 0;
    for (const auto& [x, y] : logs) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(logs.size());
    my /= static_cast<double>(logs.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : logs) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) throw input_error("slope fit needs two distinct sizes");
    return sxy / sxx;
}

}  // namespace gridfrechet
