#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rescurv/graph.hpp"

namespace rescurv {

/// Monte Carlo point estimate with provenance. Reproducible given
/// (graph, seed, samples) regardless of how sample blocks are scheduled.
struct WalkEstimate {
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(samples)
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Degree-proportional stationary law of the simple random walk.
Eigen::VectorXd stationary(const Graph& g);

/// Expected round-trip steps x -> y -> x. Throws SameVertexError.
WalkEstimate estimate_commute(const Graph& g, int x, int y,
                              std::int64_t samples, std::uint64_t seed);

/// Expected one-way steps x -> y. Throws SameVertexError.
WalkEstimate estimate_hitting(const Graph& g, int x, int y,
                              std::int64_t samples, std::uint64_t seed);

/// Exact total-variation distances to stationarity, t = 0..T, computed by
/// evolving the full distribution (no sampling). Laziness l: stay put with
/// probability l, else step to a uniform neighbor.
struct MixingCurve {
    int start = 0;
    double laziness = 0.0;
    std::vector<double> tv; // tv[t], length T+1
};

MixingCurve tv_curve(const Graph& g, int x, int horizon, double laziness = 0.0);

/// CSV "t,tv,bound" rows; bound = bound_constant / t for t >= 1 when a
/// constant is supplied, empty otherwise.
std::string mixing_csv(const MixingCurve& curve,
                       std::optional<double> bound_constant = std::nullopt);

} // namespace rescurv
