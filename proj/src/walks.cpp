#include "rescurv/walks.hpp"

#include <cmath>
#include <cstdio>

#include "rescurv/rng.hpp"

namespace rescurv {

namespace {

constexpr std::int64_t kBlockSize = 1024;

// Accumulates mean and variance (Welford) over per-sample step counts.
class RunningMoments {
public:
    void add(double x) {
        ++count_;
        double delta = x - mean_;
        mean_ += delta / count_;
        m2_ += delta * (x - mean_);
    }
    double mean() const { return mean_; }
    double std_error() const {
        if (count_ < 2) return 0.0;
        return std::sqrt(m2_ / (count_ - 1) / count_);
    }

private:
    std::int64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// One stream per (x, y, block) so the estimate does not depend on execution
// order.
std::mt19937_64 block_engine(std::uint64_t seed, int x, int y, std::int64_t block) {
    return std::mt19937_64(mix_seed({seed, static_cast<std::uint64_t>(x),
                                     static_cast<std::uint64_t>(y),
                                     static_cast<std::uint64_t>(block)}));
}

template <class Stop>
std::int64_t walk_until(const Graph& g, std::mt19937_64& eng, int start, Stop stop) {
    std::int64_t steps = 0;
    int v = start;
    while (!stop(v, steps)) {
        const auto& nbrs = g.neighbors(v);
        v = nbrs[uniform_below(eng, nbrs.size())];
        ++steps;
    }
    return steps;
}

WalkEstimate estimate_walk(const Graph& g, int x, int y, std::int64_t samples,
                           std::uint64_t seed, bool round_trip) {
    if (x == y) throw SameVertexError("walk estimate: endpoints coincide");
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
        throw std::invalid_argument("walk estimate: vertex out of range");
    if (samples < 1) throw std::invalid_argument("walk estimate: need samples >= 1");

    RunningMoments moments;
    for (std::int64_t done = 0; done < samples; done += kBlockSize) {
        auto eng = block_engine(seed, x, y, done / kBlockSize);
        const std::int64_t in_block = std::min(kBlockSize, samples - done);
        for (std::int64_t s = 0; s < in_block; ++s) {
            std::int64_t steps = 0;
            int v = x;
            bool reached_y = false;
            for (;;) {
                const auto& nbrs = g.neighbors(v);
                v = nbrs[uniform_below(eng, nbrs.size())];
                ++steps;
                if (!reached_y) {
                    if (v == y) {
                        reached_y = true;
                        if (!round_trip) break;
                    }
                } else if (v == x) {
                    break;
                }
            }
            moments.add(static_cast<double>(steps));
        }
    }

    WalkEstimate e;
    e.mean = moments.mean();
    e.std_error = moments.std_error();
    e.samples = samples;
    e.seed = seed;
    return e;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

Eigen::VectorXd stationary(const Graph& g) {
    const int n = g.order();
    Eigen::VectorXd pi(n);
    const double volume = 2.0 * g.edge_count();
    for (int v = 0; v < n; ++v) pi[v] = g.degree(v) / volume;
    return pi;
}

WalkEstimate estimate_commute(const Graph& g, int x, int y, std::int64_t samples,
                              std::uint64_t seed) {
    return estimate_walk(g, x, y, samples, seed, /*round_trip=*/true);
}

WalkEstimate estimate_hitting(const Graph& g, int x, int y, std::int64_t samples,
                              std::uint64_t seed) {
    return estimate_walk(g, x, y, samples, seed, /*round_trip=*/false);
}

MixingCurve tv_curve(const Graph& g, int x, int horizon, double laziness) {
    const int n = g.order();
    if (x < 0 || x >= n) throw std::invalid_argument("tv_curve: vertex out of range");
    if (horizon < 0) throw std::invalid_argument("tv_curve: negative horizon");
    if (laziness < 0.0 || laziness >= 1.0)
        throw std::invalid_argument("tv_curve: laziness must be in [0, 1)");

    const Eigen::VectorXd pi = stationary(g);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
    p[x] = 1.0;

    MixingCurve curve;
    curve.start = x;
    curve.laziness = laziness;
    curve.tv.reserve(horizon + 1);
    curve.tv.push_back(0.5 * (p - pi).cwiseAbs().sum());

    Eigen::VectorXd next(n);
    for (int t = 1; t <= horizon; ++t) {
        next.setZero();
        for (int v = 0; v < n; ++v) {
            const double mass = p[v];
            if (mass == 0.0) continue;
            next[v] += laziness * mass;
            const double share = (1.0 - laziness) * mass / g.degree(v);
            for (int w : g.neighbors(v)) next[w] += share;
        }
        p.swap(next);
        curve.tv.push_back(0.5 * (p - pi).cwiseAbs().sum());
    }
    return curve;
}

std::string mixing_csv(const MixingCurve& curve, std::optional<double> bound_constant) {
    std::string out = "t,tv,bound\n";
    for (size_t t = 0; t < curve.tv.size(); ++t) {
        out += std::to_string(t);
        out += ',';
        out += format_double(curve.tv[t]);
        out += ',';
        if (bound_constant && t >= 1)
            out += format_double(*bound_constant / static_cast<double>(t));
        out += '\n';
    }
    return out;
}

} // namespace rescurv
