#include "heis/hgroup.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace heis {

HPoint mul(const HPoint& x, const HPoint& y) {
    return {x.x1 + y.x1, x.x2 + y.x2, x.x3 + y.x3 + (x.x1 * y.x2 - x.x2 * y.x1)};
}

HPoint inv(const HPoint& x) { return {-x.x1, -x.x2, -x.x3}; }

HPoint dilate(double r, const HPoint& x) {
    if (r < 0.0) throw std::invalid_argument("dilate: r must be >= 0");
    return {r * x.x1, r * x.x2, r * r * x.x3};
}

double gauge_h(const HPoint& x) { return std::hypot(x.x1, x.x2); }

double gauge_v(const HPoint& x) { return std::sqrt(std::abs(x.x3)); }

double hnorm(const MetricConfig& cfg, const HPoint& z) {
    const double gh = gauge_h(z);
    const double q = gh * gh * gh * gh + cfg.lambda * z.x3 * z.x3;
    return std::pow(q, 0.25);
}

double dist(const MetricConfig& cfg, const HPoint& x, const HPoint& y) {
    return hnorm(cfg, mul(inv(x), y));
}

double equivalence_constant(const MetricConfig& cfg, std::uint64_t samples,
                            std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("equivalence_constant: samples >= 1");
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double c = 1.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const HPoint z{u(gen), u(gen), u(gen)};
        const double g = gauge_h(z) + gauge_v(z);
        const double n = hnorm(cfg, z);
        if (g <= 0.0 || n <= 0.0) continue;
        c = std::max({c, n / g, g / n});
    }
    return c;
}

double beta_d(const MetricConfig& cfg, int resolution) {
    if (resolution < 2) throw std::invalid_argument("beta_d: resolution >= 2");
    // Slice length for a center y depends only on a = gauge_h(y) and y3:
    // (0,0,sigma) in B(1,y) iff a^4 + lambda*(sigma - y3)^2 <= 1, an interval
    // of length 2*sqrt((1 - a^4)/lambda) whenever a <= 1. Centers with y3
    // shifted only translate the slice, so the sup scans a in [0,1] subject to
    // hnorm(y) <= 1, which y3 = 0 always permits.
    double best = 0.0;
    for (int i = 0; i <= resolution; ++i) {
        const double a = static_cast<double>(i) / resolution;
        const double a4 = a * a * a * a;
        if (a4 > 1.0) continue;
        const double len = 2.0 * std::sqrt((1.0 - a4) / cfg.lambda);
        best = std::max(best, len);
    }
    return best;
}

}  // namespace heis
