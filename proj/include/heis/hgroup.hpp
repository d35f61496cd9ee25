#pragma once

#include <cstdint>

// Arithmetic of the first Heisenberg group on R^3: group law, dilations,
// gauges, and a homogeneous left-invariant gauge distance. All operations are
// pure functions over immutable values and safe to call concurrently.

namespace heis {

struct HPoint {
    double x1 = 0.0;  // degree-1 coordinate
    double x2 = 0.0;  // degree-1 coordinate
    double x3 = 0.0;  // degree-2 coordinate
};

// Group product: (x*y)^3 carries the symplectic cross term x1*y2 - x2*y1.
HPoint mul(const HPoint& x, const HPoint& y);

// Group inverse; coincides with componentwise negation.
HPoint inv(const HPoint& x);

// Anisotropic dilation (r*x1, r*x2, r^2*x3). Requires r >= 0.
HPoint dilate(double r, const HPoint& x);

// Horizontal gauge sqrt(x1^2 + x2^2).
double gauge_h(const HPoint& x);

// Vertical gauge sqrt(|x3|).
double gauge_v(const HPoint& x);

enum class MetricKind { koranyi };

struct MetricConfig {
    MetricKind name = MetricKind::koranyi;
    // Vertical weight in the gauge norm. The default 4 keeps the gauge an
    // actual metric (triangle inequality) under this group-law convention;
    // see the randomized guard test. lambda must be > 0.
    double lambda = 4.0;
};

// Homogeneous norm N(z) = (gauge_h(z)^4 + lambda*(z3)^2)^(1/4).
double hnorm(const MetricConfig& cfg, const HPoint& z);

// Left-invariant distance N(inv(x)*y); 1-homogeneous under dilations.
double dist(const MetricConfig& cfg, const HPoint& x, const HPoint& y);

struct GeometryConstants {
    double c_equiv = 1.0;  // gauge-vs-distance equivalence constant, >= 1
    double beta_d = 1.0;   // spherical-measure normalization, > 0
};

// Sampled estimate of the smallest c with
//   c^-1 (gauge_h + gauge_v) <= dist(0, .) <= c (gauge_h + gauge_v)
// over random points in a reference ball. Lower bound of the true sup,
// non-decreasing in samples, deterministic under seed.
double equivalence_constant(const MetricConfig& cfg, std::uint64_t samples,
                            std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

// beta_d = sup over unit-ball centers y of the 1-D Lebesgue measure of
// {sigma : (0,0,sigma) in B(1,y)}. Grid search over (gauge_h(y), y3) with the
// per-center slice length evaluated in closed form; non-decreasing in
// resolution. Closed form of the sup itself is 2/sqrt(lambda).
double beta_d(const MetricConfig& cfg, int resolution);

}  // namespace heis
