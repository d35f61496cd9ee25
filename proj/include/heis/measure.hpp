#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "heis/field.hpp"
#include "heis/hgroup.hpp"
#include "heis/lsde.hpp"

// Measure-theoretic verification layer: horizontal Jacobian, covering-based
// spherical-measure upper estimates, Federer densities of curve pushforward
// measures, the area formula for traced curves, and the Monte-Carlo coarea
// check with its functional-density variant.

namespace heis {

struct Box {
    HPoint lo;
    HPoint hi;
    bool contains(const HPoint& x) const {
        return x.x1 >= lo.x1 && x.x1 <= hi.x1 && x.x2 >= lo.x2 &&
               x.x2 <= hi.x2 && x.x3 >= lo.x3 && x.x3 <= hi.x3;
    }
};

// Pushforward of |theta| L^1 under the traced curve. Empty theta means
// theta == 1, the density of LSDE solutions.
struct CurveMeasure {
    Trace trace;
    std::vector<double> theta;

    double mass(const std::function<bool(const HPoint&)>& inside) const;
    double box_mass(const Box& box) const;
    double ball_mass(const MetricConfig& metric, const HPoint& center,
                     double rho) const;
};

struct MeasureReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_error = 0.0;
    double std_error = 0.0;       // Monte-Carlo standard error of rhs
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t skipped = 0;    // z-samples with no usable level trace
};

struct PointOffCurve : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |det grad_h F(x)|.
double jacobian_h(const FieldModel& F, const HPoint& x);

// Covering estimate: chunk the parameter interval at scale `mesh`, cover each
// arc by a ball of its diameter, sum beta_d * diam^2. Upper-bound flavored;
// correct up to a bounded constant, stable under mesh refinement.
double sph_measure_upper(const Trace& trace, double mesh,
                         const MetricConfig& metric, double beta_d_value);

// Spherical Federer density of cm at x: for each rho (descending), maximizes
// cm(B(rho,y)) / (beta_d rho^2) over sampled centers y with d(y,x) <= rho,
// and returns the estimate at the smallest radius. Throws PointOffCurve when
// x is not within node_tol of a grid node of the curve.
double federer_density(const CurveMeasure& cm, const HPoint& x,
                       std::vector<double> radii, std::uint64_t center_samples,
                       const MetricConfig& metric, double beta_d_value,
                       std::uint64_t seed = 5, double node_tol = 1e-6);

// L^1{t : gamma_t in box} by trapezoid on the indicator; equals the
// 2-spherical measure of the traced level curve inside the box.
double area_measure(const Trace& trace, const Box& box);

struct CoareaOptions {
    std::uint64_t z_samples = 2000;
    int quadrature = 64;      // tensor Gauss-Legendre nodes per axis
    std::uint64_t seed = 7;
    int threads = 0;          // 0 = hardware concurrency
    int max_segments = 40;    // glued trace extensions per direction
    double overlap_tol = 1e-6;
    std::vector<std::array<double, 3>>* slices = nullptr;  // (z1, z2, contribution)
};

// Verifies integral_box J_h F dL^3 == integral_{R^2} S^2(box cap F^-1(z)) dz.
// lhs by tensor quadrature; rhs by seeded (stratified) Monte-Carlo over z in
// a bounding rectangle of F(box): per z, a seed point is found by Newton in a
// horizontal plane, the level curve is traced and glued until it leaves the
// box, and its parameter measure inside the box is accumulated.
MeasureReport coarea_check(const FieldModel& F, const Box& box,
                           const SolverConfig& cfg, const MetricConfig& metric,
                           const CoareaOptions& opt = {});

// Functional density probe: r^-4 * integral of u(dilate(1/r, x)) against the
// coarea measure of F, with u(y) = c (eps - N(y))^+ normalized to unit
// Lebesgue mass. Converges to J_h F(0) as r -> 0 for nondegenerate 0.
double functional_density_probe(const FieldModel& F, double eps, double r,
                                std::uint64_t z_samples, const SolverConfig& cfg,
                                const MetricConfig& metric,
                                std::uint64_t seed = 9);

// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace heis
