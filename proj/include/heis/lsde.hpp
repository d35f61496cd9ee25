#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "heis/field.hpp"
#include "heis/hgroup.hpp"

// The level-set curve solver. A trace gamma on [-delta, delta] through
// gamma_0 = q is a discrete solution of the two-parameter system
//   (gamma_s^-1 gamma_t)^h = -grad_h(p)^-1 (R(p,gamma_t) - R(p,gamma_s))
//   (gamma_s^-1 gamma_t)^v = (t - s) + E_st
// produced by damped Picard iteration of the fixed-point map whose vertical
// component is sewn from the germ A(s,t) = (t-s) - (eta1_t eta2_s - eta1_s eta2_t).
// Validators cover residuals, injectivity, Hoelder moduli, point projection,
// surjectivity of the parametrization, cross-resolution agreement, and
// stability under field perturbation.

namespace heis {

struct SolverConfig {
    double delta = 0.1;      // half-width of the time interval
    int grid_levels = 10;    // 2^L + 1 uniform nodes, L >= 4
    double tol = 1e-12;      // fixed-point stop on sup-change
    int max_iter = 60;
    double damping = 1.0;    // in (0, 1]
    int halving_retries = 3; // delta-halving restarts on non-convergence
};

struct Trace {
    std::vector<double> times;
    std::vector<HPoint> path;
    HPoint base_point;         // p
    HPoint start;              // q = gamma at t = 0
    double error_norm = 0.0;   // sup |E_st| / |t-s|^(1+alpha) over grid pairs
    double holder_h = 0.0;     // ||gamma^h||_{(1+alpha)/2}
    double residual_h = 0.0;   // sup horizontal-equation defect over grid pairs
    double levelset_drift = 0.0;  // sup_t |F(gamma_t) - F(q)|
    int iterations = 0;
    bool converged = false;
    bool ill_conditioned = false;  // grad_h(p) invertible but condition > 1e8
    double delta_used = 0.0;       // after any halving restarts
    double alpha = 0.5;            // exponent the diagnostics were computed with
};

struct RadiiCondition {
    const char* name;
    double lhs;
    double rhs;
    bool satisfied;
};

struct RadiiCertificate {
    double delta0 = 0.0;
    double eps0 = 0.0;
    double rho0 = 0.0;
    double kappa = 0.0;
    double c_equiv = 0.0;
    std::vector<RadiiCondition> conditions;
    bool valid() const;
};

struct Residuals {
    double residual_h = 0.0;
    double error_norm = 0.0;
    double levelset_drift = 0.0;
};

struct InjectivityReport {
    double rho = 0.0;        // rho^2 = 2 c_equiv^2
    double delta_max = 0.0;  // pair range |t-s| <= 2 delta checked
    bool holds = false;
    double margin = 0.0;     // min over pairs of rho*d - |t-s|^(1/2)
};

struct ModulusReport {
    double holder_h = 0.0;       // ||gamma^h||_{(1+alpha)/2}
    double holder_d_half = 0.0;  // sup dist(gamma_s, gamma_t) / |t-s|^(1/2)
};

struct ProjectionResult {
    double t = 0.0;
    bool found = false;
};

struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoAdmissibleRadii : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Searches radii (eps0, rho0, delta0) satisfying the existence and
// injectivity conditions at p, with the sampled Hoelder constant inflated by
// `holder_safety`. Throws DegeneratePoint / NoAdmissibleRadii.
RadiiCertificate admissible_radii(const FieldModel& F, const HPoint& p,
                                  const MetricConfig& metric,
                                  double holder_safety = 1.5,
                                  std::uint64_t seed = 2);

// Damped Picard iteration; returns the trace with diagnostics filled in.
// Throws DegeneratePoint; throws NonConvergence after max_iter and all
// halving retries.
Trace solve(const FieldModel& F, const HPoint& p, const HPoint& q,
            const SolverConfig& cfg);

// Recomputes the three diagnostics for an arbitrary trace against F.
Residuals residuals(const FieldModel& F, const Trace& trace);

// Discrete ||gamma^h||_{(1+alpha)/2} over all grid pairs.
double holder_norm_horizontal(const Trace& trace, double alpha);

// Verifies |t-s|^(1/2) <= rho * dist(gamma_s, gamma_t) with rho^2 = 2 c_equiv^2
// on all grid pairs with |t-s| <= 2 delta, provided (2 delta)^alpha ||E|| <= 1/2.
InjectivityReport injectivity_check(const Trace& trace, double alpha,
                                    const MetricConfig& metric, double c_equiv);

ModulusReport modulus_check(const Trace& trace, double alpha,
                            const MetricConfig& metric);

// Projects x onto the curve parameter: t = 0 when the vertical gauge of
// gamma_0^-1 x is dominated by the horizontal gauge, else bisection of
// G(t) = (gamma_t^-1 x)^v -/+ gauge_h(gamma_t^-1 x)^2 on [0, 2 x^v] (sign of
// x^v taken after recentering gamma_0 to the origin).
ProjectionResult project_point(const Trace& trace, const HPoint& x,
                               double tol = 1e-10);

struct SurjectivityReport {
    double max_gap = 0.0;
    std::uint64_t accepted = 0;
};

// Samples points of the level set {|F(x) - F(q)| <= level_tol} inside
// B(eps, p) and reports the largest distance from a sample to the nearest
// trace node (one-sided Hausdorff gap).
SurjectivityReport surjectivity_check(const FieldModel& F, const Trace& trace,
                                      const MetricConfig& metric, double eps,
                                      std::uint64_t samples,
                                      double level_tol = 1e-9,
                                      std::uint64_t seed = 3);

// Solves with cfg_a and cfg_b and returns the sup distance over common time
// nodes (grids must nest; common nodes are matched by time value).
double uniqueness_check(const FieldModel& F, const HPoint& p, const HPoint& q,
                        const SolverConfig& cfg_a, const SolverConfig& cfg_b,
                        const MetricConfig& metric);

// Traces each perturbed field and reports the uniform distance to the trace
// of the reference field at common nodes.
std::vector<double> stability_run(const std::vector<FieldModel>& F_seq,
                                  const FieldModel& F, const HPoint& p,
                                  const HPoint& q, const SolverConfig& cfg,
                                  const MetricConfig& metric);

// Newton search in the horizontal 2-plane through x0: finds x = x0 * (a,b,0)
// with F(x) = z. Used for level-set seeds and surjectivity sampling.
struct PlaneSeed {
    HPoint point;
    bool found = false;
};
PlaneSeed solve_in_plane(const FieldModel& F, const HPoint& x0, const Vec2& z,
                         double tol = 1e-12, int max_iter = 50);

}  // namespace heis
