#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "heis/hgroup.hpp"

// Maps F: H -> R^2 with horizontal-gradient machinery: evaluation, the
// horizontal Jacobian [X1 F, X2 F], first-order Taylor remainder, sampled
// Hoelder constants, nondegeneracy, and anisotropic blow-ups. Field
// evaluators must be pure and reentrant; nothing here caches.

namespace heis {

using Vec2 = std::array<double, 2>;

struct Mat2 {
    // Row-major: [[a, b], [c, d]].
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    double det() const { return a * d - b * c; }
    Mat2 inverse() const;
    double op_norm() const;  // largest singular value
    Vec2 apply(const Vec2& v) const {
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }
};

enum class GradientMode { analytic, finite_difference };

struct FieldModel {
    std::function<Vec2(const HPoint&)> eval;
    std::function<Mat2(const HPoint&)> grad;  // may be empty in FD mode
    double alpha = 0.5;                       // Hoelder exponent of grad_h, in (0,1]
    GradientMode gradient_mode = GradientMode::analytic;
    double fd_step = 1e-5;
    std::string name = "user";
};

struct HolderEstimate {
    double value = 0.0;  // sampled max ratio, a lower bound of the sup
    HPoint ball_center;
    double ball_radius = 0.0;
    std::uint64_t samples = 0;
};

// Horizontal Jacobian [X1 F, X2 F] at x. Finite-difference mode central-
// differences along the right translations x*(±h,0,0), x*(0,±h,0), which are
// the flows of the left-invariant horizontal fields.
Mat2 grad_h(const FieldModel& F, const HPoint& x);

// R(x,y) = F(y) - F(x) - grad_h(x) * (x^-1 y)^h.
Vec2 taylor_remainder(const FieldModel& F, const HPoint& x, const HPoint& y);

// Sampled max of |grad_h(x) - grad_h(y)| / dist(x,y)^alpha over pairs in the
// ball; deterministic under seed; non-decreasing in samples.
HolderEstimate holder_constant(const FieldModel& F, const MetricConfig& metric,
                               const HPoint& center, double radius,
                               std::uint64_t samples, std::uint64_t seed = 1);

struct Nondegeneracy {
    double det = 0.0;
    double condition = 0.0;
    bool nondegenerate = false;
};

// det grad_h(p) and its condition number; nondegenerate iff |det| > tol.
Nondegeneracy nondegeneracy(const FieldModel& F, const HPoint& p, double tol = 1e-10);

// Anisotropic blow-up q -> (F(p * dilate(r,q)) - F(p)) / r with gradient
// grad_h(p * dilate(r,q)).
FieldModel blowup(const FieldModel& F, const HPoint& p, double r);

// Built-in catalog.
FieldModel projection_field(double alpha = 0.5);
FieldModel linear_field(const Mat2& M, double alpha = 0.5);
FieldModel shear_field(double alpha = 0.5);
// Shear with configurable vertical coefficient: F(x) = (x1, x2 + coeff*x3).
FieldModel shear_field_coeff(double coeff, double alpha = 0.5);

}  // namespace heis
