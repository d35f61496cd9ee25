#include "heis/field.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace heis {

Mat2 Mat2::inverse() const {
    const double det_ = det();
    if (det_ == 0.0) throw std::domain_error("Mat2: singular");
    return {d / det_, -b / det_, -c / det_, a / det_};
}

double Mat2::op_norm() const {
    // Largest singular value of a 2x2 matrix in closed form.
    const double f = a * a + b * b + c * c + d * d;
    const double det_ = det();
    const double disc = std::sqrt(std::max(0.0, f * f - 4.0 * det_ * det_));
    return std::sqrt(0.5 * (f + disc));
}

Mat2 grad_h(const FieldModel& F, const HPoint& x) {
    if (F.gradient_mode == GradientMode::analytic) {
        if (!F.grad) throw std::logic_error("FieldModel: analytic mode without gradient");
        return F.grad(x);
    }
    const double h = F.fd_step;
    const auto col = [&](const HPoint& e) {
        const Vec2 fp = F.eval(mul(x, e));
        const Vec2 fm = F.eval(mul(x, inv(e)));
        return Vec2{(fp[0] - fm[0]) / (2.0 * h), (fp[1] - fm[1]) / (2.0 * h)};
    };
    const Vec2 c1 = col({h, 0.0, 0.0});
    const Vec2 c2 = col({0.0, h, 0.0});
    return {c1[0], c2[0], c1[1], c2[1]};
}

Vec2 taylor_remainder(const FieldModel& F, const HPoint& x, const HPoint& y) {
    const HPoint z = mul(inv(x), y);
    const Vec2 fy = F.eval(y);
    const Vec2 fx = F.eval(x);
    const Vec2 lin = grad_h(F, x).apply({z.x1, z.x2});
    return {fy[0] - fx[0] - lin[0], fy[1] - fx[1] - lin[1]};
}

namespace {

double mat_abs(const Mat2& M) {
    return std::sqrt(M.a * M.a + M.b * M.b + M.c * M.c + M.d * M.d);
}

// Uniform sample in the gauge ball B(radius, center): rejection from the
// bounding box of the unit ball, then dilation and left translation.
HPoint sample_ball(std::mt19937_64& gen, const MetricConfig& metric,
                   const HPoint& center, double radius) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double v_cap = 1.0 / std::sqrt(metric.lambda);
    for (;;) {
        const HPoint w{u(gen), u(gen), v_cap * u(gen)};
        if (hnorm(metric, w) <= 1.0) return mul(center, dilate(radius, w));
    }
}

}  // namespace

HolderEstimate holder_constant(const FieldModel& F, const MetricConfig& metric,
                               const HPoint& center, double radius,
                               std::uint64_t samples, std::uint64_t seed) {
    if (radius <= 0.0) throw std::invalid_argument("holder_constant: radius > 0");
    std::mt19937_64 gen(seed);
    HolderEstimate est{0.0, center, radius, samples};
    for (std::uint64_t i = 0; i < samples; ++i) {
        const HPoint x = sample_ball(gen, metric, center, radius);
        const HPoint y = sample_ball(gen, metric, center, radius);
        const double d = dist(metric, x, y);
        if (d <= 0.0) continue;
        const Mat2 gx = grad_h(F, x);
        const Mat2 gy = grad_h(F, y);
        const Mat2 diff{gx.a - gy.a, gx.b - gy.b, gx.c - gy.c, gx.d - gy.d};
        est.value = std::max(est.value, mat_abs(diff) / std::pow(d, F.alpha));
    }
    return est;
}

Nondegeneracy nondegeneracy(const FieldModel& F, const HPoint& p, double tol) {
    const Mat2 M = grad_h(F, p);
    Nondegeneracy out;
    out.det = M.det();
    out.nondegenerate = std::abs(out.det) > tol;
    if (out.nondegenerate)
        out.condition = M.op_norm() * M.inverse().op_norm();
    else
        out.condition = std::numeric_limits<double>::infinity();
    return out;
}

FieldModel blowup(const FieldModel& F, const HPoint& p, double r) {
    if (r <= 0.0) throw std::invalid_argument("blowup: r > 0");
    FieldModel out;
    out.alpha = F.alpha;
    out.gradient_mode = F.gradient_mode;
    out.fd_step = F.fd_step;
    out.name = F.name + "_blowup";
    const Vec2 Fp = F.eval(p);
    out.eval = [F, p, r, Fp](const HPoint& q) {
        const Vec2 v = F.eval(mul(p, dilate(r, q)));
        return Vec2{(v[0] - Fp[0]) / r, (v[1] - Fp[1]) / r};
    };
    if (F.grad)
        out.grad = [F, p, r](const HPoint& q) { return F.grad(mul(p, dilate(r, q))); };
    return out;
}

FieldModel projection_field(double alpha) {
    FieldModel f;
    f.eval = [](const HPoint& x) { return Vec2{x.x1, x.x2}; };
    f.grad = [](const HPoint&) { return Mat2{1.0, 0.0, 0.0, 1.0}; };
    f.alpha = alpha;
    f.name = "projection";
    return f;
}

FieldModel linear_field(const Mat2& M, double alpha) {
    FieldModel f;
    f.eval = [M](const HPoint& x) { return M.apply({x.x1, x.x2}); };
    f.grad = [M](const HPoint&) { return M; };
    f.alpha = alpha;
    f.name = "linear";
    return f;
}

FieldModel shear_field(double alpha) { return shear_field_coeff(1.0, alpha); }

FieldModel shear_field_coeff(double coeff, double alpha) {
    FieldModel f;
    f.eval = [coeff](const HPoint& x) { return Vec2{x.x1, x.x2 + coeff * x.x3}; };
    // X1 = d1 - x2 d3, X2 = d2 + x1 d3 applied to (x1, x2 + coeff*x3).
    f.grad = [coeff](const HPoint& x) {
        return Mat2{1.0, 0.0, -coeff * x.x2, 1.0 + coeff * x.x1};
    };
    f.alpha = alpha;
    f.name = coeff == 1.0 ? "shear" : "shear_coeff";
    return f;
}

}  // namespace heis
