// Acceptance gate: nine go/no-go checks with closed-form oracles, one
// pass/fail line each. All tolerances are pinned here on purpose; edit the
// checks, not the constants, if behavior changes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "heis/field.hpp"
#include "heis/hgroup.hpp"
#include "heis/lsde.hpp"
#include "heis/measure.hpp"
#include "heis/rng.hpp"
#include "heis/sewing.hpp"

using namespace heis;

namespace {

int failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& detail, double seconds) {
    std::printf("criterion %d: %s (%s, %.2f s)\n", criterion,
                pass ? "PASS" : "FAIL", detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

double uniform(std::uint64_t& s) { return (splitmix64(s) >> 11) * 0x1.0p-53; }

HPoint random_point(std::uint64_t& s, double scale) {
    return {scale * (2.0 * uniform(s) - 1.0), scale * (2.0 * uniform(s) - 1.0),
            scale * (2.0 * uniform(s) - 1.0)};
}

// Ball sample for hnorm via rejection from the bounding box.
HPoint ball_point(std::uint64_t& s, const MetricConfig& metric, double radius) {
    const double vcap = radius * radius / std::sqrt(metric.lambda);
    for (;;) {
        const HPoint w{radius * (2.0 * uniform(s) - 1.0),
                       radius * (2.0 * uniform(s) - 1.0),
                       vcap * (2.0 * uniform(s) - 1.0)};
        if (hnorm(metric, w) <= radius) return w;
    }
}

Trace exact_line_trace(const std::function<HPoint(double)>& curve, double delta,
                       int levels) {
    Trace tr;
    const std::size_t n = (std::size_t(1) << levels) + 1;
    const std::size_t mid = n / 2;
    const double h = delta / static_cast<double>(std::size_t(1) << (levels - 1));
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) - static_cast<double>(mid)) * h;
        tr.times.push_back(t);
        tr.path.push_back(curve(t));
    }
    tr.base_point = {0, 0, 0};
    tr.start = curve(0.0);
    tr.delta_used = delta;
    tr.alpha = 0.5;
    return tr;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1_axioms() {
    const double start = now_seconds();
    const MetricConfig metric;
    std::uint64_t s = 0xace1u;
    double worst_assoc = 0.0, worst_inv = 0.0, worst_hom = 0.0, worst_tri = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const HPoint x = random_point(s, 1.0);
        const HPoint y = random_point(s, 1.0);
        const HPoint z = random_point(s, 1.0);
        const HPoint a = mul(mul(x, y), z);
        const HPoint b = mul(x, mul(y, z));
        worst_assoc = std::max({worst_assoc, std::abs(a.x1 - b.x1),
                                std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
        worst_inv = std::max(worst_inv, std::abs(dist(metric, z, z)));
        // Left-invariance and homogeneity of the distance.
        worst_inv =
            std::max(worst_inv, std::abs(dist(metric, mul(z, x), mul(z, y)) -
                                         dist(metric, x, y)));
        const double r = 0.1 + 1.9 * uniform(s);
        worst_hom = std::max(worst_hom,
                             std::abs(dist(metric, dilate(r, x), dilate(r, y)) -
                                      r * dist(metric, x, y)));
        const double slack =
            dist(metric, x, y) + dist(metric, y, z) - dist(metric, x, z);
        worst_tri = std::min(worst_tri, slack);
        worst_tri = std::min(worst_tri, 0.0);
    }
    const double seconds = now_seconds() - start;
    const bool pass = worst_assoc <= 1e-12 && worst_inv <= 1e-12 &&
                      worst_hom <= 1e-12 && worst_tri >= -1e-9 && seconds < 5.0;
    report(1, pass,
           fmt("assoc %.1e, invariance %.1e, triangle slack %.1e", worst_assoc,
               worst_inv, worst_tri),
           seconds);
}

void criterion_2_sewing() {
    const double start = now_seconds();
    const std::size_t n = (std::size_t(1) << 16) + 1;
    std::vector<double> grid(n);
    SampledFunction t1, t2, s2, s3;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        grid[i] = t;
        t1.times.push_back(t);
        t1.values.push_back(t);
        t2.times.push_back(t);
        t2.values.push_back(t * t);
        s2.times.push_back(t);
        s2.values.push_back(t * t);
        s3.times.push_back(t);
        s3.values.push_back(t * t * t);
    }
    const double i1 = young_integral(t1, t2).values.back();
    const double i2 = young_integral(s2, s3).values.back();
    const double e1 = std::abs(i1 - 2.0 / 3.0);
    const double e2 = std::abs(i2 - 3.0 / 5.0);

    // Defect bound for the Young germ of a Hoelder pair with exponent sum
    // 1.2 > 1: g1 = g2 = t^0.6, A(s,t) = g1(s)(g2(t)-g2(s)), alpha = 0.2.
    const std::size_t m = (std::size_t(1) << 12) + 1;
    std::vector<double> g(m);
    std::vector<double> gv(m);
    for (std::size_t i = 0; i < m; ++i) {
        g[i] = static_cast<double>(i) / static_cast<double>(m - 1);
        gv[i] = std::pow(g[i], 0.6);
    }
    Germ young{[&](double s_, double t_) {
                   const auto is = static_cast<std::size_t>(
                       std::llround(s_ * static_cast<double>(m - 1)));
                   const auto it = static_cast<std::size_t>(
                       std::llround(t_ * static_cast<double>(m - 1)));
                   return gv[is] * (gv[it] - gv[is]);
               },
               0.2};
    const double norm = germ_norm(young, g, 0);  // midpoint-triple mode
    const double kap = sewing_kappa(0.2);
    const SewingResult sewn = sew(young, g, 0.0);
    double worst_excess = 0.0;
    for (std::size_t span = 1; span < m; span *= 2) {
        for (std::size_t i = 0; i + span < m; i += span) {
            const double dt = g[i + span] - g[i];
            const double defect = std::abs(sewn.path.values[i + span] -
                                           sewn.path.values[i] -
                                           young.eval(g[i], g[i + span]));
            worst_excess = std::max(
                worst_excess, defect - kap * norm * std::pow(dt, 1.2) - 1e-14);
        }
    }
    const double seconds = now_seconds() - start;
    const bool pass =
        e1 <= 1e-6 && e2 <= 1e-6 && worst_excess <= 0.0 && seconds < 10.0;
    report(2, pass,
           fmt("young errors %.1e / %.1e, defect excess %.1e", e1, e2,
               worst_excess),
           seconds);
}

void criterion_3_exact_solutions() {
    const double start = now_seconds();
    SolverConfig cfg;
    cfg.grid_levels = 10;
    cfg.delta = 0.1;
    bool pass = true;
    std::string detail;

    struct Case {
        FieldModel F;
        HPoint q;
        std::function<HPoint(double)> curve;
    };
    std::vector<Case> cases;
    cases.push_back({projection_field(), {0, 0, 0},
                     [](double t) { return HPoint{0, 0, t}; }});
    cases.push_back({shear_field(), {0, 0, 0},
                     [](double t) { return HPoint{0, -t, t}; }});
    for (const double z1 : {-0.3, 0.2}) {
        const HPoint q{z1, 0.07, -0.05};
        const double speed = 1.0 / (1.0 + z1);
        cases.push_back({shear_field(), q, [q, speed](double t) {
                             return HPoint{q.x1, q.x2 - speed * t, q.x3 + speed * t};
                         }});
    }

    double worst_sup = 0.0, worst_err = 0.0, worst_drift = 0.0;
    int worst_iters = 0;
    for (const auto& c : cases) {
        const double t0 = now_seconds();
        const Trace tr = solve(c.F, {0, 0, 0}, c.q, cfg);
        const double t1 = now_seconds();
        double sup = 0.0;
        for (std::size_t j = 0; j < tr.times.size(); ++j) {
            const HPoint ref = c.curve(tr.times[j]);
            sup = std::max({sup, std::abs(tr.path[j].x1 - ref.x1),
                            std::abs(tr.path[j].x2 - ref.x2),
                            std::abs(tr.path[j].x3 - ref.x3)});
        }
        worst_sup = std::max(worst_sup, sup);
        worst_err = std::max(worst_err, tr.error_norm);
        worst_drift = std::max(worst_drift, tr.levelset_drift);
        worst_iters = std::max(worst_iters, tr.iterations);
        pass = pass && tr.converged && sup <= 1e-8 && tr.error_norm <= 1e-10 &&
               tr.levelset_drift <= 1e-10 && tr.iterations <= 30 &&
               (t1 - t0) < 5.0;
    }

    // The same off-center level sets traversed at speed 1/(1-z1) instead of
    // 1/(1+z1) stay on the level set but break the vertical equation; the
    // error norm flags them as non-solutions.
    double min_bad = 1e300;
    for (const double z1 : {-0.3, 0.2}) {
        const HPoint q{z1, 0.07, -0.05};
        const double bad_speed = 1.0 / (1.0 - z1);
        Trace wrong = exact_line_trace(
            [q, bad_speed](double t) {
                return HPoint{q.x1, q.x2 - bad_speed * t, q.x3 + bad_speed * t};
            },
            cfg.delta, cfg.grid_levels);
        wrong.start = q;
        const Residuals res = residuals(shear_field(), wrong);
        min_bad = std::min(min_bad, res.error_norm);
    }
    pass = pass && min_bad >= 1e-2;

    const double seconds = now_seconds() - start;
    report(3, pass,
           fmt("sup %.1e, error norm %.1e, drift %.1e", worst_sup, worst_err,
               worst_drift) +
               fmt(", iters %.0f, wrong-speed error norm %.1e",
                   static_cast<double>(worst_iters), min_bad),
           seconds);
}

void criterion_4_invariants() {
    const double start = now_seconds();
    const MetricConfig metric;
    const FieldModel F = shear_field();
    bool pass = true;
    RadiiCertificate cert;
    try {
        cert = admissible_radii(F, {0, 0, 0}, metric);
    } catch (const std::exception&) {
        report(4, false, "no admissible radii certificate", now_seconds() - start);
        return;
    }
    pass = pass && cert.valid();

    SolverConfig cfg;
    cfg.delta = cert.delta0;
    cfg.grid_levels = 10;
    const double budget = cert.kappa * cert.rho0 * cert.rho0;
    double worst_drift = 0.0, worst_holder = 0.0, worst_err = 0.0;
    std::uint64_t s = 0xbeefu;
    for (int i = 0; i < 20 && pass; ++i) {
        const HPoint q = ball_point(s, metric, cert.eps0);
        try {
            const Trace tr = solve(F, {0, 0, 0}, q, cfg);
            const InjectivityReport inj =
                injectivity_check(tr, tr.alpha, metric, cert.c_equiv);
            const double hh = holder_norm_horizontal(tr, tr.alpha);
            worst_drift = std::max(worst_drift, tr.levelset_drift);
            worst_holder = std::max(worst_holder, hh);
            worst_err = std::max(worst_err, tr.error_norm);
            pass = pass && tr.converged && tr.levelset_drift <= 1e-8 &&
                   inj.holds && hh <= cert.rho0 && tr.error_norm <= budget;
        } catch (const std::exception&) {
            pass = false;
        }
    }
    const double seconds = now_seconds() - start;
    report(4, pass && seconds < 60.0,
           fmt("drift %.1e, holder %.2f <= rho0 %.2f", worst_drift, worst_holder,
               cert.rho0) +
               fmt(", error norm %.1e <= %.1e", worst_err, budget),
           seconds);
}

void criterion_5_uniqueness_stability() {
    const double start = now_seconds();
    const MetricConfig metric;
    SolverConfig coarse, fine;
    coarse.grid_levels = 8;
    fine.grid_levels = 12;
    const HPoint q{0.2, 0.07, -0.05};
    const double d =
        uniqueness_check(shear_field(), {0, 0, 0}, q, coarse, fine, metric);
    const double scale = coarse.delta / 128.0;  // coarse discretization scale
    bool pass = d <= 10.0 * scale;

    std::vector<FieldModel> seq;
    for (const double n : {4.0, 16.0, 64.0})
        seq.push_back(shear_field_coeff(1.0 + 1.0 / n));
    const auto dists =
        stability_run(seq, shear_field(), {0, 0, 0}, {0, 0, 0}, coarse, metric);
    double min_ratio = 1e300;
    for (std::size_t i = 0; i + 1 < dists.size(); ++i)
        min_ratio = std::min(min_ratio, dists[i] / dists[i + 1]);
    pass = pass && min_ratio >= 2.0;

    const double seconds = now_seconds() - start;
    report(5, pass && seconds < 60.0,
           fmt("cross-resolution %.1e <= %.1e, stability ratio %.2f", d,
               10.0 * scale, min_ratio),
           seconds);
}

void criterion_6_surjectivity() {
    const double start = now_seconds();
    const MetricConfig metric;
    const FieldModel F = shear_field();
    double eps = 0.05;
    try {
        eps = std::min(eps, admissible_radii(F, {0, 0, 0}, metric).eps0);
    } catch (const std::exception&) {
    }
    SolverConfig cfg;
    cfg.grid_levels = 10;
    const Trace tr = solve(F, {0, 0, 0}, {0, 0, 0}, cfg);
    cfg.grid_levels = 12;
    const Trace tr2 = solve(F, {0, 0, 0}, {0, 0, 0}, cfg);
    const SurjectivityReport a = surjectivity_check(F, tr, metric, eps, 1000);
    const SurjectivityReport b = surjectivity_check(F, tr2, metric, eps, 1000);
    const double mesh = tr.times[1] - tr.times[0];
    const double ratio = b.max_gap > 0.0 ? a.max_gap / b.max_gap : 0.0;
    const bool pass = a.accepted == 1000 && a.max_gap <= 3.0 * std::sqrt(mesh) &&
                      ratio >= 1.4 && ratio <= 2.6;
    const double seconds = now_seconds() - start;
    report(6, pass && seconds < 30.0,
           fmt("gap %.3e <= %.3e, halving ratio %.2f", a.max_gap,
               3.0 * std::sqrt(mesh), ratio),
           seconds);
}

void criterion_7_federer() {
    const double start = now_seconds();
    const MetricConfig metric;
    const double beta = beta_d(metric, 200001);
    const std::vector<double> radii{0.1, 0.05, 0.02, 0.01};

    const Trace line = exact_line_trace(
        [](double t) { return HPoint{0, 0, t}; }, 0.05, 16);
    const Trace shear = exact_line_trace(
        [](double t) { return HPoint{0, -t, t}; }, 0.05, 16);
    const CurveMeasure cm_line{line, {}};
    const CurveMeasure cm_shear{shear, {}};
    const double d1 =
        federer_density(cm_line, {0, 0, 0}, radii, 200, metric, beta);
    const double d2 =
        federer_density(cm_shear, {0, 0, 0}, radii, 200, metric, beta);
    const double seconds = now_seconds() - start;
    const bool pass = d1 >= 0.9 && d1 <= 1.1 && d2 >= 0.9 && d2 <= 1.1 &&
                      seconds < 60.0;
    report(7, pass, fmt("line density %.3f, shear density %.3f", d1, d2), seconds);
}

void criterion_8_coarea() {
    const double start = now_seconds();
    const MetricConfig metric;
    const Box box{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}};
    SolverConfig cfg;
    cfg.grid_levels = 8;
    CoareaOptions opt;
    opt.z_samples = 2000;
    opt.quadrature = 64;
    const MeasureReport rep = coarea_check(shear_field(), box, cfg, metric, opt);
    const double lhs_err = std::abs(rep.lhs - 1.0);
    const double rhs_err = std::abs(rep.rhs - 1.0);
    const double gap = std::abs(rep.lhs - rep.rhs);
    const bool pass = lhs_err <= 1e-3 && rhs_err <= 0.03 &&
                      gap <= 4.0 * rep.std_error + 0.005 && rep.skipped == 0;
    const double seconds = now_seconds() - start;
    report(8, pass && seconds < 600.0,
           fmt("lhs %.6f, rhs %.4f, std err %.1e", rep.lhs, rep.rhs,
               rep.std_error),
           seconds);
}

void criterion_9_blowup() {
    const double start = now_seconds();
    const MetricConfig metric;
    const FieldModel F = shear_field();
    const Mat2 M = grad_h(F, {0, 0, 0});
    std::uint64_t s = 0xfeedu;
    std::vector<HPoint> pts;
    while (pts.size() < 4000) pts.push_back(ball_point(s, metric, 1.0));

    std::vector<double> devs;
    for (const double r : {1.0, 0.5, 0.25, 0.125}) {
        const FieldModel Fr = blowup(F, {0, 0, 0}, r);
        double worst = 0.0;
        for (const auto& w : pts) {
            const Vec2 v = Fr.eval(w);
            const Vec2 lin = M.apply({w.x1, w.x2});
            worst = std::max(worst, std::hypot(v[0] - lin[0], v[1] - lin[1]));
        }
        devs.push_back(worst);
    }
    bool pass = true;
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 0; i + 1 < devs.size(); ++i) {
        const double ratio = devs[i] / devs[i + 1];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        pass = pass && ratio >= 1.8 && ratio <= 2.2;
    }
    const double seconds = now_seconds() - start;
    report(9, pass && seconds < 10.0,
           fmt("deviation ratios in [%.3f, %.3f]", lo, hi), seconds);
}

}  // namespace

int main() {
    criterion_1_axioms();
    criterion_2_sewing();
    criterion_3_exact_solutions();
    criterion_4_invariants();
    criterion_5_uniqueness_stability();
    criterion_6_surjectivity();
    criterion_7_federer();
    criterion_8_coarea();
    criterion_9_blowup();
    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
