#include "heis/lsde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "heis/rng.hpp"
#include "heis/sewing.hpp"

namespace heis {

namespace {

// Uniform grid with 2^L + 1 nodes on [-delta, delta]. Built as (i - mid) * h
// so that t[mid] is exactly 0 and the endpoints are exactly +/- delta.
std::vector<double> make_grid(double delta, int levels) {
    const std::size_t n = (std::size_t(1) << levels) + 1;
    const std::size_t mid = n / 2;
    const double h = delta / static_cast<double>(std::size_t(1) << (levels - 1));
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = (static_cast<double>(i) - static_cast<double>(mid)) * h;
    return t;
}

// Vertical component: compound sum of the germ
//   A(j, j+1) = (t_{j+1} - t_j) - (eta1_{j+1} eta2_j - eta1_j eta2_{j+1})
// outward from the anchor f[mid] = q3.
void sew_vertical(const std::vector<double>& t, const std::vector<Vec2>& eta,
                  double q3, std::vector<double>& f) {
    const std::size_t n = t.size();
    const std::size_t mid = n / 2;
    auto germ = [&](std::size_t j) {
        return (t[j + 1] - t[j]) -
               (eta[j + 1][0] * eta[j][1] - eta[j][0] * eta[j + 1][1]);
    };
    f[mid] = q3;
    for (std::size_t j = mid; j + 1 < n; ++j) f[j + 1] = f[j] + germ(j);
    for (std::size_t j = mid; j-- > 0;) f[j] = f[j + 1] - germ(j);
}

struct PicardOutcome {
    std::vector<double> times;
    std::vector<HPoint> path;
    int iterations = 0;
    bool stopped = false;  // sup-change fell below tol
};

PicardOutcome run_picard(const FieldModel& F, const HPoint& p, const HPoint& q,
                         const Mat2& Minv, double delta, const SolverConfig& cfg) {
    PicardOutcome out;
    out.times = make_grid(delta, cfg.grid_levels);
    const std::size_t n = out.times.size();
    const Vec2 Rq = taylor_remainder(F, p, q);
    std::vector<Vec2> eta(n, Vec2{q.x1, q.x2});
    std::vector<double> f(n, q.x3);
    for (int it = 1; it <= cfg.max_iter; ++it) {
        out.iterations = it;
        sew_vertical(out.times, eta, q.x3, f);
        double defect = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2 R = taylor_remainder(F, p, {eta[j][0], eta[j][1], f[j]});
            const Vec2 corr = Minv.apply({R[0] - Rq[0], R[1] - Rq[1]});
            const Vec2 target{q.x1 - corr[0], q.x2 - corr[1]};
            defect = std::max({defect, std::abs(target[0] - eta[j][0]),
                               std::abs(target[1] - eta[j][1])});
            eta[j][0] += cfg.damping * (target[0] - eta[j][0]);
            eta[j][1] += cfg.damping * (target[1] - eta[j][1]);
        }
        if (defect < 0.5 * cfg.tol) {
            out.stopped = true;
            break;
        }
    }
    sew_vertical(out.times, eta, q.x3, f);
    out.path.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.path[j] = {eta[j][0], eta[j][1], f[j]};
    return out;
}


}  // namespace

bool RadiiCertificate::valid() const {
    if (conditions.empty()) return false;
    for (const auto& c : conditions)
        if (!c.satisfied) return false;
    return true;
}

Trace solve(const FieldModel& F, const HPoint& p, const HPoint& q,
            const SolverConfig& cfg) {
    const Nondegeneracy nd = nondegeneracy(F, p);
    if (!nd.nondegenerate) throw DegeneratePoint("solve: grad_h(p) is singular");
    const Mat2 Minv = grad_h(F, p).inverse();

    double delta = cfg.delta;
    for (int attempt = 0; attempt <= cfg.halving_retries; ++attempt, delta *= 0.5) {
        const PicardOutcome pic = run_picard(F, p, q, Minv, delta, cfg);
        if (!pic.stopped) continue;
        Trace tr;
        tr.times = pic.times;
        tr.path = pic.path;
        tr.base_point = p;
        tr.start = q;
        tr.iterations = pic.iterations;
        tr.ill_conditioned = nd.condition > 1e8;
        tr.delta_used = delta;
        tr.alpha = F.alpha;
        const Residuals res = residuals(F, tr);
        tr.residual_h = res.residual_h;
        tr.error_norm = res.error_norm;
        tr.levelset_drift = res.levelset_drift;
        tr.holder_h = holder_norm_horizontal(tr, F.alpha);
        tr.converged = tr.residual_h <= cfg.tol;
        if (tr.converged) return tr;
    }
    throw NonConvergence("solve: Picard iteration did not converge");
}

double holder_norm_horizontal(const Trace& tr, double alpha) {
    const std::size_t n = tr.times.size();
    const double expo = 0.5 * (1.0 + alpha);
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = tr.path[j].x1 - tr.path[i].x1;
            const double dy = tr.path[j].x2 - tr.path[i].x2;
            const double den = std::pow(tr.times[j] - tr.times[i], expo);
            best = std::max(best, std::hypot(dx, dy) / den);
        }
    return best;
}

Residuals residuals(const FieldModel& F, const Trace& trace) {
    const std::size_t n = trace.times.size();
    const Mat2 Minv = grad_h(F, trace.base_point).inverse();
    const Vec2 Fq = F.eval(trace.start);

    // dev_j = eta_j + Minv R(p, gamma_j); pairwise horizontal defects are
    // differences of dev, so one field evaluation per node suffices.
    std::vector<Vec2> dev(n);
    Residuals out;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 R = taylor_remainder(F, trace.base_point, trace.path[j]);
        const Vec2 MR = Minv.apply(R);
        dev[j] = {trace.path[j].x1 + MR[0], trace.path[j].x2 + MR[1]};
        const Vec2 Fj = F.eval(trace.path[j]);
        out.levelset_drift = std::max(
            out.levelset_drift, std::hypot(Fj[0] - Fq[0], Fj[1] - Fq[1]));
    }

    const double expo = 1.0 + trace.alpha;
    auto pair_terms = [&](std::size_t i, std::size_t j) {
        out.residual_h = std::max(
            out.residual_h, std::hypot(dev[j][0] - dev[i][0], dev[j][1] - dev[i][1]));
        const HPoint z = mul(inv(trace.path[i]), trace.path[j]);
        const double E = z.x3 - (trace.times[j] - trace.times[i]);
        out.error_norm = std::max(
            out.error_norm,
            std::abs(E) / std::pow(trace.times[j] - trace.times[i], expo));
    };
    if (n <= 4097) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pair_terms(i, j);
    } else {
        for (std::size_t span = 1; span < n; span *= 2)
            for (std::size_t i = 0; i + span < n; ++i) pair_terms(i, i + span);
    }
    return out;
}

InjectivityReport injectivity_check(const Trace& trace, double alpha,
                                    const MetricConfig& metric, double c_equiv) {
    InjectivityReport rep;
    rep.rho = std::sqrt(2.0) * c_equiv;
    rep.delta_max = trace.delta_used > 0.0 ? trace.delta_used
                                           : 0.5 * (trace.times.back() - trace.times.front());
    const double precond =
        std::pow(2.0 * rep.delta_max, alpha) * trace.error_norm;
    rep.holds = precond <= 0.5;
    rep.margin = std::numeric_limits<double>::infinity();
    const std::size_t n = trace.times.size();
    for (std::size_t i = 0; i < n && rep.holds; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dt = trace.times[j] - trace.times[i];
            if (dt > 2.0 * rep.delta_max) break;
            const double d = dist(metric, trace.path[i], trace.path[j]);
            const double margin = rep.rho * d - std::sqrt(dt);
            rep.margin = std::min(rep.margin, margin);
            if (margin < 0.0) rep.holds = false;
        }
    return rep;
}

ModulusReport modulus_check(const Trace& trace, double alpha,
                            const MetricConfig& metric) {
    ModulusReport rep;
    rep.holder_h = holder_norm_horizontal(trace, alpha);
    const std::size_t n = trace.times.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(metric, trace.path[i], trace.path[j]);
            rep.holder_d_half =
                std::max(rep.holder_d_half, d / std::sqrt(trace.times[j] - trace.times[i]));
        }
    return rep;
}

namespace {

HPoint interp_path(const Trace& tr, double t) {
    const auto& ts = tr.times;
    if (t <= ts.front()) return tr.path.front();
    if (t >= ts.back()) return tr.path.back();
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - ts.begin());
    const double w = (t - ts[j - 1]) / (ts[j] - ts[j - 1]);
    const HPoint& a = tr.path[j - 1];
    const HPoint& b = tr.path[j];
    return {a.x1 + w * (b.x1 - a.x1), a.x2 + w * (b.x2 - a.x2),
            a.x3 + w * (b.x3 - a.x3)};
}

}  // namespace

ProjectionResult project_point(const Trace& trace, const HPoint& x, double tol) {
    const HPoint rel = mul(inv(trace.start), x);
    if (gauge_v(rel) <= gauge_h(rel)) return {0.0, true};
    const double sign = rel.x3 > 0.0 ? 1.0 : -1.0;
    auto G = [&](double t) {
        const HPoint z = mul(inv(interp_path(trace, t)), x);
        const double gh = gauge_h(z);
        return z.x3 - sign * gh * gh;
    };
    double lo = std::min(0.0, 2.0 * rel.x3);
    double hi = std::max(0.0, 2.0 * rel.x3);
    lo = std::max(lo, trace.times.front());
    hi = std::min(hi, trace.times.back());
    double glo = G(lo), ghi = G(hi);
    if (glo == 0.0) return {lo, true};
    if (ghi == 0.0) return {hi, true};
    if (glo * ghi > 0.0) return {0.0, false};
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = G(mid);
        if (std::abs(gm) <= tol) return {mid, true};
        if (glo * gm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
        if (hi - lo < 1e-16) break;
    }
    const double mid = 0.5 * (lo + hi);
    return {mid, std::abs(G(mid)) <= tol};
}

PlaneSeed solve_in_plane(const FieldModel& F, const HPoint& x0, const Vec2& z,
                         double tol, int max_iter) {
    double a = 0.0, b = 0.0;
    const double h = 1e-7;
    for (int it = 0; it < max_iter; ++it) {
        const HPoint x = mul(x0, {a, b, 0.0});
        const Vec2 fx = F.eval(x);
        const Vec2 r{fx[0] - z[0], fx[1] - z[1]};
        if (std::hypot(r[0], r[1]) <= tol) return {x, true};
        const Vec2 fa = F.eval(mul(x0, {a + h, b, 0.0}));
        const Vec2 fb = F.eval(mul(x0, {a, b + h, 0.0}));
        const Mat2 J{(fa[0] - fx[0]) / h, (fb[0] - fx[0]) / h,
                     (fa[1] - fx[1]) / h, (fb[1] - fx[1]) / h};
        if (std::abs(J.det()) < 1e-14) return {x, false};
        const Vec2 step = J.inverse().apply(r);
        double lambda = 1.0;
        // Backtracking keeps the residual monotone on strongly curved fields.
        for (int bt = 0; bt < 6; ++bt) {
            const Vec2 fn = F.eval(mul(x0, {a - lambda * step[0], b - lambda * step[1], 0.0}));
            if (std::hypot(fn[0] - z[0], fn[1] - z[1]) < std::hypot(r[0], r[1])) break;
            lambda *= 0.5;
        }
        a -= lambda * step[0];
        b -= lambda * step[1];
    }
    const HPoint x = mul(x0, {a, b, 0.0});
    const Vec2 fx = F.eval(x);
    return {x, std::hypot(fx[0] - z[0], fx[1] - z[1]) <= tol};
}

SurjectivityReport surjectivity_check(const FieldModel& F, const Trace& trace,
                                      const MetricConfig& metric, double eps,
                                      std::uint64_t samples, double level_tol,
                                      std::uint64_t seed) {
    SurjectivityReport rep;
    const Vec2 Fq = F.eval(trace.start);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double v_cap = 1.0 / std::sqrt(metric.lambda);
    std::uint64_t tries = 0;
    const std::uint64_t max_tries = samples * 50;
    while (rep.accepted < samples && tries++ < max_tries) {
        const HPoint w{u(gen), u(gen), v_cap * u(gen)};
        if (hnorm(metric, w) > 1.0) continue;
        const HPoint x0 = mul(trace.base_point, dilate(eps, w));
        const PlaneSeed seed_pt = solve_in_plane(F, x0, Fq);
        if (!seed_pt.found) continue;
        const HPoint x = seed_pt.point;
        if (dist(metric, trace.base_point, x) > eps) continue;
        const Vec2 fx = F.eval(x);
        if (std::hypot(fx[0] - Fq[0], fx[1] - Fq[1]) > level_tol) continue;
        ++rep.accepted;
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < trace.path.size(); ++j)
            gap = std::min(gap, dist(metric, x, trace.path[j]));
        rep.max_gap = std::max(rep.max_gap, gap);
    }
    return rep;
}

double uniqueness_check(const FieldModel& F, const HPoint& p, const HPoint& q,
                        const SolverConfig& cfg_a, const SolverConfig& cfg_b,
                        const MetricConfig& metric) {
    const Trace a = solve(F, p, q, cfg_a);
    const Trace b = solve(F, p, q, cfg_b);
    double best = 0.0;
    std::size_t ib = 0;
    for (std::size_t ia = 0; ia < a.times.size(); ++ia) {
        while (ib < b.times.size() && b.times[ib] < a.times[ia] - 1e-15) ++ib;
        if (ib >= b.times.size()) break;
        if (std::abs(b.times[ib] - a.times[ia]) > 1e-15) continue;
        best = std::max(best, dist(metric, a.path[ia], b.path[ib]));
    }
    return best;
}

std::vector<double> stability_run(const std::vector<FieldModel>& F_seq,
                                  const FieldModel& F, const HPoint& p,
                                  const HPoint& q, const SolverConfig& cfg,
                                  const MetricConfig& metric) {
    const Trace ref = solve(F, p, q, cfg);
    std::vector<double> out;
    out.reserve(F_seq.size());
    for (const auto& Fn : F_seq) {
        const Trace tn = solve(Fn, p, q, cfg);
        double sup = 0.0;
        const std::size_t n = std::min(ref.path.size(), tn.path.size());
        for (std::size_t j = 0; j < n; ++j)
            sup = std::max(sup, dist(metric, ref.path[j], tn.path[j]));
        out.push_back(sup);
    }
    return out;
}

RadiiCertificate admissible_radii(const FieldModel& F, const HPoint& p,
                                  const MetricConfig& metric, double holder_safety,
                                  std::uint64_t seed) {
    const Nondegeneracy nd = nondegeneracy(F, p);
    if (!nd.nondegenerate)
        throw DegeneratePoint("admissible_radii: grad_h(p) is singular");
    const double alpha = F.alpha;
    const double kappa = sewing_kappa(alpha);
    const double c = equivalence_constant(metric, 20000, derive_seed(seed, 0));
    const double minv = grad_h(F, p).inverse().op_norm();
    const double pow_kappa = std::pow(1.0 + kappa, 0.5 * (1.0 + alpha));
    const double rho_floor = std::sqrt(2.0) * c;

    // Sweep eps downward and keep the feasible triple with the largest
    // delta0: the first feasible eps sits at the contraction edge where
    // 1/(1 - shrink) blows rho up, which would make the certificate valid
    // but useless.
    double eps = 0.0, rho = 0.0, cAH = 0.0, delta0 = -1.0;
    double eps_try = 1.0;
    for (int step = 0; step < 80; ++step, eps_try *= 0.8) {
        const HolderEstimate hest = holder_constant(F, metric, p, 4.0 * c * eps_try,
                                                    4000, derive_seed(seed, 1));
        const double cAH_try = c * minv * holder_safety * hest.value;
        const double shrink = cAH_try * std::pow(2.0 * eps_try, alpha);
        if (shrink >= 0.999) continue;
        const double rho_try =
            std::max(rho_floor, cAH_try * pow_kappa / (1.0 - shrink));
        if (cAH_try * (std::pow(2.0 * eps_try, alpha) * rho_try + pow_kappa) >
            rho_try)
            continue;
        const double d1 = 0.5 * std::pow(rho_try, -2.0 / alpha);
        const double d2 =
            std::pow(eps_try / (c * (1.0 + std::sqrt(1.0 + kappa))), 2.0);
        const double d3 =
            0.5 * std::pow(0.5 / (kappa * rho_try * rho_try), 1.0 / alpha);
        const double delta_try = std::min({d1, d2, d3});
        if (delta_try > delta0) {
            delta0 = delta_try;
            eps = eps_try;
            rho = rho_try;
            cAH = cAH_try;
        }
    }
    if (delta0 <= 0.0) throw NoAdmissibleRadii("admissible_radii: search exhausted");

    RadiiCertificate cert;
    cert.delta0 = delta0;
    cert.eps0 = eps;
    cert.rho0 = rho;
    cert.kappa = kappa;
    cert.c_equiv = c;
    const double two_delta_a = std::pow(2.0 * delta0, alpha);
    cert.conditions = {
        {"rho_times_two_delta_pow", rho * std::pow(2.0 * delta0, 0.5 * alpha), 1.0, false},
        {"delta_inside_eps", c * (1.0 + std::sqrt(1.0 + kappa)) * std::sqrt(delta0), eps, false},
        {"fixed_point_ball", cAH * (std::pow(2.0 * eps, alpha) * rho + pow_kappa), rho, false},
        {"injectivity_error_budget", two_delta_a * kappa * rho * rho, 0.5, false},
        {"injectivity_rho_floor", 2.0 * c * c, rho * rho, false},
    };
    for (auto& cond : cert.conditions) cond.satisfied = cond.lhs <= cond.rhs;
    return cert;
}

}  // namespace heis
