#include "heis/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "heis/rng.hpp"

namespace heis {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = -p1 / dp;
            x += dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

double jacobian_h(const FieldModel& F, const HPoint& x) {
    return std::abs(grad_h(F, x).det());
}

double CurveMeasure::mass(const std::function<bool(const HPoint&)>& inside) const {
    const std::size_t n = trace.times.size();
    auto th = [&](std::size_t j) {
        return theta.empty() ? 1.0 : std::abs(theta[j]);
    };
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double wj = inside(trace.path[j]) ? th(j) : 0.0;
        const double wj1 = inside(trace.path[j + 1]) ? th(j + 1) : 0.0;
        total += 0.5 * (wj + wj1) * (trace.times[j + 1] - trace.times[j]);
    }
    return total;
}

double CurveMeasure::box_mass(const Box& box) const {
    return mass([&](const HPoint& x) { return box.contains(x); });
}

double CurveMeasure::ball_mass(const MetricConfig& metric, const HPoint& center,
                               double rho) const {
    return mass([&](const HPoint& x) { return dist(metric, center, x) <= rho; });
}

double area_measure(const Trace& trace, const Box& box) {
    CurveMeasure cm{trace, {}};
    return cm.box_mass(box);
}

double sph_measure_upper(const Trace& trace, double mesh,
                         const MetricConfig& metric, double beta_d_value) {
    if (mesh <= 0.0) throw std::invalid_argument("sph_measure_upper: mesh > 0");
    const std::size_t n = trace.times.size();
    double total = 0.0;
    std::size_t j = 0;
    while (j + 1 < n) {
        const double chunk_end = trace.times[j] + mesh;
        std::size_t k = j;
        while (k + 1 < n && trace.times[k + 1] <= chunk_end + 1e-15) ++k;
        if (k == j) k = j + 1;
        double diam = 0.0;
        for (std::size_t a = j; a <= k; ++a)
            for (std::size_t b = a + 1; b <= k; ++b)
                diam = std::max(diam, dist(metric, trace.path[a], trace.path[b]));
        total += beta_d_value * diam * diam;
        j = k;
    }
    return total;
}

double federer_density(const CurveMeasure& cm, const HPoint& x,
                       std::vector<double> radii, std::uint64_t center_samples,
                       const MetricConfig& metric, double beta_d_value,
                       std::uint64_t seed, double node_tol) {
    if (radii.empty()) throw std::invalid_argument("federer_density: radii empty");
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& pnode : cm.trace.path)
        nearest = std::min(nearest, dist(metric, x, pnode));
    if (nearest > node_tol) throw PointOffCurve("federer_density: x off the curve");

    std::sort(radii.begin(), radii.end(), std::greater<double>());
    const double v_cap = 1.0 / std::sqrt(metric.lambda);
    double value = 0.0;
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double rho = radii[ri];
        std::mt19937_64 gen(derive_seed(seed, ri));
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double best = cm.ball_mass(metric, x, rho);
        for (std::uint64_t s = 0; s < center_samples; ++s) {
            HPoint w{u(gen), u(gen), v_cap * u(gen)};
            if (hnorm(metric, w) > 1.0) {
                --s;  // rejection keeps the sample count per radius fixed
                continue;
            }
            const HPoint y = mul(x, dilate(rho, w));
            best = std::max(best, cm.ball_mass(metric, y, rho));
        }
        value = best / (beta_d_value * rho * rho);
    }
    return value;
}

namespace {

double dist_to_box(const Box& box, const HPoint& x) {
    const double d1 = std::max({box.lo.x1 - x.x1, x.x1 - box.hi.x1, 0.0});
    const double d2 = std::max({box.lo.x2 - x.x2, x.x2 - box.hi.x2, 0.0});
    const double d3 = std::max({box.lo.x3 - x.x3, x.x3 - box.hi.x3, 0.0});
    return std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
}

bool light_valid(const Trace& t) {
    return t.converged && t.levelset_drift <= 1e-6;
}

// Trapezoid of `weight` along path nodes [from, to].
double weighted_integral(const Trace& t, std::size_t from, std::size_t to,
                         const std::function<double(const HPoint&)>& weight) {
    double total = 0.0;
    for (std::size_t j = from; j < to; ++j)
        total += 0.5 * (weight(t.path[j]) + weight(t.path[j + 1])) *
                 (t.times[j + 1] - t.times[j]);
    return total;
}

struct GlueOutcome {
    double value = 0.0;
    bool complete = false;
};

// Extends the level trace beyond one endpoint of `first`, accumulating the
// weight integral of each new outer half until the curve leaves the region
// while moving away from it.
GlueOutcome glue_direction(const FieldModel& F, const Trace& first, int dir,
                           const std::function<double(const HPoint&)>& weight,
                           const Box& region, const SolverConfig& cfg,
                           const CoareaOptions& opt, const MetricConfig& metric) {
    GlueOutcome out;
    Trace cur = first;
    for (int seg = 0; seg < opt.max_segments; ++seg) {
        const std::size_t n = cur.times.size();
        const std::size_t mid = n / 2;
        const std::size_t lo = dir > 0 ? mid : 0;
        const std::size_t hi = dir > 0 ? n - 1 : mid;
        bool any_relevant = false;
        for (std::size_t j = lo; j <= hi && !any_relevant; ++j)
            any_relevant = region.contains(cur.path[j]);
        const HPoint& endpoint = dir > 0 ? cur.path.back() : cur.path.front();
        const HPoint& inner = cur.path[mid];
        if (!any_relevant &&
            dist_to_box(region, endpoint) >= dist_to_box(region, inner) - 1e-12) {
            out.complete = true;
            return out;
        }
        Trace next;
        try {
            next = solve(F, endpoint, endpoint, cfg);
        } catch (const std::runtime_error&) {
            return out;
        }
        if (!light_valid(next)) return out;
        const HPoint& overlap_pt = dir > 0 ? next.path.front() : next.path.back();
        if (dist(metric, overlap_pt, cur.start) > opt.overlap_tol) return out;
        const std::size_t nn = next.times.size();
        const std::size_t nmid = nn / 2;
        if (dir > 0)
            out.value += weighted_integral(next, nmid, nn - 1, weight);
        else
            out.value += weighted_integral(next, 0, nmid, weight);
        cur = next;
    }
    out.complete = true;  // capped; treated as exhausted rather than failed
    return out;
}

struct LevelResult {
    double value = 0.0;
    bool ok = false;
};

// Weight integral over the full level curve through F^-1(z) near the region.
LevelResult level_curve_integral(const FieldModel& F, const Vec2& z,
                                 const std::function<double(const HPoint&)>& weight,
                                 const Box& region, const SolverConfig& cfg,
                                 const MetricConfig& metric, const CoareaOptions& opt,
                                 std::uint64_t seed) {
    const HPoint center{0.5 * (region.lo.x1 + region.hi.x1),
                        0.5 * (region.lo.x2 + region.hi.x2),
                        0.5 * (region.lo.x3 + region.hi.x3)};
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int attempt = 0; attempt < 6; ++attempt) {
        HPoint x0 = center;
        if (attempt > 0) {
            x0 = {region.lo.x1 + u(gen) * (region.hi.x1 - region.lo.x1),
                  region.lo.x2 + u(gen) * (region.hi.x2 - region.lo.x2),
                  region.lo.x3 + u(gen) * (region.hi.x3 - region.lo.x3)};
        }
        const PlaneSeed seed_pt = solve_in_plane(F, x0, z);
        if (!seed_pt.found) continue;
        Trace first;
        try {
            first = solve(F, seed_pt.point, seed_pt.point, cfg);
        } catch (const std::runtime_error&) {
            continue;
        }
        if (!light_valid(first)) continue;
        const std::size_t n = first.times.size();
        double value = weighted_integral(first, 0, n - 1, weight);
        const GlueOutcome up = glue_direction(F, first, +1, weight, region, cfg, opt, metric);
        if (!up.complete) continue;
        const GlueOutcome down = glue_direction(F, first, -1, weight, region, cfg, opt, metric);
        if (!down.complete) continue;
        return {value + up.value + down.value, true};
    }
    return {0.0, false};
}

struct Rect {
    double lo1, hi1, lo2, hi2;
    double area() const { return (hi1 - lo1) * (hi2 - lo2); }
};

// Bounding rectangle of F over the box, sampled on a coarse lattice and
// inflated by a margin so boundary level sets stay inside.
Rect bounding_rect(const FieldModel& F, const Box& box, double margin = 0.1) {
    Rect r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    const int m = 8;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            for (int k = 0; k <= m; ++k) {
                const HPoint x{
                    box.lo.x1 + (box.hi.x1 - box.lo.x1) * i / m,
                    box.lo.x2 + (box.hi.x2 - box.lo.x2) * j / m,
                    box.lo.x3 + (box.hi.x3 - box.lo.x3) * k / m};
                const Vec2 f = F.eval(x);
                r.lo1 = std::min(r.lo1, f[0]);
                r.hi1 = std::max(r.hi1, f[0]);
                r.lo2 = std::min(r.lo2, f[1]);
                r.hi2 = std::max(r.hi2, f[1]);
            }
    const double w1 = r.hi1 - r.lo1, w2 = r.hi2 - r.lo2;
    r.lo1 -= 0.5 * margin * w1;
    r.hi1 += 0.5 * margin * w1;
    r.lo2 -= 0.5 * margin * w2;
    r.hi2 += 0.5 * margin * w2;
    return r;
}

struct McOutcome {
    double integral = 0.0;
    double std_error = 0.0;
    std::uint64_t skipped = 0;
};

// Stratified Monte-Carlo of the per-level weight integral over the rectangle.
// Deterministic under seed regardless of thread count: sample i always uses
// derive_seed(seed, i) and results reduce in index order.
McOutcome mc_levels(const FieldModel& F, const Rect& rect, std::uint64_t z_samples,
                    const std::function<double(const HPoint&)>& weight,
                    const Box& region, const SolverConfig& cfg,
                    const MetricConfig& metric, const CoareaOptions& opt,
                    std::vector<std::array<double, 3>>* slices) {
    const std::uint64_t n = z_samples;
    const std::uint64_t kx = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))));
    const std::uint64_t ky = std::max<std::uint64_t>(1, n / kx);
    const std::uint64_t strat = kx * ky;

    std::vector<double> contrib(n, 0.0);
    std::vector<std::array<double, 2>> zs(n);
    std::vector<char> failed(n, 0);

    auto work = [&](std::uint64_t begin, std::uint64_t stride) {
        for (std::uint64_t i = begin; i < n; i += stride) {
            std::uint64_t s = derive_seed(opt.seed, i);
            std::mt19937_64 gen(s);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            double z1, z2;
            if (i < strat) {
                const std::uint64_t ix = i % kx;
                const std::uint64_t iy = i / kx;
                z1 = rect.lo1 + (ix + u(gen)) / kx * (rect.hi1 - rect.lo1);
                z2 = rect.lo2 + (iy + u(gen)) / ky * (rect.hi2 - rect.lo2);
            } else {
                z1 = rect.lo1 + u(gen) * (rect.hi1 - rect.lo1);
                z2 = rect.lo2 + u(gen) * (rect.hi2 - rect.lo2);
            }
            zs[i] = {z1, z2};
            const LevelResult res = level_curve_integral(
                F, {z1, z2}, weight, region, cfg, metric, opt, derive_seed(s, 1));
            if (res.ok)
                contrib[i] = res.value;
            else
                failed[i] = 1;
        }
    };

    int threads = opt.threads > 0
                      ? opt.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<std::uint64_t>(threads, n));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, static_cast<std::uint64_t>(t),
                              static_cast<std::uint64_t>(threads));
        for (auto& th : pool) th.join();
    }

    McOutcome out;
    double mean = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        mean += contrib[i];
        out.skipped += failed[i];
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::uint64_t i = 0; i < n; ++i)
        var += (contrib[i] - mean) * (contrib[i] - mean);
    if (n > 1) var /= static_cast<double>(n) * static_cast<double>(n - 1);
    out.integral = rect.area() * mean;
    out.std_error = rect.area() * std::sqrt(var);
    if (slices) {
        slices->resize(n);
        for (std::uint64_t i = 0; i < n; ++i)
            (*slices)[i] = {zs[i][0], zs[i][1], contrib[i]};
    }
    return out;
}

}  // namespace

MeasureReport coarea_check(const FieldModel& F, const Box& box,
                           const SolverConfig& cfg, const MetricConfig& metric,
                           const CoareaOptions& opt) {
    MeasureReport rep;
    rep.samples = opt.z_samples;
    rep.seed = opt.seed;

    std::vector<double> gn, gw;
    gauss_legendre(opt.quadrature, gn, gw);
    const double sx = 0.5 * (box.hi.x1 - box.lo.x1), cx = 0.5 * (box.hi.x1 + box.lo.x1);
    const double sy = 0.5 * (box.hi.x2 - box.lo.x2), cy = 0.5 * (box.hi.x2 + box.lo.x2);
    const double sz = 0.5 * (box.hi.x3 - box.lo.x3), cz = 0.5 * (box.hi.x3 + box.lo.x3);
    double lhs = 0.0;
    for (int i = 0; i < opt.quadrature; ++i)
        for (int j = 0; j < opt.quadrature; ++j) {
            double inner = 0.0;
            for (int k = 0; k < opt.quadrature; ++k)
                inner += gw[k] * jacobian_h(F, {cx + sx * gn[i], cy + sy * gn[j],
                                                cz + sz * gn[k]});
            lhs += gw[i] * gw[j] * inner;
        }
    lhs *= sx * sy * sz;
    rep.lhs = lhs;

    const Rect rect = bounding_rect(F, box);
    auto weight = [&box](const HPoint& x) { return box.contains(x) ? 1.0 : 0.0; };
    const McOutcome mc = mc_levels(F, rect, opt.z_samples, weight, box, cfg,
                                   metric, opt, opt.slices);
    rep.rhs = mc.integral;
    rep.std_error = mc.std_error;
    rep.skipped = mc.skipped;
    rep.rel_error = std::abs(rep.lhs - rep.rhs) /
                    std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-12});
    return rep;
}

double functional_density_probe(const FieldModel& F, double eps, double r,
                                std::uint64_t z_samples, const SolverConfig& cfg,
                                const MetricConfig& metric, std::uint64_t seed) {
    const double R = r * eps;  // support radius of u(dilate(1/r, .))
    const double v_cap = R * R / std::sqrt(metric.lambda);
    const Box support{{-R, -R, -v_cap}, {R, R, v_cap}};
    // Normalization: integral over H of (eps - N)^+ equals eps^5 pi^2 / (10 sqrt(lambda)).
    const double c = 10.0 * std::sqrt(metric.lambda) /
                     (std::numbers::pi * std::numbers::pi * std::pow(eps, 5.0));
    auto weight = [&](const HPoint& x) {
        const double nx = hnorm(metric, x) / r;
        return nx < eps ? c * (eps - nx) : 0.0;
    };
    SolverConfig local = cfg;
    local.delta = std::max(2.0 * v_cap, 1e-8);
    CoareaOptions opt;
    opt.seed = seed;
    opt.z_samples = z_samples;
    const Rect rect = bounding_rect(F, support);
    const McOutcome mc = mc_levels(F, rect, z_samples, weight, support, local,
                                   metric, opt, nullptr);
    return mc.integral / (r * r * r * r);
}

}  // namespace heis
