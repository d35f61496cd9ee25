#include "heis/sewing.hpp"

#include <cmath>
#include <stdexcept>

namespace heis {

namespace {

void check_grid(const std::vector<double>& t, std::size_t min_nodes) {
    if (t.size() < min_nodes) throw std::invalid_argument("grid: too few nodes");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw std::invalid_argument("grid: not strictly increasing");
}

}  // namespace

double sewing_kappa(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("sewing_kappa: alpha > 0 required");
    return 1.0 / (1.0 - std::pow(2.0, -alpha));
}

double holder_norm(const SampledFunction& f, double beta) {
    check_grid(f.times, 2);
    if (f.values.size() != f.times.size())
        throw std::invalid_argument("holder_norm: values/times size mismatch");
    double best = 0.0;
    const std::size_t n = f.times.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double num = std::abs(f.values[j] - f.values[i]);
            const double den = std::pow(f.times[j] - f.times[i], beta);
            best = std::max(best, num / den);
        }
    return best;
}

double germ_norm(const Germ& A, const std::vector<double>& grid,
                 std::size_t full_scan_limit) {
    check_grid(grid, 3);
    const std::size_t n = grid.size();
    const double expo = 1.0 + A.holder_exponent;
    double best = 0.0;
    auto defect = [&](std::size_t i, std::size_t k, std::size_t j) {
        const double d = A.eval(grid[i], grid[j]) - A.eval(grid[i], grid[k]) -
                         A.eval(grid[k], grid[j]);
        return std::abs(d) / std::pow(grid[j] - grid[i], expo);
    };
    if (n <= full_scan_limit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k)
                for (std::size_t j = k + 1; j < n; ++j)
                    best = std::max(best, defect(i, k, j));
    } else {
        for (std::size_t span = 2; span < n; span *= 2)
            for (std::size_t i = 0; i + span < n; ++i)
                best = std::max(best, defect(i, i + span / 2, i + span));
    }
    return best;
}

SewingResult sew(const Germ& A, const std::vector<double>& grid, double f0,
                 std::size_t anchor_index) {
    check_grid(grid, 2);
    const std::size_t n = grid.size();
    if (anchor_index >= n) throw std::invalid_argument("sew: anchor out of range");
    SewingResult out;
    out.path.times = grid;
    out.path.values.assign(n, 0.0);
    out.path.values[anchor_index] = f0;
    for (std::size_t j = anchor_index + 1; j < n; ++j)
        out.path.values[j] = out.path.values[j - 1] + A.eval(grid[j - 1], grid[j]);
    for (std::size_t j = anchor_index; j-- > 0;)
        out.path.values[j] = out.path.values[j + 1] - A.eval(grid[j], grid[j + 1]);
    if (n >= 3) out.germ_norm_estimate = germ_norm(A, grid);
    out.kappa = sewing_kappa(A.holder_exponent);
    out.defect_bound = out.kappa * out.germ_norm_estimate;
    return out;
}

SampledFunction young_integral(const SampledFunction& g1, const SampledFunction& g2) {
    if (g1.times != g2.times) throw std::invalid_argument("young_integral: grids differ");
    check_grid(g1.times, 2);
    const std::size_t n = g1.times.size();
    SampledFunction f;
    f.times = g1.times;
    f.values.assign(n, 0.0);
    // Symmetric germ (g1(s)+g1(t))/2 (g2(t)-g2(s)): same sewing limit as the
    // left-endpoint germ, but second-order accurate on smooth pairs.
    for (std::size_t j = 1; j < n; ++j)
        f.values[j] = f.values[j - 1] + 0.5 * (g1.values[j - 1] + g1.values[j]) *
                                            (g2.values[j] - g2.values[j - 1]);
    return f;
}

}  // namespace heis
