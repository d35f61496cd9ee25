#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Hoelder norms, two-parameter germs, the sewing-lemma integrator and Young
// integrals on sampled grids. Pure functions; germ evaluators must be
// side-effect-free.

namespace heis {

struct SampledFunction {
    std::vector<double> times;   // strictly increasing, >= 2 nodes
    std::vector<double> values;  // one value per node
};

struct Germ {
    std::function<double(double, double)> eval;  // A(s,t), A(t,t) = 0
    double holder_exponent = 1.0;                // alpha in (0,1]
};

struct SewingResult {
    SampledFunction path;
    double germ_norm_estimate = 0.0;  // ||A|| over grid triples
    double kappa = 0.0;               // (1 - 2^-alpha)^-1
    double defect_bound = 0.0;        // kappa * ||A||
};

// Discrete Hoelder norm: max over node pairs of |f_t - f_s| / |t-s|^beta.
double holder_norm(const SampledFunction& f, double beta);

// Germ norm: max over grid triples s <= u <= t of
// |A(s,t) - A(s,u) - A(u,t)| / |t-s|^(1+alpha). The full triple scan is
// cubic; grids beyond `full_scan_limit` nodes use midpoint triples over
// dyadically separated pairs, which are exactly the triples the sewing
// defect bound consumes.
double germ_norm(const Germ& A, const std::vector<double>& grid,
                 std::size_t full_scan_limit = 400);

// Compound sum of the germ along the grid from the anchor value f0 at
// `anchor_index`, summing outward in both directions. Germ-norm estimate and
// the resulting defect bound kappa*||A|| are reported alongside.
SewingResult sew(const Germ& A, const std::vector<double>& grid, double f0,
                 std::size_t anchor_index = 0);

// Young integral: sew of the germ g1_s * (g2_t - g2_s) on the shared grid,
// anchored at 0 at the first node.
SampledFunction young_integral(const SampledFunction& g1, const SampledFunction& g2);

double sewing_kappa(double alpha);

}  // namespace heis
