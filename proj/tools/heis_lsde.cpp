// Command-line front end: runs traces, verification campaigns, and the
// measure-theoretic experiments from a single JSON config. Every run writes
// one output directory with a config echo, the result files, and a manifest
// of SHA-256 hashes. Identical config + seed reproduce byte-identical
// outputs except for the manifest timestamp.
//
// Exit codes: 0 success, 2 computation failure (non-convergence, degenerate
// data, failed checks), 3 invalid config or unreadable input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "heis/field.hpp"
#include "heis/hgroup.hpp"
#include "heis/lsde.hpp"
#include "heis/measure.hpp"
#include "heis/rng.hpp"
#include "heis/serialize.hpp"
#include "heis/sha256.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace heis;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- validation

void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
}

void expect_keys(const json& obj, const std::string& where,
                 const std::set<std::string>& allowed) {
    expect_object(obj, where);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
    }
}

double get_num(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number())
        throw ConfigError("\"" + key + "\" must be a number");
    return obj.at(key).get<double>();
}

std::int64_t get_int(const json& obj, const std::string& key, std::int64_t fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer())
        throw ConfigError("\"" + key + "\" must be an integer");
    return obj.at(key).get<std::int64_t>();
}

std::string get_str(const json& obj, const std::string& key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_string())
        throw ConfigError("\"" + key + "\" must be a string");
    return obj.at(key).get<std::string>();
}

HPoint parse_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number())
        throw ConfigError(where + " must be an array of 3 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<double> parse_numbers(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ConfigError(where + " must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigError(where + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

void validate_config(const json& cfg) {
    expect_keys(cfg, "config",
                {"experiment", "seed", "output_dir", "metric", "field", "solver",
                 "p", "q", "verify", "area", "coarea", "beta", "blowup"});
    if (cfg.contains("metric"))
        expect_keys(cfg.at("metric"), "metric", {"name", "lambda"});
    if (cfg.contains("field"))
        expect_keys(cfg.at("field"), "field",
                    {"name", "alpha", "coeff", "matrix", "gradient_mode", "fd_step"});
    if (cfg.contains("solver"))
        expect_keys(cfg.at("solver"), "solver",
                    {"delta", "grid_levels", "tol", "max_iter", "damping",
                     "halving_retries"});
    if (cfg.contains("verify"))
        expect_keys(cfg.at("verify"), "verify",
                    {"trace_csv", "eps", "samples", "level_tol", "residual_tol",
                     "drift_tol", "fine_levels"});
    if (cfg.contains("area")) {
        expect_keys(cfg.at("area"), "area", {"box_lo", "box_hi", "federer"});
        if (cfg.at("area").contains("federer"))
            expect_keys(cfg.at("area").at("federer"), "area.federer",
                        {"radii", "center_samples", "beta_resolution"});
    }
    if (cfg.contains("coarea"))
        expect_keys(cfg.at("coarea"), "coarea",
                    {"box_lo", "box_hi", "z_samples", "quadrature", "threads",
                     "max_segments"});
    if (cfg.contains("beta"))
        expect_keys(cfg.at("beta"), "beta", {"resolution", "c_equiv_samples"});
    if (cfg.contains("blowup"))
        expect_keys(cfg.at("blowup"), "blowup", {"radii", "samples", "ball_radius"});
}

// ------------------------------------------------------------------ builders

MetricConfig parse_metric(const json& cfg) {
    MetricConfig m;
    if (!cfg.contains("metric")) return m;
    const json& mj = cfg.at("metric");
    const std::string name = get_str(mj, "name", "koranyi");
    if (name != "koranyi")
        throw ConfigError("unknown metric name \"" + name + "\"");
    m.lambda = get_num(mj, "lambda", m.lambda);
    if (!(m.lambda > 0.0)) throw ConfigError("metric.lambda must be positive");
    return m;
}

FieldModel parse_field(const json& cfg) {
    if (!cfg.contains("field")) throw ConfigError("missing \"field\" section");
    const json& fj = cfg.at("field");
    if (!fj.contains("name")) throw ConfigError("missing \"field.name\"");
    const std::string name = get_str(fj, "name", "");
    const double alpha = get_num(fj, "alpha", 0.5);
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ConfigError("field.alpha must lie in (0, 1]");

    FieldModel F;
    if (name == "projection") {
        F = projection_field(alpha);
    } else if (name == "shear") {
        F = shear_field(alpha);
    } else if (name == "shear_coeff") {
        if (!fj.contains("coeff"))
            throw ConfigError("field \"shear_coeff\" requires \"coeff\"");
        F = shear_field_coeff(get_num(fj, "coeff", 1.0), alpha);
    } else if (name == "linear") {
        if (!fj.contains("matrix"))
            throw ConfigError("field \"linear\" requires \"matrix\"");
        const auto m = parse_numbers(fj.at("matrix"), "field.matrix");
        if (m.size() != 4)
            throw ConfigError("field.matrix must have 4 entries (row-major 2x2)");
        F = linear_field({m[0], m[1], m[2], m[3]}, alpha);
    } else {
        throw ConfigError("unknown field name \"" + name + "\"");
    }

    const std::string mode = get_str(fj, "gradient_mode", "analytic");
    if (mode == "finite_difference") {
        F.gradient_mode = GradientMode::finite_difference;
    } else if (mode != "analytic") {
        throw ConfigError("field.gradient_mode must be \"analytic\" or \"finite_difference\"");
    }
    F.fd_step = get_num(fj, "fd_step", F.fd_step);
    return F;
}

SolverConfig parse_solver(const json& cfg) {
    SolverConfig s;
    if (!cfg.contains("solver")) return s;
    const json& sj = cfg.at("solver");
    s.delta = get_num(sj, "delta", s.delta);
    s.grid_levels = static_cast<int>(get_int(sj, "grid_levels", s.grid_levels));
    s.tol = get_num(sj, "tol", s.tol);
    s.max_iter = static_cast<int>(get_int(sj, "max_iter", s.max_iter));
    s.damping = get_num(sj, "damping", s.damping);
    s.halving_retries = static_cast<int>(get_int(sj, "halving_retries", s.halving_retries));
    if (!(s.delta > 0.0)) throw ConfigError("solver.delta must be positive");
    if (s.grid_levels < 4 || s.grid_levels > 24)
        throw ConfigError("solver.grid_levels must lie in [4, 24]");
    if (!(s.damping > 0.0 && s.damping <= 1.0))
        throw ConfigError("solver.damping must lie in (0, 1]");
    return s;
}

HPoint require_point(const json& cfg, const std::string& key) {
    if (!cfg.contains(key)) throw ConfigError("missing \"" + key + "\"");
    return parse_point(cfg.at(key), key);
}

Box parse_box(const json& section, const std::string& where) {
    if (!section.contains("box_lo") || !section.contains("box_hi"))
        throw ConfigError(where + " requires \"box_lo\" and \"box_hi\"");
    Box box{parse_point(section.at("box_lo"), where + ".box_lo"),
            parse_point(section.at("box_hi"), where + ".box_hi")};
    if (!(box.lo.x1 < box.hi.x1 && box.lo.x2 < box.hi.x2 && box.lo.x3 < box.hi.x3))
        throw ConfigError(where + " box must have positive extent");
    return box;
}

// ----------------------------------------------------------------- run dirs

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct RunDir {
    fs::path dir;
    std::vector<std::string> files;

    void write_json(const std::string& name, const json& j) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
        out << j.dump(2) << "\n";
        files.push_back(name);
    }

    void note(const std::string& name) { files.push_back(name); }

    void finish(const std::string& command, std::uint64_t seed) {
        json manifest;
        manifest["command"] = command;
        manifest["seed"] = seed;
        manifest["timestamp"] = utc_timestamp();
        json hashes;
        for (const auto& name : files)
            hashes[name] = sha256_file_hex((dir / name).string());
        manifest["files"] = hashes;
        std::ofstream out(dir / "manifest.json", std::ios::binary);
        out << manifest.dump(2) << "\n";
    }
};

RunDir open_run_dir(const json& cfg, const std::string& out_override,
                    const std::string& command, json& echo) {
    std::string dir = out_override;
    if (dir.empty()) dir = get_str(cfg, "output_dir", "");
    if (dir.empty()) dir = "heis-out/" + command;
    RunDir rd{fs::path(dir), {}};
    fs::create_directories(rd.dir);
    rd.write_json("config.json", echo);
    return rd;
}

json point_json(const HPoint& x) { return json::array({x.x1, x.x2, x.x3}); }

// ----------------------------------------------------------------- commands

int cmd_trace(const json& cfg, RunDir& rd) {
    const FieldModel F = parse_field(cfg);
    const SolverConfig solver = parse_solver(cfg);
    const HPoint p = require_point(cfg, "p");
    const HPoint q = require_point(cfg, "q");

    const Trace tr = solve(F, p, q, solver);
    write_trace_csv((rd.dir / "trace.csv").string(), tr);
    rd.note("trace.csv");

    json diag;
    diag["converged"] = tr.converged;
    diag["iterations"] = tr.iterations;
    diag["residual_h"] = tr.residual_h;
    diag["error_norm"] = tr.error_norm;
    diag["holder_h"] = tr.holder_h;
    diag["levelset_drift"] = tr.levelset_drift;
    diag["delta_used"] = tr.delta_used;
    diag["alpha"] = tr.alpha;
    diag["ill_conditioned"] = tr.ill_conditioned;
    diag["base_point"] = point_json(tr.base_point);
    diag["start"] = point_json(tr.start);
    rd.write_json("diagnostics.json", diag);

    const bool ok = tr.converged && tr.residual_h <= solver.tol &&
                    tr.levelset_drift <= 1e-8;
    if (!ok) std::cerr << "trace: validators failed\n";
    return ok ? 0 : 2;
}

int cmd_verify(const json& cfg, RunDir& rd, std::uint64_t seed) {
    const FieldModel F = parse_field(cfg);
    const MetricConfig metric = parse_metric(cfg);
    const SolverConfig solver = parse_solver(cfg);
    const HPoint p = require_point(cfg, "p");
    const json vj = cfg.contains("verify") ? cfg.at("verify") : json::object();

    const double residual_tol = get_num(vj, "residual_tol", 1e-8);
    const double drift_tol = get_num(vj, "drift_tol", 1e-8);
    const double eps = get_num(vj, "eps", 0.05);
    const auto samples = static_cast<std::uint64_t>(get_int(vj, "samples", 200));
    const double level_tol = get_num(vj, "level_tol", 1e-9);

    Trace tr;
    const bool from_csv = vj.contains("trace_csv");
    if (from_csv) {
        const std::string path = get_str(vj, "trace_csv", "");
        try {
            tr = read_trace_csv(path);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("cannot read trace: ") + e.what());
        }
        tr.base_point = p;
        tr.alpha = F.alpha;
    } else {
        const HPoint q = require_point(cfg, "q");
        tr = solve(F, p, q, solver);
    }

    const Residuals diag = residuals(F, tr);
    tr.residual_h = diag.residual_h;
    tr.error_norm = diag.error_norm;
    tr.levelset_drift = diag.levelset_drift;

    json checks;
    bool all = true;
    auto record = [&](const std::string& name, bool pass, json detail) {
        detail["pass"] = pass;
        checks[name] = detail;
        all = all && pass;
    };

    record("residual", diag.residual_h <= residual_tol,
           {{"residual_h", diag.residual_h}, {"error_norm", diag.error_norm},
            {"tol", residual_tol}});
    record("drift", diag.levelset_drift <= drift_tol,
           {{"value", diag.levelset_drift}, {"tol", drift_tol}});

    const double c = equivalence_constant(metric, 20000);
    const InjectivityReport inj = injectivity_check(tr, tr.alpha, metric, c);
    record("injectivity", inj.holds,
           {{"rho", inj.rho}, {"margin", inj.margin}, {"delta_max", inj.delta_max}});

    const ModulusReport mod = modulus_check(tr, tr.alpha, metric);
    json mod_detail{{"holder_h", mod.holder_h}, {"holder_d_half", mod.holder_d_half}};
    bool mod_pass = std::isfinite(mod.holder_h);
    try {
        const RadiiCertificate cert = admissible_radii(F, p, metric);
        mod_detail["rho0"] = cert.rho0;
        mod_pass = mod_pass && (!cert.valid() || mod.holder_h <= cert.rho0);
    } catch (const std::exception&) {
        // No certificate at p: the modulus is reported without a bound.
    }
    record("modulus", mod_pass, mod_detail);

    const SurjectivityReport sur =
        surjectivity_check(F, tr, metric, eps, samples, level_tol, seed ^ 0x53);
    const double mesh = tr.times.size() > 1 ? tr.times[1] - tr.times[0] : 1.0;
    const double gap_bound = 3.0 * std::sqrt(mesh);
    record("surjectivity", sur.max_gap <= gap_bound,
           {{"max_gap", sur.max_gap}, {"bound", gap_bound}, {"accepted", sur.accepted}});

    if (cfg.contains("q")) {
        const HPoint q = require_point(cfg, "q");
        SolverConfig fine = solver;
        fine.grid_levels = static_cast<int>(
            get_int(vj, "fine_levels", std::min(solver.grid_levels + 2, 14)));
        const double dist_fine = uniqueness_check(F, p, q, solver, fine, metric);
        const double bound = 10.0 * mesh;
        record("uniqueness", dist_fine <= bound,
               {{"distance", dist_fine}, {"bound", bound},
                {"fine_levels", fine.grid_levels}});
    }

    json report;
    report["checks"] = checks;
    report["all_pass"] = all;
    rd.write_json("verify.json", report);
    if (!all) std::cerr << "verify: checks failed\n";
    return all ? 0 : 2;
}

int cmd_area(const json& cfg, RunDir& rd, std::uint64_t seed) {
    const FieldModel F = parse_field(cfg);
    const MetricConfig metric = parse_metric(cfg);
    const SolverConfig solver = parse_solver(cfg);
    const HPoint p = require_point(cfg, "p");
    const HPoint q = require_point(cfg, "q");
    if (!cfg.contains("area")) throw ConfigError("missing \"area\" section");
    const json& aj = cfg.at("area");
    const Box box = parse_box(aj, "area");

    const Trace tr = solve(F, p, q, solver);
    const double mass = area_measure(tr, box);

    json report;
    report["box_lo"] = point_json(box.lo);
    report["box_hi"] = point_json(box.hi);
    report["box_mass"] = mass;
    report["delta_used"] = tr.delta_used;
    report["grid_nodes"] = tr.times.size();

    if (aj.contains("federer")) {
        const json& fj = aj.at("federer");
        std::vector<double> radii{0.1, 0.05, 0.02, 0.01};
        if (fj.contains("radii")) radii = parse_numbers(fj.at("radii"), "area.federer.radii");
        const auto centers =
            static_cast<std::uint64_t>(get_int(fj, "center_samples", 100));
        const auto beta_res =
            static_cast<std::uint64_t>(get_int(fj, "beta_resolution", 200000));
        const double beta = beta_d(metric, beta_res);
        const CurveMeasure cm{tr, {}};
        const double density =
            federer_density(cm, q, radii, centers, metric, beta, seed ^ 0xFE);
        json fd;
        fd["radii"] = radii;
        fd["center_samples"] = centers;
        fd["beta_d"] = beta;
        fd["density"] = density;
        report["federer"] = fd;
    }
    rd.write_json("area.json", report);
    return 0;
}

int cmd_coarea(const json& cfg, RunDir& rd, std::uint64_t seed) {
    const FieldModel F = parse_field(cfg);
    const MetricConfig metric = parse_metric(cfg);
    const SolverConfig solver = parse_solver(cfg);
    if (!cfg.contains("coarea")) throw ConfigError("missing \"coarea\" section");
    const json& cj = cfg.at("coarea");
    const Box box = parse_box(cj, "coarea");

    CoareaOptions opt;
    opt.z_samples = static_cast<std::uint64_t>(
        get_int(cj, "z_samples", static_cast<std::int64_t>(opt.z_samples)));
    opt.quadrature = static_cast<int>(get_int(cj, "quadrature", opt.quadrature));
    opt.threads = static_cast<int>(get_int(cj, "threads", opt.threads));
    opt.max_segments = static_cast<int>(get_int(cj, "max_segments", opt.max_segments));
    opt.seed = seed == 0 ? opt.seed : seed;
    std::vector<std::array<double, 3>> slices;
    opt.slices = &slices;

    const MeasureReport rep = coarea_check(F, box, solver, metric, opt);

    json report;
    report["lhs"] = rep.lhs;
    report["rhs"] = rep.rhs;
    report["rel_error"] = rep.rel_error;
    report["std_error"] = rep.std_error;
    report["samples"] = rep.samples;
    report["skipped"] = rep.skipped;
    report["seed"] = rep.seed;
    report["quadrature"] = opt.quadrature;
    rd.write_json("coarea.json", report);

    std::ofstream csv(rd.dir / "coarea_slices.csv", std::ios::binary);
    csv << "z1,z2,s2\n";
    for (const auto& s : slices)
        csv << format_double(s[0]) << "," << format_double(s[1]) << ","
            << format_double(s[2]) << "\n";
    csv.close();
    rd.note("coarea_slices.csv");
    return 0;
}

int cmd_beta(const json& cfg, RunDir& rd) {
    const MetricConfig metric = parse_metric(cfg);
    const json bj = cfg.contains("beta") ? cfg.at("beta") : json::object();
    const int resolution = static_cast<int>(get_int(bj, "resolution", 200001));
    const auto c_samples =
        static_cast<std::uint64_t>(get_int(bj, "c_equiv_samples", 20000));

    json report;
    report["lambda"] = metric.lambda;
    report["resolution"] = resolution;
    report["beta_d"] = beta_d(metric, resolution);
    report["c_equiv"] = equivalence_constant(metric, c_samples);
    rd.write_json("beta.json", report);
    return 0;
}

int cmd_blowup(const json& cfg, RunDir& rd, std::uint64_t seed) {
    const FieldModel F = parse_field(cfg);
    const MetricConfig metric = parse_metric(cfg);
    const HPoint p = require_point(cfg, "p");
    const json bj = cfg.contains("blowup") ? cfg.at("blowup") : json::object();
    std::vector<double> radii{1.0, 0.5, 0.25, 0.125};
    if (bj.contains("radii")) radii = parse_numbers(bj.at("radii"), "blowup.radii");
    const auto samples = static_cast<std::uint64_t>(get_int(bj, "samples", 2000));
    const double ball = get_num(bj, "ball_radius", 1.0);

    const Nondegeneracy nd = nondegeneracy(F, p);
    if (!nd.nondegenerate)
        throw DegeneratePoint("degenerate horizontal gradient at the blow-up point");
    const Mat2 M = grad_h(F, p);

    // One fixed sample set across all radii, so the deviation ratios are not
    // polluted by sampling noise.
    std::vector<HPoint> pts;
    std::uint64_t s = derive_seed(seed == 0 ? 0xB1u : seed, 0);
    const double vcap = ball * ball / std::sqrt(metric.lambda);
    while (pts.size() < samples) {
        const double u1 = 2.0 * (splitmix64(s) >> 11) * 0x1.0p-53 - 1.0;
        const double u2 = 2.0 * (splitmix64(s) >> 11) * 0x1.0p-53 - 1.0;
        const double u3 = 2.0 * (splitmix64(s) >> 11) * 0x1.0p-53 - 1.0;
        const HPoint w{ball * u1, ball * u2, vcap * u3};
        if (hnorm(metric, w) <= ball) pts.push_back(w);
    }

    std::vector<double> devs;
    for (const double r : radii) {
        const FieldModel Fr = blowup(F, p, r);
        double worst = 0.0;
        for (const auto& w : pts) {
            const Vec2 v = Fr.eval(w);
            const Vec2 lin = M.apply({w.x1, w.x2});
            worst = std::max(worst, std::hypot(v[0] - lin[0], v[1] - lin[1]));
        }
        devs.push_back(worst);
    }
    std::vector<double> ratios;
    for (std::size_t i = 0; i + 1 < devs.size(); ++i)
        ratios.push_back(devs[i + 1] > 0.0 ? devs[i] / devs[i + 1] : 0.0);

    json report;
    report["center"] = point_json(p);
    report["ball_radius"] = ball;
    report["samples"] = samples;
    report["radii"] = radii;
    report["deviations"] = devs;
    report["ratios"] = ratios;
    rd.write_json("blowup.json", report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-set curve solver and verification suite on the first "
                 "Heisenberg group"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    std::int64_t seed_override = -1;
    bool have_seed = false;

    const std::vector<std::string> names{"trace", "verify", "area",
                                         "coarea", "beta", "blowup"};
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_override, "output directory override");
        sub->add_option("--seed", seed_override, "seed override")
            ->each([&](const std::string&) { have_seed = true; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) throw ConfigError("cannot open config file " + config_path);
        json cfg;
        try {
            cfg = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        validate_config(cfg);

        const std::string declared = get_str(cfg, "experiment", command);
        if (declared != command)
            throw ConfigError("config declares experiment \"" + declared +
                              "\" but the \"" + command + "\" command was invoked");

        std::uint64_t seed = static_cast<std::uint64_t>(get_int(cfg, "seed", 0));
        if (have_seed) seed = static_cast<std::uint64_t>(seed_override);

        json echo = cfg;
        echo["seed"] = seed;
        RunDir rd = open_run_dir(cfg, out_override, command, echo);

        int rc = 0;
        if (command == "trace") rc = cmd_trace(cfg, rd);
        else if (command == "verify") rc = cmd_verify(cfg, rd, seed);
        else if (command == "area") rc = cmd_area(cfg, rd, seed);
        else if (command == "coarea") rc = cmd_coarea(cfg, rd, seed);
        else if (command == "beta") rc = cmd_beta(cfg, rd);
        else rc = cmd_blowup(cfg, rd, seed);

        rd.finish(command, seed);
        return rc;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const DegeneratePoint& e) {
        std::cerr << "degenerate point: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 2;
    } catch (const NoAdmissibleRadii& e) {
        std::cerr << "no admissible radii: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
