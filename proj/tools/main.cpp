// ptlattice command-line front end: spectra, phase diagrams, scaling fits,
// breaking staircases, and wavepacket evolution, all emitted as CSV (plus
// PGM heatmaps). Every run writes a manifest that can be replayed through
// --config to reproduce the outputs byte for byte.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <thread>

#include "ptlattice/dynamics.hpp"
#include "ptlattice/errors.hpp"
#include "ptlattice/io.hpp"
#include "ptlattice/phase.hpp"
#include "ptlattice/spectrum.hpp"

namespace fs = std::filesystem;
using namespace ptlattice;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitPartial = 3;

struct CommonOptions {
    int n = 0;
    double alpha = 0.0;
    double t0 = 1.0;
    int m0 = 0;
    double mu = -1.0;
    std::string position;  // "closest" or "farthest"
    double gamma = -1.0;
    double gamma_over_delta = -1.0;
};

void add_lattice_flags(CLI::App* cmd, CommonOptions& opt, bool with_gamma) {
    cmd->add_option("--n", opt.n, "number of lattice sites (N >= 2)")->required();
    cmd->add_option("--alpha", opt.alpha, "hopping exponent (>= 0)")->required();
    cmd->add_option("--t0", opt.t0, "hopping energy scale")->default_val(1.0);

    auto* m0 = cmd->add_option("--m0", opt.m0, "first impurity site (1-based)");
    auto* mu = cmd->add_option("--mu", opt.mu, "fractional impurity position m0/N");
    auto* pos = cmd->add_option("--position", opt.position,
                                "impurity position keyword: closest | farthest")
                    ->check(CLI::IsMember({"closest", "farthest"}));
    m0->excludes(mu)->excludes(pos);
    mu->excludes(pos);

    if (with_gamma) {
        auto* g = cmd->add_option("--gamma", opt.gamma, "impurity strength (energy units)");
        auto* gs = cmd->add_option("--gamma-over-delta", opt.gamma_over_delta,
                                   "impurity strength in units of the quarter-bandwidth");
        g->excludes(gs);
    }
}

int resolve_m0(const CommonOptions& opt) {
    int count = (opt.m0 > 0) + (opt.mu >= 0.0) + !opt.position.empty();
    if (count != 1)
        throw CLI::ValidationError(
            "exactly one of --m0 / --mu / --position must be given");
    if (opt.m0 > 0) return opt.m0;
    if (opt.mu >= 0.0) return m0_from_mu(opt.mu, opt.n);
    return opt.position == "closest" ? closest_m0(opt.n) : 1;
}

double resolve_gamma(const CommonOptions& opt, const Bandwidth& bw) {
    if ((opt.gamma >= 0.0) == (opt.gamma_over_delta >= 0.0))
        throw CLI::ValidationError(
            "exactly one of --gamma / --gamma-over-delta must be given");
    return opt.gamma >= 0.0 ? opt.gamma : opt.gamma_over_delta * bw.delta;
}

LatticeSpec resolve_spec(const CommonOptions& opt, bool with_gamma) {
    LatticeSpec spec{opt.n, opt.alpha, opt.t0, resolve_m0(opt), 0.0};
    if (with_gamma)
        spec.gamma = resolve_gamma(opt, clean_bandwidth(opt.n, opt.alpha, opt.t0));
    spec.validate();
    return spec;
}

std::vector<double> sample_times(double horizon_t_alpha, int samples, double t_alpha) {
    if (samples < 2) throw CLI::ValidationError("--samples must be >= 2");
    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i)
        times[i] = horizon_t_alpha * t_alpha * i / (samples - 1);
    return times;
}

struct HeatmapFlags {
    bool emit = false;
    std::string rows = "sites";
    bool log_scale = false;
    double clamp_min = std::numeric_limits<double>::quiet_NaN();
    double clamp_max = std::numeric_limits<double>::quiet_NaN();
};

void add_heatmap_flags(CLI::App* cmd, HeatmapFlags& flags) {
    cmd->add_flag("--heatmap", flags.emit, "also emit a PGM heatmap of the trace");
    cmd->add_option("--rows", flags.rows, "heatmap row axis: sites | time")
        ->check(CLI::IsMember({"sites", "time"}))
        ->default_val("sites");
    cmd->add_flag("--log-scale", flags.log_scale, "log10 color scaling");
    cmd->add_option("--clamp-min", flags.clamp_min, "fixed lower color-range bound");
    cmd->add_option("--clamp-max", flags.clamp_max, "fixed upper color-range bound");
}

void emit_heatmap(const IntensityTrace& trace, const HeatmapFlags& flags,
                  const fs::path& path) {
    HeatmapOptions opts;
    opts.rows = flags.rows == "time" ? HeatmapRows::Time : HeatmapRows::Sites;
    opts.log_scale = flags.log_scale;
    opts.clamp_min = flags.clamp_min;
    opts.clamp_max = flags.clamp_max;
    atomic_write(path, heatmap_pgm(trace, opts));
}

// Flat key=value dump of the main app plus the active subcommand, readable
// back through --config (subcommands are marked configurable). Passed values
// are recorded as given; unpassed options fall back to their default string.
std::string manifest_for(const CLI::App& app, const CLI::App* sub) {
    std::ostringstream out;
    auto dump = [&out](const CLI::App* a) {
        for (const CLI::Option* o : a->get_options()) {
            if (o->get_lnames().empty()) continue;
            const std::string name = o->get_lnames().front();
            if (name == "config" || name == "help") continue;
            if (o->count() > 0) {
                if (o->get_expected_min() == 0) {  // flag
                    out << name << "=true\n";
                    continue;
                }
                out << name << '=';
                const auto& results = o->results();
                for (std::size_t i = 0; i < results.size(); ++i)
                    out << (i ? "," : "") << results[i];
                out << '\n';
            } else if (!o->get_default_str().empty()) {
                out << name << '=' << o->get_default_str() << '\n';
            }
        }
    };
    dump(&app);
    if (sub) {
        out << '[' << sub->get_name() << "]\n";
        dump(sub);
    }
    return out.str();
}

std::string alpha_tag(double alpha) {
    std::string tag = format_double(alpha);
    for (char& ch : tag)
        if (ch == '.' || ch == '-') ch = '_';
    return tag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PT-symmetric non-uniform lattice toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");
    app.allow_config_extras(false);

    std::string out_dir = ".";
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    bool keep_going = false;
    double tol_gamma_rel = 1e-6;
    double class_rel_tol = 1e-8;
    app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    app.add_option("--workers", workers, "worker pool size for sweeps")
        ->capture_default_str();
    app.add_flag("--keep-going", keep_going,
                 "continue a sweep past per-point failures (exit 3 on partial results)");
    app.add_option("--tol-gamma-rel", tol_gamma_rel,
                   "bisection tolerance on gamma, relative to the quarter-bandwidth")
        ->capture_default_str();
    app.add_option("--class-rel-tol", class_rel_tol,
                   "complex-classification tolerance relative to the half-bandwidth")
        ->capture_default_str();

    // --- spectrum ---
    auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues and classification");
    CommonOptions spectrum_opt;
    bool emit_matrix = false;
    add_lattice_flags(cmd_spectrum, spectrum_opt, true);
    cmd_spectrum->add_flag("--emit-matrix", emit_matrix,
                           "also write the Hamiltonian as row,col,re,im CSV");

    // --- phase-diagram ---
    auto* cmd_phase = app.add_subcommand("phase-diagram",
                                         "gamma_PT(mu) curve, one CSV per alpha");
    int phase_n = 0;
    double phase_t0 = 1.0;
    std::vector<double> phase_alphas;
    std::vector<int> phase_m0s;
    cmd_phase->add_option("--n", phase_n, "number of lattice sites")->required();
    cmd_phase->add_option("--alpha", phase_alphas, "hopping exponent(s)")
        ->required()
        ->delimiter(',');
    cmd_phase->add_option("--t0", phase_t0, "hopping energy scale")->default_val(1.0);
    cmd_phase->add_option("--m0-list", phase_m0s,
                          "impurity sites to sweep (default: 1..N/2)")
        ->delimiter(',');

    // --- scaling ---
    auto* cmd_scaling = app.add_subcommand("scaling", "finite-size scaling fit");
    std::vector<int> scaling_ns;
    double scaling_alpha = 0.0, scaling_mu = 0.25, scaling_t0 = 1.0;
    std::string scaling_mode = "farthest";
    cmd_scaling->add_option("--n-list", scaling_ns, "lattice sizes (>= 5 values, each >= 20)")
        ->required()
        ->delimiter(',');
    cmd_scaling->add_option("--alpha", scaling_alpha, "hopping exponent")->required();
    cmd_scaling->add_option("--mode", scaling_mode,
                            "impurity placement: farthest | fixed-mu | closest")
        ->check(CLI::IsMember({"farthest", "fixed-mu", "closest"}))
        ->default_val("farthest");
    cmd_scaling->add_option("--mu", scaling_mu, "fractional position for fixed-mu mode")
        ->default_val(0.25);
    cmd_scaling->add_option("--t0", scaling_t0, "hopping energy scale")->default_val(1.0);

    // --- staircase ---
    auto* cmd_stair = app.add_subcommand("staircase",
                                         "complex-eigenvalue count vs impurity strength");
    CommonOptions stair_opt;
    double stair_gamma_max = -1.0;
    int stair_points = 400;
    add_lattice_flags(cmd_stair, stair_opt, false);
    cmd_stair->add_option("--gamma-max-over-delta", stair_gamma_max,
                          "grid upper end (default: 2 * gamma_PT)");
    cmd_stair->add_option("--grid-points", stair_points, "base grid size")
        ->default_val(400);

    // --- evolve ---
    auto* cmd_evolve = app.add_subcommand("evolve", "static wavepacket evolution");
    CommonOptions evolve_opt;
    int evolve_init_site = 1, evolve_samples = 600;
    double evolve_horizon = 50.0;
    HeatmapFlags evolve_heatmap;
    add_lattice_flags(cmd_evolve, evolve_opt, true);
    cmd_evolve->add_option("--init-site", evolve_init_site, "initially occupied site")
        ->default_val(1);
    cmd_evolve->add_option("--horizon", evolve_horizon, "time horizon in units of T_alpha")
        ->default_val(50.0);
    cmd_evolve->add_option("--samples", evolve_samples, "number of time samples")
        ->default_val(600);
    add_heatmap_flags(cmd_evolve, evolve_heatmap);

    // --- evolve-ramp ---
    auto* cmd_ramp = app.add_subcommand("evolve-ramp",
                                        "evolution under the time-dependent gain ramp");
    CommonOptions ramp_opt;
    double ramp_gamma_l = -1.0, ramp_gamma_l_scaled = -1.0, ramp_tau = 5.0;
    double ramp_step = 0.0, ramp_horizon = 50.0;
    int ramp_init_site = 0, ramp_samples = 600;
    HeatmapFlags ramp_heatmap;
    add_lattice_flags(cmd_ramp, ramp_opt, false);
    auto* gl = cmd_ramp->add_option("--gamma-l", ramp_gamma_l,
                                    "loss strength (energy units)");
    auto* gls = cmd_ramp->add_option("--gamma-l-over-delta", ramp_gamma_l_scaled,
                                     "loss strength in units of the quarter-bandwidth");
    gl->excludes(gls);
    cmd_ramp->add_option("--tau-over-t", ramp_tau, "ramp time constant in units of T_alpha")
        ->default_val(5.0);
    cmd_ramp->add_option("--init-site", ramp_init_site,
                         "initially occupied site (default: the gain site m0)");
    cmd_ramp->add_option("--horizon", ramp_horizon, "time horizon in units of T_alpha")
        ->default_val(50.0);
    cmd_ramp->add_option("--samples", ramp_samples, "number of time samples")
        ->default_val(600);
    cmd_ramp->add_option("--step", ramp_step,
                         "integrator sub-step bound in units of T_alpha (0 = default)")
        ->default_val(0.0);
    add_heatmap_flags(cmd_ramp, ramp_heatmap);

    for (CLI::App* sub : app.get_subcommands({})) sub->configurable();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // help/version exit clean
    }

    try {
        fs::create_directories(out_dir);
        const fs::path out(out_dir);

        // The manifest holds every option in the same key=value format the
        // --config reader accepts; replaying it reproduces the run.
        const CLI::App* active =
            app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
        atomic_write(out / "manifest.txt", manifest_for(app, active));

        if (workers < 1) workers = 1;
        bool partial = false;

        if (cmd_spectrum->parsed()) {
            const LatticeSpec spec = resolve_spec(spectrum_opt, true);
            const Bandwidth bw = clean_bandwidth(spec.n_sites, spec.alpha, spec.t0);
            const ComplexMatrix h = build_hamiltonian(spec);
            const SpectrumReport report = classify(spectrum(h), bw, class_rel_tol);
            atomic_write(out / "spectrum.csv", spectrum_csv(spec, bw, report));
            if (emit_matrix) {
                std::ostringstream buf;
                write_matrix_csv(buf, h);
                atomic_write(out / "matrix.csv", buf.str());
            }
        } else if (cmd_phase->parsed()) {
            if (phase_m0s.empty())
                for (int m0 = 1; m0 <= phase_n / 2; ++m0) phase_m0s.push_back(m0);
            for (double alpha : phase_alphas) {
                const double tol =
                    tol_gamma_rel * clean_bandwidth(phase_n, alpha, phase_t0).delta;
                const PhaseCurve curve =
                    phase_diagram(phase_n, alpha, phase_m0s, phase_t0, tol, workers);
                if (!curve.failures.empty()) {
                    for (const auto& [m0, msg] : curve.failures)
                        std::cerr << "phase-diagram: m0=" << m0 << " failed: " << msg
                                  << '\n';
                    if (!keep_going) return kExitNumerical;
                    partial = true;
                }
                atomic_write(out / ("phase_alpha" + alpha_tag(alpha) + ".csv"),
                             phase_curve_csv(curve));
            }
        } else if (cmd_scaling->parsed()) {
            const MuMode mode = scaling_mode == "farthest" ? MuMode::Farthest
                                : scaling_mode == "closest" ? MuMode::Closest
                                                            : MuMode::FixedMu;
            const ScalingFit fit = scaling_fit(scaling_ns, scaling_alpha, mode,
                                               scaling_mu, scaling_t0, 0.0, workers);
            atomic_write(out / ("scaling_" + scaling_mode + ".csv"), scaling_csv(fit));
        } else if (cmd_stair->parsed()) {
            const int n = stair_opt.n;
            const int m0 = resolve_m0(stair_opt);
            const Bandwidth bw = clean_bandwidth(n, stair_opt.alpha, stair_opt.t0);
            double gamma_max = stair_gamma_max * bw.delta;
            if (stair_gamma_max <= 0.0)
                gamma_max =
                    2.0 * critical_gamma(n, m0, stair_opt.alpha, stair_opt.t0).gamma_pt;
            const auto grid = staircase_grid(n, m0, stair_opt.alpha, stair_opt.t0,
                                             gamma_max, stair_points);
            atomic_write(out / "staircase.csv",
                         staircase_csv(breaking_staircase(n, m0, stair_opt.alpha,
                                                          stair_opt.t0, grid)));
        } else if (cmd_evolve->parsed()) {
            const LatticeSpec spec = resolve_spec(evolve_opt, true);
            const double t_alpha =
                clean_bandwidth(spec.n_sites, spec.alpha, spec.t0).t_alpha_unit;
            const auto trace = evolve_static(
                spec, localized_state(evolve_init_site, spec.n_sites),
                sample_times(evolve_horizon, evolve_samples, t_alpha));
            atomic_write(out / "trace.csv", trace_csv(trace));
            if (evolve_heatmap.emit) emit_heatmap(trace, evolve_heatmap, out / "trace.pgm");
        } else if (cmd_ramp->parsed()) {
            LatticeSpec spec = resolve_spec(ramp_opt, false);
            const Bandwidth bw = clean_bandwidth(spec.n_sites, spec.alpha, spec.t0);
            if ((ramp_gamma_l >= 0.0) == (ramp_gamma_l_scaled >= 0.0))
                throw CLI::ValidationError(
                    "exactly one of --gamma-l / --gamma-l-over-delta must be given");
            GainRamp ramp;
            ramp.gamma_l =
                ramp_gamma_l >= 0.0 ? ramp_gamma_l : ramp_gamma_l_scaled * bw.delta;
            ramp.tau = ramp_tau * bw.t_alpha_unit;
            const int init_site = ramp_init_site > 0 ? ramp_init_site : spec.m0;
            const auto trace = evolve_ramp(
                spec, ramp, localized_state(init_site, spec.n_sites),
                sample_times(ramp_horizon, ramp_samples, bw.t_alpha_unit),
                ramp_step * bw.t_alpha_unit);
            atomic_write(out / "trace.csv", trace_csv(trace));
            if (ramp_heatmap.emit) emit_heatmap(trace, ramp_heatmap, out / "trace.pgm");
        }

        return partial ? kExitPartial : kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
