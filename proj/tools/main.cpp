// misfit-coarsen: simulation and analysis driver for coherent phase
// separation in binary alloys. Subcommands: kernel, sharp, evolve-ch,
// evolve-mc, analyze. See --help on each subcommand for the config keys.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "misfit/analysis.hpp"
#include "misfit/ch.hpp"
#include "misfit/config.hpp"
#include "misfit/errors.hpp"
#include "misfit/field_io.hpp"
#include "misfit/kernel.hpp"
#include "misfit/manifest.hpp"
#include "misfit/mc.hpp"
#include "misfit/sharp.hpp"
#include "misfit/spring.hpp"

namespace fs = std::filesystem;
using namespace misfit;

namespace {

int thread_count() {
    if (const char* env = std::getenv("MISFIT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

GridSpec grid_from_config(const Config& cfg) {
    const int dim = int(cfg.get_int("grid.dim", 2));
    const int nx = int(cfg.get_int("grid.nx"));
    const int ny = int(cfg.get_int("grid.ny", nx));
    const int nz = dim == 3 ? int(cfg.get_int("grid.nz", nx)) : 1;
    const double a = cfg.get_double("grid.a", 1.0);
    return GridSpec(dim, {nx, ny, nz}, a);
}

StiffnessTensor stiffness_from_config(const Config& cfg) {
    const std::string model = cfg.get_str("elastic.model");
    if (model == "isotropic")
        return stiffness_from_isotropic(
            IsotropicModuli(cfg.get_double("elastic.k"), cfg.get_double("elastic.g")));
    if (model == "cubic")
        return stiffness_from_cubic(CubicModuli(cfg.get_double("elastic.c11"),
                                                cfg.get_double("elastic.c12"),
                                                cfg.get_double("elastic.c44")));
    throw ConfigError("elastic.model must be isotropic, cubic, spring, or none; got " + model);
}

SpringSet springs_from_config(const Config& cfg) {
    return {cfg.get_double("spring.l_nn"), cfg.get_double("spring.t_nn"),
            cfg.get_double("spring.l_nnn")};
}

// Kernel for the field/lattice solvers. "none" (or a missing model) disables
// the elastic term.
ElasticKernel kernel_from_config(const Config& cfg, const GridSpec& grid, double amp_key_value) {
    const std::string model = cfg.get_str("elastic.model", "none");
    if (model == "none") return {};
    if (model == "spring")
        return spring_kernel(grid, springs_from_config(cfg), amp_key_value);
    return build_kernel(grid, stiffness_from_config(cfg),
                        TransformationStrain::dilatational(amp_key_value, 3));
}

PhasePair pair_from_config(const Config& cfg) {
    return PhasePair(cfg.get_double("pair.k_a"), cfg.get_double("pair.g_a"),
                     cfg.get_double("pair.k_b"), cfg.get_double("pair.g_b"),
                     cfg.get_double("pair.q_a"), cfg.get_double("pair.q_b"),
                     cfg.get_double("pair.sigma", 0.0), cfg.get_double("pair.diffusivity", 1.0),
                     cfg.get_double("pair.c_eq_a", 0.9), cfg.get_double("pair.c_eq_b", 0.1),
                     cfg.get_double("pair.c0_a", 1.0), cfg.get_double("pair.temperature", 1.0));
}

std::ofstream open_csv(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out.precision(15);
    return out;
}

struct Run {
    RunManifest manifest;
    fs::path out_dir;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Run(const std::string& command, const Config& cfg, const std::string& out) : out_dir(out) {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) throw IoError("cannot create output directory: " + out + ": " + ec.message());
        manifest.command = command;
        manifest.config = cfg;
    }

    fs::path path(const std::string& name) const { return out_dir / name; }

    void finish() {
        manifest.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        manifest.write((out_dir / "manifest.txt").string());
    }
};

// ---------------------------------------------------------------- kernel ---

int cmd_kernel(const std::string& command, const std::string& cfg_path, const std::string& out) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const GridSpec grid = grid_from_config(cfg);
    const std::string model = cfg.get_str("elastic.model");
    const double amp = model == "spring" ? cfg.get_double("misfit.amp")
                                         : cfg.get_double("misfit.q");
    const ElasticKernel kern = kernel_from_config(cfg, grid, amp);

    ScalarField bfield(grid);
    bfield.values = kern.b_of_k;
    write_field(bfield, run.path("kernel.fld").string());
    run.manifest.add_output(run.path("kernel.fld").string());

    // directional samples on 360 azimuthal rays in the (kx, ky) plane
    auto rays = open_csv(run.path("kernel_rays.csv"));
    rays << "angle_deg,kx,ky,b\n";
    const double kmag_phase = 2.0 * M_PI * 2.0 / grid.n[0];  // two fundamentals out
    for (int deg = 0; deg < 360; ++deg) {
        const double th = deg * M_PI / 180.0;
        const double cx = std::cos(th), cy = std::sin(th);
        double b;
        if (model == "spring")
            b = spring_b_value(springs_from_config(cfg), amp, grid.a,
                               kmag_phase * cx, kmag_phase * cy);
        else
            b = b_value(stiffness_from_config(cfg), TransformationStrain::dilatational(amp, 3),
                        {cx, cy, 0.0});
        rays << deg << "," << cx << "," << cy << "," << b << "\n";
    }
    rays.close();
    run.manifest.add_output(run.path("kernel_rays.csv").string());

    std::cout << "kernel: max B = " << kern.max_value() << " over " << grid.sites()
              << " reciprocal points\n";
    run.finish();
    return 0;
}

// ----------------------------------------------------------------- sharp ---

int cmd_sharp_plate(const std::string& command, const std::string& cfg_path,
                    const std::string& out, bool sphere) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const PhasePair p = pair_from_config(cfg);
    const std::string name = sphere ? "sphere.csv" : "plate.csv";
    auto csv = open_csv(run.path(name));
    csv << (sphere ? "phi,w_sphere\n" : "phi,w_plate,deviatoric_strain\n");
    std::vector<double> phis;
    if (cfg.has("sharp.phi")) {
        phis.push_back(cfg.get_double("sharp.phi"));
    } else {
        const long steps = cfg.get_int("sharp.phi_steps", 101);
        for (long i = 0; i < steps; ++i) phis.push_back(double(i) / double(steps - 1));
    }
    for (double phi : phis) {
        if (sphere)
            csv << phi << "," << sphere_energy(p, phi) << "\n";
        else
            csv << phi << "," << plate_energy(p, phi) << ","
                << plate_deviatoric_strain(p, phi) << "\n";
    }
    csv.close();
    run.manifest.add_output(run.path(name).string());
    run.finish();
    return 0;
}

int cmd_sharp_pair(const std::string& command, const std::string& cfg_path,
                   const std::string& out) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const PhasePair p = pair_from_config(cfg);
    const double r1 = cfg.get_double("pair.r1");
    const double r2 = cfg.get_double("pair.r2");
    auto csv = open_csv(run.path("pair.csv"));
    csv << "r1,r2,distance,w_interaction\n";
    if (cfg.has("pair.distance")) {
        const double d = cfg.get_double("pair.distance");
        csv << r1 << "," << r2 << "," << d << "," << eshelby_pair(r1, r2, d, p) << "\n";
    } else {
        const double d0 = cfg.get_double("pair.d_min", 1.05 * (r1 + r2));
        const double d1 = cfg.get_double("pair.d_max", 10.0 * (r1 + r2));
        const long steps = cfg.get_int("pair.d_steps", 100);
        for (long i = 0; i < steps; ++i) {
            const double d = d0 + (d1 - d0) * double(i) / double(steps - 1);
            csv << r1 << "," << r2 << "," << d << "," << eshelby_pair(r1, r2, d, p) << "\n";
        }
    }
    csv.close();
    run.manifest.add_output(run.path("pair.csv").string());
    run.finish();
    return 0;
}

int cmd_sharp_gt(const std::string& command, const std::string& cfg_path, const std::string& out) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const PhasePair p = pair_from_config(cfg);
    auto csv = open_csv(run.path("gt.csv"));
    csv << "radius,c_alpha,c_beta\n";
    if (cfg.has("gt.r")) {
        const double r = cfg.get_double("gt.r");
        const auto c = gibbs_thomson(r, p);
        csv << r << "," << c.c_alpha << "," << c.c_beta << "\n";
    } else {
        const double r0 = cfg.get_double("gt.r_min", 0.1);
        const double r1 = cfg.get_double("gt.r_max", 100.0);
        const long steps = cfg.get_int("gt.steps", 100);
        for (long i = 0; i < steps; ++i) {
            const double r = r0 * std::pow(r1 / r0, double(i) / double(steps - 1));
            const auto c = gibbs_thomson(r, p);
            csv << r << "," << c.c_alpha << "," << c.c_beta << "\n";
        }
    }
    csv.close();
    run.manifest.add_output(run.path("gt.csv").string());
    run.finish();
    return 0;
}

int cmd_sharp_lsw(const std::string& command, const std::string& cfg_path,
                  const std::string& out) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const PhasePair p = pair_from_config(cfg);
    const long count = cfg.get_int("lsw.count", 10000);
    const double rmin = cfg.get_double("lsw.r_min", 0.5);
    const double rmax = cfg.get_double("lsw.r_max", 1.5);
    const std::uint64_t seed = std::uint64_t(cfg.get_int("lsw.seed", 12345));
    run.manifest.seed = seed;
    Rng rng(seed);
    PrecipitateEnsemble ens;
    ens.radii.reserve(count);
    for (long i = 0; i < count; ++i) ens.radii.push_back(rng.uniform(rmin, rmax));

    const double dt = cfg.get_double("lsw.dt");
    const long steps = cfg.get_int("lsw.steps");
    const long sample_every = cfg.get_int("lsw.sample_every", std::max(1L, steps / 200));
    const auto series = lsw_evolve(ens, p, dt, steps, sample_every);

    auto csv = open_csv(run.path("lsw.csv"));
    csv << "t,mean_radius,r_star,count\n";
    for (const auto& s : series)
        csv << s.t << "," << s.mean_radius << "," << s.r_star << "," << s.count << "\n";
    csv.close();
    run.manifest.add_output(run.path("lsw.csv").string());

    // growth exponent over the final time decade
    GrowthSeries gs;
    const double t_end = series.back().t;
    for (const auto& s : series)
        if (s.t > 0.0 && s.t >= t_end / 10.0) {
            gs.t.push_back(s.t);
            gs.R.push_back(s.mean_radius);
        }
    if (gs.t.size() >= 8) {
        const auto fit = growth_exponent(gs);
        std::cout << "lsw: exponent " << fit.exponent << " +- " << fit.stderr_exponent
                  << " over final decade, " << series.back().count << " survivors\n";
    }
    run.finish();
    return 0;
}

int cmd_sharp_stability(const std::string& command, const std::string& cfg_path,
                        const std::string& out) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const double f2 = cfg.get_double("stability.f2");
    const double eta = cfg.get_double("stability.eta");
    const std::string model = cfg.get_str("elastic.model");
    auto csv = open_csv(run.path("stability.csv"));
    csv << "f2,eta,stable\n";
    bool stable;
    if (model == "isotropic") {
        stable = stability_isotropic(
            f2, eta, IsotropicModuli(cfg.get_double("elastic.k"), cfg.get_double("elastic.g")));
    } else {
        stable = stability_anisotropic(f2, eta, stiffness_from_config(cfg));
    }
    csv << f2 << "," << eta << "," << (stable ? 1 : 0) << "\n";
    csv.close();
    run.manifest.add_output(run.path("stability.csv").string());
    std::cout << "stability: " << (stable ? "stable" : "unstable") << "\n";
    run.finish();
    return 0;
}

// ------------------------------------------------------------- evolve-ch ---

int cmd_evolve_ch(const std::string& command, const std::string& cfg_path,
                  const std::string& out, long steps, long snap_every) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const GridSpec grid = grid_from_config(cfg);

    const double T = cfg.get_double("ch.temperature");
    const double T0 = cfg.get_double("ch.t0");
    const double cbar = cfg.get_double("ch.cbar", 0.5);
    const double diffusivity = cfg.get_double("ch.diffusivity", 1.0);
    const double mobility = cfg.get_double("ch.mobility", diffusivity * cbar * (1.0 - cbar) / T);
    CHParams params(cfg.get_double("ch.chi", 1.0), T, T0, mobility, cfg.get_double("ch.dt", 0.05));
    params.mu_eq = cfg.get_double("ch.mu_eq", 0.0);
    params.noise_amp = cfg.get_double("ch.noise_amp", 0.0);
    params.seed = std::uint64_t(cfg.get_int("ch.seed", 12345));
    run.manifest.seed = params.seed;

    const double eta = cfg.get_double("misfit.eta", 0.0);
    ElasticKernel kern;
    if (eta != 0.0) kern = kernel_from_config(cfg, grid, eta);

    Rng init_rng(params.seed);
    ScalarField c0 = random_initial_field(grid, cbar, cfg.get_double("ch.delta", 0.01), init_rng);
    CHState state(std::move(c0), params, std::move(kern));

    if (snap_every <= 0) snap_every = std::max(1L, steps / 10);
    char name[64];

    auto metrics = open_csv(run.path("summary.csv"));
    metrics << "t,domain_size,anisotropy\n";
    GrowthSeries gs;

    const auto snapshot = [&](long step) {
        std::snprintf(name, sizeof name, "snapshot_%06ld.fld", step);
        write_field(state.c(), run.path(name).string());
        run.manifest.add_output(run.path(name).string());
        state.record_energy();
        double size = std::nan("");
        double aniso = std::nan("");
        try {
            size = domain_size(state.c(), cbar);
        } catch (const NumericError&) {
        }
        const Spectrum sp = structure_factor(state.c());
        if (!sp.empty) aniso = sp.anisotropy;
        metrics << state.t() << "," << size << "," << aniso << "\n";
        if (state.t() > 0.0 && std::isfinite(size)) {
            gs.t.push_back(state.t());
            gs.R.push_back(size);
        }
    };

    snapshot(0);
    for (long s = 1; s <= steps; ++s) {
        state.step();
        if (s % snap_every == 0 || s == steps) snapshot(s);
    }
    metrics.close();
    run.manifest.add_output(run.path("summary.csv").string());

    auto energy = open_csv(run.path("energy.csv"));
    energy << "t,f_total,f_bulk,f_gradient,f_elastic\n";
    for (const auto& s : state.energy_series())
        energy << s.t << "," << s.f.total << "," << s.f.bulk << "," << s.f.gradient << ","
               << s.f.elastic << "\n";
    energy.close();
    run.manifest.add_output(run.path("energy.csv").string());

    if (gs.t.size() >= 8) {
        GrowthSeries tail;
        const double t_end = gs.t.back();
        for (std::size_t i = 0; i < gs.t.size(); ++i)
            if (gs.t[i] >= t_end / 10.0) {
                tail.t.push_back(gs.t[i]);
                tail.R.push_back(gs.R[i]);
            }
        if (tail.t.size() >= 8) {
            const auto fit = growth_exponent(tail);
            std::cout << "evolve-ch: growth exponent " << fit.exponent << " +- "
                      << fit.stderr_exponent << " over final decade\n";
        }
    }
    run.finish();
    return 0;
}

// ------------------------------------------------------------- evolve-mc ---

int cmd_evolve_mc(const std::string& command, const std::string& cfg_path,
                  const std::string& out, long sweeps, long snap_every) {
    const Config cfg = Config::from_file(cfg_path);
    Run run(command, cfg, out);
    const GridSpec grid = grid_from_config(cfg);
    if (grid.dim != 2) throw ConfigError("evolve-mc: grid.dim must be 2");

    MCParams params(cfg.get_double("mc.temperature"), cfg.get_double("mc.j_nn", 1.0));
    params.J_nnn = cfg.get_double("mc.j_nnn", 0.0);
    const std::string rule = cfg.get_str("mc.rule", "metropolis");
    if (rule == "glauber")
        params.rule = AcceptanceRule::Glauber;
    else if (rule != "metropolis")
        throw ConfigError("mc.rule must be metropolis or glauber; got " + rule);

    const double amp = cfg.get_double("misfit.amp", 0.0);
    if (amp != 0.0) params.kernel = kernel_from_config(cfg, grid, amp);

    const std::uint64_t seed = std::uint64_t(cfg.get_int("mc.seed", 12345));
    run.manifest.seed = seed;
    Rng rng(seed);
    const double c_up = cfg.get_double("mc.c", 0.5);
    const long n_up = std::lround(c_up * double(grid.sites()));
    SpinLattice lattice(grid, n_up, rng, params.kernel);

    if (snap_every <= 0) snap_every = std::max(1L, sweeps / 10);
    char name[64];

    auto energy = open_csv(run.path("energy.csv"));
    energy << "mcs,f_chem,f_elastic,acceptance\n";
    auto metrics = open_csv(run.path("metrics.csv"));
    metrics << "mcs,domain_size,anisotropy\n";

    long window_attempts = 0, window_accepted = 0;
    const auto snapshot = [&](long mcs) {
        std::snprintf(name, sizeof name, "snapshot_%06ld.fld", mcs);
        const ScalarField f = lattice.gamma_field();
        write_field(f, run.path(name).string());
        run.manifest.add_output(run.path(name).string());
        const double acc =
            window_attempts > 0 ? double(window_accepted) / double(window_attempts) : 0.0;
        energy << mcs << "," << lattice.chemical_energy(params) << ","
               << lattice.elastic_energy() << "," << acc << "\n";
        window_attempts = window_accepted = 0;
        double size = std::nan("");
        double aniso = std::nan("");
        try {
            size = domain_size(f, 0.0);
        } catch (const NumericError&) {
        }
        const Spectrum sp = structure_factor(f);
        if (!sp.empty) aniso = sp.anisotropy;
        metrics << mcs << "," << size << "," << aniso << "\n";
    };

    snapshot(0);
    for (long s = 1; s <= sweeps; ++s) {
        const auto stats = lattice.kawasaki_sweep(params, rng);
        window_attempts += stats.attempts;
        window_accepted += stats.accepted;
        if (s % snap_every == 0 || s == sweeps) snapshot(s);
    }
    energy.close();
    metrics.close();
    run.manifest.add_output(run.path("energy.csv").string());
    run.manifest.add_output(run.path("metrics.csv").string());
    run.finish();
    return 0;
}

// --------------------------------------------------------------- analyze ---

int cmd_analyze(const std::string& command, const std::string& in, const std::string& out,
                double threshold) {
    Config cfg;
    cfg.set("analyze.in", in);
    cfg.set("analyze.threshold", std::to_string(threshold));
    Run run(command, cfg, out);

    std::vector<fs::path> files;
    if (!fs::is_directory(in)) throw IoError("analyze: not a directory: " + in);
    for (const auto& e : fs::directory_iterator(in))
        if (e.path().extension() == ".fld") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("analyze: no .fld files in " + in);

    struct FileMetrics {
        double t;
        double size;
        double aniso;
        Spectrum spectrum;
        std::string stem;
    };
    const auto analyze_one = [&](const fs::path& path) {
        const ScalarField f = read_field(path.string());
        FileMetrics m;
        m.stem = path.stem().string();
        // time tag = trailing number in the file name, else file order
        const auto pos = m.stem.find_last_not_of("0123456789");
        m.t = pos + 1 < m.stem.size() ? double(std::stol(m.stem.substr(pos + 1))) : -1.0;
        m.size = std::nan("");
        try {
            m.size = domain_size(f, threshold);
        } catch (const NumericError&) {
        }
        m.spectrum = structure_factor(f);
        m.aniso = m.spectrum.empty ? std::nan("") : m.spectrum.anisotropy;
        return m;
    };

    // batch-parallel over files
    const int workers = std::min<int>(thread_count(), int(files.size()));
    std::vector<FileMetrics> results(files.size());
    std::vector<std::future<void>> jobs;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&]() {
            for (std::size_t i = next++; i < files.size(); i = next++)
                results[i] = analyze_one(files[i]);
        }));
    for (auto& j : jobs) j.get();
    for (std::size_t i = 0; i < results.size(); ++i)
        if (results[i].t < 0.0) results[i].t = double(i);

    auto metrics = open_csv(run.path("metrics.csv"));
    metrics << "t,domain_size,anisotropy\n";
    for (const auto& m : results)
        metrics << m.t << "," << m.size << "," << m.aniso << "\n";
    metrics.close();
    run.manifest.add_output(run.path("metrics.csv").string());

    // azimuthal average of the last (latest-time) spectrum
    const auto& last = results.back();
    if (!last.spectrum.empty) {
        auto sk = open_csv(run.path("sk_azimuthal.csv"));
        sk << "k,s\n";
        for (std::size_t b = 0; b < last.spectrum.radial_bins.size(); ++b)
            sk << last.spectrum.radial_bin_edges[b] << "," << last.spectrum.radial_bins[b] << "\n";
        sk.close();
        run.manifest.add_output(run.path("sk_azimuthal.csv").string());
    }

    for (const auto& m : results) {
        if (m.spectrum.grid.dim != 2) continue;
        const std::string img = m.stem + ".pgm";
        saxs_image(m.spectrum, run.path(img).string());
        run.manifest.add_output(run.path(img).string());
    }
    run.finish();
    return 0;
}

constexpr const char* kPairKeys =
    "Config keys (pair.*): k_a, g_a, k_b, g_b (moduli, energy/volume; required), "
    "q_a, q_b (stress-free strains; required), sigma (surface tension, energy/area, "
    "default 0), diffusivity (length^2/time, default 1), c_eq_a (default 0.9), "
    "c_eq_b (default 0.1), c0_a (default 1), temperature (energy units, default 1).";

constexpr const char* kElasticKeys =
    "Elastic keys: elastic.model = isotropic|cubic|spring|none; isotropic: elastic.k, "
    "elastic.g; cubic: elastic.c11, elastic.c12, elastic.c44; spring: spring.l_nn, "
    "spring.t_nn, spring.l_nnn (stiffnesses, energy/length^2).";

constexpr const char* kGridKeys =
    "Grid keys: grid.dim (2 or 3, default 2), grid.nx (required, even >= 4), grid.ny "
    "(default nx), grid.nz (3-D only, default nx), grid.a (spacing, default 1).";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"misfit-coarsen: phase separation with coherent elastic misfit"};
    app.require_subcommand(1);
    const std::string command = join_argv(argc, argv);

    std::string cfg_path, out_dir = ".", in_dir;
    long steps = 0, snap_every = 0;
    double threshold = 0.5;

    auto* kernel_cmd = app.add_subcommand(
        "kernel", std::string("Tabulate the elastic kernel B(k); writes kernel.fld and "
                              "kernel_rays.csv (360 azimuthal rays).\n") +
                      kGridKeys + "\n" + kElasticKeys +
                      "\nMisfit keys: misfit.q (dilatational transformation strain, "
                      "continuum models) or misfit.amp (natural-length slope, spring model).");
    kernel_cmd->add_option("--config", cfg_path, "key = value config file")->required();
    kernel_cmd->add_option("--out", out_dir, "output directory (default .)");

    auto* sharp = app.add_subcommand("sharp", "Closed-form sharp-interface results");
    sharp->require_subcommand(1);
    auto add_sharp = [&](const char* name, const char* desc) {
        auto* c = sharp->add_subcommand(name, desc);
        c->add_option("--config", cfg_path, "key = value config file")->required();
        c->add_option("--out", out_dir, "output directory (default .)");
        return c;
    };
    auto* plate = add_sharp(
        "plate", (std::string("Plate-arrangement mean elastic energy density; plate.csv "
                              "(phi, w_plate, deviatoric_strain).\n") +
                  kPairKeys + "\nsharp.phi: single volume fraction; otherwise sharp.phi_steps "
                              "(default 101) rows scan phi in [0, 1].")
                     .c_str());
    auto* sphere = add_sharp(
        "sphere", (std::string("Sphere-arrangement mean elastic energy density; sphere.csv "
                               "(phi, w_sphere).\n") +
                   kPairKeys + "\nsharp.phi / sharp.phi_steps as for plate.")
                      .c_str());
    auto* pair = add_sharp(
        "pair", (std::string("Two-sphere elastic interaction energy; pair.csv (r1, r2, "
                             "distance, w_interaction).\n") +
                 kPairKeys + "\npair.r1, pair.r2 (required radii); pair.distance for one row, "
                             "else pair.d_min/d_max/d_steps scan (defaults 1.05(r1+r2), "
                             "10(r1+r2), 100).")
                    .c_str());
    auto* gt = add_sharp(
        "gt", (std::string("Gibbs-Thomson interface concentrations; gt.csv (radius, c_alpha, "
                           "c_beta).\n") +
               kPairKeys + "\ngt.r for one radius, else log scan gt.r_min/r_max/steps "
                           "(defaults 0.1, 100, 100).")
                  .c_str());
    auto* lsw = add_sharp(
        "lsw", (std::string("Conserved-volume ripening of a radius ensemble; lsw.csv (t, "
                            "mean_radius, r_star, count).\n") +
                kPairKeys + "\nlsw.count (default 10000), lsw.r_min/r_max (uniform initial "
                            "radii, defaults 0.5/1.5), lsw.dt, lsw.steps (required), "
                            "lsw.sample_every (default steps/200), lsw.seed (default 12345).")
                   .c_str());
    auto* stability = add_sharp(
        "stability", (std::string("Coherent-spinodal stability test; stability.csv (f2, eta, "
                                  "stable).\n") +
                      kElasticKeys + "\nstability.f2 (bulk f'' at the mean composition), "
                                     "stability.eta (Vegard slope); isotropic model uses the "
                                     "closed form, cubic the direction minimum.")
                         .c_str());

    auto* ch = app.add_subcommand(
        "evolve-ch", std::string("Elastic Cahn-Hilliard trajectory; writes snapshot_NNNNNN.fld, "
                                 "energy.csv (t, f_total, f_bulk, f_gradient, f_elastic), "
                                 "summary.csv (t, domain_size, anisotropy).\n") +
                         kGridKeys + "\n" + kElasticKeys +
                         "\nCH keys: ch.temperature, ch.t0 (required, energy units), ch.chi "
                         "(gradient coefficient, default 1), ch.mu_eq (default 0), ch.cbar "
                         "(mean composition, default 0.5), ch.delta (initial noise amplitude, "
                         "default 0.01), ch.diffusivity (default 1; mobility = D cbar (1 - "
                         "cbar)/T), ch.mobility (overrides), ch.dt (default 0.05), "
                         "ch.noise_amp (Cook noise, default 0), ch.seed (default 12345), "
                         "misfit.eta (Vegard slope; 0 disables elasticity).");
    ch->add_option("--config", cfg_path, "key = value config file")->required();
    ch->add_option("--out", out_dir, "output directory (default .)");
    ch->add_option("--steps", steps, "number of time steps")->required();
    ch->add_option("--snap-every", snap_every, "steps between snapshots (default steps/10)");

    auto* mc = app.add_subcommand(
        "evolve-mc", std::string("Kawasaki Monte Carlo trajectory; writes snapshot_NNNNNN.fld "
                                 "(gamma in {-1,+1}), energy.csv (mcs, f_chem, f_elastic, "
                                 "acceptance), metrics.csv (mcs, domain_size, anisotropy).\n") +
                         kGridKeys +
                         "\nMC keys: mc.temperature (required, energy units), mc.j_nn (default "
                         "1; positive = like atoms attract), mc.j_nnn (default 0), mc.c "
                         "(fraction of +1 sites, default 0.5), mc.seed (default 12345), "
                         "mc.rule = metropolis|glauber (default metropolis), misfit.amp "
                         "(spring natural-length slope; 0 disables elasticity) with "
                         "elastic.model = spring and spring.* keys.");
    mc->add_option("--config", cfg_path, "key = value config file")->required();
    mc->add_option("--out", out_dir, "output directory (default .)");
    mc->add_option("--sweeps", steps, "number of Monte Carlo sweeps (1 MCS = N attempts)")
        ->required();
    mc->add_option("--snap-every", snap_every, "sweeps between snapshots (default sweeps/10)");

    auto* analyze = app.add_subcommand(
        "analyze", "Batch microstructure metrics over the .fld files of a directory; writes "
                   "metrics.csv (t, domain_size, anisotropy), sk_azimuthal.csv (azimuthal "
                   "average of the latest spectrum), and one log-scaled PGM per 2-D field. "
                   "Parallel over files (MISFIT_THREADS workers, default: logical cores).");
    analyze->add_option("--in", in_dir, "input directory of .fld files")->required();
    analyze->add_option("--out", out_dir, "output directory (default .)");
    analyze->add_option("--threshold", threshold, "binarization threshold (default 0.5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (kernel_cmd->parsed()) return cmd_kernel(command, cfg_path, out_dir);
        if (sharp->parsed()) {
            if (plate->parsed()) return cmd_sharp_plate(command, cfg_path, out_dir, false);
            if (sphere->parsed()) return cmd_sharp_plate(command, cfg_path, out_dir, true);
            if (pair->parsed()) return cmd_sharp_pair(command, cfg_path, out_dir);
            if (gt->parsed()) return cmd_sharp_gt(command, cfg_path, out_dir);
            if (lsw->parsed()) return cmd_sharp_lsw(command, cfg_path, out_dir);
            if (stability->parsed()) return cmd_sharp_stability(command, cfg_path, out_dir);
        }
        if (ch->parsed()) return cmd_evolve_ch(command, cfg_path, out_dir, steps, snap_every);
        if (mc->parsed()) return cmd_evolve_mc(command, cfg_path, out_dir, steps, snap_every);
        if (analyze->parsed()) return cmd_analyze(command, in_dir, out_dir, threshold);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
