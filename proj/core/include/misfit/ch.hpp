#pragma once

#include <memory>
#include <vector>

#include "misfit/fft.hpp"
#include "misfit/grid.hpp"
#include "misfit/kernel.hpp"
#include "misfit/rng.hpp"

namespace misfit {

/// Parameters of the elastic Cahn-Hilliard model (kB = 1).
struct CHParams {
    double chi;            // gradient coefficient
    double T;              // temperature
    double T0;             // mean-field critical temperature
    double mu_eq = 0.0;    // chemical-potential offset
    double mobility;       // M = D cbar (1 - cbar) / T, held constant
    double dt;
    double noise_amp = 0.0;  // Cook noise amplitude, 0 disables
    std::uint64_t seed = 0;

    CHParams(double chi_, double T_, double T0_, double mobility_, double dt_);
};

/// Mean-field bulk free energy density
///   f(c) = mu_eq c + 2 T0 c(1-c) + T (c log c + (1-c) log(1-c)).
/// c is clamped to [1e-9, 1-1e-9] inside the logarithms only.
double bulk_f(double c, const CHParams& p);
double bulk_f_prime(double c, const CHParams& p);
/// f''(c); at c = 1/2 equals 4 (T - T0).
double bulk_f_second(double c, const CHParams& p);

struct EnergyBreakdown {
    double total;
    double bulk;
    double gradient;
    double elastic;
};

struct EnergySample {
    double t;
    EnergyBreakdown f;
};

/// State of one Cahn-Hilliard trajectory. Owns its FFT plans; one state per
/// worker, trajectories with distinct seeds run concurrently.
class CHState {
  public:
    /// kernel may be empty (eta = 0 path: plain Cahn-Hilliard).
    CHState(ScalarField c, const CHParams& params, ElasticKernel kernel = {});

    const ScalarField& c() const { return c_; }
    double t() const { return t_; }
    const std::vector<EnergySample>& energy_series() const { return series_; }
    const CHParams& params() const { return params_; }
    bool has_elastic() const { return !kernel_.b_of_k.empty(); }

    /// F = sum_x [f(c) + 1/2 chi |grad c|^2] a^d + (a^d/2N) sum_{k!=0} V_el(k) |c~|^2.
    EnergyBreakdown total_free_energy() const;

    /// mu^(x) = f'(c(x)) + (V_el * (c - cbar))(x); the -chi lap c term is
    /// carried implicitly by the stepper.
    ScalarField diffusion_potential() const;

    /// One semi-implicit spectral step. Nonlinear terms explicit, chi k^4
    /// implicit; the k = 0 mode is never touched. Throws NumericError on
    /// non-finite values.
    void step();

    void record_energy();

  private:
    CHParams params_;
    ScalarField c_;
    ElasticKernel kernel_;
    std::unique_ptr<Fft> fft_;
    Rng rng_;
    double t_ = 0.0;
    long steps_ = 0;
    std::vector<EnergySample> series_;
    std::vector<double> k2_;  // 5-point discrete Laplacian symbol per k
};

/// Initial condition cbar + zeta, zeta uniform in [-delta, delta], corrected
/// to exact mean cbar.
ScalarField random_initial_field(const GridSpec& grid, double cbar, double delta, Rng& rng);

}  // namespace misfit
