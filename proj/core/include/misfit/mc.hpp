#pragma once

#include <cstdint>
#include <vector>

#include "misfit/grid.hpp"
#include "misfit/kernel.hpp"
#include "misfit/rng.hpp"

namespace misfit {

enum class AcceptanceRule { Metropolis, Glauber };

/// Kawasaki Monte Carlo parameters. Positive J_nn with the Hamiltonian
/// -J_nn sum gamma gamma is attractive for like atoms.
struct MCParams {
    double T;
    double J_nn;
    double J_nnn = 0.0;
    ElasticKernel kernel;  // empty disables the elastic term
    AcceptanceRule rule = AcceptanceRule::Metropolis;

    MCParams(double T_, double J_nn_);
};

/// Square-lattice occupation state with the cached local elastic potential
/// phi(p) = sum_p' V_el(p - p') gamma(p').
class SpinLattice {
  public:
    /// Random lattice with n_up sites at +1, the rest -1.
    SpinLattice(const GridSpec& grid, long n_up, Rng& rng, const ElasticKernel& kernel);
    /// Adopt an explicit configuration.
    SpinLattice(const GridSpec& grid, std::vector<int> gamma, const ElasticKernel& kernel);

    const GridSpec& grid() const { return grid_; }
    const std::vector<int>& gamma() const { return gamma_; }
    long composition() const;  // sum gamma

    /// F = chemical pair sum + (1/2N) sum_{k!=0} B(k) |gamma~|^2, constants dropped.
    double total_energy(const MCParams& p) const;
    double chemical_energy(const MCParams& p) const;
    double elastic_energy() const;

    /// Exact energy change of exchanging opposite-gamma nearest neighbours.
    /// Throws std::invalid_argument for equal, non-adjacent, or same-species sites.
    double delta_f_exchange(const MCParams& p, std::int64_t site_a, std::int64_t site_b) const;

    struct SweepStats {
        long attempts = 0;
        long accepted = 0;
    };
    /// One Monte Carlo sweep: N proposal attempts of random nearest-neighbour
    /// pairs; like pairs count as rejected attempts. phi is updated
    /// incrementally on acceptance and resynced every 10^4 acceptances.
    SweepStats kawasaki_sweep(const MCParams& p, Rng& rng);

    /// Max deviation between the cached phi and a full recompute.
    double phi_drift() const;
    /// Field view of gamma for analysis/IO.
    ScalarField gamma_field() const;

  private:
    GridSpec grid_;
    std::vector<int> gamma_;
    std::vector<double> phi_;   // cached elastic potential
    std::vector<double> vel_;   // V_el over offsets (row-major), empty if no kernel
    long accepted_since_sync_ = 0;

    void recompute_phi();
    void apply_exchange(std::int64_t a, std::int64_t b);
    std::int64_t neighbor(std::int64_t site, int dir) const;
    double vel_at(std::int64_t a, std::int64_t b) const;
};

}  // namespace misfit
