#pragma once

#include "misfit/kernel.hpp"

namespace misfit {

/// Harmonic springs of the square-lattice model: longitudinal nearest-neighbour,
/// transverse nearest-neighbour, longitudinal next-nearest-neighbour.
/// Stiffnesses are composition-independent (homogeneous elasticity).
struct SpringSet {
    double L_nn;
    double T_nn;
    double L_nnn;
};

/// Lattice elastic kernel for the 2-D square lattice.
///
/// Natural bond strains are linear in (gamma_p + gamma_p'), slope misfit_amp
/// per unit gamma, for both longitudinal spring families; a uniform lattice is
/// stress-free. For each k in the first Brillouin zone the 2x2 dynamical
/// matrix D(k) and misfit force f(k) are assembled from the spring sums and
/// the per-mode quadratic displacement energy minimized:
///     B(k) = phi0(k) - f(k)^dag D(k)^{-1} f(k),   B(0) = 0.
/// Throws NumericError on a singular D(k) at k != 0 (unstable spring set).
ElasticKernel spring_kernel(const GridSpec& grid, const SpringSet& springs, double misfit_amp);

/// 2x2 dynamical matrix of the spring set at wavevector k (per unit cell).
/// kx, ky are phases per lattice site (k . a), in (-pi, pi].
/// Exposed so elastic constants can be extracted from acoustic slopes.
std::array<std::array<double, 2>, 2> spring_dynamical_matrix(const SpringSet& springs,
                                                             double kx, double ky);

/// Lattice kernel value at one wavevector, phases per site. Requires k != 0.
double spring_b_value(const SpringSet& springs, double misfit_amp, double a,
                      double kx, double ky);

}  // namespace misfit
