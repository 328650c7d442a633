#include "misfit/spring.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "misfit/errors.hpp"

namespace misfit {

namespace {

using cplx = std::complex<double>;

struct Bond {
    double bx, by;   // offset in lattice units
    double ex, ey;   // coupled displacement direction (longitudinal or transverse)
    double kappa;    // spring stiffness
    double r0;       // rest length in lattice units
    bool misfit;     // natural length depends on gamma
};

std::array<Bond, 6> bond_table(const SpringSet& s) {
    const double rt2 = std::sqrt(2.0);
    const double irt2 = 1.0 / rt2;
    return {{
        {1, 0, 1, 0, s.L_nn, 1.0, true},            // NN longitudinal, x
        {0, 1, 0, 1, s.L_nn, 1.0, true},            // NN longitudinal, y
        {1, 0, 0, 1, s.T_nn, 1.0, false},           // NN transverse, x bond
        {0, 1, 1, 0, s.T_nn, 1.0, false},           // NN transverse, y bond
        {1, 1, irt2, irt2, s.L_nnn, rt2, true},     // NNN longitudinal
        {1, -1, irt2, -irt2, s.L_nnn, rt2, true},   // NNN longitudinal
    }};
}

}  // namespace

std::array<std::array<double, 2>, 2> spring_dynamical_matrix(const SpringSet& springs,
                                                             double kx, double ky) {
    std::array<std::array<double, 2>, 2> D{{{0, 0}, {0, 0}}};
    for (const Bond& b : bond_table(springs)) {
        const double phase = kx * b.bx + ky * b.by;
        const double g2 = 2.0 - 2.0 * std::cos(phase);  // |e^{-i phase} - 1|^2
        D[0][0] += b.kappa * g2 * b.ex * b.ex;
        D[0][1] += b.kappa * g2 * b.ex * b.ey;
        D[1][0] += b.kappa * g2 * b.ey * b.ex;
        D[1][1] += b.kappa * g2 * b.ey * b.ey;
    }
    return D;
}

double spring_b_value(const SpringSet& springs, double misfit_amp, double a,
                      double kx, double ky) {
    double D[2][2] = {{0, 0}, {0, 0}};
    cplx f[2] = {0, 0};
    double phi0 = 0.0;
    for (const Bond& b : bond_table(springs)) {
        const double phase = kx * b.bx + ky * b.by;
        const cplx g = std::polar(1.0, -phase) - 1.0;
        const double g2 = std::norm(g);
        D[0][0] += b.kappa * g2 * b.ex * b.ex;
        D[0][1] += b.kappa * g2 * b.ex * b.ey;
        D[1][1] += b.kappa * g2 * b.ey * b.ey;
        if (b.misfit && misfit_amp != 0.0) {
            // natural bond strain slope misfit_amp per unit (gamma_p+gamma_p')/2
            const cplx h = b.r0 * a * misfit_amp * 0.5 * (1.0 + std::polar(1.0, -phase));
            const cplx gh = std::conj(g) * h;
            f[0] += b.kappa * gh * b.ex;
            f[1] += b.kappa * gh * b.ey;
            phi0 += b.kappa * std::norm(h);
        }
    }
    D[1][0] = D[0][1];
    const double det = D[0][0] * D[1][1] - D[0][1] * D[1][0];
    const double scale = std::max({std::abs(D[0][0]), std::abs(D[1][1]), std::abs(D[0][1])});
    if (std::abs(det) < 1e-14 * scale * scale) {
        std::ostringstream os;
        os << "spring_b_value: singular dynamical matrix at k = (" << kx << ", " << ky
           << "); unstable spring set";
        throw NumericError(os.str());
    }
    // f^dag D^{-1} f with D symmetric positive definite
    const cplx v0 = (D[1][1] * f[0] - D[0][1] * f[1]) / det;
    const cplx v1 = (D[0][0] * f[1] - D[0][1] * f[0]) / det;
    const double relax = (std::conj(f[0]) * v0 + std::conj(f[1]) * v1).real();
    return phi0 - relax;
}

ElasticKernel spring_kernel(const GridSpec& grid, const SpringSet& springs, double misfit_amp) {
    if (grid.dim != 2)
        throw std::invalid_argument("spring_kernel: square lattice requires dim 2");

    ElasticKernel kern;
    kern.grid = grid;
    kern.b_of_k.assign(grid.sites(), 0.0);

    for (int mx = 0; mx < grid.n[0]; ++mx)
        for (int my = 0; my < grid.n[1]; ++my) {
            if (mx == 0 && my == 0) continue;
            const double kx = 2.0 * M_PI * (mx > grid.n[0] / 2 ? mx - grid.n[0] : mx) / grid.n[0];
            const double ky = 2.0 * M_PI * (my > grid.n[1] / 2 ? my - grid.n[1] : my) / grid.n[1];
            kern.b_of_k[grid.index(mx, my)] = spring_b_value(springs, misfit_amp, grid.a, kx, ky);
        }
    return kern;
}

}  // namespace misfit
