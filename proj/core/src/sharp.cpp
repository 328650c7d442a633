#include "misfit/sharp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "misfit/errors.hpp"
#include "misfit/kernel.hpp"

namespace misfit {

PhasePair::PhasePair(double Ka, double Ga, double Kb, double Gb, double qa, double qb,
                     double sigma_, double D_, double ceqa, double ceqb, double c0a, double T_)
    : K_a(Ka), G_a(Ga), K_b(Kb), G_b(Gb), q_a(qa), q_b(qb), sigma(sigma_), D(D_),
      c_eq_a(ceqa), c_eq_b(ceqb), c0_a(c0a), T(T_) {
    if (K_a <= 0 || G_a <= 0 || K_b <= 0 || G_b <= 0)
        throw std::invalid_argument("PhasePair: moduli must be positive");
    if (!(0.0 <= c_eq_b && c_eq_b < c_eq_a && c_eq_a <= c0_a && c0_a <= 1.0))
        throw std::invalid_argument("PhasePair: need 0 <= c_eq_b < c_eq_a <= c0_a <= 1");
    if (sigma < 0.0) throw std::invalid_argument("PhasePair: sigma must be >= 0");
    if (D <= 0.0) throw std::invalid_argument("PhasePair: D must be positive");
    if (T <= 0.0) throw std::invalid_argument("PhasePair: T must be positive");
}

double PhasePair::sphere_elastic_offset() const {
    const double q = dq();
    return 18.0 * K_a * G_b * q * q / (3.0 * K_a + 4.0 * G_b);
}

namespace {
void check_phi(double phi) {
    if (phi < 0.0 || phi > 1.0)
        throw std::invalid_argument("volume fraction must lie in [0, 1]");
}
}  // namespace

double plate_energy(const PhasePair& p, double phi) {
    check_phi(phi);
    const double inv_kstar = (1.0 - phi) / p.K_a + phi / p.K_b +
                             0.75 * ((1.0 - phi) / p.G_a + phi / p.G_b);
    const double q = p.dq();
    return 4.5 * phi * (1.0 - phi) * q * q / inv_kstar;
}

double sphere_energy(const PhasePair& p, double phi) {
    check_phi(phi);
    const double inv_kbullet = (1.0 - phi) / p.K_a + phi / p.K_b + 0.75 / p.G_b;
    const double q = p.dq();
    return 4.5 * phi * (1.0 - phi) * q * q / inv_kbullet;
}

double plate_deviatoric_strain(const PhasePair& p, double phi) {
    check_phi(phi);
    const double inv_kstar = (1.0 - phi) / p.K_a + phi / p.K_b +
                             0.75 * ((1.0 - phi) / p.G_a + phi / p.G_b);
    return 0.75 * (1.0 / p.G_a - 1.0 / p.G_b) * p.dq() / inv_kstar;
}

RaftOrientation raft_orientation(double t_axial, double dq, double dG) {
    const double s = t_axial * dq * dG;
    if (s > 0.0) return RaftOrientation::Parallel;
    if (s < 0.0) return RaftOrientation::Perpendicular;
    return RaftOrientation::Indeterminate;
}

double eshelby_pair(double R1, double R2, double D, const PhasePair& p) {
    if (D <= R1 + R2) throw std::invalid_argument("eshelby_pair: spheres overlap");
    const auto [E, nu] = young_poisson(IsotropicModuli(p.K_a, p.G_a));
    (void)E;
    const double ratio = (1.0 + nu) / (1.0 - nu);
    const double q = p.dq();
    const double d2 = D * D;
    const double term = std::pow(R1, 6) * std::pow(R2, 3) / std::pow(d2 - R2 * R2, 3) +
                        std::pow(R2, 6) * std::pow(R1, 3) / std::pow(d2 - R1 * R1, 3);
    return (8.0 * M_PI / 81.0) * ratio * ratio * q * q * p.dG() * term;
}

InterfaceConcentrations gibbs_thomson(double R, const PhasePair& p) {
    if (R <= 0.0) throw std::invalid_argument("gibbs_thomson: R must be positive");
    const double pi_jump = 2.0 * p.sigma / R + p.sphere_elastic_offset();
    const double denom = p.T * p.dceq();
    return {p.c_eq_a + (p.c0_a - p.c_eq_a) * pi_jump / denom,
            p.c_eq_b + p.c_eq_b * pi_jump / denom};
}

double lsw_rate(double R, double R_star, const PhasePair& p) {
    return 2.0 * p.sigma * p.D * p.c_eq_b / (p.T * p.dceq() * R) * (1.0 / R_star - 1.0 / R);
}

double lsw_rstar_from_far_field(double c_far, const PhasePair& p, bool with_elastic) {
    double rhs = p.T * p.dceq() * (c_far - p.c_eq_b) / p.c_eq_b;
    if (with_elastic) rhs -= p.sphere_elastic_offset();
    if (rhs <= 0.0)
        throw NumericError("lsw_rstar_from_far_field: supersaturation admits no positive R*");
    return 2.0 * p.sigma / rhs;
}

double PrecipitateEnsemble::total_volume() const {
    double v = 0.0;
    for (double r : radii) v += r * r * r;
    return 4.0 * M_PI / 3.0 * v;
}

namespace {

// d/dt sum R^3 = 0  <=>  sum (R / R* - 1) = 0; monotone in 1/R*.
double volume_balance(const std::vector<double>& radii, double r_star) {
    double s = 0.0;
    for (double r : radii) s += r / r_star - 1.0;
    return s;
}

double solve_rstar(const std::vector<double>& radii) {
    double mean = 0.0;
    for (double r : radii) mean += r;
    mean /= double(radii.size());
    // bracket around the mean radius
    double lo = mean, hi = mean;
    int guard = 0;
    while (volume_balance(radii, lo) < 0.0) {
        lo *= 0.5;
        if (++guard > 200) throw NumericError("lsw_evolve: R* bracket failed (low side)");
    }
    guard = 0;
    while (volume_balance(radii, hi) > 0.0) {
        hi *= 2.0;
        if (++guard > 200) throw NumericError("lsw_evolve: R* bracket failed (high side)");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (volume_balance(radii, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) < 1e-14 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<LswSample> lsw_evolve(PrecipitateEnsemble& ens, const PhasePair& p,
                                  double dt, long steps, long sample_every) {
    for (double r : ens.radii)
        if (r <= 0.0) throw std::invalid_argument("lsw_evolve: radii must be positive");
    std::vector<LswSample> out;
    double t = 0.0;
    const double rate_const = 2.0 * p.sigma * p.D * p.c_eq_b / (p.T * p.dceq());
    for (long step = 0; step < steps && !ens.radii.empty(); ++step) {
        const double r_star = solve_rstar(ens.radii);
        if (step % sample_every == 0) {
            double mean = 0.0;
            for (double r : ens.radii) mean += r;
            mean /= double(ens.radii.size());
            out.push_back({t, mean, r_star, ens.radii.size()});
        }
        // Step in R^3: d(R^3)/dt = 3 rate_const (R/R* - 1), so the volume
        // increments sum to zero exactly by the choice of R*. Sub-steps are
        // cut (a) so no volume crosses zero -- a dying particle lands exactly
        // at v = 0 and is removed with no volume discarded -- and (b) so no
        // sizeable particle changes volume by more than 30%; R* is re-solved
        // every sub-step so the balance holds throughout.
        double remaining = dt;
        bool first_sub = true;
        while (remaining > 0.0) {
            const double r_star_sub = first_sub ? r_star : solve_rstar(ens.radii);
            first_sub = false;
            double mean_v = 0.0;
            for (double r : ens.radii) mean_v += r * r * r;
            mean_v /= double(ens.radii.size());
            double sub = remaining;
            for (double r : ens.radii) {
                const double v = r * r * r;
                const double rate = 3.0 * rate_const * (r / r_star_sub - 1.0);
                if (rate < 0.0) sub = std::min(sub, v / -rate);
                if (v >= 1e-3 * mean_v && rate != 0.0)
                    sub = std::min(sub, 0.3 * v / std::abs(rate));
            }
            for (double& r : ens.radii) {
                const double v = r * r * r + sub * 3.0 * rate_const * (r / r_star_sub - 1.0);
                r = std::cbrt(std::max(v, 0.0));
            }
            remaining -= sub;
            // deletion floor: 1e-6 of the mean radius
            double mean = 0.0;
            for (double r : ens.radii) mean += r;
            mean /= double(ens.radii.size());
            const double floor = 1e-6 * mean;
            std::erase_if(ens.radii, [&](double r) { return !(r > floor); });
            if (ens.radii.empty()) break;
        }
        t += dt;
    }
    if (!ens.radii.empty()) {
        double mean = 0.0;
        for (double r : ens.radii) mean += r;
        mean /= double(ens.radii.size());
        out.push_back({t, mean, solve_rstar(ens.radii), ens.radii.size()});
    }
    return out;
}

bool stability_isotropic(double f2, double eta, const IsotropicModuli& m) {
    const double elastic = 2.0 * eta * eta * 18.0 * m.K * m.G / (3.0 * m.K + 4.0 * m.G);
    return f2 + elastic > 0.0;
}

double min_psi_trace(const StiffnessTensor& lam) {
    const TransformationStrain unit_dil = TransformationStrain::dilatational(1.0, 3);
    double best = std::numeric_limits<double>::infinity();
    auto probe = [&](double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n == 0.0) return;
        best = std::min(best, b_value(lam, unit_dil, {x / n, y / n, z / n}));
    };
    // dense Fibonacci-sphere sample
    const int samples = 20000;
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < samples; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / samples;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = golden * i;
        probe(r * std::cos(th), r * std::sin(th), z);
    }
    // refine near cube axes and body diagonals, where cubic extrema sit
    const double eps[] = {0.0, 0.01, 0.03, 0.1};
    for (double e1 : eps)
        for (double e2 : eps) {
            probe(1.0, e1, e2);
            probe(e1, 1.0, e2);
            probe(e1, e2, 1.0);
            probe(1.0, 1.0 + e1, 1.0 + e2);
            probe(1.0 + e1, 1.0, 1.0 + e2);
            probe(1.0 + e1, 1.0 + e2, 1.0);
        }
    return best;
}

bool stability_anisotropic(double f2, double eta, const StiffnessTensor& lam) {
    return f2 + eta * eta * min_psi_trace(lam) > 0.0;
}

IsotropicModuli cubic_plate_moduli(const CubicModuli& c, PlateNormal normal) {
    const double K = (c.C11 + 2.0 * c.C12) / 3.0;
    switch (normal) {
        case PlateNormal::Axis100:
            return IsotropicModuli(K, (c.C11 - c.C12) / 2.0);
        case PlateNormal::Diagonal111:
            return IsotropicModuli(K, c.C44);
    }
    throw std::invalid_argument("cubic_plate_moduli: unsupported direction");
}

}  // namespace misfit
