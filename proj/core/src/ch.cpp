#include "misfit/ch.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "misfit/errors.hpp"

namespace misfit {

namespace {
constexpr double kClamp = 1e-9;
double clamped(double c) { return std::min(1.0 - kClamp, std::max(kClamp, c)); }
}  // namespace

CHParams::CHParams(double chi_, double T_, double T0_, double mobility_, double dt_)
    : chi(chi_), T(T_), T0(T0_), mobility(mobility_), dt(dt_) {
    if (chi <= 0.0) throw std::invalid_argument("CHParams: chi must be positive");
    if (dt <= 0.0) throw std::invalid_argument("CHParams: dt must be positive");
    if (mobility <= 0.0) throw std::invalid_argument("CHParams: mobility must be positive");
    if (T <= 0.0) throw std::invalid_argument("CHParams: T must be positive");
}

double bulk_f(double c, const CHParams& p) {
    const double cc = clamped(c);
    return p.mu_eq * c + 2.0 * p.T0 * c * (1.0 - c) +
           p.T * (cc * std::log(cc) + (1.0 - cc) * std::log(1.0 - cc));
}

double bulk_f_prime(double c, const CHParams& p) {
    const double cc = clamped(c);
    return p.mu_eq + 2.0 * p.T0 * (1.0 - 2.0 * c) + p.T * std::log(cc / (1.0 - cc));
}

double bulk_f_second(double c, const CHParams& p) {
    const double cc = clamped(c);
    return -4.0 * p.T0 + p.T / (cc * (1.0 - cc));
}

CHState::CHState(ScalarField c, const CHParams& params, ElasticKernel kernel)
    : params_(params), c_(std::move(c)), kernel_(std::move(kernel)),
      fft_(std::make_unique<Fft>(c_.grid)), rng_(params.seed) {
    if (!kernel_.b_of_k.empty() && !(kernel_.grid == c_.grid))
        throw std::invalid_argument("CHState: kernel/field grid mismatch");
    // 5-point (2d-point) discrete Laplacian symbol
    const GridSpec& g = c_.grid;
    k2_.assign(g.sites(), 0.0);
    const int nz = g.dim == 3 ? g.n[2] : 1;
    for (int mx = 0; mx < g.n[0]; ++mx)
        for (int my = 0; my < g.n[1]; ++my)
            for (int mz = 0; mz < nz; ++mz) {
                double s = (2.0 - 2.0 * std::cos(2.0 * M_PI * mx / g.n[0])) +
                           (2.0 - 2.0 * std::cos(2.0 * M_PI * my / g.n[1]));
                if (g.dim == 3) s += 2.0 - 2.0 * std::cos(2.0 * M_PI * mz / g.n[2]);
                k2_[g.index(mx, my, mz)] = s / (g.a * g.a);
            }
}

EnergyBreakdown CHState::total_free_energy() const {
    const GridSpec& g = c_.grid;
    const double cell = g.cell_volume();
    double f_bulk = 0.0;
    for (double v : c_.values) f_bulk += bulk_f(v, params_);
    f_bulk *= cell;

    // forward-difference gradient: symbol matches the stepper's k_eff^2 exactly
    double f_grad = 0.0;
    const int nz = g.dim == 3 ? g.n[2] : 1;
    for (int x = 0; x < g.n[0]; ++x)
        for (int y = 0; y < g.n[1]; ++y)
            for (int z = 0; z < nz; ++z) {
                const double c0v = c_.values[g.index(x, y, z)];
                const double dx = c_.values[g.index((x + 1) % g.n[0], y, z)] - c0v;
                const double dy = c_.values[g.index(x, (y + 1) % g.n[1], z)] - c0v;
                double grad2 = dx * dx + dy * dy;
                if (g.dim == 3) {
                    const double dz = c_.values[g.index(x, y, (z + 1) % g.n[2])] - c0v;
                    grad2 += dz * dz;
                }
                f_grad += grad2;
            }
    f_grad *= 0.5 * params_.chi * cell / (g.a * g.a);

    double f_el = 0.0;
    if (has_elastic()) {
        const auto ct = fft_->forward(c_.values);
        for (std::size_t i = 1; i < ct.size(); ++i)
            f_el += kernel_.b_of_k[i] * std::norm(ct[i]);
        // index 0 is k = 0 only for the (0,0,0) corner; b_of_k[0] == 0 anyway
        f_el = 0.5 * f_el * cell / double(g.sites());
    }
    return {f_bulk + f_grad + f_el, f_bulk, f_grad, f_el};
}

ScalarField CHState::diffusion_potential() const {
    ScalarField mu(c_.grid);
    for (std::size_t i = 0; i < c_.values.size(); ++i)
        mu.values[i] = bulk_f_prime(c_.values[i], params_);
    if (has_elastic()) {
        auto ct = fft_->forward(c_.values);
        ct[0] = 0.0;  // convolution acts on c - cbar
        for (std::size_t i = 1; i < ct.size(); ++i) ct[i] *= kernel_.b_of_k[i];
        const auto conv = fft_->inverse_real(ct);
        for (std::size_t i = 0; i < mu.values.size(); ++i) mu.values[i] += conv[i];
    }
    return mu;
}

void CHState::step() {
    const GridSpec& g = c_.grid;
    // explicit part: f'(c) + elastic convolution
    std::vector<double> mu = diffusion_potential().values;
    auto mut = fft_->forward(mu);
    auto ct = fft_->forward(c_.values);
    const double dtM = params_.dt * params_.mobility;
    for (std::size_t i = 1; i < ct.size(); ++i) {
        const double k2 = k2_[i];
        ct[i] = (ct[i] - dtM * k2 * mut[i]) / (1.0 + dtM * params_.chi * k2 * k2);
    }
    c_.values = fft_->inverse_real(ct);

    if (params_.noise_amp > 0.0) {
        // conserving Cook noise: divergence of a white random flux
        const double amp = params_.noise_amp * std::sqrt(params_.dt);
        std::vector<double> flux(g.sites() * g.dim);
        for (double& v : flux) v = rng_.normal();
        const int nz = g.dim == 3 ? g.n[2] : 1;
        for (int x = 0; x < g.n[0]; ++x)
            for (int y = 0; y < g.n[1]; ++y)
                for (int z = 0; z < nz; ++z) {
                    const auto at = [&](int xx, int yy, int zz, int d) {
                        return flux[g.index((xx + g.n[0]) % g.n[0], (yy + g.n[1]) % g.n[1],
                                            nz == 1 ? 0 : (zz + nz) % nz) *
                                        g.dim +
                                    d];
                    };
                    double div = at(x, y, z, 0) - at(x - 1, y, z, 0) +
                                 at(x, y, z, 1) - at(x, y - 1, z, 1);
                    if (g.dim == 3) div += at(x, y, z, 2) - at(x, y, z - 1, 2);
                    c_.values[g.index(x, y, z)] += amp * div / g.a;
                }
    }

    ++steps_;
    t_ += params_.dt;
    double max_mu = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < c_.values.size(); ++i) {
        if (!std::isfinite(c_.values[i])) finite = false;
        max_mu = std::max(max_mu, std::abs(mu[i]));
    }
    if (!finite) {
        std::ostringstream os;
        os << "CH solver blow-up at step " << steps_ << " (max |mu| = " << max_mu << ")";
        throw NumericError(os.str());
    }
}

void CHState::record_energy() { series_.push_back({t_, total_free_energy()}); }

ScalarField random_initial_field(const GridSpec& grid, double cbar, double delta, Rng& rng) {
    ScalarField c(grid);
    for (double& v : c.values) v = cbar + rng.uniform(-delta, delta);
    const double shift = cbar - c.mean();  // exact mass correction
    for (double& v : c.values) v += shift;
    return c;
}

}  // namespace misfit
