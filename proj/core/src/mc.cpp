#include "misfit/mc.hpp"

#include <cmath>
#include <stdexcept>

#include "misfit/errors.hpp"
#include "misfit/fft.hpp"

namespace misfit {

MCParams::MCParams(double T_, double J_nn_) : T(T_), J_nn(J_nn_) {
    if (T <= 0.0) throw std::invalid_argument("MCParams: T must be positive");
}

SpinLattice::SpinLattice(const GridSpec& grid, long n_up, Rng& rng, const ElasticKernel& kernel)
    : grid_(grid) {
    if (grid.dim != 2) throw std::invalid_argument("SpinLattice: dim must be 2");
    const auto N = grid.sites();
    if (n_up < 0 || n_up > N) throw std::invalid_argument("SpinLattice: bad composition");
    gamma_.assign(N, -1);
    // Fisher-Yates placement of the +1 sites
    std::vector<std::int64_t> idx(N);
    for (std::int64_t i = 0; i < N; ++i) idx[i] = i;
    for (long placed = 0; placed < n_up; ++placed) {
        const auto j = placed + std::int64_t(rng.index(N - placed));
        std::swap(idx[placed], idx[j]);
        gamma_[idx[placed]] = 1;
    }
    if (!kernel.b_of_k.empty()) {
        if (!(kernel.grid == grid)) throw std::invalid_argument("SpinLattice: kernel grid mismatch");
        vel_ = vel_realspace(kernel).values;
    }
    recompute_phi();
}

SpinLattice::SpinLattice(const GridSpec& grid, std::vector<int> gamma, const ElasticKernel& kernel)
    : grid_(grid), gamma_(std::move(gamma)) {
    if (grid.dim != 2) throw std::invalid_argument("SpinLattice: dim must be 2");
    if (std::int64_t(gamma_.size()) != grid.sites())
        throw std::invalid_argument("SpinLattice: gamma size mismatch");
    for (int g : gamma_)
        if (g != 1 && g != -1) throw std::invalid_argument("SpinLattice: gamma must be +/-1");
    if (!kernel.b_of_k.empty()) {
        if (!(kernel.grid == grid)) throw std::invalid_argument("SpinLattice: kernel grid mismatch");
        vel_ = vel_realspace(kernel).values;
    }
    recompute_phi();
}

long SpinLattice::composition() const {
    long s = 0;
    for (int g : gamma_) s += g;
    return s;
}

std::int64_t SpinLattice::neighbor(std::int64_t site, int dir) const {
    const int nx = grid_.n[0], ny = grid_.n[1];
    int x = int(site / ny), y = int(site % ny);
    switch (dir) {
        case 0: x = (x + 1) % nx; break;
        case 1: x = (x + nx - 1) % nx; break;
        case 2: y = (y + 1) % ny; break;
        default: y = (y + ny - 1) % ny; break;
    }
    return std::int64_t(x) * ny + y;
}

double SpinLattice::vel_at(std::int64_t a, std::int64_t b) const {
    const int nx = grid_.n[0], ny = grid_.n[1];
    const int ax = int(a / ny), ay = int(a % ny);
    const int bx = int(b / ny), by = int(b % ny);
    const int dx = ((ax - bx) % nx + nx) % nx;
    const int dy = ((ay - by) % ny + ny) % ny;
    return vel_[std::int64_t(dx) * ny + dy];
}

void SpinLattice::recompute_phi() {
    const auto N = grid_.sites();
    phi_.assign(N, 0.0);
    if (vel_.empty()) return;
    // convolution phi = V_el * gamma via the kernel grid transform
    Fft fft(grid_);
    std::vector<double> g(N);
    for (std::int64_t i = 0; i < N; ++i) g[i] = double(gamma_[i]);
    auto gt = fft.forward(g);
    auto vt = fft.forward(vel_);
    for (std::int64_t i = 0; i < N; ++i) gt[i] *= vt[i].real();  // V_el is real and even
    phi_ = fft.inverse_real(gt);
    accepted_since_sync_ = 0;
}

double SpinLattice::chemical_energy(const MCParams& p) const {
    const int nx = grid_.n[0], ny = grid_.n[1];
    double e_nn = 0.0, e_nnn = 0.0;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
            const int g = gamma_[std::int64_t(x) * ny + y];
            e_nn += g * gamma_[std::int64_t((x + 1) % nx) * ny + y];
            e_nn += g * gamma_[std::int64_t(x) * ny + (y + 1) % ny];
            e_nnn += g * gamma_[std::int64_t((x + 1) % nx) * ny + (y + 1) % ny];
            e_nnn += g * gamma_[std::int64_t((x + 1) % nx) * ny + (y + ny - 1) % ny];
        }
    return -p.J_nn * e_nn - p.J_nnn * e_nnn;
}

double SpinLattice::elastic_energy() const {
    if (vel_.empty()) return 0.0;
    double w = 0.0;
    for (std::size_t i = 0; i < gamma_.size(); ++i) w += gamma_[i] * phi_[i];
    return 0.5 * w;
}

double SpinLattice::total_energy(const MCParams& p) const {
    return chemical_energy(p) + elastic_energy();
}

double SpinLattice::delta_f_exchange(const MCParams& p, std::int64_t a, std::int64_t b) const {
    if (a == b) throw std::invalid_argument("delta_f_exchange: sites equal");
    bool adjacent = false;
    for (int d = 0; d < 4; ++d)
        if (neighbor(a, d) == b) adjacent = true;
    if (!adjacent) throw std::invalid_argument("delta_f_exchange: sites not nearest neighbours");
    if (gamma_[a] == gamma_[b]) throw std::invalid_argument("delta_f_exchange: same species");

    const int nx = grid_.n[0], ny = grid_.n[1];
    const auto site = [&](std::int64_t s, int dx, int dy) {
        const int x = (int(s / ny) + dx + nx) % nx;
        const int y = (int(s % ny) + dy + ny) % ny;
        return std::int64_t(x) * ny + y;
    };
    // chemical change: bonds of a and b, excluding the a-b pair itself
    static constexpr int nn[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    static constexpr int nnn[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    double d_chem = 0.0;
    for (auto s : {a, b}) {
        const int old_g = gamma_[s];
        const int new_g = -old_g;
        for (auto& o : nn) {
            const auto q = site(s, o[0], o[1]);
            if (q == a || q == b) continue;
            d_chem += -p.J_nn * (new_g - old_g) * gamma_[q];
        }
        for (auto& o : nnn) {
            const auto q = site(s, o[0], o[1]);
            if (q == a || q == b) continue;  // NNN can't hit a or b, but keep the guard
            d_chem += -p.J_nnn * (new_g - old_g) * gamma_[q];
        }
    }

    double d_el = 0.0;
    if (!vel_.empty()) {
        // exact two-site flip: delta_s = -2 gamma_s
        const double da = -2.0 * gamma_[a];
        const double db = -2.0 * gamma_[b];
        d_el = da * phi_[a] + db * phi_[b] +
               0.5 * (da * da + db * db) * vel_[0] + da * db * vel_at(a, b);
    }
    return d_chem + d_el;
}

void SpinLattice::apply_exchange(std::int64_t a, std::int64_t b) {
    const double da = -2.0 * gamma_[a];
    const double db = -2.0 * gamma_[b];
    gamma_[a] = -gamma_[a];
    gamma_[b] = -gamma_[b];
    if (vel_.empty()) return;
    const int nx = grid_.n[0], ny = grid_.n[1];
    const int ax = int(a / ny), ay = int(a % ny);
    const int bx = int(b / ny), by = int(b % ny);
    for (int x = 0; x < nx; ++x) {
        const std::int64_t rowa = std::int64_t(((x - ax) % nx + nx) % nx) * ny;
        const std::int64_t rowb = std::int64_t(((x - bx) % nx + nx) % nx) * ny;
        const std::int64_t row = std::int64_t(x) * ny;
        for (int y = 0; y < ny; ++y) {
            phi_[row + y] += da * vel_[rowa + ((y - ay) % ny + ny) % ny] +
                             db * vel_[rowb + ((y - by) % ny + ny) % ny];
        }
    }
    if (++accepted_since_sync_ >= 10000) recompute_phi();
}

SpinLattice::SweepStats SpinLattice::kawasaki_sweep(const MCParams& p, Rng& rng) {
    SweepStats stats;
    const auto N = grid_.sites();
    for (std::int64_t att = 0; att < N; ++att) {
        ++stats.attempts;
        const auto a = std::int64_t(rng.index(N));
        const auto b = neighbor(a, int(rng.index(4)));
        if (gamma_[a] == gamma_[b]) continue;  // like pair counts as a rejected attempt
        const double df = delta_f_exchange(p, a, b);
        double acc;
        if (p.rule == AcceptanceRule::Metropolis)
            acc = df <= 0.0 ? 1.0 : std::exp(-df / p.T);
        else
            acc = 1.0 / (1.0 + std::exp(df / p.T));  // Glauber
        if (acc >= 1.0 || rng.uniform() < acc) {
            apply_exchange(a, b);
            ++stats.accepted;
        }
    }
    return stats;
}

double SpinLattice::phi_drift() const {
    if (vel_.empty()) return 0.0;
    Fft fft(grid_);
    const auto N = grid_.sites();
    std::vector<double> g(N);
    for (std::int64_t i = 0; i < N; ++i) g[i] = double(gamma_[i]);
    auto gt = fft.forward(g);
    auto vt = fft.forward(vel_);
    for (std::int64_t i = 0; i < N; ++i) gt[i] *= vt[i].real();
    const auto fresh = fft.inverse_real(gt);
    double dev = 0.0;
    for (std::int64_t i = 0; i < N; ++i) dev = std::max(dev, std::abs(fresh[i] - phi_[i]));
    return dev;
}

ScalarField SpinLattice::gamma_field() const {
    ScalarField f(grid_);
    for (std::size_t i = 0; i < gamma_.size(); ++i) f.values[i] = double(gamma_[i]);
    return f;
}

}  // namespace misfit
