#include "misfit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "misfit/errors.hpp"
#include "misfit/fft.hpp"

namespace misfit {

Spectrum structure_factor(const ScalarField& field) {
    const GridSpec& g = field.grid;
    const auto N = g.sites();
    Fft fft(g);
    const auto ft = fft.forward(field.values);

    Spectrum sp;
    sp.grid = g;
    sp.s_of_k.assign(N, 0.0);
    double total = 0.0;
    for (std::int64_t i = 1; i < N; ++i) {
        sp.s_of_k[i] = std::norm(ft[i]) / double(N);
        total += sp.s_of_k[i];
    }
    // constant field: S(k) vanishes for all k != 0
    if (total <= 1e-12 * double(N)) {
        sp.empty = true;
        sp.anisotropy = 1.0;
        return sp;
    }

    // azimuthal average over |k| shells of width one fundamental spacing
    const double dk = 2.0 * M_PI / (g.a * double(*std::max_element(g.n.begin(), g.n.begin() + g.dim)));
    const double kmax = M_PI / g.a * std::sqrt(double(g.dim));
    const int nbins = int(std::ceil(kmax / dk)) + 1;
    std::vector<double> sum(nbins, 0.0);
    std::vector<long> cnt(nbins, 0);

    const int nz = g.dim == 3 ? g.n[2] : 1;
    for (int mx = 0; mx < g.n[0]; ++mx)
        for (int my = 0; my < g.n[1]; ++my)
            for (int mz = 0; mz < nz; ++mz) {
                if (mx == 0 && my == 0 && mz == 0) continue;
                const double kx = g.kcomp(mx, 0);
                const double ky = g.kcomp(my, 1);
                const double kz = g.dim == 3 ? g.kcomp(mz, 2) : 0.0;
                const double kmag = std::sqrt(kx * kx + ky * ky + kz * kz);
                const int b = std::min(nbins - 1, int(kmag / dk + 0.5));
                sum[b] += sp.s_of_k[g.index(mx, my, mz)];
                ++cnt[b];
            }
    sp.radial_bins.resize(nbins);
    sp.radial_bin_edges.resize(nbins);
    for (int b = 0; b < nbins; ++b) {
        sp.radial_bins[b] = cnt[b] > 0 ? sum[b] / double(cnt[b]) : 0.0;
        sp.radial_bin_edges[b] = b * dk;
    }

    // lobe anisotropy at the peak ring. The ring is given a finite width
    // (25% of the peak radius, at least one bin) so the lobes hold enough
    // modes for a stable ratio on coarse late-time spectra.
    int peak = 1;
    for (int b = 1; b < nbins; ++b)
        if (sp.radial_bins[b] > sp.radial_bins[peak]) peak = b;
    const double k_peak = peak * dk;
    const double band = std::max(0.25 * k_peak, dk);
    const double half_width = 10.0 * M_PI / 180.0;
    double s10 = 0.0, s11 = 0.0;
    long n10 = 0, n11 = 0;
    for (int mx = 0; mx < g.n[0]; ++mx)
        for (int my = 0; my < g.n[1]; ++my)
            for (int mz = 0; mz < nz; ++mz) {
                if (mx == 0 && my == 0 && mz == 0) continue;
                const double kx = g.kcomp(mx, 0);
                const double ky = g.kcomp(my, 1);
                const double kz = g.dim == 3 ? g.kcomp(mz, 2) : 0.0;
                const double kmag = std::sqrt(kx * kx + ky * ky + kz * kz);
                if (std::abs(kmag - k_peak) > band) continue;
                const double ax = std::abs(kx), ay = std::abs(ky), az = std::abs(kz);
                const double hi = std::max({ax, ay, az});
                // angular distance to the nearest axis / nearest diagonal
                const double to_axis = std::acos(std::min(1.0, hi / kmag));
                double diag;
                if (g.dim == 2)
                    diag = std::acos(std::min(1.0, (ax + ay) / (kmag * std::sqrt(2.0))));
                else {
                    diag = std::acos(std::min(1.0, std::max({ax + ay, ax + az, ay + az}) /
                                                       (kmag * std::sqrt(2.0))));
                }
                const double s = sp.s_of_k[g.index(mx, my, mz)];
                if (to_axis <= half_width) {
                    s10 += s;
                    ++n10;
                }
                if (diag <= half_width) {
                    s11 += s;
                    ++n11;
                }
            }
    if (n10 > 0 && n11 > 0 && s11 > 0.0)
        sp.anisotropy = (s10 / double(n10)) / (s11 / double(n11));
    else
        sp.anisotropy = 1.0;
    return sp;
}

double domain_size(const ScalarField& field, double threshold) {
    const GridSpec& g = field.grid;
    std::int64_t above = 0;
    for (double v : field.values)
        if (v > threshold) ++above;
    const auto N = g.sites();
    if (above == 0 || above == N)
        throw NumericError("domain_size: field is single-phase at this threshold");

    std::int64_t unlike = 0;
    const int nz = g.dim == 3 ? g.n[2] : 1;
    for (int x = 0; x < g.n[0]; ++x)
        for (int y = 0; y < g.n[1]; ++y)
            for (int z = 0; z < nz; ++z) {
                const bool c0 = field.values[g.index(x, y, z)] > threshold;
                if ((field.values[g.index((x + 1) % g.n[0], y, z)] > threshold) != c0) ++unlike;
                if ((field.values[g.index(x, (y + 1) % g.n[1], z)] > threshold) != c0) ++unlike;
                if (g.dim == 3 &&
                    (field.values[g.index(x, y, (z + 1) % g.n[2])] > threshold) != c0)
                    ++unlike;
            }
    const std::int64_t minority = std::min(above, N - above);
    // area over perimeter (volume over surface in 3-D)
    const double area = double(minority) * g.cell_volume();
    const double perimeter = double(unlike) * std::pow(g.a, g.dim - 1);
    return area / perimeter;
}

GrowthFit growth_exponent(const GrowthSeries& series) {
    const std::size_t n = series.t.size();
    if (n != series.R.size()) throw std::invalid_argument("growth_exponent: size mismatch");
    if (n < 8) throw std::invalid_argument("growth_exponent: need at least 8 samples");
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(series.t[i] > 0.0) || !(series.R[i] > 0.0))
            throw std::invalid_argument("growth_exponent: samples must be positive");
        x[i] = std::log(series.t[i]);
        y[i] = std::log(series.R[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("growth_exponent: degenerate time axis");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - intercept - slope * x[i];
        sse += r * r;
    }
    const double se = std::sqrt(sse / double(n - 2) / sxx);
    return {slope, std::exp(intercept), se};
}

void saxs_image(const Spectrum& spectrum, const std::string& path) {
    const GridSpec& g = spectrum.grid;
    if (g.dim != 2) throw std::invalid_argument("saxs_image: 2-D spectra only");
    double smax = 0.0;
    for (double s : spectrum.s_of_k) smax = std::max(smax, s);
    const double floor_val = smax > 0.0 ? smax * 1e-6 : 1.0;
    const double lmin = std::log10(floor_val);
    const double lmax = smax > 0.0 ? std::log10(smax) : 1.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("saxs_image: cannot open " + path);
    out << "P5\n" << g.n[0] << " " << g.n[1] << "\n255\n";
    // centre k = 0 (fftshift); rows run along y for a conventional image layout
    for (int row = 0; row < g.n[1]; ++row) {
        const int my = (row + g.n[1] / 2) % g.n[1];
        for (int col = 0; col < g.n[0]; ++col) {
            const int mx = (col + g.n[0] / 2) % g.n[0];
            const double s = std::max(spectrum.s_of_k[g.index(mx, my)], floor_val);
            double v = lmax > lmin ? (std::log10(s) - lmin) / (lmax - lmin) : 0.0;
            out.put(char(int(std::lround(255.0 * std::clamp(v, 0.0, 1.0)))));
        }
    }
    if (!out) throw IoError("saxs_image: write failed for " + path);
}

}  // namespace misfit
