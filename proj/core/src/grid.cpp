#include "misfit/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace misfit {

GridSpec::GridSpec(int dim_, std::array<int, 3> n_, double a_) : dim(dim_), n(n_), a(a_) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("GridSpec: dim must be 2 or 3");
    if (dim == 2) n[2] = 1;
    for (int d = 0; d < dim; ++d) {
        if (n[d] < 4 || n[d] % 2 != 0)
            throw std::invalid_argument("GridSpec: extents must be even and >= 4");
    }
    if (a <= 0.0) throw std::invalid_argument("GridSpec: lattice spacing must be positive");
}

double GridSpec::cell_volume() const { return std::pow(a, dim); }

double GridSpec::volume() const { return double(sites()) * cell_volume(); }

double GridSpec::kcomp(int m, int d) const {
    // map DFT index to the first Brillouin zone (-pi/a, pi/a]
    int half = n[d] / 2;
    int mm = m > half ? m - n[d] : m;
    return 2.0 * M_PI * mm / (n[d] * a);
}

ScalarField::ScalarField(const GridSpec& g, double fill)
    : grid(g), values(g.sites(), fill) {}

double ScalarField::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / double(values.size());
}

double ScalarField::variance() const {
    const double m = mean();
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return s / double(values.size());
}

}  // namespace misfit
