#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace misfit {

/// Periodic rectangular grid. Extents must be even and >= 4 so the
/// reciprocal lattice has an unambiguous Nyquist row.
struct GridSpec {
    int dim = 2;                     // 2 or 3
    std::array<int, 3> n{0, 0, 1};   // extent per axis; n[2] == 1 in 2-D
    double a = 1.0;                  // lattice spacing

    GridSpec() = default;
    GridSpec(int dim_, std::array<int, 3> n_, double a_ = 1.0);

    std::int64_t sites() const {
        return std::int64_t(n[0]) * n[1] * (dim == 3 ? n[2] : 1);
    }
    double cell_volume() const;   // a^dim
    double volume() const;        // sites * a^dim

    /// Row-major site index.
    std::int64_t index(int x, int y, int z = 0) const {
        return (std::int64_t(x) * n[1] + y) * (dim == 3 ? n[2] : 1) + (dim == 3 ? z : 0);
    }
    /// Reciprocal vector component for Fourier index m along axis d, in (-pi/a, pi/a].
    double kcomp(int m, int d) const;

    bool operator==(const GridSpec&) const = default;
};

/// Real scalar field over the sites of a grid.
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g, double fill = 0.0);

    double mean() const;
    double variance() const;

    double& operator()(int x, int y, int z = 0) { return values[grid.index(x, y, z)]; }
    double operator()(int x, int y, int z = 0) const { return values[grid.index(x, y, z)]; }
};

}  // namespace misfit
