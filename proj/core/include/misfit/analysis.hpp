#pragma once

#include <string>
#include <vector>

#include "misfit/grid.hpp"

namespace misfit {

/// |f~(k)|^2 / N over the reciprocal lattice, k = 0 excluded.
struct Spectrum {
    GridSpec grid;
    std::vector<double> s_of_k;  // s at k=0 stored as 0
    std::vector<double> radial_bins;       // azimuthal average by |k| bin
    std::vector<double> radial_bin_edges;  // |k| at bin centers
    double anisotropy = 1.0;  // <10>-lobe over <11>-lobe intensity at the peak ring
    bool empty = false;       // constant input field
};

Spectrum structure_factor(const ScalarField& field);

/// Domain size = (minority-phase area) / (unlike-neighbour bond perimeter).
/// Throws NumericError on a single-phase field.
double domain_size(const ScalarField& field, double threshold);

struct GrowthSeries {
    std::vector<double> t;
    std::vector<double> R;
};

struct GrowthFit {
    double exponent;
    double prefactor;
    double stderr_exponent;
};

/// Least-squares slope of log R vs log t; needs >= 8 samples, positive values.
GrowthFit growth_exponent(const GrowthSeries& series);

/// Log-scaled 8-bit PGM of S(k), k = 0 centered. 2-D spectra only.
void saxs_image(const Spectrum& spectrum, const std::string& path);

}  // namespace misfit
