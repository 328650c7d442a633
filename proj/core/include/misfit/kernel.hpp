#pragma once

#include <array>
#include <vector>

#include "misfit/elastic.hpp"
#include "misfit/grid.hpp"

namespace misfit {

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Transformation strain [e0] = e0_alpha - e0_beta.
struct TransformationStrain {
    Tensor2 de0 = zero_tensor2();

    TransformationStrain() = default;
    explicit TransformationStrain(const Tensor2& d);
    /// Dilatational [e0] = q * I (3-D) or the in-plane identity (2-D).
    static TransformationStrain dilatational(double q, int dim = 3);
};

/// Tabulated Fourier elastic kernel B(k) over the reciprocal lattice of a grid,
/// with B(0) = 0. Immutable after construction.
struct ElasticKernel {
    GridSpec grid;
    std::vector<double> b_of_k;  // row-major over reciprocal indices

    double max_value() const;
};

/// Acoustic matrix (Z^-1)_ij = sum_mn k_m lambda_imnj k_n. Requires k != 0.
Matrix3 acoustic_matrix(const StiffnessTensor& lam, const std::array<double, 3>& k);

/// Invert the acoustic matrix; throws NumericError if singular (reports k).
Matrix3 acoustic_inverse(const StiffnessTensor& lam, const std::array<double, 3>& k);

/// Psi_ijmn(k) = lambda_ijmn - sum lambda_ijpq k_p Z_qr k_s lambda_rsmn.
/// Homogeneous of degree zero in k; positive semi-definite on symmetric tensors.
StiffnessTensor psi(const StiffnessTensor& lam, const std::array<double, 3>& k);

/// B(k) = [e0] . Psi(k) . [e0] for one wavevector.
double b_value(const StiffnessTensor& lam, const TransformationStrain& de0,
               const std::array<double, 3>& k);

/// Tabulate B(k) over the reciprocal lattice of the grid.
ElasticKernel build_kernel(const GridSpec& grid, const StiffnessTensor& lam,
                           const TransformationStrain& de0);

/// Configuration elastic energy W = (a^d / 2N) sum_{k!=0} B(k) |f~(k)|^2.
/// The field is the amplitude multiplying the kernel's transformation strain:
/// an inclusion indicator (1 inside, 0 outside) for a two-phase arrangement,
/// or gamma in {-1,+1} for the lattice convention.
double elastic_energy(const ScalarField& phase, const ElasticKernel& kernel);

/// Real-space pair potential: inverse transform of B, V(p) = (1/N) sum_k B(k) e^{-ik.p}.
/// Sums to zero over all offsets because B(0) = 0.
ScalarField vel_realspace(const ElasticKernel& kernel);

struct ExternalWork {
    double w_ext;       // -|Omega| sum t_ij (e0bar_ij + 1/2 eext_ij)
    Tensor2 mean_strain;  // e0bar + eext
};

/// Loading energy for a phase arrangement under uniform applied stress
/// (homogeneous moduli). e0bar = de0 * mean(phase); eext solves lambda eext = t.
ExternalWork external_work(const ScalarField& phase, const StiffnessTensor& lam,
                           const TransformationStrain& de0, const AppliedStress& t_ext);

}  // namespace misfit
