#pragma once

#include <array>
#include <optional>

namespace misfit {

using Tensor2 = std::array<std::array<double, 3>, 3>;

inline Tensor2 zero_tensor2() { return Tensor2{{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}; }
Tensor2 identity_tensor2();
Tensor2 scaled_identity(double s);

/// Isotropic elastic constants: bulk modulus K, shear modulus G.
struct IsotropicModuli {
    double K;
    double G;
    IsotropicModuli(double K_, double G_);
};

/// Cubic elastic constants in the conventional notation.
struct CubicModuli {
    double C11;
    double C12;
    double C44;
    CubicModuli(double c11, double c12, double c44);

    /// Anisotropy A = C11 - C12 - 2 C44; zero for an isotropic crystal.
    double anisotropy() const { return C11 - C12 - 2.0 * C44; }
    /// Central-force lattices obey C12 = C44.
    bool cauchy_relation(double tol = 1e-12) const;
};

/// Fourth-rank stiffness tensor with full minor and major symmetry.
struct StiffnessTensor {
    double lambda[3][3][3][3] = {};

    bool symmetric(double tol = 0.0) const;
    double anisotropy() const;  // lambda_1111 - lambda_1122 - 2*lambda_2323

    /// Elastic energy density w = 1/2 sum lambda de de for de = e - e0.
    double energy_density(const Tensor2& de) const;
};

StiffnessTensor stiffness_from_isotropic(const IsotropicModuli& m);
StiffnessTensor stiffness_from_cubic(const CubicModuli& m);

/// (E, nu) from (K, G): K = E/3(1-2nu), G = E/2(1+nu).
std::array<double, 2> young_poisson(const IsotropicModuli& m);
IsotropicModuli moduli_from_young_poisson(double E, double nu);

/// Hooke's law t_ij = sum lambda_ijmn (e_mn - e0_mn).
Tensor2 stress_from_strain(const StiffnessTensor& lam, const Tensor2& e, const Tensor2& e0);

/// Solve sum lambda_ijmn e_mn = t_ij for symmetric e (6x6 Voigt system).
/// Throws NumericError if the stiffness is singular.
Tensor2 strain_from_stress(const StiffnessTensor& lam, const Tensor2& t);

/// Vegard's law coupling: e0_ij = b_ij (c - c0), dilatational b = eta*I by default.
struct MisfitSpec {
    double eta = 0.0;
    double c0 = 0.0;
    std::optional<Tensor2> b;  // full Vegard tensor; must be symmetric

    MisfitSpec() = default;
    MisfitSpec(double eta_, double c0_);
    MisfitSpec(const Tensor2& b_, double c0_);

    Tensor2 b_tensor() const;  // eta*I or the explicit b
};

/// Uniform externally applied stress.
struct AppliedStress {
    Tensor2 t = zero_tensor2();

    AppliedStress() = default;
    explicit AppliedStress(const Tensor2& t_);

    /// Axial component (2 t33 - t11 - t22)/3 of the deviatoric part.
    double axial() const { return (2.0 * t[2][2] - t[0][0] - t[1][1]) / 3.0; }
};

}  // namespace misfit
