#include "misfit/elastic.hpp"

#include <cmath>
#include <stdexcept>

#include "misfit/errors.hpp"

namespace misfit {

Tensor2 identity_tensor2() {
    Tensor2 t = zero_tensor2();
    for (int i = 0; i < 3; ++i) t[i][i] = 1.0;
    return t;
}

Tensor2 scaled_identity(double s) {
    Tensor2 t = zero_tensor2();
    for (int i = 0; i < 3; ++i) t[i][i] = s;
    return t;
}

IsotropicModuli::IsotropicModuli(double K_, double G_) : K(K_), G(G_) {
    if (K <= 0.0 || G < 0.0) throw std::invalid_argument("IsotropicModuli: need K > 0, G >= 0");
}

CubicModuli::CubicModuli(double c11, double c12, double c44) : C11(c11), C12(c12), C44(c44) {
    if (C44 <= 0.0) throw std::invalid_argument("CubicModuli: need C44 > 0");
    if (C11 <= std::abs(C12)) throw std::invalid_argument("CubicModuli: need C11 > |C12|");
    if (C11 + 2.0 * C12 <= 0.0) throw std::invalid_argument("CubicModuli: need C11 + 2 C12 > 0");
}

bool CubicModuli::cauchy_relation(double tol) const {
    return std::abs(C12 - C44) <= tol * std::max(std::abs(C12), std::abs(C44));
}

bool StiffnessTensor::symmetric(double tol) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) {
                    const double v = lambda[i][j][m][n];
                    if (std::abs(v - lambda[j][i][m][n]) > tol) return false;
                    if (std::abs(v - lambda[i][j][n][m]) > tol) return false;
                    if (std::abs(v - lambda[m][n][i][j]) > tol) return false;
                }
    return true;
}

double StiffnessTensor::anisotropy() const {
    return lambda[0][0][0][0] - lambda[0][0][1][1] - 2.0 * lambda[1][2][1][2];
}

double StiffnessTensor::energy_density(const Tensor2& de) const {
    double w = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    w += lambda[i][j][m][n] * de[i][j] * de[m][n];
    return 0.5 * w;
}

namespace {
// fill lambda_1111, lambda_1122, lambda_2323 and all symmetry-related entries
StiffnessTensor fill_cubic_pattern(double l1111, double l1122, double l2323) {
    StiffnessTensor t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                t.lambda[i][i][j][j] = l1111;
            else {
                t.lambda[i][i][j][j] = l1122;
                t.lambda[i][j][i][j] = l2323;
                t.lambda[i][j][j][i] = l2323;
            }
        }
    return t;
}
}  // namespace

StiffnessTensor stiffness_from_isotropic(const IsotropicModuli& m) {
    return fill_cubic_pattern(m.K + 4.0 * m.G / 3.0, m.K - 2.0 * m.G / 3.0, m.G);
}

StiffnessTensor stiffness_from_cubic(const CubicModuli& m) {
    return fill_cubic_pattern(m.C11, m.C12, m.C44);
}

std::array<double, 2> young_poisson(const IsotropicModuli& m) {
    const double E = 9.0 * m.K * m.G / (3.0 * m.K + m.G);
    const double nu = (3.0 * m.K - 2.0 * m.G) / (6.0 * m.K + 2.0 * m.G);
    return {E, nu};
}

IsotropicModuli moduli_from_young_poisson(double E, double nu) {
    return IsotropicModuli(E / (3.0 * (1.0 - 2.0 * nu)), E / (2.0 * (1.0 + nu)));
}

Tensor2 stress_from_strain(const StiffnessTensor& lam, const Tensor2& e, const Tensor2& e0) {
    Tensor2 t = zero_tensor2();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    t[i][j] += lam.lambda[i][j][m][n] * (e[m][n] - e0[m][n]);
    return t;
}

namespace {
constexpr int voigt_i[6] = {0, 1, 2, 1, 0, 0};
constexpr int voigt_j[6] = {0, 1, 2, 2, 2, 1};
}  // namespace

Tensor2 strain_from_stress(const StiffnessTensor& lam, const Tensor2& t) {
    // 6x6 Voigt system with engineering shear strains
    double C[6][7];
    for (int I = 0; I < 6; ++I) {
        for (int J = 0; J < 6; ++J) {
            // engineering shears: the (m,n)/(n,m) multiplicity cancels the 1/2
            // of gamma = 2 e, so every column coefficient is plain lambda
            C[I][J] = lam.lambda[voigt_i[I]][voigt_j[I]][voigt_i[J]][voigt_j[J]];
        }
        C[I][6] = t[voigt_i[I]][voigt_j[I]];
    }
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < 6; ++col) {
        int piv = col;
        for (int r = col + 1; r < 6; ++r)
            if (std::abs(C[r][col]) > std::abs(C[piv][col])) piv = r;
        if (std::abs(C[piv][col]) < 1e-300)
            throw NumericError("strain_from_stress: singular stiffness tensor");
        if (piv != col)
            for (int c = 0; c < 7; ++c) std::swap(C[piv][c], C[col][c]);
        for (int r = 0; r < 6; ++r) {
            if (r == col) continue;
            const double f = C[r][col] / C[col][col];
            for (int c = col; c < 7; ++c) C[r][c] -= f * C[col][c];
        }
    }
    Tensor2 e = zero_tensor2();
    for (int I = 0; I < 6; ++I) {
        double v = C[I][6] / C[I][I];
        if (I >= 3) v *= 0.5;  // back from engineering strain
        e[voigt_i[I]][voigt_j[I]] = v;
        e[voigt_j[I]][voigt_i[I]] = v;
    }
    return e;
}

MisfitSpec::MisfitSpec(double eta_, double c0_) : eta(eta_), c0(c0_) {}

MisfitSpec::MisfitSpec(const Tensor2& b_, double c0_) : c0(c0_), b(b_) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j)
            if (b_[i][j] != b_[j][i])
                throw std::invalid_argument("MisfitSpec: b tensor must be symmetric");
}

Tensor2 MisfitSpec::b_tensor() const { return b ? *b : scaled_identity(eta); }

AppliedStress::AppliedStress(const Tensor2& t_) : t(t_) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j)
            if (t[i][j] != t[j][i])
                throw std::invalid_argument("AppliedStress: stress must be symmetric");
}

}  // namespace misfit
