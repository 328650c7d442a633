#include "misfit/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "misfit/errors.hpp"
#include "misfit/fft.hpp"

namespace misfit {

TransformationStrain::TransformationStrain(const Tensor2& d) : de0(d) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j)
            if (de0[i][j] != de0[j][i])
                throw std::invalid_argument("TransformationStrain: must be symmetric");
}

TransformationStrain TransformationStrain::dilatational(double q, int dim) {
    Tensor2 t = zero_tensor2();
    for (int i = 0; i < dim; ++i) t[i][i] = q;
    return TransformationStrain(t);
}

double ElasticKernel::max_value() const {
    return b_of_k.empty() ? 0.0 : *std::max_element(b_of_k.begin(), b_of_k.end());
}

Matrix3 acoustic_matrix(const StiffnessTensor& lam, const std::array<double, 3>& k) {
    Matrix3 zinv{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    s += k[m] * lam.lambda[i][m][n][j] * k[n];
            zinv[i][j] = s;
        }
    return zinv;
}

namespace {
Matrix3 invert3(const Matrix3& m, const std::array<double, 3>& k) {
    const double det =
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m[i][j]));
    if (std::abs(det) < 1e-14 * scale * scale * scale) {
        std::ostringstream os;
        os << "acoustic matrix singular at k = (" << k[0] << ", " << k[1] << ", " << k[2]
           << "); invalid stiffness tensor";
        throw NumericError(os.str());
    }
    Matrix3 inv{};
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
}
}  // namespace

Matrix3 acoustic_inverse(const StiffnessTensor& lam, const std::array<double, 3>& k) {
    return invert3(acoustic_matrix(lam, k), k);
}

StiffnessTensor psi(const StiffnessTensor& lam, const std::array<double, 3>& k) {
    const Matrix3 Z = acoustic_inverse(lam, k);
    // u[i][j][q] = sum_p lambda_ijpq k_p
    double u[3][3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int q = 0; q < 3; ++q) {
                double s = 0.0;
                for (int p = 0; p < 3; ++p) s += lam.lambda[i][j][p][q] * k[p];
                u[i][j][q] = s;
            }
    StiffnessTensor out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) {
                    double corr = 0.0;
                    for (int q = 0; q < 3; ++q)
                        for (int r = 0; r < 3; ++r)
                            corr += u[i][j][q] * Z[q][r] * u[m][n][r];
                    out.lambda[i][j][m][n] = lam.lambda[i][j][m][n] - corr;
                }
    return out;
}

double b_value(const StiffnessTensor& lam, const TransformationStrain& de0,
               const std::array<double, 3>& k) {
    const Matrix3 Z = acoustic_inverse(lam, k);
    // g_q = sum_ijp [e0]_ij lambda_ijpq k_p
    std::array<double, 3> g{0, 0, 0};
    double unrelaxed = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double e = de0.de0[i][j];
            if (e == 0.0) continue;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    g[q] += e * lam.lambda[i][j][p][q] * k[p];
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    unrelaxed += e * lam.lambda[i][j][m][n] * de0.de0[m][n];
        }
    double relax = 0.0;
    for (int q = 0; q < 3; ++q)
        for (int r = 0; r < 3; ++r) relax += g[q] * Z[q][r] * g[r];
    return unrelaxed - relax;
}

ElasticKernel build_kernel(const GridSpec& grid, const StiffnessTensor& lam,
                           const TransformationStrain& de0) {
    ElasticKernel kern;
    kern.grid = grid;
    kern.b_of_k.assign(grid.sites(), 0.0);
    const int nz = grid.dim == 3 ? grid.n[2] : 1;
    for (int mx = 0; mx < grid.n[0]; ++mx)
        for (int my = 0; my < grid.n[1]; ++my)
            for (int mz = 0; mz < nz; ++mz) {
                if (mx == 0 && my == 0 && mz == 0) continue;  // B(0) = 0 by convention
                const std::array<double, 3> k{grid.kcomp(mx, 0), grid.kcomp(my, 1),
                                              grid.dim == 3 ? grid.kcomp(mz, 2) : 0.0};
                kern.b_of_k[grid.index(mx, my, mz)] = b_value(lam, de0, k);
            }
    return kern;
}

double elastic_energy(const ScalarField& phase, const ElasticKernel& kernel) {
    if (!(phase.grid == kernel.grid))
        throw std::invalid_argument("elastic_energy: field/kernel grid mismatch");
    Fft fft(phase.grid);
    const auto theta = fft.forward(phase.values);
    double w = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i)
        w += kernel.b_of_k[i] * std::norm(theta[i]);
    return 0.5 * w * phase.grid.cell_volume() / double(phase.grid.sites());
}

ScalarField vel_realspace(const ElasticKernel& kernel) {
    Fft fft(kernel.grid);
    std::vector<std::complex<double>> spec(kernel.b_of_k.begin(), kernel.b_of_k.end());
    ScalarField v(kernel.grid);
    v.values = fft.inverse_real(spec);
    return v;
}

ExternalWork external_work(const ScalarField& phase, const StiffnessTensor& lam,
                           const TransformationStrain& de0, const AppliedStress& t_ext) {
    const double phi = phase.mean();
    const Tensor2 e_ext = strain_from_stress(lam, t_ext.t);
    ExternalWork res;
    res.mean_strain = zero_tensor2();
    double w = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double e0bar = de0.de0[i][j] * phi;
            res.mean_strain[i][j] = e0bar + e_ext[i][j];
            w += t_ext.t[i][j] * (e0bar + 0.5 * e_ext[i][j]);
        }
    res.w_ext = -phase.grid.volume() * w;
    return res;
}

}  // namespace misfit
