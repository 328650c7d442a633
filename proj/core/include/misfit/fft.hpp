#pragma once

#include <complex>
#include <vector>

#include "misfit/grid.hpp"

namespace misfit {

/// Discrete Fourier transforms on a GridSpec with the convention
/// u~(k) = sum_x e^{i k.x} u(x), inverse u(x) = (1/N) sum_k e^{-i k.x} u~(k).
/// Parseval: sum_x |u|^2 = (1/N) sum_k |u~|^2.
///
/// Wraps FFTW complex transforms; plan creation is serialized internally so
/// distinct Fft objects are safe to use from concurrent trajectory workers.
class Fft {
  public:
    explicit Fft(const GridSpec& g);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    /// Forward transform of a real field (no normalization).
    std::vector<std::complex<double>> forward(const std::vector<double>& values) const;
    /// Inverse transform with the 1/N factor applied; returns the real part.
    std::vector<double> inverse_real(const std::vector<std::complex<double>>& spectrum) const;
    /// Inverse transform with the 1/N factor applied, complex output.
    std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& spectrum) const;

    const GridSpec& grid() const { return grid_; }

  private:
    GridSpec grid_;
    void* plan_fwd_;   // fftw_plan
    void* plan_bwd_;
    mutable std::vector<std::complex<double>> buf_in_, buf_out_;
};

}  // namespace misfit
