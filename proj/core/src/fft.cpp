#include "misfit/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace misfit {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(const GridSpec& g) : grid_(g) {
    const auto N = g.sites();
    buf_in_.resize(N);
    buf_out_.resize(N);
    auto* in = reinterpret_cast<fftw_complex*>(buf_in_.data());
    auto* out = reinterpret_cast<fftw_complex*>(buf_out_.data());
    std::lock_guard<std::mutex> lock(plan_mutex());
    if (g.dim == 2) {
        // FFTW_BACKWARD (e^{+ikx}) is the forward transform in our convention
        plan_fwd_ = fftw_plan_dft_2d(g.n[0], g.n[1], in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
        plan_bwd_ = fftw_plan_dft_2d(g.n[0], g.n[1], in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    } else {
        plan_fwd_ = fftw_plan_dft_3d(g.n[0], g.n[1], g.n[2], in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
        plan_bwd_ = fftw_plan_dft_3d(g.n[0], g.n[1], g.n[2], in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    }
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

std::vector<std::complex<double>> Fft::forward(const std::vector<double>& values) const {
    for (std::size_t i = 0; i < values.size(); ++i) buf_in_[i] = values[i];
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                     reinterpret_cast<fftw_complex*>(buf_in_.data()),
                     reinterpret_cast<fftw_complex*>(buf_out_.data()));
    return buf_out_;
}

std::vector<std::complex<double>> Fft::inverse(const std::vector<std::complex<double>>& spectrum) const {
    buf_in_ = spectrum;
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                     reinterpret_cast<fftw_complex*>(buf_in_.data()),
                     reinterpret_cast<fftw_complex*>(buf_out_.data()));
    const double inv_n = 1.0 / double(grid_.sites());
    std::vector<std::complex<double>> out(buf_out_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf_out_[i] * inv_n;
    return out;
}

std::vector<double> Fft::inverse_real(const std::vector<std::complex<double>>& spectrum) const {
    buf_in_ = spectrum;
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                     reinterpret_cast<fftw_complex*>(buf_in_.data()),
                     reinterpret_cast<fftw_complex*>(buf_out_.data()));
    const double inv_n = 1.0 / double(grid_.sites());
    std::vector<double> out(buf_out_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf_out_[i].real() * inv_n;
    return out;
}

}  // namespace misfit
