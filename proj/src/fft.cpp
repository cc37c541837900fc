#include "filer/fft.hpp"

#include <unsupported/Eigen/FFT>

#include <vector>

namespace filer {

namespace {

// Row-column decomposition on top of Eigen's 1-D FFT. kissfft handles
// arbitrary lengths, so no padding is needed.
void fft_rows(ComplexField& a, bool inverse) {
  Eigen::FFT<double> fft;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<std::complex<double>> in(static_cast<size_t>(cols)), out(static_cast<size_t>(cols));
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) in[static_cast<size_t>(c)] = a(r, c);
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = out[static_cast<size_t>(c)];
  }
}

void fft_cols(ComplexField& a, bool inverse) {
  Eigen::FFT<double> fft;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<std::complex<double>> in(static_cast<size_t>(rows)), out(static_cast<size_t>(rows));
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) in[static_cast<size_t>(r)] = a(r, c);
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    for (Eigen::Index r = 0; r < rows; ++r) a(r, c) = out[static_cast<size_t>(r)];
  }
}

inline Eigen::Index wrap(Eigen::Index i, Eigen::Index n) {
  i %= n;
  return i < 0 ? i + n : i;
}

inline Eigen::Index clampi(Eigen::Index i, Eigen::Index n) {
  return i < 0 ? 0 : (i >= n ? n - 1 : i);
}

}  // namespace

ComplexSpectrum fft2_forward(const Field& f) {
  ComplexField a = f.cast<std::complex<double>>();
  fft_rows(a, false);
  fft_cols(a, false);
  return ComplexSpectrum{std::move(a)};
}

ComplexField fft2_inverse(const ComplexSpectrum& spectrum) {
  ComplexField a = spectrum.data;
  fft_cols(a, true);
  fft_rows(a, true);
  return a;
}

std::pair<Field, Field> fft_convolve(const Field& image, const ComplexSpectrum& kernel_spectrum) {
  require(image.rows() == kernel_spectrum.height() && image.cols() == kernel_spectrum.width(),
          ErrorCode::DimensionMismatch, "fft_convolve: spectrum dimensions do not match image");
  ComplexSpectrum spec = fft2_forward(image);
  spec.data *= kernel_spectrum.data;
  ComplexField out = fft2_inverse(spec);
  return {out.real(), out.imag()};
}

Field direct_convolve(const Field& field, const Field& kernel, Boundary boundary) {
  require(kernel.rows() % 2 == 1 && kernel.cols() % 2 == 1, ErrorCode::EvenKernel,
          "direct_convolve: kernel dimensions must be odd");
  const Eigen::Index rows = field.rows(), cols = field.cols();
  const Eigen::Index kr = kernel.rows() / 2, kc = kernel.cols() / 2;
  Field out(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y) {
    for (Eigen::Index x = 0; x < cols; ++x) {
      double acc = 0.0;
      for (Eigen::Index j = -kr; j <= kr; ++j) {
        for (Eigen::Index i = -kc; i <= kc; ++i) {
          Eigen::Index sy = y - j, sx = x - i;
          if (boundary == Boundary::Periodic) {
            sy = wrap(sy, rows);
            sx = wrap(sx, cols);
          } else {
            sy = clampi(sy, rows);
            sx = clampi(sx, cols);
          }
          acc += kernel(j + kr, i + kc) * field(sy, sx);
        }
      }
      out(y, x) = acc;
    }
  }
  return out;
}

Field gaussian_kernel_1d(double sigma) {
  if (sigma <= 0.0) {
    Field k(1, 1);
    k(0, 0) = 1.0;
    return k;
  }
  const Eigen::Index radius = static_cast<Eigen::Index>(std::ceil(3.0 * sigma));
  Field k(1, 2 * radius + 1);
  double sum = 0.0;
  for (Eigen::Index i = -radius; i <= radius; ++i) {
    const double v = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    k(0, i + radius) = v;
    sum += v;
  }
  k /= sum;
  return k;
}

Field gaussian_blur(const Field& field, double sigma) {
  if (sigma <= 0.0) return field;
  const Field k = gaussian_kernel_1d(sigma);
  Field horizontal = direct_convolve(field, k, Boundary::Replicate);
  Field kt = k.transpose();
  return direct_convolve(horizontal, kt, Boundary::Replicate);
}

}  // namespace filer
