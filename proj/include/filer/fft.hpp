#pragma once

#include "filer/core.hpp"

namespace filer {

enum class Boundary { Periodic, Replicate };

// Unnormalized forward 2-D DFT; fft2_inverse applies the 1/(W*H) scaling.
ComplexSpectrum fft2_forward(const Field& f);
ComplexField fft2_inverse(const ComplexSpectrum& spectrum);

// Multiplies the image spectrum by `kernel_spectrum` and returns the real
// and imaginary parts of the inverse transform. Periodic boundary semantics.
std::pair<Field, Field> fft_convolve(const Field& image, const ComplexSpectrum& kernel_spectrum);

// Exact spatial convolution with an odd-sized kernel (kernel is flipped, as
// convolution requires). Boundary rule applies outside the field.
Field direct_convolve(const Field& field, const Field& kernel, Boundary boundary);

// Normalized 1-D Gaussian taps of radius ceil(3*sigma); sigma <= 0 collapses
// to the identity kernel [1].
Field gaussian_kernel_1d(double sigma);

// Separable Gaussian blur, replicate boundary.
Field gaussian_blur(const Field& field, double sigma);

}  // namespace filer
