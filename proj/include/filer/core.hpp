#pragma once

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <string>

namespace filer {

// Row-major dense rasters. Indexing is (row, col) = (y, x); width is the
// number of columns, height the number of rows. All arithmetic is double.
using Field = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexField =
    Eigen::Array<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Index width(const Field& f) { return f.cols(); }
inline Eigen::Index height(const Field& f) { return f.rows(); }

// Grayscale image with intensities in [0,1].
struct GrayImage {
  Field pixels;

  Eigen::Index width() const { return pixels.cols(); }
  Eigen::Index height() const { return pixels.rows(); }
};

// Frequency-domain carrier. Dimensions always equal those of the source
// field whose spectrum it holds (no padding).
struct ComplexSpectrum {
  ComplexField data;

  Eigen::Index width() const { return data.cols(); }
  Eigen::Index height() const { return data.rows(); }
};

enum class ErrorCode {
  FileNotFound,
  UnsupportedFormat,
  ZeroSizedImage,
  DimensionMismatch,
  EvenKernel,
  InvalidConfig,
  IndexOutOfRange,
  EmptyStack,
  TooFewOrientations,
  PatchOutOfBounds,
  EmptyPatch,
  ImageTooSmall,
  EmptyDescriptorSet,
  InsufficientMatches,
  DegenerateGeometry,
  NoConsensus,
  ZeroFeatures,
  EmptyReportList,
  TooFewLandmarks,
  InvalidSpec,
  NonInvertibleAffine,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace filer
